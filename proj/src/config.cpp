#include "lambda3/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "lambda3/errors.hpp"

namespace lambda3 {

InitialCondition ScenarioConfig::initial() const {
    if (init_excited) return InitialCondition::excited();
    return InitialCondition{init_state};
}

double ScenarioConfig::primary_omega() const {
    return omegas.empty() ? params.omega : omegas.front();
}

void ScenarioConfig::validate() const {
    auto fail = [](const std::string& msg) { throw ConfigError(msg); };
    try {
        params.validate();
    } catch (const InvalidParameterError& e) {
        fail(e.what());
    }
    for (const double om : omegas)
        if (!(std::isfinite(om) && om >= 0.0))
            fail("omega entries must be >= 0");
    if (!(std::isfinite(t_end) && t_end > 0.0)) fail("t_end must be > 0");
    if (!(std::isfinite(dt) && dt > 0.0)) fail("dt must be > 0");
    if (stride < 1) fail("stride must be >= 1");
    if (!init_excited) {
        try {
            InitialCondition{init_state}.validate();
        } catch (const InvalidStateError& e) {
            fail(std::string("init: ") + e.what());
        }
    }
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text, const std::string& where) {
    const std::string t = trim(text);
    if (t.empty()) throw ConfigError(where + ": empty number");
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size() || !std::isfinite(v))
        throw ConfigError(where + ": cannot parse '" + t + "' as a number");
    return v;
}

int parse_int(const std::string& text, const std::string& where) {
    const double v = parse_number(text, where);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
        throw ConfigError(where + ": expected an integer, got '" +
                          trim(text) + "'");
    return i;
}

std::vector<double> parse_list(const std::string& text,
                               const std::string& where) {
    std::vector<double> values;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        values.push_back(parse_number(item, where));
    if (values.empty()) throw ConfigError(where + ": empty list");
    return values;
}

}  // namespace

void set_init_spec(ScenarioConfig& cfg, const std::string& spec,
                   const std::string& where) {
    if (spec == "excited") {
        cfg.init_excited = true;
        return;
    }
    const std::vector<double> v = parse_list(spec, where);
    if (v.size() != 4)
        throw ConfigError(where +
                          ": init expects 'excited' or four comma-separated "
                          "numbers rho00,rhoB,rho11,rho22");
    cfg.init_excited = false;
    cfg.init_state = DensityVector{v[0], v[1], v[2], v[3]};
}

ScenarioConfig parse_config(const std::string& text,
                            const std::string& source_name) {
    ScenarioConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        const std::string where = source_name + ":" + std::to_string(lineno);
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(where + ": expected 'key = value', got '" +
                              line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(where + ": missing key");
        if (value.empty())
            throw ConfigError(where + ": missing value for '" + key + "'");

        if (key == "t1") cfg.params.t1 = parse_number(value, where);
        else if (key == "t2") cfg.params.t2 = parse_number(value, where);
        else if (key == "k21") cfg.params.k21 = parse_number(value, where);
        else if (key == "k02") cfg.params.k02 = parse_number(value, where);
        else if (key == "omega") {
            cfg.omegas = parse_list(value, where);
            cfg.params.omega = cfg.omegas.front();
        } else if (key == "t_end") cfg.t_end = parse_number(value, where);
        else if (key == "dt") cfg.dt = parse_number(value, where);
        else if (key == "stride") cfg.stride = parse_int(value, where);
        else if (key == "init") set_init_spec(cfg, value, where);
        else if (key == "output") cfg.output = value;
        else if (key == "format") {
            try {
                cfg.format = parse_output_format(value);
            } catch (const ConfigError& e) {
                throw ConfigError(where + ": " + e.what());
            }
        } else {
            throw ConfigError(where + ": unknown key '" + key + "'");
        }
    }

    try {
        cfg.validate();
    } catch (const ConfigError& e) {
        throw ConfigError(source_name + ": " + e.what());
    }
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

}  // namespace lambda3
