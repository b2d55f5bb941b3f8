#pragma once

#include <string>
#include <vector>

#include "lambda3/integrator.hpp"
#include "lambda3/io.hpp"
#include "lambda3/model.hpp"

namespace lambda3 {

// Everything a scenario run needs: physics parameters, drive strengths,
// integration grid, start state, and output destination/format.
struct ScenarioConfig {
    SystemParams params = default_params();
    std::vector<double> omegas;    // empty = use params.omega only
    double t_end = 14.0;
    double dt = 1e-3;
    int stride = 10;
    bool init_excited = true;      // false = use init_state below
    DensityVector init_state;      // explicit start (when init_excited false)
    std::string output;            // empty = standard output
    OutputFormat format = OutputFormat::csv;

    InitialCondition initial() const;

    // The single drive strength for one-shot commands: first of omegas if
    // given, else params.omega.
    double primary_omega() const;

    // Domain validation of everything above; throws ConfigError naming the
    // offending key.
    void validate() const;
};

// Parse a flat key = value config. '#' starts a comment (full line or
// trailing); blank lines are ignored. Keys: t1, t2, k21, k02, omega (single
// value or comma-separated list), t_end, dt, stride, init ("excited" or four
// comma-separated numbers rho00,rhoB,rho11,rho22), output, format ("csv" or
// "text"). Unknown keys, bad syntax, unparseable numbers, and out-of-domain
// values all throw ConfigError with <source>:<line> in the message.
ScenarioConfig parse_config(const std::string& text,
                            const std::string& source_name = "<config>");

// parse_config on a file's contents; unreadable files throw ConfigError.
ScenarioConfig load_config(const std::string& path);

// Apply an init specifier -- "excited" or four comma-separated numbers
// rho00,rhoB,rho11,rho22 -- to cfg; throws ConfigError (prefixed with
// `where`) on anything else. Shared by the config parser and the CLI flag.
void set_init_spec(ScenarioConfig& cfg, const std::string& spec,
                   const std::string& where);

}  // namespace lambda3
