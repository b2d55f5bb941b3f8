#include "lambda3/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lambda3/analysis.hpp"
#include "lambda3/config.hpp"
#include "lambda3/errors.hpp"
#include "lambda3/fullsystem.hpp"
#include "lambda3/integrator.hpp"
#include "lambda3/io.hpp"
#include "lambda3/repro.hpp"
#include "lambda3/spectrum.hpp"
#include "lambda3/steady_state.hpp"

namespace lambda3 {

namespace {

// Flag values plus their CLI11 handles, so only flags the user actually
// passed override the config file (flag > config > default).
struct ScenarioFlags {
    double t1 = 0, t2 = 0, k21 = 0, k02 = 0;
    std::vector<double> omega;
    double t_end = 0, dt = 0;
    int stride = 0;
    std::string init, output, format;
    CLI::Option *ot1 = nullptr, *ot2 = nullptr, *ok21 = nullptr,
                *ok02 = nullptr, *oomega = nullptr, *ot_end = nullptr,
                *odt = nullptr, *ostride = nullptr, *oinit = nullptr,
                *ooutput = nullptr, *oformat = nullptr;

    void attach_params(CLI::App* s) {
        ot1 = s->add_option("--t1", t1,
                            "upper-level lifetime against decay to ground");
        ot2 = s->add_option("--t2", t2, "coherence lifetime");
        ok21 = s->add_option("--k21", k21, "branching rate level 1 -> 2");
        ok02 = s->add_option("--k02", k02, "return rate level 2 -> 0");
    }
    void attach_omega(CLI::App* s, const char* desc) {
        oomega = s->add_option("--omega", omega, desc)->delimiter(',');
    }
    void attach_grid(CLI::App* s) {
        ot_end = s->add_option("--t-end", t_end, "evolution end time");
        odt = s->add_option("--dt", dt, "integration step");
        ostride = s->add_option("--stride", stride,
                                "record every stride-th step");
        oinit = s->add_option(
            "--init", init,
            "start state: 'excited' or rho00,rhoB,rho11,rho22");
    }
    void attach_output(CLI::App* s) {
        ooutput = s->add_option("--out", output,
                                "write to this file instead of stdout");
        oformat = s->add_option("--format", format, "csv or text");
    }

    ScenarioConfig merge(const std::string& config_path) const {
        ScenarioConfig cfg;
        if (!config_path.empty()) cfg = load_config(config_path);
        if (ot1 && ot1->count()) cfg.params.t1 = t1;
        if (ot2 && ot2->count()) cfg.params.t2 = t2;
        if (ok21 && ok21->count()) cfg.params.k21 = k21;
        if (ok02 && ok02->count()) cfg.params.k02 = k02;
        if (oomega && oomega->count()) {
            cfg.omegas = omega;
            if (!omega.empty()) cfg.params.omega = omega.front();
        }
        if (ot_end && ot_end->count()) cfg.t_end = t_end;
        if (odt && odt->count()) cfg.dt = dt;
        if (ostride && ostride->count()) cfg.stride = stride;
        if (oinit && oinit->count()) set_init_spec(cfg, init, "--init");
        if (ooutput && ooutput->count()) cfg.output = output;
        if (oformat && oformat->count())
            cfg.format = parse_output_format(format);
        cfg.validate();
        return cfg;
    }
};

template <class Body>
void with_output(const ScenarioConfig& cfg, std::ostream& out, Body&& body) {
    if (cfg.output.empty()) {
        body(out);
        return;
    }
    std::ofstream file(cfg.output);
    if (!file) throw Error("cannot open output file '" + cfg.output + "'");
    body(file);
}

void print_kv(std::ostream& o, const char* key, double v) {
    o << key << " = " << format_short(v) << "\n";
}

// Sample times matching evolve()'s grid and stride.
std::vector<double> sample_times(double t_end, double dt, int stride) {
    const long long n = std::max(1LL, std::llround(t_end / dt));
    std::vector<double> times;
    times.push_back(0.0);
    for (long long i = stride; i < n; i += stride)
        times.push_back(static_cast<double>(i) * t_end /
                        static_cast<double>(n));
    times.push_back(t_end);
    return times;
}

Component component_from_name(const std::string& name) {
    if (name == "rho00") return Component::rho00;
    if (name == "rhoB") return Component::rhoB;
    if (name == "rho11") return Component::rho11;
    if (name == "rho22") return Component::rho22;
    throw InvalidParameterError("unknown component '" + name + "'");
}

int cmd_steady(const ScenarioConfig& cfg, std::ostream& out) {
    const double om = cfg.primary_omega();
    const DensityVector s = steady_state(cfg.params.with_omega(om)).rho;
    with_output(cfg, out, [&](std::ostream& o) {
        if (cfg.format == OutputFormat::csv) {
            o << "omega,rho00_inf,rhoB_inf,rho11_inf,rho22_inf\n"
              << format_full(om) << ',' << format_full(s.rho00) << ','
              << format_full(s.rhoB) << ',' << format_full(s.rho11) << ','
              << format_full(s.rho22) << '\n';
        } else {
            print_kv(o, "omega", om);
            print_kv(o, "rho00_inf", s.rho00);
            print_kv(o, "rhoB_inf", s.rhoB);
            print_kv(o, "rho11_inf", s.rho11);
            print_kv(o, "rho22_inf", s.rho22);
        }
    });
    return 0;
}

int cmd_spectrum(const ScenarioConfig& cfg, std::ostream& out) {
    const double om = cfg.primary_omega();
    const GeneratorMatrix gen = build_generator(cfg.params.with_omega(om));
    const Spectrum spec = eigenvalues(gen);
    with_output(cfg, out, [&](std::ostream& o) {
        if (cfg.format == OutputFormat::csv) {
            o << "omega,gamma1_re,gamma1_im,gamma2_re,gamma2_im,gamma3_re,"
                 "gamma3_im,gamma4_re,gamma4_im,tau1,tau2,tau3\n"
              << format_full(om);
            for (const auto& g : spec.gammas)
                o << ',' << format_full(g.real()) << ','
                  << format_full(g.imag());
            for (const double t : spec.taus) o << ',' << format_full(t);
            o << '\n';
        } else {
            print_kv(o, "omega", om);
            const char* names[4][2] = {{"gamma1_re", "gamma1_im"},
                                       {"gamma2_re", "gamma2_im"},
                                       {"gamma3_re", "gamma3_im"},
                                       {"gamma4_re", "gamma4_im"}};
            for (int k = 0; k < 4; ++k) {
                print_kv(o, names[k][0], spec.gammas[k].real());
                print_kv(o, names[k][1], spec.gammas[k].imag());
            }
            print_kv(o, "tau1", spec.taus[0]);
            print_kv(o, "tau2", spec.taus[1]);
            print_kv(o, "tau3", spec.taus[2]);
            print_kv(o, "trace_residual", trace_residual(gen, spec));
        }
    });
    return 0;
}

int cmd_evolve(const ScenarioConfig& cfg, std::ostream& out, bool closed_form) {
    const SystemParams p = cfg.params.with_omega(cfg.primary_omega());
    const Trajectory traj =
        closed_form
            ? exact_solution(p, cfg.initial(),
                             sample_times(cfg.t_end, cfg.dt, cfg.stride))
            : evolve(p, cfg.initial(), cfg.t_end, cfg.dt, cfg.stride);
    with_output(cfg, out, [&](std::ostream& o) {
        write_trajectory(o, traj, cfg.format);
    });
    return 0;
}

int cmd_sweep(const ScenarioConfig& cfg, std::ostream& out) {
    if (cfg.omegas.empty())
        throw InvalidParameterError(
            "sweep needs drive strengths: pass --omega w1,w2,... or an "
            "omega list in the config");
    const std::vector<SweepRow> rows = sweep(cfg.params, cfg.omegas);
    with_output(cfg, out,
                [&](std::ostream& o) { write_sweep(o, rows, cfg.format); });
    return 0;
}

int cmd_crossover(const ScenarioConfig& cfg, std::ostream& out) {
    const auto star = crossover_omega(cfg.params);
    with_output(cfg, out, [&](std::ostream& o) {
        print_kv(o, "k21", cfg.params.k21);
        print_kv(o, "k02", cfg.params.k02);
        if (star)
            print_kv(o, "omega_star", *star);
        else
            o << "omega_star = none (k21 <= k02: level 2 never overtakes "
                 "the ground state)\n";
    });
    return 0;
}

int cmd_decay_fit(const ScenarioConfig& cfg, std::ostream& out,
                  const std::string& component, double fit_t1,
                  double fit_t2) {
    const SystemParams p = cfg.params.with_omega(cfg.primary_omega());
    const Trajectory traj =
        evolve(p, cfg.initial(), cfg.t_end, cfg.dt, cfg.stride);
    const SteadyState target = steady_state(p);
    const double tau3 = eigenvalues(p).taus[2];

    std::vector<Component> comps;
    if (component == "all")
        comps = {Component::rho00, Component::rhoB, Component::rho11,
                 Component::rho22};
    else
        comps = {component_from_name(component)};

    with_output(cfg, out, [&](std::ostream& o) {
        print_kv(o, "omega", p.omega);
        print_kv(o, "tau_eigen", tau3);
        for (const Component c : comps) {
            const DecayFit fit =
                fit_decay_constant(traj, target, c, fit_t1, fit_t2);
            o << component_name(c)
              << ": tau_fit = " << format_short(fit.tau)
              << "  rel_dev_vs_eigen = "
              << format_short(std::abs(fit.tau - tau3) / tau3) << "\n";
        }
    });
    return 0;
}

int cmd_verify_full(const ScenarioConfig& cfg, std::ostream& out) {
    const SystemParams p = cfg.params.with_omega(cfg.primary_omega());
    const InitialCondition init = cfg.initial();
    const Trajectory reduced =
        evolve(p, init, cfg.t_end, cfg.dt, cfg.stride);
    const FullTrajectory full = evolve_full(p, embed(init.state), cfg.t_end,
                                            cfg.dt, cfg.stride);

    double dev = 0.0;
    for (std::size_t i = 0; i < reduced.states.size(); ++i) {
        const DensityVector a = reduce(full.states[i]);
        const DensityVector& b = reduced.states[i];
        dev = std::max({dev, std::abs(a.rho00 - b.rho00),
                        std::abs(a.rhoB - b.rhoB),
                        std::abs(a.rho11 - b.rho11),
                        std::abs(a.rho22 - b.rho22)});
    }
    const double decouple = decoupling_residual(full);
    const double herm = hermiticity_drift(full);
    const double trace = trace_drift(full);
    const bool ok = dev <= 1e-6 && decouple <= 1e-10 && herm <= 1e-10;

    with_output(cfg, out, [&](std::ostream& o) {
        print_kv(o, "omega", p.omega);
        print_kv(o, "max_component_deviation", dev);
        print_kv(o, "decoupling_residual", decouple);
        print_kv(o, "hermiticity_drift", herm);
        print_kv(o, "trace_drift", trace);
        o << "status = " << (ok ? "ok" : "violation") << "\n";
    });
    return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{
        "Driven three-level lambda system: closed-form steady states and\n"
        "relaxation spectra, plus fixed-step integration of the reduced and\n"
        "full density-matrix equations."};
    app.name("lambda3");
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path,
                   "flat 'key = value' parameter file");

    int rc = 0;

    auto* steady_cmd =
        app.add_subcommand("steady", "long-time state at one drive strength");
    auto steady_flags = std::make_shared<ScenarioFlags>();
    steady_flags->attach_params(steady_cmd);
    steady_flags->attach_omega(steady_cmd, "drive strength");
    steady_flags->attach_output(steady_cmd);
    steady_cmd->callback([&rc, &out, &config_path, steady_flags] {
        rc = cmd_steady(steady_flags->merge(config_path), out);
    });

    auto* spectrum_cmd = app.add_subcommand(
        "spectrum", "generator eigenvalues and mode lifetimes");
    auto spectrum_flags = std::make_shared<ScenarioFlags>();
    spectrum_flags->attach_params(spectrum_cmd);
    spectrum_flags->attach_omega(spectrum_cmd, "drive strength");
    spectrum_flags->attach_output(spectrum_cmd);
    spectrum_cmd->callback([&rc, &out, &config_path, spectrum_flags] {
        rc = cmd_spectrum(spectrum_flags->merge(config_path), out);
    });

    auto* evolve_cmd = app.add_subcommand(
        "evolve", "integrate the reduced equations (fixed-step RK4)");
    auto evolve_flags = std::make_shared<ScenarioFlags>();
    evolve_flags->attach_params(evolve_cmd);
    evolve_flags->attach_omega(evolve_cmd, "drive strength");
    evolve_flags->attach_grid(evolve_cmd);
    evolve_flags->attach_output(evolve_cmd);
    evolve_cmd->callback([&rc, &out, &config_path, evolve_flags] {
        rc = cmd_evolve(evolve_flags->merge(config_path), out, false);
    });

    auto* exact_cmd = app.add_subcommand(
        "exact", "closed-form solution on the same sample grid");
    auto exact_flags = std::make_shared<ScenarioFlags>();
    exact_flags->attach_params(exact_cmd);
    exact_flags->attach_omega(exact_cmd, "drive strength");
    exact_flags->attach_grid(exact_cmd);
    exact_flags->attach_output(exact_cmd);
    exact_cmd->callback([&rc, &out, &config_path, exact_flags] {
        rc = cmd_evolve(exact_flags->merge(config_path), out, true);
    });

    auto* sweep_cmd = app.add_subcommand(
        "sweep", "steady state and spectrum across drive strengths");
    auto sweep_flags = std::make_shared<ScenarioFlags>();
    sweep_flags->attach_params(sweep_cmd);
    sweep_flags->attach_omega(sweep_cmd,
                              "ascending drive strengths (comma separated)");
    sweep_flags->attach_output(sweep_cmd);
    sweep_cmd->callback([&rc, &out, &config_path, sweep_flags] {
        rc = cmd_sweep(sweep_flags->merge(config_path), out);
    });

    auto* crossover_cmd = app.add_subcommand(
        "crossover", "drive strength where level 2 overtakes the ground "
                     "state");
    auto crossover_flags = std::make_shared<ScenarioFlags>();
    crossover_flags->attach_params(crossover_cmd);
    crossover_flags->attach_output(crossover_cmd);
    crossover_cmd->callback([&rc, &out, &config_path, crossover_flags] {
        rc = cmd_crossover(crossover_flags->merge(config_path), out);
    });

    auto* fit_cmd = app.add_subcommand(
        "decay-fit", "two-point decay constants of the steady-state approach");
    auto fit_flags = std::make_shared<ScenarioFlags>();
    fit_flags->attach_params(fit_cmd);
    fit_flags->attach_omega(fit_cmd, "drive strength");
    fit_flags->attach_grid(fit_cmd);
    fit_flags->attach_output(fit_cmd);
    auto fit_component = std::make_shared<std::string>("all");
    auto fit_t1 = std::make_shared<double>(11.0);
    auto fit_t2 = std::make_shared<double>(14.0);
    fit_cmd->add_option("--component", *fit_component,
                        "rho00, rhoB, rho11, rho22, or all")
        ->check(CLI::IsMember({"all", "rho00", "rhoB", "rho11", "rho22"}));
    fit_cmd->add_option("--fit-t1", *fit_t1, "first fit sample time");
    fit_cmd->add_option("--fit-t2", *fit_t2, "second fit sample time");
    fit_cmd->callback([&rc, &out, &config_path, fit_flags, fit_component,
                       fit_t1, fit_t2] {
        rc = cmd_decay_fit(fit_flags->merge(config_path), out,
                           *fit_component, *fit_t1, *fit_t2);
    });

    auto* verify_cmd = app.add_subcommand(
        "verify-full",
        "integrate the full 3x3 density matrix and check it reduces onto "
        "the 4-variable model");
    auto verify_flags = std::make_shared<ScenarioFlags>();
    verify_flags->attach_params(verify_cmd);
    verify_flags->attach_omega(verify_cmd, "drive strength");
    verify_flags->attach_grid(verify_cmd);
    verify_flags->attach_output(verify_cmd);
    verify_cmd->callback([&rc, &out, &config_path, verify_flags] {
        rc = cmd_verify_full(verify_flags->merge(config_path), out);
    });

    auto* repro_cmd = app.add_subcommand(
        "repro", "regenerate all bundled reference data and check it");
    auto out_dir = std::make_shared<std::string>("repro");
    repro_cmd->add_option("--out-dir", *out_dir,
                          "directory for the generated CSV files");
    repro_cmd->callback([&rc, &out, out_dir] {
        rc = run_repro(*out_dir, out) == 0 ? 0 : 1;
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

}  // namespace lambda3
