#include "lambda3/repro.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <vector>

#include "lambda3/analysis.hpp"
#include "lambda3/errors.hpp"
#include "lambda3/integrator.hpp"
#include "lambda3/io.hpp"
#include "lambda3/report.hpp"
#include "lambda3/spectrum.hpp"
#include "lambda3/steady_state.hpp"

namespace lambda3 {

namespace {

std::ofstream open_csv(const std::string& dir, const std::string& name,
                       std::ostream& log) {
    const std::string path = dir + "/" + name;
    std::ofstream f(path);
    if (!f) throw Error("cannot open output file '" + path + "'");
    log << "wrote " << path << "\n";
    return f;
}

void write_rows(std::ostream& out, const char* header,
                const std::vector<std::vector<double>>& rows) {
    out << header << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << format_full(row[i]);
        }
        out << '\n';
    }
}

std::vector<double> linear_grid(double lo, double hi, int n) {
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        g.push_back(lo + (hi - lo) * static_cast<double>(i) /
                             static_cast<double>(n - 1));
    return g;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(n));
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i)
        g.push_back(std::exp(llo + (lhi - llo) * static_cast<double>(i) /
                                       static_cast<double>(n - 1)));
    return g;
}

// Residual columns x(t) - x(inf) for the approach-to-steady figures.
void write_approach(std::ostream& out, const Trajectory& traj,
                    const SteadyState& target) {
    std::vector<std::vector<double>> rows;
    rows.reserve(traj.times.size());
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const DensityVector& s = traj.states[i];
        rows.push_back({traj.times[i], s.rho00 - target.rho.rho00,
                        s.rhoB - target.rho.rhoB, s.rho11 - target.rho.rho11,
                        s.rho22 - target.rho.rho22});
    }
    write_rows(out, "t,rho00_res,rhoB_res,rho11_res,rho22_res", rows);
}

}  // namespace

int run_repro(const std::string& out_dir, std::ostream& out) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw Error("cannot create output directory '" + out_dir +
                    "': " + ec.message());

    const SystemParams base = default_params();
    const InitialCondition start = InitialCondition::excited();

    // Steady-state curves vs drive strength.
    {
        const std::vector<double> grid = linear_grid(0.0, 10.0, 201);
        std::vector<std::vector<double>> pops, coh;
        for (const double om : grid) {
            const DensityVector s = steady_state(base.with_omega(om)).rho;
            pops.push_back({om, s.rho00, s.rho22});
            coh.push_back({om, s.rhoB});
        }
        auto f2 = open_csv(out_dir, "fig02_steady_populations.csv", out);
        write_rows(f2, "omega,rho00_inf,rho22_inf", pops);
        auto f3 = open_csv(out_dir, "fig03_steady_coherence.csv", out);
        write_rows(f3, "omega,rhoB_inf", coh);
    }

    // Time evolutions and approach-to-steady residuals at the three bundled
    // drive strengths.
    struct Scenario {
        double omega;
        const char* full;
        const char* brief;
        const char* approach;
    };
    const Scenario scenarios[] = {
        {0.1, "fig04_populations_omega0.1.csv",
         "fig05_populations_short_omega0.1.csv", "fig06_approach_omega0.1.csv"},
        {4.5, "fig08_populations_omega4.5.csv",
         "fig07_populations_short_omega4.5.csv", "fig09_approach_omega4.5.csv"},
        {10.0, "fig11_populations_omega10.csv",
         "fig10_populations_short_omega10.csv", "fig12_approach_omega10.csv"},
    };
    for (const auto& sc : scenarios) {
        const SystemParams p = base.with_omega(sc.omega);
        const Trajectory full = evolve(p, start, 14.0, 1e-3, 10);
        const Trajectory brief = evolve(p, start, 1.4, 1e-3, 1);
        auto ff = open_csv(out_dir, sc.full, out);
        write_trajectory(ff, full);
        auto fb = open_csv(out_dir, sc.brief, out);
        write_trajectory(fb, brief);
        auto fa = open_csv(out_dir, sc.approach, out);
        write_approach(fa, full, steady_state(p));
    }

    // Decay time constant vs drive strength: two-point fit on the stepped
    // trajectory alongside the eigenvalue lifetime.
    {
        std::vector<std::vector<double>> rows;
        for (const double om : log_grid(0.1, 10.0, 25)) {
            const SystemParams p = base.with_omega(om);
            const Trajectory traj = evolve(p, start, 14.0, 1e-3, 1000);
            const DecayFit fit = fit_decay_constant(traj, steady_state(p),
                                                    Component::rho00);
            rows.push_back({om, fit.tau, eigenvalues(p).taus[2]});
        }
        auto f = open_csv(out_dir, "fig13_decay_time_vs_omega.csv", out);
        write_rows(f, "omega,tau_fit,tau_eigen", rows);
    }

    // Eigenvalue structure vs drive strength.
    {
        std::vector<std::vector<double>> fast, imag, slow;
        for (const double om : linear_grid(0.0, 10.0, 201)) {
            const Spectrum s = eigenvalues(base.with_omega(om));
            fast.push_back(
                {om, -s.gammas[0].real(), -s.gammas[1].real()});
            if (om >= 2.0)
                imag.push_back({om, std::abs(s.gammas[0].imag())});
        }
        for (const double om : log_grid(0.1, 20.0, 81)) {
            const Spectrum s = eigenvalues(base.with_omega(om));
            slow.push_back({om, -s.gammas[2].real()});
        }
        auto b1 = open_csv(out_dir, "figB1_fast_eigenvalues.csv", out);
        write_rows(b1, "omega,neg_re_gamma1,neg_re_gamma2", fast);
        auto b2 = open_csv(out_dir, "figB2_imaginary_part.csv", out);
        write_rows(b2, "omega,abs_im_gamma1", imag);
        auto b3 = open_csv(out_dir, "figB3_slow_eigenvalue.csv", out);
        write_rows(b3, "omega,neg_gamma3", slow);
    }

    // Quantitative comparison against the bundled reference values.
    const std::vector<CheckResult> checks = reference_checks();
    int fails = 0;
    out << "\nreference checks:\n";
    for (const auto& c : checks) {
        out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "\n";
        if (!c.pass && !c.detail.empty()) out << "       " << c.detail << "\n";
        fails += c.pass ? 0 : 1;
    }
    out << "\n"
        << (checks.size() - static_cast<std::size_t>(fails)) << "/"
        << checks.size() << " reference checks pass\n";
    return fails;
}

}  // namespace lambda3
