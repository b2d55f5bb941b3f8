#include "lambda3/io.hpp"

#include <cstdio>

#include "lambda3/errors.hpp"

namespace lambda3 {

std::string format_full(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_short(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

OutputFormat parse_output_format(const std::string& s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "text") return OutputFormat::text;
    throw ConfigError("unknown format '" + s + "' (expected csv or text)");
}

namespace {

void write_row(std::ostream& out, const std::vector<double>& values,
               char sep) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << sep;
        out << format_full(values[i]);
    }
    out << '\n';
}

void write_header(std::ostream& out, const char* csv_header,
                  OutputFormat format) {
    if (format == OutputFormat::csv) {
        out << csv_header << '\n';
        return;
    }
    out << "# ";
    for (const char* c = csv_header; *c; ++c)
        out << (*c == ',' ? ' ' : *c);
    out << '\n';
}

}  // namespace

void write_trajectory(std::ostream& out, const Trajectory& traj,
                      OutputFormat format) {
    const char sep = format == OutputFormat::csv ? ',' : ' ';
    write_header(out, kTrajectoryHeader, format);
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const DensityVector& s = traj.states[i];
        write_row(out,
                  {traj.times[i], s.rho00, s.rhoB, s.rho11, s.rho22,
                   s.population_sum()},
                  sep);
    }
}

void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows,
                 OutputFormat format) {
    const char sep = format == OutputFormat::csv ? ',' : ' ';
    write_header(out, kSweepHeader, format);
    for (const SweepRow& r : rows) {
        const auto& g = r.spectrum.gammas;
        write_row(out,
                  {r.omega, r.steady.rho.rho00, r.steady.rho.rhoB,
                   r.steady.rho.rho11, r.steady.rho.rho22, g[0].real(),
                   g[0].imag(), g[1].real(), g[1].imag(), g[2].real(),
                   r.tau3},
                  sep);
    }
}

}  // namespace lambda3
