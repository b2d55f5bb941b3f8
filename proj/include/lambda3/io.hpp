#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "lambda3/analysis.hpp"
#include "lambda3/format.hpp"
#include "lambda3/integrator.hpp"

namespace lambda3 {

enum class OutputFormat { csv, text };
// "csv" or "text"; throws ConfigError otherwise.
OutputFormat parse_output_format(const std::string& s);

inline constexpr const char* kTrajectoryHeader =
    "t,rho00,rhoB,rho11,rho22,pop_sum";
inline constexpr const char* kSweepHeader =
    "omega,rho00_inf,rhoB_inf,rho11_inf,rho22_inf,"
    "gamma1_re,gamma1_im,gamma2_re,gamma2_im,gamma3,tau3";

// Trajectory table: t,rho00,rhoB,rho11,rho22,pop_sum. The text format holds
// the same columns, space-separated with a '#'-prefixed header.
void write_trajectory(std::ostream& out, const Trajectory& traj,
                      OutputFormat format = OutputFormat::csv);

// Sweep table over drive strengths (gamma3 is real; tau3 = -1/gamma3).
void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows,
                 OutputFormat format = OutputFormat::csv);

}  // namespace lambda3
