#pragma once

#include <filesystem>
#include <iosfwd>

#include "cartpole/errors.hpp"
#include "cartpole/simulate.hpp"

namespace cartpole {

inline constexpr const char* kTrajectoryCsvHeader =
    "t,x,x_dot,theta,theta_dot,u,F_net";

// One row per step, doubles rendered to 17 significant digits, rows
// newline-terminated; parses back bit-exactly.
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory);
void write_trajectory_csv(const std::filesystem::path& path,
                          const Trajectory& trajectory);

// Throws ParseError naming the first bad line (wrong header, wrong field
// count, non-numeric or non-finite field) and IoError when the file cannot
// be opened.
Trajectory read_trajectory_csv(std::istream& in);
Trajectory read_trajectory_csv(const std::filesystem::path& path);

}  // namespace cartpole
