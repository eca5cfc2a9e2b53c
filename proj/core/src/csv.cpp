#include "cartpole/csv.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "cartpole/keyvalue.hpp"

namespace cartpole {

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory) {
  out << kTrajectoryCsvHeader << '\n';
  for (const TrajectorySample& s : trajectory.samples) {
    out << format_double(s.t) << ',' << format_double(s.state.cart_position)
        << ',' << format_double(s.state.cart_velocity) << ','
        << format_double(s.state.rod_angle) << ','
        << format_double(s.state.rod_angular_velocity) << ','
        << format_double(s.command) << ',' << format_double(s.net_force)
        << '\n';
  }
}

void write_trajectory_csv(const std::filesystem::path& path,
                          const Trajectory& trajectory) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  write_trajectory_csv(out, trajectory);
  if (!out) throw IoError("write failed for " + path.string());
}

Trajectory read_trajectory_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw ParseError("line 1: empty file, expected header \"" +
                     std::string(kTrajectoryCsvHeader) + "\"");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kTrajectoryCsvHeader)
    throw ParseError("line 1: bad header \"" + line + "\", expected \"" +
                     std::string(kTrajectoryCsvHeader) + "\"");

  Trajectory trajectory;
  int line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string context = "line " + std::to_string(line_number);

    std::array<double, 7> fields{};
    std::size_t begin = 0;
    for (int i = 0; i < 7; ++i) {
      const auto comma = line.find(',', begin);
      const bool last = i == 6;
      if (!last && comma == std::string::npos)
        throw ParseError(context + ": expected 7 comma-separated values");
      if (last && comma != std::string::npos)
        throw ParseError(context + ": expected 7 comma-separated values");
      const std::string field =
          line.substr(begin, last ? std::string::npos : comma - begin);
      fields[i] = parse_double(field, context);
      if (!std::isfinite(fields[i]))
        throw ParseError(context + ": non-finite value \"" + field + "\"");
      begin = comma + 1;
    }

    trajectory.samples.push_back(
        {fields[0], {fields[1], fields[2], fields[3], fields[4]}, fields[5],
         fields[6]});
  }
  return trajectory;
}

Trajectory read_trajectory_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_trajectory_csv(in);
}

}  // namespace cartpole
