#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cartpole/errors.hpp"

namespace cartpole {

// Flat `key = value` text: one pair per line, `#` starts a comment, blank
// lines ignored. Order-preserving; later duplicates win on lookup.
struct KeyValue {
  std::string key;
  std::string value;
};

using KeyValueList = std::vector<KeyValue>;

KeyValueList parse_key_values(std::istream& in);
KeyValueList read_key_value_file(const std::string& path);

void write_key_values(std::ostream& out, const KeyValueList& entries);
void write_key_value_file(const std::string& path, const KeyValueList& entries);

// Shortest decimal form with up to 17 significant digits; round-trips
// through parse_double bit-exactly.
std::string format_double(double value);

// Whole-string strtod; throws ParseError mentioning `context` on leftovers
// or empty input.
double parse_double(const std::string& text, const std::string& context);

}  // namespace cartpole
