#include "cartpole/keyvalue.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace cartpole {

namespace {

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

}  // namespace

KeyValueList parse_key_values(std::istream& in) {
  KeyValueList entries;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string content = trim(line);
    if (content.empty()) continue;
    const auto equals = content.find('=');
    if (equals == std::string::npos)
      throw ParseError("line " + std::to_string(line_number) +
                       ": expected `key = value`, got \"" + content + "\"");
    const std::string key = trim(content.substr(0, equals));
    const std::string value = trim(content.substr(equals + 1));
    if (key.empty())
      throw ParseError("line " + std::to_string(line_number) + ": empty key");
    entries.push_back({key, value});
  }
  return entries;
}

KeyValueList read_key_value_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return parse_key_values(in);
}

void write_key_values(std::ostream& out, const KeyValueList& entries) {
  for (const KeyValue& entry : entries)
    out << entry.key << " = " << entry.value << '\n';
}

void write_key_value_file(const std::string& path, const KeyValueList& entries) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  write_key_values(out, entries);
  if (!out) throw IoError("write failed for " + path);
}

std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

double parse_double(const std::string& text, const std::string& context) {
  if (text.empty()) throw ParseError(context + ": empty number");
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size())
    throw ParseError(context + ": invalid number \"" + text + "\"");
  return value;
}

}  // namespace cartpole
