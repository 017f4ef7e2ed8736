#include "polyint_cli/grid.hpp"

#include <charconv>
#include <sstream>

#include "polyint/errors.hpp"

namespace polyint::cli {
namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(trim(field));
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

template <typename T>
bool parse_number(const std::string& s, T& out) {
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

std::vector<IntegralParams> default_grid() {
  std::vector<IntegralParams> grid;
  for (Sign sign : {Sign::plus, Sign::minus}) {
    for (double q : {0.5, 1.0, 2.0, 3.0}) {
      const double ab[3][2] = {{q, 1.0}, {2.0 * q, 2.0}, {-q, -1.0}};
      for (const auto& pair : ab) {
        for (int p = 0; p <= 3; ++p) {
          for (int t = 1; t <= 4; ++t) grid.push_back({sign, pair[0], pair[1], p, t});
        }
      }
    }
  }
  return grid;
}

std::vector<IntegralParams> parse_grid(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  std::vector<IntegralParams> grid;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string content = trim(line);
    if (content.empty()) continue;
    const auto fields = split(content);
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!header_seen) {
      if (fields != std::vector<std::string>{"sign", "a", "b", "p", "t"}) {
        throw GridFormatError(where + "expected header 'sign,a,b,p,t'");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 5) throw GridFormatError(where + "expected 5 fields");
    IntegralParams params;
    if (fields[0] == "plus") {
      params.sign = Sign::plus;
    } else if (fields[0] == "minus") {
      params.sign = Sign::minus;
    } else {
      throw GridFormatError(where + "sign must be 'plus' or 'minus'");
    }
    if (!parse_number(fields[1], params.a) || !parse_number(fields[2], params.b) ||
        !parse_number(fields[3], params.p) || !parse_number(fields[4], params.t)) {
      throw GridFormatError(where + "could not parse a, b, p, t");
    }
    try {
      params.validate();
    } catch (const DomainError& e) {
      throw GridFormatError(where + e.what());
    }
    grid.push_back(params);
  }
  if (!header_seen) throw GridFormatError("grid file is empty");
  return grid;
}

}  // namespace polyint::cli
