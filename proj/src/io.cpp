#include "mpack/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mpack {

namespace {

void append_double(std::string& out, double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw std::runtime_error("code file, line " + std::to_string(line) + ": " + what);
}

}  // namespace

std::string serialize_code(const Code& code) {
  std::string out = "MPK1 n=" + std::to_string(code.n) + " M=" + std::to_string(code.size());
  if (code.power_limit) {
    out += " P=";
    append_double(out, *code.power_limit);
  }
  out += '\n';
  for (const auto& p : code.points) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) out += ' ';
      append_double(out, p[i]);
    }
    out += '\n';
  }
  return out;
}

Code parse_code(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) parse_fail(1, "empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::istringstream head(line);
  std::string tag, field;
  head >> tag;
  if (tag != "MPK1") parse_fail(1, "expected header tag MPK1, got '" + tag + "'");
  long n = -1, M = -1;
  std::optional<double> P;
  while (head >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) parse_fail(1, "malformed header field '" + field + "'");
    const std::string key = field.substr(0, eq);
    const std::string val = field.substr(eq + 1);
    char* end = nullptr;
    if (key == "n") {
      n = std::strtol(val.c_str(), &end, 10);
    } else if (key == "M") {
      M = std::strtol(val.c_str(), &end, 10);
    } else if (key == "P") {
      P = std::strtod(val.c_str(), &end);
    } else {
      parse_fail(1, "unknown header field '" + key + "'");
    }
    if (end == val.c_str() || *end != '\0') parse_fail(1, "bad value in '" + field + "'");
  }
  if (n < 1) parse_fail(1, "missing or invalid n");
  if (M < 0) parse_fail(1, "missing or invalid M");

  std::vector<Point> rows;
  rows.reserve(static_cast<std::size_t>(M));
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;  // ignore blank lines
    Point p;
    p.reserve(static_cast<std::size_t>(n));
    const char* s = line.c_str();
    while (*s) {
      char* end = nullptr;
      double v = std::strtod(s, &end);
      if (end == s) parse_fail(lineno, "expected a number, got '" + std::string(s) + "'");
      p.push_back(v);
      s = end;
      while (*s == ' ' || *s == '\t') ++s;
    }
    if (p.size() != static_cast<std::size_t>(n))
      parse_fail(lineno, "expected " + std::to_string(n) + " values, got " +
                             std::to_string(p.size()));
    rows.push_back(std::move(p));
  }
  if (rows.size() != static_cast<std::size_t>(M))
    throw std::runtime_error("code file: header says M=" + std::to_string(M) + " but " +
                             std::to_string(rows.size()) + " rows follow");
  return make_code(static_cast<int>(n), std::move(rows), P);
}

void save_code(const std::string& path, const Code& code) {
  write_text(path, serialize_code(code));
}

Code load_code(const std::string& path) { return parse_code(read_text(path)); }

std::string curves_to_csv(const std::vector<BoundCurve>& curves, bool bits) {
  if (curves.empty()) throw std::invalid_argument("curves_to_csv: no curves");
  const auto& grid = curves.front().grid;
  for (const auto& c : curves)
    if (c.grid != grid) throw std::invalid_argument("curves_to_csv: grids differ");

  const double unit = bits ? std::log(2.0) : 1.0;
  std::string out = "x";
  for (const auto& c : curves) out += "," + to_string(c.name);
  out += '\n';
  for (std::size_t i = 0; i < grid.size(); ++i) {
    append_double(out, grid[i]);
    for (const auto& c : curves) {
      out += ',';
      const double v = c.values[i];
      if (std::isfinite(v)) append_double(out, v / unit);
    }
    out += '\n';
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!f) throw std::runtime_error("write failed: " + path);
}

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace mpack
