#pragma once

#include <string>
#include <vector>

#include "mpack/bounds.hpp"
#include "mpack/geometry.hpp"

namespace mpack {

// Plain-text code file:
//   MPK1 n=<n> M=<M> [P=<P>]
//   <n reals> ... one row per line
// Values use the shortest decimal that round-trips binary64, so
// parse_code(serialize_code(c)) == c bit-exactly for finite doubles.
std::string serialize_code(const Code& code);
Code parse_code(const std::string& text);

void save_code(const std::string& path, const Code& code);
Code load_code(const std::string& path);

// CSV of bound curves over a shared grid: header "x,<name>,...", '.' decimal
// separator, LF line endings; non-finite cells are left empty.  Values are
// divided by ln 2 when bits is set.
std::string curves_to_csv(const std::vector<BoundCurve>& curves, bool bits);

void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

}  // namespace mpack
