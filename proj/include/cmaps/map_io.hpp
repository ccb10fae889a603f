#pragma once

// Text serialization of maps ("map v1") and K_n embedding codes ("kn v1").

#include <iosfwd>
#include <string>

#include "cmaps/map.hpp"

namespace cmaps {

// map v1
// flags=<N>
// alpha: (0 1)(2 3)...
// beta: ...
// P: ...
// Cycles are written least-element-first and sorted by least element; fixed
// points are written as singleton cycles.
std::string write_map_v1(const Map& m);
Map read_map_v1(std::istream& in);           // throws MapError with line info
Map read_map_v1_file(const std::string& path);

std::string format_cycles(const Permutation& p, bool include_fixed_points = true);
Permutation parse_cycles(const std::string& text, std::size_t m);

}  // namespace cmaps
