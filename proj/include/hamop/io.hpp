#pragma once

#include <string>
#include <vector>

#include "hamop/poly.hpp"
#include "hamop/ratfunc.hpp"

namespace hamop {

// Text grammar shared by all modules and the CLI: integers, `/` for rational
// constants (and rational functions), identifiers as variables, + - * ^ and
// parentheses; whitespace insignificant.  parse/print round-trip.
RatFunc parse_ratfunc(const std::string& src, const TablePtr& tab);
Poly parse_poly(const std::string& src, const TablePtr& tab);

// identifiers in order of first occurrence (for building tables from files)
std::vector<std::string> scan_identifiers(const std::string& src);

}  // namespace hamop
