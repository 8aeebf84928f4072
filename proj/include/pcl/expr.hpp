#pragma once

#include "pcl/lampoly.hpp"
#include "pcl/pva.hpp"

#include <string>

namespace pcl {

// Polynomial expression parser for generators and lambda-variables.
// Grammar: sums and differences of terms, '*' products, '^' integer powers,
// parentheses, integer and rational (p/q) constants. Generators are written
// u (first generator) or u0, u1, ...; each trailing apostrophe is one
// derivative. Lambda-variables are l (first variable) or l0, l1, ....
DiffPoly parse_diffpoly(const std::string& text, int ngens = 1);
LamPoly parse_lampoly(const std::string& text, int nvars, int ngens = 1);

// PVA descriptor: "ngens: N" followed by lines "[i,j] = <lambda-expression>"
// for the bracket table; missing entries are zero.
PVAStructure parse_pva(const std::string& text, const std::string& name = "descriptor");

} // namespace pcl
