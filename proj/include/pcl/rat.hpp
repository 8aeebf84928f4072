#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pcl {

// Exact rational scalar. Always stored in canonical form (reduced,
// positive denominator) by the backend.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline std::string to_string(const Rat& r) { return r.str(); }

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

} // namespace pcl
