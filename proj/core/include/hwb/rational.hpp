#pragma once
// Exact arbitrary-precision arithmetic used throughout the library.

#include <boost/multiprecision/cpp_int.hpp>

namespace hwb {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

} // namespace hwb
