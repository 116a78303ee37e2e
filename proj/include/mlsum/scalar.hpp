#pragma once

// Extended-precision scalar for the recursion. Generator products reach norms
// of order e^650 and commutators of them cancel almost all of those digits, so
// doubles are hopeless after a handful of steps; 1250 decimal digits covers
// lengths up to the engine's guard.

#include <boost/multiprecision/mpfr.hpp>

namespace mlsum {

using HighReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<1250>,
                                               boost::multiprecision::et_off>;

inline double to_double(const HighReal& x) { return x.convert_to<double>(); }
inline double to_double(double x) { return x; }

}  // namespace mlsum
