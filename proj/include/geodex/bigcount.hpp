#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace geodex {

// Exact nonnegative counter. Geodesic counts grow like 3^{n/3} and d!, so
// nothing in this library stores a count in a fixed-width integer.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& value) { return value.str(); }

BigCount factorial(unsigned n);
BigCount binomial(unsigned n, unsigned k);
BigCount power(const BigCount& base, unsigned exponent);

}  // namespace geodex
