#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace lie_euler {

using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace lie_euler
