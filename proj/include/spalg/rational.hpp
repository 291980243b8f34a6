#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

namespace spalg {

// Exact arbitrary-precision rational scalar. Always stored in lowest terms
// with a positive denominator; equality is exact.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational make_rational(long long num, long long den = 1) {
    return Rational(Integer(num), Integer(den));
}

// "a" when the denominator is 1, otherwise "a/b", lowest terms.
inline std::string rational_to_string(const Rational& value) {
    std::ostringstream out;
    out << value;
    return out.str();
}

} // namespace spalg
