#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace boxmin {

// Exact arbitrary-precision rational. All polynomial coefficients, corner
// integrals and bound-ledger entries are carried in this type.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rat(long long p, long long q = 1) { return Rational(p, q); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// "p/q" form, or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Accepts "p/q", integers and finite decimals ("0.99", "-1.5e-3").
// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

BigInt floor_of(const Rational& r);

}  // namespace boxmin
