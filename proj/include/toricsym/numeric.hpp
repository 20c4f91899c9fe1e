#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace toricsym {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntegerVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }
inline Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::lcm(a, b);
}

/// Rational in lowest terms, "p" or "p/q" with q > 0.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// gcd of all entries (0 for the zero vector).
Integer content(const IntegerVector& v);

/// Divides out the content and flips the sign so the first nonzero entry is positive.
void make_primitive(IntegerVector& v);

/// Smallest integer multiple of v with coprime entries, first nonzero entry positive.
IntegerVector primitive_integer_multiple(const RationalVector& v);

bool is_zero(const IntegerVector& v);

std::int64_t to_int64(const Integer& z);

}  // namespace toricsym
