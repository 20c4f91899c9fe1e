#include "toricsym/numeric.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace toricsym {

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
    const Integer den = denominator_of(q);
    if (den == 1) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + den.str();
}

namespace {

Integer parse_integer(const std::string& text) {
    std::size_t start = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
    if (start == text.size()) throw std::invalid_argument("malformed integer: '" + text + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("malformed integer: '" + text + "'");
    return Integer(text[0] == '+' ? text.substr(1) : text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    const Integer num = parse_integer(text.substr(0, slash));
    const std::string den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw std::invalid_argument("malformed rational: '" + text + "'");
    const Integer den = parse_integer(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return Rational(num, den);
}

Integer content(const IntegerVector& v) {
    Integer g = 0;
    for (const auto& x : v) {
        if (x == 0) continue;
        g = gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

void make_primitive(IntegerVector& v) {
    const Integer g = content(v);
    if (g == 0) return;
    Integer scale = g;
    for (const auto& x : v) {
        if (x != 0) {
            if (x < 0) scale = -g;
            break;
        }
    }
    if (scale == 1) return;
    for (auto& x : v) x /= scale;
}

IntegerVector primitive_integer_multiple(const RationalVector& v) {
    Integer den = 1;
    for (const auto& q : v) den = lcm(den, denominator_of(q));
    IntegerVector out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(numerator_of(q) * (den / denominator_of(q)));
    make_primitive(out);
    return out;
}

bool is_zero(const IntegerVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

std::int64_t to_int64(const Integer& z) {
    if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer does not fit in 64 bits: " + z.str());
    return z.convert_to<std::int64_t>();
}

}  // namespace toricsym
