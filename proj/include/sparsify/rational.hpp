#pragma once

#include "errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

namespace sparsify {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw DomainError("zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

inline BigInt floor_of(const Rational &r) {
    BigInt q = boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
    // cpp_int division truncates toward zero
    if (r < 0 && Rational(q) != r) --q;
    return q;
}

inline BigInt ceil_of(const Rational &r) {
    BigInt f = floor_of(r);
    return Rational(f) == r ? f : f + 1;
}

/// r^e for a non-negative integer exponent, exact.
inline Rational pow(const Rational &r, unsigned long long e) {
    Rational result = 1;
    Rational base = r;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

/// Saturating conversion of a non-negative integer to uint64.
inline std::uint64_t to_u64_saturating(const BigInt &v) {
    if (v <= 0) return 0;
    if (v >= BigInt(std::numeric_limits<std::uint64_t>::max())) return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(v);
}

/// Smallest integer k with k*k >= r (r > 0), i.e. ceil(sqrt(r)) computed exactly.
inline BigInt ceil_sqrt(const Rational &r) {
    BigInt k = boost::multiprecision::sqrt(ceil_of(r));
    while (Rational(k * k) < r) ++k;
    while (k > 0 && Rational((k - 1) * (k - 1)) >= r) --k;
    return k;
}

/// Parses "p/q" or "p".
inline Rational parse_rational(const std::string &text) {
    auto slash = text.find('/');
    auto parse_int = [&](const std::string &s) {
        if (s.empty()) throw InputError("malformed rational '" + text + "'");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw InputError("malformed rational '" + text + "'");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') throw InputError("malformed rational '" + text + "'");
        return BigInt(s);
    };
    if (slash == std::string::npos) return Rational(parse_int(text));
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + text + "'");
    return Rational(num, den);
}

inline std::string to_string(const Rational &r) {
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Short human form for huge exponent-laden values: "p/q" when small,
/// otherwise "~2^k".
inline std::string to_display(const Rational &r) {
    std::string s = to_string(r);
    if (s.size() <= 40) return s;
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    long long bits = static_cast<long long>(boost::multiprecision::msb(num)) -
                     static_cast<long long>(boost::multiprecision::msb(den));
    return "~2^" + std::to_string(bits);
}

} // namespace sparsify
