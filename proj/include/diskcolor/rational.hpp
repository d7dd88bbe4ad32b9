#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "diskcolor/errors.hpp"

namespace diskcolor {

// Expression templates off: plain value semantics.
using BigInt =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;

// Always stored reduced with a positive denominator.
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

// Construction with sign normalization: the denominator may be negative.
inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw Error("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline int sign_int(const Rational& x) { return x == 0 ? 0 : (x < 0 ? -1 : 1); }

inline Sign sign_of(const Rational& x) { return static_cast<Sign>(sign_int(x)); }

// Bits of |n|; 0 for n == 0.
inline std::size_t bit_size(const BigInt& n) {
    if (n == 0) return 0;
    return static_cast<std::size_t>(boost::multiprecision::msb(boost::multiprecision::abs(n))) + 1;
}

inline std::size_t bit_size(const Rational& q) {
    return std::max(bit_size(numerator(q)), bit_size(denominator(q)));
}

inline Rational pow2(long e) {
    if (e >= 0) return Rational(BigInt(1) << e, 1);
    return Rational(1, BigInt(1) << (-e));
}

// Largest 2^e <= x (e may be negative). Requires x > 0.
inline Rational pow2_floor(const Rational& x) {
    if (x <= 0) throw Error("pow2_floor: argument must be positive");
    const BigInt a = numerator(x);
    const BigInt b = denominator(x);
    long e = static_cast<long>(bit_size(a)) - static_cast<long>(bit_size(b));
    auto le = [&](long ee) { // 2^ee <= a/b ?
        if (ee >= 0) return (b << ee) <= a;
        return b <= (a << (-ee));
    };
    while (!le(e)) --e;
    while (le(e + 1)) ++e;
    return pow2(e);
}

// Largest 2^e with (2^e)^2 <= x. Requires x > 0.
inline Rational pow2_sqrt_floor(const Rational& x) {
    if (x <= 0) throw Error("pow2_sqrt_floor: argument must be positive");
    const Rational f = pow2_floor(x);
    long e = static_cast<long>(bit_size(numerator(f))) - 1
           - (static_cast<long>(bit_size(denominator(f))) - 1);
    long h = e >= 0 ? e / 2 : -((-e + 1) / 2);
    while (pow2(2 * h) > x) --h;
    while (pow2(2 * (h + 1)) <= x) ++h;
    return pow2(h);
}

// Rational enclosure of sqrt(x): lo <= sqrt(x) <= hi with hi - lo = 1/(den(x) * 2^k).
inline std::pair<Rational, Rational> sqrt_bounds(const Rational& x, unsigned k = 0) {
    if (x < 0) throw Error("sqrt_bounds: negative argument");
    const BigInt a = numerator(x), b = denominator(x);
    const BigInt s = boost::multiprecision::sqrt(BigInt((a * b) << (2 * k)));
    const BigInt den = b << k;
    return {Rational(s, den), Rational(s + 1, den)};
}

inline Rational sqrt_lower_bound(const Rational& x, unsigned k = 0) { return sqrt_bounds(x, k).first; }
inline Rational sqrt_upper_bound(const Rational& x, unsigned k = 0) { return sqrt_bounds(x, k).second; }

// Exact rational square root, if one exists.
inline std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    const BigInt a = numerator(x), b = denominator(x);
    const BigInt s = boost::multiprecision::sqrt(a);
    if (s * s != a) return std::nullopt;
    const BigInt t = boost::multiprecision::sqrt(b);
    if (t * t != b) return std::nullopt;
    return Rational(s, t);
}

inline std::string to_fraction_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "p/q" or a bare integer "p".
inline Rational parse_rational(const std::string& s) {
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(BigInt(s), 1);
        return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception& e) {
        throw Error("parse_rational: cannot parse '" + s + "': " + e.what());
    }
}

} // namespace diskcolor
