#pragma once

#include <utility>

#include "diskcolor/rational.hpp"

namespace diskcolor {

// Value a + b*sqrt(d) over a single radicand d >= 0. Normalized so that
// b == 0 (and d == 0) whenever d is zero or a perfect rational square;
// after normalization a nonzero b always pairs with an irrational sqrt(d).
struct Quadratic {
    Rational a, b, d;

    Quadratic() : a(0), b(0), d(0) {}
    /*implicit*/ Quadratic(Rational value) : a(std::move(value)), b(0), d(0) {}
    /*implicit*/ Quadratic(int value) : a(value), b(0), d(0) {}
    Quadratic(Rational a_, Rational b_, Rational d_)
        : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {
        normalize();
    }

    bool is_rational() const { return b == 0; }

    void normalize() {
        if (d < 0) throw Error("Quadratic: negative radicand");
        if (b == 0) { d = 0; return; }
        if (d == 0) { b = 0; return; }
        if (auto s = rational_sqrt(d)) {
            a += b * *s;
            b = 0;
            d = 0;
        }
    }
};

inline void require_same_field(const Quadratic& x, const Quadratic& y) {
    if (x.b != 0 && y.b != 0 && x.d != y.d)
        throw Error("Quadratic: mixed radicands " + to_fraction_string(x.d) + " vs " +
                    to_fraction_string(y.d));
}

inline Quadratic operator+(const Quadratic& x, const Quadratic& y) {
    require_same_field(x, y);
    const Rational d = x.b != 0 ? x.d : y.d;
    return Quadratic(x.a + y.a, x.b + y.b, d);
}

inline Quadratic operator-(const Quadratic& x) { return Quadratic(-x.a, -x.b, x.d); }

inline Quadratic operator-(const Quadratic& x, const Quadratic& y) { return x + (-y); }

inline Quadratic operator*(const Quadratic& x, const Quadratic& y) {
    require_same_field(x, y);
    const Rational d = x.b != 0 ? x.d : y.d;
    return Quadratic(x.a * y.a + x.b * y.b * d, x.a * y.b + y.a * x.b, d);
}

inline Quadratic operator*(const Rational& s, const Quadratic& x) {
    return Quadratic(s * x.a, s * x.b, x.d);
}

inline Quadratic operator/(const Quadratic& x, const Quadratic& y) {
    require_same_field(x, y);
    if (y.b == 0) {
        if (y.a == 0) throw Error("Quadratic: division by zero");
        return Quadratic(x.a / y.a, x.b / y.a, x.d);
    }
    // Multiply by the conjugate; the norm is nonzero since sqrt(d) is irrational.
    const Rational norm = y.a * y.a - y.b * y.b * y.d;
    const Quadratic num = x * Quadratic(y.a, -y.b, y.d);
    return Quadratic(num.a / norm, num.b / norm, num.d);
}

inline bool operator==(const Quadratic& x, const Quadratic& y) {
    if (x.b == 0 && y.b == 0) return x.a == y.a;
    return x.a == y.a && x.b == y.b && x.d == y.d;
}

// Exact sign of a + b*sqrt(d), by sign analysis and squaring only.
inline Sign quadratic_sign(const Quadratic& q) {
    if (q.b == 0) return sign_of(q.a);
    const int sa = sign_int(q.a);
    const int sb = sign_int(q.b);
    if (sa == 0) return static_cast<Sign>(sb);
    if (sa == sb) return static_cast<Sign>(sa);
    const Rational lhs = q.a * q.a;
    const Rational rhs = q.b * q.b * q.d;
    if (lhs == rhs) return Sign::Zero; // sqrt(d) rational; excluded by normalization
    return lhs > rhs ? static_cast<Sign>(sa) : static_cast<Sign>(sb);
}

inline bool is_zero(const Quadratic& q) { return quadratic_sign(q) == Sign::Zero; }

// Exact sign of a + b*sqrt(u) + c*sqrt(v); u and v need not match.
inline Sign two_radical_sign(const Rational& a, const Rational& b, const Rational& u,
                             const Rational& c, const Rational& v) {
    const Quadratic bu(0, b, u);
    const Quadratic cv(0, c, v);
    if (bu.is_rational()) return quadratic_sign(Quadratic(a + bu.a + cv.a, cv.b, cv.d));
    if (cv.is_rational()) return quadratic_sign(Quadratic(a + cv.a + bu.a, bu.b, bu.d));
    if (bu.d == cv.d) return quadratic_sign(Quadratic(a, bu.b + cv.b, bu.d));

    // S = b*sqrt(u) + c*sqrt(v) with both parts irrational and distinct radicands.
    const int sb = sign_int(bu.b), sc = sign_int(cv.b);
    int sS;
    if (sb == sc) {
        sS = sb;
    } else {
        const int cmp = sign_int(bu.b * bu.b * bu.d - cv.b * cv.b * cv.d);
        sS = cmp == 0 ? 0 : (cmp > 0 ? sb : sc);
    }
    const int sa = sign_int(a);
    if (sS == 0) return static_cast<Sign>(sa);
    if (sa == 0) return static_cast<Sign>(sS);
    if (sa == sS) return static_cast<Sign>(sa);
    // |a| vs |S|: S^2 = b^2 u + c^2 v + 2 b c sqrt(u v).
    const Quadratic s_sq(bu.b * bu.b * bu.d + cv.b * cv.b * cv.d, 2 * bu.b * cv.b, bu.d * cv.d);
    const Sign cmp = quadratic_sign(s_sq - Quadratic(a * a));
    if (cmp == Sign::Zero) return Sign::Zero;
    return cmp == Sign::Positive ? static_cast<Sign>(sS) : static_cast<Sign>(sa);
}

// Exact sign of x - y for values in possibly different quadratic fields.
inline Sign quadratic_compare(const Quadratic& x, const Quadratic& y) {
    return two_radical_sign(x.a - y.a, x.b, x.d, -y.b, y.d);
}

// Rational m with |m - (a + b*sqrt(d))| <= 2^-prec_bits (roughly).
inline Rational quadratic_approx(const Quadratic& q, unsigned prec_bits) {
    if (q.b == 0) return q.a;
    const unsigned k = prec_bits + static_cast<unsigned>(bit_size(q.b)) + 4;
    const auto [lo, hi] = sqrt_bounds(q.d, k);
    return q.a + q.b * ((lo + hi) / 2);
}

// Rational enclosure [lo, hi] of the value with hi - lo <= width.
inline std::pair<Rational, Rational> quadratic_bounds(const Quadratic& q, const Rational& width) {
    if (width <= 0) throw Error("quadratic_bounds: width must be positive");
    if (q.b == 0) return {q.a, q.a};
    const Rational babs = boost::multiprecision::abs(q.b);
    for (unsigned k = 2;; k *= 2) {
        const auto [slo, shi] = sqrt_bounds(q.d, k);
        if (babs * (shi - slo) <= width) {
            const Rational v1 = q.a + q.b * slo, v2 = q.a + q.b * shi;
            return {std::min(v1, v2), std::max(v1, v2)};
        }
        if (k > (1u << 24)) throw Error("quadratic_bounds: width unreachable");
    }
}

// Positive rational lower bound on |value|; requires the value be nonzero.
inline Rational quadratic_abs_lower_bound(const Quadratic& q) {
    if (q.b == 0) {
        if (q.a == 0) throw Error("quadratic_abs_lower_bound: zero value");
        return boost::multiprecision::abs(q.a);
    }
    if (quadratic_sign(q) == Sign::Zero) throw Error("quadratic_abs_lower_bound: zero value");
    Rational width = 1;
    for (;;) {
        const auto [lo, hi] = quadratic_bounds(q, width);
        if (lo > 0) return lo;
        if (hi < 0) return -hi;
        width /= 16;
    }
}

} // namespace diskcolor
