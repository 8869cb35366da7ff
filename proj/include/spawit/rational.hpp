#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace spawit::exact {

/// Exact rational with arbitrary-precision integer parts. GMP keeps the
/// canonical form (gcd 1, positive denominator) across arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string num_string(const Rational& q) { return q.get_num().get_str(); }
inline std::string den_string(const Rational& q) { return q.get_den().get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

/**
 * Rational bracket [lo, hi] around sqrt(n): lo^2 <= n <= hi^2 with
 * hi - lo <= precision, built from the integer floor square root at a
 * denominator fine enough for the requested width. Both bounds are
 * re-verified exactly before returning.
 */
struct SqrtBracket {
    Rational lo;
    Rational hi;
};

inline SqrtBracket sqrt_bracket(const Rational& n, const Rational& precision) {
    if (n <= 0) throw std::invalid_argument("sqrt_bracket: need n > 0");
    if (precision <= 0) throw std::invalid_argument("sqrt_bracket: need precision > 0");

    // denominator D with 2/D <= precision
    Integer d = 1;
    Rational width = make_rational(2, 1) / Rational(d);
    while (width > precision) {
        d *= 10;
        width = make_rational(2, 1) / Rational(d);
    }

    const Rational scaled = n * Rational(d) * Rational(d);
    Integer floor_scaled = scaled.get_num() / scaled.get_den();  // truncation; scaled > 0
    Integer root = sqrt(floor_scaled);                           // floor sqrt

    SqrtBracket b;
    b.lo = make_rational(root, d);
    b.hi = make_rational(root + 1, d);
    int guard = 0;
    while (b.hi * b.hi < n && guard++ < 4) b.hi += make_rational(1, 1) / Rational(d);

    if (b.lo * b.lo > n || b.hi * b.hi < n || b.hi - b.lo > precision)
        throw std::runtime_error("sqrt_bracket: postcondition violated");
    return b;
}

}  // namespace spawit::exact
