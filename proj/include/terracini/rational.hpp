#pragma once

#include <gmpxx.h>

#include <string>

#include "terracini/errors.hpp"

namespace terracini {

/// Exact arbitrary-precision rational scalar. mpq_class keeps values in
/// canonical form (reduced fraction, positive denominator) as long as they
/// are produced by arithmetic or canonicalize(); every constructor below
/// canonicalizes, so all Rationals in the library are canonical.
using Rational = mpq_class;

inline Rational rational_of(long num, long den = 1) {
    if (den == 0) throw parse_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p", "-p", or "p/q" with arbitrary-precision integer parts.
inline Rational parse_rational(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw parse_error("bad rational literal: '" + text + "'");
    if (q.get_den() == 0)
        throw parse_error("rational with zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

/// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

/// q^e for e >= 0 (0^0 = 1).
inline Rational rational_pow(const Rational& q, unsigned long e) {
    if (e == 0) return Rational(1);
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), e);
    return out;
}

} // namespace terracini
