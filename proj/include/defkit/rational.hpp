#pragma once

#include <gmpxx.h>

#include <string>

#include "defkit/error.hpp"

namespace defkit {

/// Exact rational coefficient. mpq_class keeps the spec invariants
/// (lowest terms, positive denominator) via canonicalization.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_of(long long num, long long den = 1) {
    if (den == 0) throw Error(ErrorKind::ZeroDenominator, "rational with zero denominator");
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Grammar form: "n" or "n/d", denominator printed only when != 1.
inline std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

} // namespace defkit
