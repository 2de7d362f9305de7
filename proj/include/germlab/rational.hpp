#pragma once

#include <gmpxx.h>

#include <string>

#include "germlab/errors.hpp"

namespace germlab {

/// Exact rational coefficient. GMP keeps values reduced with positive
/// denominator after arithmetic; constructors here canonicalize eagerly so
/// every Rational in the system satisfies gcd(|num|, den) = 1, den > 0.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    require(den != 0, "algebra.ZeroDenominator", "rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    require(den != 0, "algebra.ZeroDenominator", "rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Rational pow_rational(const Rational& base, unsigned long exp) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    return r;
}

/// "3", "-3", "3/2" — the exact shape the expression grammar and the report
/// serializers use.
inline std::string rational_to_string(const Rational& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace germlab
