#pragma once

// Test-only helpers: seeded random generators and brute-force oracles kept
// independent of the library's computation paths.

#include <random>
#include <vector>

#include "germlab/polynomial.hpp"

namespace germlab::testing {

class RandomPolyGen {
public:
    explicit RandomPolyGen(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }

    Rational coefficient(int max_abs = 4) {
        int c = uniform(-max_abs, max_abs);
        if (c == 0) c = 1;
        return Rational(c);
    }

    /// Random sparse polynomial: up to `max_terms` terms, exponents in
    /// [0, max_exp] per variable. May be zero if allow_zero.
    Polynomial sparse(const Ring& ring, int max_terms, int max_exp, bool allow_zero = false) {
        Polynomial p(ring);
        int nterms = uniform(allow_zero ? 0 : 1, max_terms);
        for (int t = 0; t < nterms; ++t) {
            Monomial m(ring.size());
            for (std::size_t v = 0; v < ring.size(); ++v) m.exp[v] = uniform(0, max_exp);
            p.add_term(m, coefficient());
        }
        if (!allow_zero && p.is_zero()) p.add_term(Monomial(ring.size()), Rational(1));
        return p;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace germlab::testing
