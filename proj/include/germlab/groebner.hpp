#pragma once

#include <optional>
#include <vector>

#include "germlab/ideal.hpp"
#include "germlab/monomial_order.hpp"

namespace germlab {

/// Reduced Groebner basis: monic elements, no term of any element divisible
/// by another element's leading term, sorted with descending leading terms.
/// Uniquely determined by (ideal, order).
struct GroebnerBasis {
    Ring ring;
    MonomialOrder order;
    std::vector<Polynomial> basis;

    bool is_unit() const {
        return basis.size() == 1 && basis.front().is_constant() && !basis.front().is_zero();
    }
};

struct GroebnerOptions {
    /// Buchberger aborts with ideal.ResourceExceeded once this many S-pairs
    /// have been reduced.
    long pair_budget = 10000;
};

GroebnerBasis groebner(const Ideal& ideal, const MonomialOrder& order,
                       const GroebnerOptions& opts = {});

/// Remainder of full division: no term divisible by any basis leading term.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

bool membership(const Polynomial& p, const Ideal& ideal);

/// p in radical(I), via the Rabinowitsch trick.
bool radical_membership(const Polynomial& p, const Ideal& ideal);

bool ideal_equal(const Ideal& a, const Ideal& b);

bool is_unit_ideal(const Ideal& ideal);

Ideal ideal_sum(const Ideal& a, const std::vector<Polynomial>& extra);

/// Generators of I intersected with the ring without `drop`, via a block
/// elimination order. The result lives in the smaller ring (or the same
/// ring when drop is empty).
Ideal elimination_ideal(const Ideal& ideal, const std::vector<std::string>& drop);

Ideal intersect(const Ideal& a, const Ideal& b);

/// (I : g) = { h : h*g in I }. Errors with ideal.ZeroDivisorArgument on g = 0.
Ideal ideal_quotient(const Ideal& ideal, const Polynomial& g);

/// (I : J) = intersection of (I : g) over generators g of J.
Ideal ideal_quotient(const Ideal& ideal, const Ideal& j);

/// I : J^infinity, by iterating colon until stable.
Ideal saturation(const Ideal& ideal, const Ideal& j);

}  // namespace germlab
