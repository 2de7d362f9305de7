#pragma once

#include "germlab/groebner.hpp"

namespace germlab {

/// Monomial basis of a finite-dimensional quotient ring R/I.
struct QuotientBasis {
    std::vector<Monomial> standard_monomials;
    long dimension = 0;
};

/// True iff the reduced basis certifies dim R/I < infinity: unit ideal, or
/// a pure power of every variable appears among the leading terms.
bool is_zero_dimensional(const GroebnerBasis& gb);

/// Standard monomials and their count. Errors with ideal.NotZeroDimensional
/// when the quotient is infinite-dimensional.
QuotientBasis quotient_dimension(const Ideal& ideal, const MonomialOrder& order);
QuotientBasis quotient_dimension(const GroebnerBasis& gb);

/// For zero-dimensional I: true iff v^D lies in I for every variable v,
/// D = dim R/I. Certifies that the whole quotient is concentrated at the
/// origin, so global dimension equals the local length there.
bool supported_only_at_origin(const Ideal& ideal);

/// Length of the localization at the origin: the global dimension when the
/// quotient is origin-supported, otherwise the dimension of the common
/// generalized 0-eigenspace of the variable multiplication operators.
long local_dimension_at_origin(const Ideal& ideal);

/// A nonzero nonunit plane-curve equation defines a reduced curve iff its
/// Tjurina ideal (the curve plus all partials) is zero-dimensional.
bool is_reduced_curve(const Polynomial& lambda);

/// Hilbert-Samuel multiplicity of a zero-dimensional ideal of a 2-variable
/// ring at the origin, via generic 2-element reductions (lengths of random
/// pairs of combinations; the minimum over agreeing trials).
long multiplicity_at_origin_2var(const Ideal& ideal);

}  // namespace germlab
