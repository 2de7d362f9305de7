#pragma once

#include "germlab/polynomial.hpp"

namespace germlab {

/// Resultant of a and b with respect to `var`: determinant of their
/// Sylvester matrix over the ring of the remaining variables. The result
/// lives in the same ring but is free of `var`. Errors with
/// algebra.BothConstantInVar when neither input has positive degree in var.
Polynomial resultant(const Polynomial& a, const Polynomial& b, const std::string& var);

/// Determinant of a square polynomial matrix by fraction-free Bareiss
/// elimination (exact division, no gcd machinery needed).
Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m, const Ring& ring);

}  // namespace germlab
