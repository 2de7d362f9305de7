#pragma once

#include <string>

#include "germlab/polynomial.hpp"

namespace germlab {

/// Parses the expression grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' natural)?
///   base   := rational | variable | '(' expr ')'
///   rational := integer ('/' positive-integer)?
/// Whitespace is insignificant. Implicit multiplication is rejected.
/// Errors carry the 0-based character position in the message.
Polynomial parse_polynomial(const std::string& text, const Ring& ring);

}  // namespace germlab
