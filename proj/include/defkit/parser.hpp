#pragma once

#include <string>

#include "defkit/polynomial.hpp"

namespace defkit {

/// Parse the CLI expression grammar:
///   expr     := ['-'] term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := base ('^' natural)?
///   base     := rational | var | '(' expr ')'
///   rational := integer ('/' positive-integer)?
/// No implicit multiplication. Errors carry a 1-based column.
Polynomial parse_polynomial(const std::string& src, const RingPtr& ring);

} // namespace defkit
