#pragma once

#include <string>

#include "glmn/glsuper.hpp"

namespace glmn {

/// Parses the expression grammar
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' integer)?
///   atom   := 'x[' i ',' j ']' | 'y[' i ',' j ']' | 'A[' i ',' j ']'
///           | 'D1' | 'D2' | rational | '(' expr ')'
/// Negative exponents are permitted only on D1 and D2. y and A atoms resolve
/// through the generic matrix. Throws ParseError with the offending position.
SuperElem parse_expr(const std::string& text, const GenericMatrix& gm);

SuperElem parse_expr(const std::string& text, RingSpec ring);

}  // namespace glmn
