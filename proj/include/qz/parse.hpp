#pragma once

#include <string>

#include "qz/field.hpp"

namespace qz {

/* Reader for the canonical element syntax emitted by Elem::str / Poly::str.
 *
 *   expr    := term (('+' | '-') term)*
 *   term    := factor (('*' | '/') factor)*
 *   factor  := '-' factor | primary ('^' '-'? integer)?
 *   primary := integer | identifier | '(' expr ')'
 *
 * Identifiers resolve to the tower generators visible from the target field
 * (the rational-function variable and any extension generators below it).
 * Raises MalformedInput on anything else. */
Elem parse_elem(const FieldPtr& f, const std::string& s);

/* Polynomial in `var` with coefficients in `base`; the string may use any
 * syntax parse_elem accepts, as long as the result clears to a polynomial. */
Poly parse_poly(const FieldPtr& base, const std::string& var, const std::string& s);

}  // namespace qz
