#pragma once

#include <utility>
#include <vector>

#include "qz/field.hpp"

namespace qz {

/* f = unit * prod factors[i].first ^ factors[i].second with monic irreducible
 * factors sorted canonically. */
struct PolyFactorization {
  Elem unit;
  std::vector<std::pair<Poly, int>> factors;
};

/* Complete factorization over Q (degree <= 16) and over finite fields
 * F_p / F_q.  Over number-field bases only irreducibility questions are
 * answered (see poly_is_irreducible); factoring there throws. */
PolyFactorization factor_poly(const Poly& f);

/* Exact over Q and finite fields.  Over a number-field base: quadratics are
 * decided through the square-class machinery when it is exact, anything
 * deeper throws UndecidableAtBound. */
bool poly_is_irreducible(const Poly& f);

/* roots in the base field (deduplicated, no multiplicities) */
std::vector<Elem> poly_roots(const Poly& f);

/* all elements of a finite field, in canonical counting order */
std::vector<Elem> finite_field_elements(const FieldPtr& f);

}  // namespace qz
