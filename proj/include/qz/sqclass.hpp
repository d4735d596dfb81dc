#pragma once

#include <functional>
#include <vector>

#include "qz/errors.hpp"
#include "qz/field.hpp"

namespace qz {

/* Squareness of a nonzero element.  Exact over Q, finite fields, quadratic
 * extension steps (recursively, via the norm equation), and rational function
 * fields over decidable bases; bounded search with an unknown verdict over
 * deeper number fields. */
Ternary is_square(const Elem& a);

/* exact square root of an element known to be a square; throws on nonsquares
 * and raises UndecidableAtBound where only a bounded search is available */
Elem sqrt_exact(const Elem& a);

/* a and b in the same square class, i.e. is_square(a/b) */
Ternary same_square_class(const Elem& a, const Elem& b);

/* Canonical representative of the square class where one exists:
 *   Q        -> squarefree integer with the sign of a
 *   finite   -> 1 or the canonical nonsquare
 *   k(t)     -> unit rep times the squarefree part of the polynomial content
 *   ext of Q -> rational square content removed (no full canonical form)    */
Elem square_class_rep(const Elem& a);

/* first element in counting order whose Euler criterion fails */
Elem canonical_nonsquare(const FieldPtr& k);

/* Deterministic candidate square-class representatives for bounded searches;
 * larger tiers extend (never reorder) smaller ones. */
std::vector<Elem> square_class_candidates(const FieldPtr& k, int tier);

/* Visit nonzero elements in increasing height order (height of a reduced
 * fraction p/q is max(|p|, q); of a coordinate vector, the max over
 * coordinates).  Stops early when fn returns true; returns whether stopped.
 * Supports Q, finite fields and number-field extensions. */
bool enumerate_elements_by_height(const FieldPtr& k, long max_height,
                                  const std::function<bool(const Elem&)>& fn);

}  // namespace qz
