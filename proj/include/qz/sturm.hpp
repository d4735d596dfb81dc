#pragma once

#include "qz/field.hpp"

namespace qz {

/* number of distinct real roots of a nonzero polynomial over Q */
int count_real_roots(const Poly& f);

/* distinct real roots in the half-open interval (lo, hi] */
int count_real_roots_in(const Poly& f, const Rat& lo, const Rat& hi);

}  // namespace qz
