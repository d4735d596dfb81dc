#pragma once

#include <optional>
#include <utility>

#include "qz/forms.hpp"

namespace qz {

/* Isotropy decisions.  Over Q this is Hasse-Minkowski on top of the Hilbert
 * symbols; over F_q it is Chevalley-Warning plus an O(q) search; elsewhere a
 * bounded witness search that throws UndecidableAtBound when it cannot
 * settle the question. */
bool is_isotropic(const DiagonalForm& q, long search_height = 24);

/* isotropy over the completion of Q at v, by the rank/disc/Hasse criteria */
bool is_locally_isotropic(const DiagonalForm& q, const QPlace& v);

/* whether q represents c (c != 0) */
bool represents(const DiagonalForm& q, const Elem& c, long search_height = 24);

/* a nonzero vector x with q(x) = 0, when one exists; nullopt for anisotropic
 * forms; SearchExhausted if q is known isotropic but the witness search runs
 * out (bound grows geometrically up to the cap) */
std::optional<std::vector<Elem>> isotropic_vector(const DiagonalForm& q, long cap = 4096);

/* q = (hyperbolic)^{index} + kernel with the kernel anisotropic */
struct WittDecomposition {
  int index = 0;
  DiagonalForm kernel;
};

WittDecomposition witt_decompose(const DiagonalForm& q);

}  // namespace qz
