#pragma once

#include "qz/gw.hpp"
#include "qz/trace.hpp"
#include "qz/witt.hpp"

namespace qz {

/* Scharlau transfer along the trace of the extension step L/k: each diagonal
 * entry <c> maps to the class of the bilinear form (x, y) -> Tr(scale*c*x*y)
 * on L.  The optional scale twists the transferred functional. */
WittClass witt_transfer(const WittClass& w, const Elem& scale);
WittClass witt_transfer(const WittClass& w);

/* trace-form transfer on GW: the rank multiplies by [L:k] */
GWElement gw_transfer(const GWElement& x);

}  // namespace qz
