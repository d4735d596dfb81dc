#pragma once

#include "qz/field.hpp"
#include "qz/linalg.hpp"

namespace qz {

/* matrix of multiplication by alpha on the power basis of its extension step */
Matrix multiplication_matrix(const Elem& alpha);

/* one-step trace and norm down to the base of the extension */
Elem field_trace(const Elem& alpha);
Elem field_norm(const Elem& alpha);

/* Gram matrix of (x, y) -> Tr_{L/k}(scale * x * y) on the power basis of L */
Matrix scaled_trace_gram(const FieldPtr& L, const Elem& scale);

}  // namespace qz
