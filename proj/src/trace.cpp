#include "qz/trace.hpp"

#include <cstddef>

#include "qz/errors.hpp"

namespace qz {

namespace {

const FieldPtr& require_extension(const FieldPtr& f, const char* where) {
  if (f->kind() != Field::Kind::extension)
    fail("DescriptorMismatch", std::string(where) + " needs a simple extension");
  return f;
}

std::vector<Elem> padded_coords(const Elem& x, int d) {
  std::vector<Elem> c = x.coords();
  c.resize(static_cast<std::size_t>(d), Elem::zero(x.field()->base()));
  return c;
}

}  // namespace

Matrix multiplication_matrix(const Elem& alpha) {
  const FieldPtr& L = require_extension(alpha.field(), "multiplication_matrix");
  int d = L->ext_deg();
  Matrix m(static_cast<std::size_t>(d));
  Elem power = Elem::one(L);
  Elem theta = Elem::generator(L);
  for (int j = 0; j < d; ++j) {
    std::vector<Elem> col = padded_coords(alpha * power, d);
    for (int i = 0; i < d; ++i) {
      auto si = static_cast<std::size_t>(i);
      m[si].resize(static_cast<std::size_t>(d), Elem::zero(L->base()));
      m[si][static_cast<std::size_t>(j)] = col[si];
    }
    power = power * theta;
  }
  return m;
}

Elem field_trace(const Elem& alpha) {
  const FieldPtr& L = require_extension(alpha.field(), "field_trace");
  Matrix m = multiplication_matrix(alpha);
  Elem t = Elem::zero(L->base());
  for (std::size_t i = 0; i < m.size(); ++i) t = t + m[i][i];
  return t;
}

Elem field_norm(const Elem& alpha) {
  const FieldPtr& L = require_extension(alpha.field(), "field_norm");
  return det(L->base(), multiplication_matrix(alpha));
}

Matrix scaled_trace_gram(const FieldPtr& L, const Elem& scale) {
  require_extension(L, "scaled_trace_gram");
  require_same_field(L, scale.field(), "scaled_trace_gram");
  int d = L->ext_deg();
  std::vector<Elem> traces;  // Tr(scale * theta^n) for n = 0 .. 2d-2
  Elem power = scale;
  Elem theta = Elem::generator(L);
  for (int n = 0; n <= 2 * d - 2; ++n) {
    traces.push_back(field_trace(power));
    power = power * theta;
  }
  Matrix g(static_cast<std::size_t>(d), std::vector<Elem>());
  for (int i = 0; i < d; ++i) {
    g[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
      g[static_cast<std::size_t>(i)].push_back(traces[static_cast<std::size_t>(i + j)]);
  }
  return g;
}

}  // namespace qz
