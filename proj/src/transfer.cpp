#include "qz/transfer.hpp"

namespace qz {

namespace {

FieldPtr transfer_target(const FieldPtr& L) {
  if (L->kind() != Field::Kind::extension)
    fail("UnsupportedField", "transfer from a non-extension field");
  Poly d = L->minpoly().derivative();
  if (d.deg() < 0) fail("InseparableExtension", "transfer");
  return L->base();
}

}  // namespace

WittClass witt_transfer(const WittClass& w, const Elem& scale) {
  const FieldPtr& L = w.field();
  require_same_field(L, scale.field(), "witt transfer");
  if (scale.is_zero()) fail("ZeroInput", "transfer scale");
  FieldPtr k = transfer_target(L);
  WittClass out = WittClass::zero(k);
  for (const Elem& c : w.representative().entries())
    out = out + WittClass(DiagonalForm::from_gram(k, scaled_trace_gram(L, scale * c)));
  return out;
}

WittClass witt_transfer(const WittClass& w) {
  return witt_transfer(w, Elem::one(w.field()));
}

GWElement gw_transfer(const GWElement& x) {
  const FieldPtr& L = x.field();
  FieldPtr k = transfer_target(L);
  return GWElement(x.rank() * L->ext_deg(), witt_transfer(x.witt()));
}

}  // namespace qz
