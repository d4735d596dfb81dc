#include "qz/gw.hpp"

#include "qz/errors.hpp"

namespace qz {

GWElement::GWElement(long rank, WittClass witt) : rank_(rank), witt_(std::move(witt)) {
  long parity = ((rank_ % 2) + 2) % 2;
  if (parity != witt_.rank_parity())
    fail("ParityMismatch", "rank " + std::to_string(rank_) + " disagrees mod 2 with witt rank " +
                               std::to_string(witt_.representative().rank()));
}

std::string GWElement::str() const {
  return "(" + std::to_string(rank_) + ", " + witt_.str() + ")";
}

Ternary gw_is_zero(const GWElement& x) {
  if (x.rank() != 0) return Ternary::no;
  return witt_is_zero(x.witt());
}

Ternary gw_equal(const GWElement& a, const GWElement& b) {
  require_same_field(a.field(), b.field(), "gw comparison");
  if (a.rank() != b.rank()) return Ternary::no;
  return witt_equal(a.witt(), b.witt());
}

GWElement gw_int(const FieldPtr& k, long n) {
  if (n < 0) fail("MalformedInput", "gw_int takes n >= 0");
  std::vector<Elem> entries(static_cast<std::size_t>(n), Elem::one(k));
  return GWElement::from_form(DiagonalForm(k, std::move(entries)));
}

GWElement gw_of_int(const FieldPtr& k, long n) {
  return n >= 0 ? gw_int(k, n) : -gw_int(k, -n);
}

GWElement gw_embed(const FieldPtr& target, const GWElement& x) {
  return GWElement(x.rank(), WittClass(embed_form(target, x.witt().representative())));
}

}  // namespace qz
