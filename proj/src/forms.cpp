#include "qz/forms.hpp"

#include "qz/errors.hpp"
#include "qz/sqclass.hpp"

namespace qz {

DiagonalForm::DiagonalForm(FieldPtr k, std::vector<Elem> entries)
    : k_(std::move(k)), entries_(std::move(entries)) {
  for (const Elem& a : entries_) {
    require_same_field(k_, a.field(), "diagonal form entry");
    if (a.is_zero()) fail("ZeroInput", "diagonal form entries must be nonzero");
  }
}

DiagonalForm DiagonalForm::from_gram(const FieldPtr& k, const Matrix& g) {
  std::vector<Elem> diag = congruence_diagonalize(k, g);
  for (const Elem& d : diag)
    if (d.is_zero()) fail("ZeroInput", "degenerate gram matrix");
  return DiagonalForm(k, std::move(diag));
}

Elem DiagonalForm::det() const {
  Elem d = Elem::one(k_);
  for (const Elem& a : entries_) d = d * a;
  return d;
}

Elem DiagonalForm::signed_det() const {
  int n = rank();
  Elem d = det();
  return (n * (n - 1) / 2) % 2 == 0 ? d : -d;
}

DiagonalForm DiagonalForm::scaled(const Elem& c) const {
  require_same_field(k_, c.field(), "form scaling");
  if (c.is_zero()) fail("ZeroInput", "scaling a form by zero");
  std::vector<Elem> out;
  out.reserve(entries_.size());
  for (const Elem& a : entries_) out.push_back(c * a);
  return DiagonalForm(k_, std::move(out));
}

DiagonalForm DiagonalForm::negated() const { return scaled(-Elem::one(k_)); }

DiagonalForm DiagonalForm::normalized() const {
  std::vector<Elem> out;
  out.reserve(entries_.size());
  for (const Elem& a : entries_) out.push_back(square_class_rep(a));
  return DiagonalForm(k_, std::move(out));
}

Elem DiagonalForm::eval(const std::vector<Elem>& x) const {
  if (x.size() != entries_.size()) fail("DescriptorMismatch", "vector length != rank");
  Elem s = Elem::zero(k_);
  for (std::size_t i = 0; i < x.size(); ++i) s = s + entries_[i] * x[i] * x[i];
  return s;
}

std::string DiagonalForm::str() const {
  std::string out = "<";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += entries_[i].str();
  }
  return out + ">";
}

DiagonalForm direct_sum(const DiagonalForm& a, const DiagonalForm& b) {
  require_same_field(a.field(), b.field(), "form combination");
  std::vector<Elem> out = a.entries();
  out.insert(out.end(), b.entries().begin(), b.entries().end());
  return DiagonalForm(a.field(), std::move(out));
}

DiagonalForm tensor(const DiagonalForm& a, const DiagonalForm& b) {
  require_same_field(a.field(), b.field(), "form combination");
  std::vector<Elem> out;
  out.reserve(a.entries().size() * b.entries().size());
  for (const Elem& x : a.entries())
    for (const Elem& y : b.entries()) out.push_back(x * y);
  return DiagonalForm(a.field(), std::move(out));
}

DiagonalForm embed_form(const FieldPtr& target, const DiagonalForm& q) {
  std::vector<Elem> out;
  out.reserve(q.entries().size());
  for (const Elem& a : q.entries()) out.push_back(embed(target, a));
  return DiagonalForm(target, std::move(out));
}

std::vector<Rat> rational_entries(const DiagonalForm& q) {
  if (q.field()->kind() != Field::Kind::rationals)
    fail("UnsupportedField", "rational entries requested over " + q.field()->describe());
  std::vector<Rat> out;
  out.reserve(q.entries().size());
  for (const Elem& a : q.entries()) out.push_back(a.rat_value());
  return out;
}

FormInvariants invariants(const DiagonalForm& q) {
  const FieldPtr& k = q.field();
  FormInvariants inv(q.rank(), square_class_rep(q.det()), square_class_rep(q.signed_det()));
  if (k->kind() == Field::Kind::rationals) {
    int sig = 0;
    for (const Elem& a : q.entries()) sig += a.rat_value() > 0 ? 1 : -1;
    inv.signature = sig;
    std::vector<Rat> entries = rational_entries(q);
    for (const QPlace& v : relevant_places(entries))
      inv.hasse.emplace_back(v, hasse_symbol(entries, v));
  }
  return inv;
}

}  // namespace qz
