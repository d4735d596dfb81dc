#include "qz/mw.hpp"

#include <algorithm>

#include "qz/hilbert.hpp"
#include "qz/sqclass.hpp"

namespace qz {

namespace {

Ternary both_zero(Ternary m, Ternary w) {
  if (m == Ternary::no || w == Ternary::no) return Ternary::no;
  if (m == Ternary::yes && w == Ternary::yes) return Ternary::yes;
  return Ternary::unknown;
}

/* Clifford-invariant comparison over Q: valid once the signed discriminant
 * of q is a square, where the Witt invariant of q differs from the Hasse
 * invariant by (-1,-1) exactly in ranks 4 and 6 mod 8. */
Ternary clifford_matches(const WittClass& w, const std::vector<MilnorSymbol::Term>& terms) {
  const DiagonalForm& rep = w.representative();
  std::vector<Rat> entries = rational_entries(rep);
  std::vector<Rat> all = entries;
  for (const auto& t : terms) {
    all.push_back(t.first.first.rat_value());
    all.push_back(t.first.second.rat_value());
  }
  long r = rep.rank() % 8;
  for (const QPlace& v : relevant_places(all)) {
    int c = hasse_symbol(entries, v);
    if (r == 4 || r == 6) c *= hilbert_symbol(Rat(-1), Rat(-1), v);
    int s = 1;
    for (const auto& t : terms)
      if (t.second % 2 != 0)
        s *= hilbert_symbol(t.first.first.rat_value(), t.first.second.rat_value(), v);
    if (c != s) return Ternary::no;
  }
  return Ternary::yes;
}

}  // namespace

Ternary mw_fiber_compatible(const MilnorSymbol& m, const WittClass& w) {
  require_same_field(m.field(), w.field(), "milnor-witt pair");
  const FieldPtr& k = m.field();
  switch (m.degree()) {
    case 0: {
      int parity = static_cast<int>(Int(((m.constant_value() % 2) + 2) % 2).get_si());
      return parity == w.rank_parity() ? Ternary::yes : Ternary::no;
    }
    case 1: {
      if (w.rank_parity() != 0) return Ternary::no;
      return same_square_class(w.representative().signed_det(), m.unit_value());
    }
    default: {
      if (w.rank_parity() != 0) return Ternary::no;
      Ternary sd = is_square(w.representative().signed_det());
      if (sd != Ternary::yes) return sd;
      if (k->is_finite()) return Ternary::yes;
      if (k->kind() == Field::Kind::rationals) return clifford_matches(w, m.terms());
      if (m.syntactically_zero() && w.syntactically_zero()) return Ternary::yes;
      return Ternary::unknown;
    }
  }
}

MWElement::MWElement(int degree, MilnorSymbol milnor, WittClass witt)
    : degree_(degree), milnor_(std::move(milnor)), witt_(std::move(witt)) {}

MWElement::MWElement(MilnorSymbol milnor, WittClass witt)
    : degree_(milnor.degree()), milnor_(std::move(milnor)), witt_(std::move(witt)) {
  if (mw_fiber_compatible(milnor_, witt_) == Ternary::no)
    fail("DescriptorMismatch", "milnor and witt parts disagree over the mod-2 fiber");
}

MWElement MWElement::from_witt(const WittClass& w) {
  return MWElement(-1, MilnorSymbol::zero(w.field(), 0), w);
}

MWElement MWElement::from_gw(const GWElement& x) {
  return MWElement(MilnorSymbol::constant(x.field(), Int(x.rank())), x.witt());
}

MWElement MWElement::unit_symbol(const Elem& u) {
  if (u.is_zero()) fail("ZeroInput", "unit symbol");
  const FieldPtr& k = u.field();
  DiagonalForm pfister(k, {u, -Elem::one(k)});
  return MWElement(MilnorSymbol::unit(u), WittClass(pfister));
}

MWElement MWElement::eta(const FieldPtr& k) { return from_witt(WittClass::one(k)); }

MWElement MWElement::zero(const FieldPtr& k, int degree) {
  if (degree < -1 || degree > 2) fail("MalformedInput", "milnor-witt degree out of range");
  if (degree == -1) return from_witt(WittClass::zero(k));
  return MWElement(MilnorSymbol::zero(k, degree), WittClass::zero(k));
}

const MilnorSymbol& MWElement::milnor() const {
  if (degree_ < 0) fail("MalformedInput", "no milnor part below degree 0");
  return milnor_;
}

GWElement MWElement::to_gw() const {
  if (degree_ != 0) fail("MalformedInput", "to_gw outside degree 0");
  const Int& n = milnor_.constant_value();
  if (!n.fits_slong_p()) fail("MalformedInput", "rank too large");
  return GWElement(n.get_si(), witt_);
}

MWElement operator+(const MWElement& a, const MWElement& b) {
  require_same_field(a.field(), b.field(), "milnor-witt sum");
  if (a.degree_ != b.degree_) fail("MalformedInput", "milnor-witt sum across degrees");
  if (a.degree_ < 0) return MWElement::from_witt(a.witt_ + b.witt_);
  return MWElement(a.milnor_ + b.milnor_, a.witt_ + b.witt_);
}

MWElement operator-(const MWElement& a) {
  if (a.degree_ < 0) return MWElement::from_witt(-a.witt_);
  return MWElement(-a.milnor_, -a.witt_);
}

std::string MWElement::str() const {
  std::string m = degree_ < 0 ? "eta" : milnor_.str();
  return "(" + m + "; " + witt_.str() + ")";
}

MWElement mw_mul(const MWElement& a, const MWElement& b) {
  require_same_field(a.field(), b.field(), "milnor-witt product");
  int d = a.degree() + b.degree();
  if (d < -1) fail("DegreeUnderflow", "milnor-witt product below degree -1");
  if (d > 2) fail("DegreeOverflow", "milnor-witt product beyond degree 2");
  WittClass w = a.witt() * b.witt();
  if (d == -1) return MWElement::from_witt(w);
  MilnorSymbol m = (a.degree() < 0 || b.degree() < 0)
                       ? MilnorSymbol::zero(a.field(), d)
                       : milnor_mul(a.milnor(), b.milnor());
  return MWElement(std::move(m), std::move(w));
}

MWElement eta_mul(const MWElement& x) { return mw_mul(MWElement::eta(x.field()), x); }

Ternary mw_is_zero(const MWElement& x) {
  Ternary w = witt_is_zero(x.witt());
  if (x.degree() < 0) return w;
  return both_zero(milnor_is_zero(x.milnor()), w);
}

Ternary mw_equal(const MWElement& a, const MWElement& b) { return mw_is_zero(a - b); }

namespace {

WittClass residue_twist(const WittClass& w, const Place& v) {
  FieldPtr kappa = v.residue_field();
  if (v.at_infinity()) return w.scaled(-Elem::one(kappa));
  if (v.pi().deg() == 1) return w;
  Poly dpi = v.pi().derivative();
  return w.scaled(Elem::from_coords(kappa, dpi.coeffs()));
}

}  // namespace

MWElement mw_residue(const MWElement& x, const Place& v) {
  require_same_field(x.field(), v.function_field(), "residue");
  if (x.degree() < 0) fail("DegreeUnderflow", "residue below degree 0");
  WittClass wr = residue_twist(
      WittClass(second_residue_form(x.witt().representative(), v)), v);
  if (x.degree() == 0) return MWElement::from_witt(wr);
  return MWElement(milnor_residue(x.milnor(), v), wr);
}

MWElement mw_transfer(const MWElement& x) {
  switch (x.degree()) {
    case -1:
      return MWElement::from_witt(witt_transfer(x.witt()));
    case 0:
      return MWElement::from_gw(gw_transfer(x.to_gw()));
    case 1:
      return MWElement(MilnorSymbol::unit(field_norm(x.milnor().unit_value())),
                       witt_transfer(x.witt()));
    default:
      fail("UnsupportedDegree", "transfer in degree 2");
  }
}

std::vector<Place> mw_support(const MWElement& x) {
  std::vector<Place> out;
  auto add = [&](const Elem& f) {
    for (const Place& v : support_places(f))
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  for (const Elem& c : x.witt().representative().entries()) add(c);
  if (x.degree() == 1) add(x.milnor().unit_value());
  if (x.degree() == 2)
    for (const auto& t : x.milnor().terms()) {
      add(t.first.first);
      add(t.first.second);
    }
  std::sort(out.begin(), out.end(), [](const Place& a, const Place& b) { return cmp(a, b) < 0; });
  return out;
}

MWElement reciprocity_sum(const MWElement& x) {
  const FieldPtr& kt = x.field();
  if (kt->kind() != Field::Kind::rational_functions)
    fail("UnsupportedField", "reciprocity over a non-function field");
  if (x.degree() < 0) fail("DegreeUnderflow", "reciprocity below degree 0");
  MWElement total = MWElement::zero(kt->base(), x.degree() - 1);
  for (const Place& v : mw_support(x)) {
    MWElement r = mw_residue(x, v);
    total = total + (v.degree() == 1 ? r : mw_transfer(r));
  }
  return total + mw_residue(x, Place::infinity(kt));
}

}  // namespace qz
