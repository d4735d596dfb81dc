#include "qz/places.hpp"

#include <algorithm>

#include "qz/errors.hpp"
#include "qz/polyfactor.hpp"

namespace qz {

namespace {

void require_function_field(const FieldPtr& kt, const char* where) {
  if (!kt || kt->kind() != Field::Kind::rational_functions)
    fail("DescriptorMismatch", std::string(where) + " needs a rational function field");
}

long poly_valuation(const Poly& f, const Poly& pi) {
  long e = 0;
  Poly rest = f;
  while (true) {
    Poly q, r;
    Poly::divmod(rest, pi, q, r);
    if (!r.is_zero()) return e;
    rest = q;
    ++e;
  }
}

}  // namespace

Place Place::finite(const FieldPtr& function_field, Poly pi) {
  require_function_field(function_field, "Place::finite");
  if (pi.is_zero() || pi.deg() < 1 || !pi.is_monic())
    fail("MalformedInput", "a finite place needs a monic nonconstant polynomial");
  if (!same_field(pi.base(), function_field->base()))
    fail("DescriptorMismatch", "place polynomial lives over the wrong field");
  if (!poly_is_irreducible(pi))
    fail("MalformedInput", "place polynomial " + pi.str(function_field->var()) +
                               " is reducible");
  return Place(function_field, std::move(pi), false);
}

Place Place::infinity(const FieldPtr& function_field) {
  require_function_field(function_field, "Place::infinity");
  return Place(function_field, Poly(function_field->base()), true);
}

const Poly& Place::pi() const {
  if (infinite_) fail("MalformedInput", "the place at infinity has no finite uniformizer");
  return pi_;
}

int Place::degree() const { return infinite_ ? 1 : pi_.deg(); }

FieldPtr Place::residue_field() const {
  if (infinite_ || pi_.deg() == 1) return kt_->base();
  return Field::extension(kt_->base(), pi_, kt_->var());
}

std::string Place::str() const {
  return infinite_ ? "infinity" : pi_.str(kt_->var());
}

bool operator==(const Place& a, const Place& b) {
  if (!same_field(a.function_field(), b.function_field())) return false;
  if (a.at_infinity() != b.at_infinity()) return false;
  return a.at_infinity() || a.pi() == b.pi();
}

int cmp(const Place& a, const Place& b) {
  if (a.at_infinity() && b.at_infinity()) return 0;
  if (a.at_infinity()) return 1;
  if (b.at_infinity()) return -1;
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  return cmp(a.pi(), b.pi());
}

long valuation(const Elem& x, const Place& v) {
  require_same_field(x.field(), v.function_field(), "valuation");
  if (x.is_zero()) fail("ZeroInput", "valuation of zero");
  Poly num = x.num_poly(), den = x.den_poly();
  if (v.at_infinity()) return den.deg() - num.deg();
  return poly_valuation(num, v.pi()) - poly_valuation(den, v.pi());
}

Elem unit_part(const Elem& x, const Place& v) {
  long e = valuation(x, v);
  const FieldPtr& kt = v.function_field();
  Poly t = Poly::variable(kt->base());
  Poly one = Poly::constant(Elem::one(kt->base()));
  Elem uniformizer = v.at_infinity() ? Elem::from_fraction(kt, one, t)
                                     : Elem::from_fraction(kt, v.pi(), one);
  return x * uniformizer.pow(-e);
}

Elem reduce_unit(const Elem& u, const Place& v) {
  if (valuation(u, v) != 0) fail("MalformedInput", "reduction of a non-unit");
  Poly num = u.num_poly(), den = u.den_poly();
  if (v.at_infinity()) return num.lc() / den.lc();
  Poly rn = num % v.pi();
  Poly rd = den % v.pi();
  FieldPtr res = v.residue_field();
  if (v.pi().deg() == 1) return rn.coeff(0) / rd.coeff(0);
  Elem en = Elem::from_coords(res, rn.coeffs());
  Elem ed = Elem::from_coords(res, rd.coeffs());
  return en / ed;
}

std::vector<Place> support_places(const Elem& x) {
  const FieldPtr& kt = x.field();
  require_function_field(kt, "support_places");
  if (x.is_zero()) fail("ZeroInput", "support of zero");
  std::vector<Place> out;
  auto add_factors = [&](const Poly& f) {
    if (f.deg() < 1) return;
    for (const auto& [irr, mult] : factor_poly(f).factors)
      out.push_back(Place::finite(kt, irr));
  };
  add_factors(x.num_poly());
  add_factors(x.den_poly());
  std::sort(out.begin(), out.end(),
            [](const Place& a, const Place& b) { return cmp(a, b) < 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace qz
