#include "qz/gersten.hpp"

#include <algorithm>

#include "qz/errors.hpp"
#include "qz/sqclass.hpp"

namespace qz {

namespace {

Elem place_uniformizer(const Place& v) {
  const FieldPtr& kt = v.function_field();
  Poly one = Poly::constant(Elem::one(kt->base()));
  if (v.at_infinity())
    return Elem::from_fraction(kt, one, Poly::variable(kt->base()));
  return Elem::from_fraction(kt, v.pi(), one);
}

template <class Term>
std::vector<Term> normalize_terms(const Curve& X, std::vector<Term> terms,
                                  const char* where) {
  for (const Term& t : terms)
    if (t.first.curve() != X)
      fail("DescriptorMismatch", std::string(where) + ": point lies on a different curve");
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return cmp(a.first, b.first) < 0; });
  std::vector<Term> out;
  for (Term& t : terms) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second = out.back().second + t.second;
    else
      out.push_back(std::move(t));
  }
  return out;
}

bool gw_syntactically_zero(const GWElement& c) {
  return c.rank() == 0 && c.witt().syntactically_zero();
}

}  // namespace

TwistTrivialization TwistTrivialization::canonical(const ClosedPoint& x) {
  if (!x.curve().is_line())
    fail("DescriptorMismatch", "canonical trivializations are chosen on the line");
  return TwistTrivialization{x, place_uniformizer(x.place())};
}

Elem TwistTrivialization::rescale_unit(const Elem& other) const {
  const Place& v = point.place();
  require_same_field(other.field(), v.function_field(), "rescale_unit");
  if (other.is_zero() || valuation(other, v) != 1)
    fail("MalformedInput", "a uniformizer at the point is required");
  return reduce_unit(other / uniformizer, v);
}

QuadraticZeroCycle::QuadraticZeroCycle(Curve X, std::vector<Term> terms)
    : X_(std::move(X)) {
  for (const Term& t : terms) {
    if (!same_field(t.second.field(), t.first.residue_field()))
      fail("DescriptorMismatch", "coefficient does not live over the residue field of " +
                                     t.first.str());
  }
  terms_ = normalize_terms(X_, std::move(terms), "quadratic cycle");
  std::erase_if(terms_, [](const Term& t) { return gw_syntactically_zero(t.second); });
}

QuadraticZeroCycle QuadraticZeroCycle::with(const ClosedPoint& x,
                                            const GWElement& coeff) const {
  std::vector<Term> t = terms_;
  t.emplace_back(x, coeff);
  return QuadraticZeroCycle(X_, std::move(t));
}

QuadraticZeroCycle QuadraticZeroCycle::scaled(const GWElement& c) const {
  require_same_field(c.field(), X_.field(), "cycle scaling");
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const Term& term : terms_)
    t.emplace_back(term.first, gw_embed(term.first.residue_field(), c) * term.second);
  return QuadraticZeroCycle(X_, std::move(t));
}

QuadraticZeroCycle operator+(const QuadraticZeroCycle& a, const QuadraticZeroCycle& b) {
  if (a.curve() != b.curve()) fail("DescriptorMismatch", "cycle sum across curves");
  std::vector<QuadraticZeroCycle::Term> t = a.terms_;
  t.insert(t.end(), b.terms_.begin(), b.terms_.end());
  return QuadraticZeroCycle(a.curve(), std::move(t));
}

QuadraticZeroCycle operator-(const QuadraticZeroCycle& a) {
  std::vector<QuadraticZeroCycle::Term> t;
  t.reserve(a.terms_.size());
  for (const auto& term : a.terms_) t.emplace_back(term.first, -term.second);
  return QuadraticZeroCycle(a.curve(), std::move(t));
}

std::string QuadraticZeroCycle::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    if (!out.empty()) out += " + ";
    out += t.second.str() + " * (" + t.first.str() + ")";
  }
  return out;
}

ZeroCycle::ZeroCycle(Curve X, std::vector<Term> terms) : X_(std::move(X)) {
  terms_ = normalize_terms(X_, std::move(terms), "zero cycle");
  std::erase_if(terms_, [](const Term& t) { return t.second == 0; });
}

ZeroCycle ZeroCycle::with(const ClosedPoint& x, const Int& n) const {
  std::vector<Term> t = terms_;
  t.emplace_back(x, n);
  return ZeroCycle(X_, std::move(t));
}

ZeroCycle operator+(const ZeroCycle& a, const ZeroCycle& b) {
  if (a.curve() != b.curve()) fail("DescriptorMismatch", "cycle sum across curves");
  std::vector<ZeroCycle::Term> t = a.terms_;
  t.insert(t.end(), b.terms_.begin(), b.terms_.end());
  return ZeroCycle(a.curve(), std::move(t));
}

ZeroCycle operator-(const ZeroCycle& a) {
  std::vector<ZeroCycle::Term> t;
  t.reserve(a.terms_.size());
  for (const auto& term : a.terms_) t.emplace_back(term.first, -term.second);
  return ZeroCycle(a.curve(), std::move(t));
}

std::string ZeroCycle::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    if (!out.empty()) out += " + ";
    out += t.second.get_str() + " * (" + t.first.str() + ")";
  }
  return out;
}

GWElement qdeg(const QuadraticZeroCycle& z) {
  const FieldPtr& k = z.curve().field();
  GWElement total = GWElement::zero(k);
  for (const auto& [x, coeff] : z.terms()) {
    GWElement c = coeff;
    int steps = 0;
    while (!same_field(c.field(), k)) {
      if (c.field()->kind() != Field::Kind::extension)
        fail("DescriptorMismatch", "coefficient field does not reach the base");
      if (++steps > 4) fail("TowerBoundExceeded", "transfer tower at " + x.str());
      c = gw_transfer(c);
    }
    total = total + c;
  }
  return total;
}

Int cdeg(const ZeroCycle& z) {
  Int total = 0;
  for (const auto& [x, n] : z.terms()) total += n * x.degree();
  return total;
}

ZeroCycle forget(const QuadraticZeroCycle& z) {
  std::vector<ZeroCycle::Term> t;
  for (const auto& [x, coeff] : z.terms()) t.emplace_back(x, Int(coeff.rank()));
  return ZeroCycle(z.curve(), std::move(t));
}

QuadraticZeroCycle integral_lift(const ZeroCycle& z) {
  std::vector<QuadraticZeroCycle::Term> t;
  for (const auto& [x, n] : z.terms()) {
    if (!n.fits_slong_p()) fail("MalformedInput", "cycle coefficient too large to lift");
    t.emplace_back(x, gw_of_int(x.residue_field(), n.get_si()));
  }
  return QuadraticZeroCycle(z.curve(), std::move(t));
}

QuadraticZeroCycle residue_divisor(const MWElement& x) {
  const FieldPtr& kt = x.field();
  if (kt->kind() != Field::Kind::rational_functions)
    fail("DescriptorMismatch", "residue divisors are taken over k(t)");
  if (x.degree() != 1) fail("MalformedInput", "residue_divisor takes a degree-1 element");

  if (kt->base()->kind() == Field::Kind::rationals) {
    auto check = [](const Elem& f) {
      if (f.is_zero()) return;
      if (f.num_poly().deg() > 16 || f.den_poly().deg() > 16)
        fail("FactorizationOverflow", "entry degree exceeds the factorization range");
    };
    for (const Elem& c : x.witt().representative().entries()) check(c);
    check(x.milnor().unit_value());
  }

  Curve line = Curve::projective_line(kt->base(), kt->var());
  std::vector<QuadraticZeroCycle::Term> terms;
  std::vector<Place> places = mw_support(x);
  places.push_back(Place::infinity(kt));
  for (const Place& v : places) {
    GWElement r = mw_residue(x, v).to_gw();
    if (gw_syntactically_zero(r)) continue;
    ClosedPoint pt = v.at_infinity() ? ClosedPoint::at_infinity(line)
                                     : ClosedPoint::on_line(line, v.pi());
    terms.emplace_back(std::move(pt), std::move(r));
  }
  return QuadraticZeroCycle(line, std::move(terms));
}

Ternary quadratic_cycle_equal(const QuadraticZeroCycle& a, const QuadraticZeroCycle& b) {
  if (a.curve() != b.curve()) fail("DescriptorMismatch", "cycle comparison across curves");
  bool unknown = false;
  auto absorb = [&](Ternary t) {
    if (t == Ternary::unknown) unknown = true;
    return t == Ternary::no;
  };
  std::size_t i = 0, j = 0;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  while (i < ta.size() || j < tb.size()) {
    int c = i == ta.size() ? 1 : j == tb.size() ? -1 : cmp(ta[i].first, tb[j].first);
    if (c < 0) {
      if (absorb(gw_is_zero(ta[i].second))) return Ternary::no;
      ++i;
    } else if (c > 0) {
      if (absorb(gw_is_zero(tb[j].second))) return Ternary::no;
      ++j;
    } else {
      if (absorb(gw_equal(ta[i].second, tb[j].second))) return Ternary::no;
      ++i, ++j;
    }
  }
  return unknown ? Ternary::unknown : Ternary::yes;
}

namespace {

/* polynomial lift of a residue-field element, a unit at the place */
Elem lift_through(const FieldPtr& kt, const Place& v, const Elem& value) {
  Poly one = Poly::constant(Elem::one(kt->base()));
  if (v.degree() == 1 || v.at_infinity())
    return Elem::from_fraction(kt, Poly::constant(value), one);
  return Elem::from_fraction(kt, Poly(kt->base(), value.coords()), one);
}

MWElement peel_term(const FieldPtr& kt, const Place& v, const GWElement& coeff) {
  /* the residue at a place of degree >= 2 carries a <pi'(theta)> twist, so
   * divide it out upstairs and the residue lands on the coefficient exactly */
  Elem twist = Elem::one(coeff.field());
  if (!v.at_infinity() && v.pi().deg() >= 2)
    twist = Elem::from_coords(coeff.field(), v.pi().derivative().coeffs());
  std::vector<Elem> lifted;
  for (const Elem& e : coeff.witt().representative().entries())
    lifted.push_back(lift_through(kt, v, e / twist));
  GWElement upstairs(coeff.rank(), WittClass(DiagonalForm(kt, std::move(lifted))));
  return mw_mul(MWElement::from_gw(upstairs),
                MWElement::unit_symbol(place_uniformizer(v)));
}

std::vector<MWElement> one_symbol_family(const FieldPtr& kt,
                                         const std::vector<Place>& support) {
  std::vector<MWElement> out;
  if (support.empty() || support.size() > 6) return out;
  std::vector<Elem> signs = {Elem::one(kt->base())};
  if (kt->base()->is_finite()) {
    signs.push_back(canonical_nonsquare(kt->base()));
  } else {
    signs.push_back(-Elem::one(kt->base()));
  }
  std::size_t n = support.size();
  std::vector<std::vector<int>> evecs;
  std::vector<int> e(n, -1);
  while (true) {
    bool all_zero = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
    if (!all_zero) evecs.push_back(e);
    std::size_t i = n;
    while (i > 0 && e[i - 1] == 1) e[--i] = -1;
    if (i == 0) break;
    ++e[i - 1];
  }
  std::stable_sort(evecs.begin(), evecs.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     int wa = 0, wb = 0;
                     for (int v : a) wa += v < 0 ? -v : v;
                     for (int v : b) wb += v < 0 ? -v : v;
                     if (wa != wb) return wa < wb;
                     return a < b;
                   });
  Poly one = Poly::constant(Elem::one(kt->base()));
  for (const std::vector<int>& ev : evecs) {
    Poly num = one, den = one;
    for (std::size_t i = 0; i < n; ++i) {
      if (ev[i] > 0) num = num * support[i].pi();
      if (ev[i] < 0) den = den * support[i].pi();
    }
    Elem g = Elem::from_fraction(kt, num, den);
    for (const Elem& s : signs)
      out.push_back(MWElement::unit_symbol(embed(kt, s) * g));
  }
  return out;
}

}  // namespace

ChowWittOutcome chowwitt_equal(const QuadraticZeroCycle& a, const QuadraticZeroCycle& b,
                               int search_bound) {
  if (a.curve() != b.curve()) fail("DescriptorMismatch", "cycle comparison across curves");
  const Curve& X = a.curve();
  if (!X.is_line()) fail("UnsupportedField", "class comparison is for the projective line");
  const FieldPtr& k = X.field();
  if (k->kind() != Field::Kind::rationals && !k->is_finite())
    fail("UnsupportedField", "class comparison needs Q or a finite prime field");
  const FieldPtr& kt = X.function_field();

  Ternary deg_eq = gw_equal(qdeg(a), qdeg(b));
  if (deg_eq == Ternary::no)
    return {ChowWittVerdict::not_equal, std::nullopt,
            "the quadratic degrees differ, and the degree map separates classes"};
  if (deg_eq == Ternary::unknown)
    return {ChowWittVerdict::unknown, std::nullopt, "quadratic degrees not comparable"};

  QuadraticZeroCycle difference = a - b;

  /* eliminate the difference place by place, highest residue degree first */
  MWElement certificate = MWElement::zero(kt, 1);
  QuadraticZeroCycle remaining = difference;
  int rounds = 0;
  while (true) {
    const QuadraticZeroCycle::Term* target = nullptr;
    for (const auto& t : remaining.terms())
      if (!t.first.at_infinity_point()) target = &t;
    if (target == nullptr) break;
    if (++rounds > search_bound)
      return {ChowWittVerdict::unknown, std::nullopt,
              "support elimination exceeded the search bound"};
    MWElement step = peel_term(kt, target->first.place(), target->second);
    certificate = certificate + step;
    remaining = remaining - residue_divisor(step);
  }
  if (quadratic_cycle_equal(residue_divisor(certificate), difference) != Ternary::yes)
    return {ChowWittVerdict::unknown, std::nullopt,
            "constructed certificate failed verification"};

  /* prefer the least member of the canonical one-symbol family; a unit
   * symbol has residues of rank +-1 at finite places, so any other
   * coefficient rank rules the whole family out up front */
  if (difference.empty())
    return {ChowWittVerdict::equal_with_certificate, MWElement::zero(kt, 1),
            "the difference is already zero"};
  std::vector<Place> support;
  for (const auto& t : difference.terms()) {
    if (t.first.at_infinity_point()) continue;
    if (t.second.rank() != 1 && t.second.rank() != -1)
      return {ChowWittVerdict::equal_with_certificate, certificate,
              "certificate from support elimination"};
    support.push_back(t.first.place());
  }
  for (const MWElement& candidate : one_symbol_family(kt, support)) {
    if (quadratic_cycle_equal(residue_divisor(candidate), difference) == Ternary::yes)
      return {ChowWittVerdict::equal_with_certificate, candidate,
              "least one-symbol certificate"};
  }
  return {ChowWittVerdict::equal_with_certificate, certificate,
          "certificate from support elimination"};
}

}  // namespace qz
