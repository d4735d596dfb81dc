#include "qz/milnor.hpp"

#include <algorithm>
#include <sstream>

#include "qz/hilbert.hpp"
#include "qz/polyfactor.hpp"

namespace qz {

namespace {

int cmp_term(const MilnorSymbol::Term& s, const MilnorSymbol::Term& t) {
  int c = cmp(s.first.first, t.first.first);
  if (c != 0) return c;
  return cmp(s.first.second, t.first.second);
}

void require_degree(const MilnorSymbol& x, int d, const char* where) {
  if (x.degree() != d) fail("MalformedInput", std::string(where) + ": wrong degree");
}

}  // namespace

MilnorSymbol MilnorSymbol::constant(const FieldPtr& k, const Int& n) {
  MilnorSymbol x(k, 0);
  x.n_ = n;
  return x;
}

MilnorSymbol MilnorSymbol::unit(const Elem& a) {
  if (a.is_zero()) fail("ZeroInput", "symbol entry");
  MilnorSymbol x(a.field(), 1);
  x.u_ = a;
  return x;
}

MilnorSymbol MilnorSymbol::pair(const Elem& a, const Elem& b) {
  require_same_field(a.field(), b.field(), "symbol");
  if (a.is_zero() || b.is_zero()) fail("ZeroInput", "symbol entry");
  MilnorSymbol x(a.field(), 2);
  x.terms_.push_back({{a, b}, Int(1)});
  x.normalize();
  return x;
}

MilnorSymbol MilnorSymbol::zero(const FieldPtr& k, int degree) {
  if (degree < 0 || degree > 2) fail("MalformedInput", "milnor degree out of range");
  MilnorSymbol x(k, degree);
  if (degree == 1) x.u_ = Elem::one(k);
  return x;
}

const Int& MilnorSymbol::constant_value() const {
  if (degree_ != 0) fail("MalformedInput", "constant_value in positive degree");
  return n_;
}

const Elem& MilnorSymbol::unit_value() const {
  if (degree_ != 1) fail("MalformedInput", "unit_value outside degree 1");
  return *u_;
}

const std::vector<MilnorSymbol::Term>& MilnorSymbol::terms() const {
  if (degree_ != 2) fail("MalformedInput", "terms outside degree 2");
  return terms_;
}

bool MilnorSymbol::syntactically_zero() const {
  switch (degree_) {
    case 0: return n_ == 0;
    case 1: return (*u_ - Elem::one(k_)).is_zero();
    default: return terms_.empty();
  }
}

void MilnorSymbol::normalize() {
  Elem one = Elem::one(k_);
  std::vector<Term> kept;
  for (Term& t : terms_) {
    Elem& a = t.first.first;
    Elem& b = t.first.second;
    if (t.second == 0) continue;
    if ((a - one).is_zero() || (b - one).is_zero()) continue;
    if ((a + b).is_zero()) continue;
    if ((a + b - one).is_zero()) continue;
    if ((a - b).is_zero()) b = -one;
    if (cmp(b, a) < 0) {
      std::swap(a, b);
      t.second = Int(-t.second);
    }
    kept.push_back(std::move(t));
  }
  std::sort(kept.begin(), kept.end(),
            [](const Term& s, const Term& t) { return cmp_term(s, t) < 0; });
  terms_.clear();
  for (Term& t : kept) {
    if (!terms_.empty() && cmp_term(terms_.back(), t) == 0)
      terms_.back().second += t.second;
    else
      terms_.push_back(std::move(t));
  }
  std::erase_if(terms_, [](const Term& t) { return t.second == 0; });
}

MilnorSymbol MilnorSymbol::scaled_by_int(const Int& n) const {
  MilnorSymbol x(k_, degree_);
  switch (degree_) {
    case 0:
      x.n_ = Int(n_ * n);
      break;
    case 1: {
      if (!n.fits_slong_p()) fail("MalformedInput", "symbol multiple too large");
      x.u_ = u_->pow(n.get_si());
      break;
    }
    default:
      x.terms_ = terms_;
      for (Term& t : x.terms_) t.second *= n;
      x.normalize();
  }
  return x;
}

MilnorSymbol operator+(const MilnorSymbol& a, const MilnorSymbol& b) {
  require_same_field(a.k_, b.k_, "milnor sum");
  if (a.degree_ != b.degree_) fail("MalformedInput", "milnor sum across degrees");
  MilnorSymbol x(a.k_, a.degree_);
  switch (a.degree_) {
    case 0:
      x.n_ = Int(a.n_ + b.n_);
      break;
    case 1:
      x.u_ = *a.u_ * *b.u_;
      break;
    default:
      x.terms_ = a.terms_;
      x.terms_.insert(x.terms_.end(), b.terms_.begin(), b.terms_.end());
      x.normalize();
  }
  return x;
}

MilnorSymbol operator-(const MilnorSymbol& a) { return a.scaled_by_int(Int(-1)); }

std::string MilnorSymbol::str() const {
  switch (degree_) {
    case 0: return n_.get_str();
    case 1: return "{" + u_->str() + "}";
    default: {
      if (terms_.empty()) return "0";
      std::ostringstream out;
      bool lead = true;
      for (const Term& t : terms_) {
        Int m = t.second;
        if (!lead) out << (m > 0 ? " + " : " - ");
        if (lead && m < 0) out << "-";
        Int mm = Int(abs(m));
        if (mm != 1) out << mm.get_str() << "*";
        out << "{" << t.first.first.str() << ", " << t.first.second.str() << "}";
        lead = false;
      }
      return out.str();
    }
  }
}

MilnorSymbol milnor_mul(const MilnorSymbol& a, const MilnorSymbol& b) {
  require_same_field(a.field(), b.field(), "milnor product");
  int d = a.degree() + b.degree();
  if (d > 2) fail("DegreeOverflow", "milnor product beyond degree 2");
  if (a.degree() == 0) {
    if (b.degree() == 0)
      return MilnorSymbol::constant(a.field(), Int(a.constant_value() * b.constant_value()));
    return b.scaled_by_int(a.constant_value());
  }
  if (b.degree() == 0) return milnor_mul(b, a);
  return MilnorSymbol::pair(a.unit_value(), b.unit_value());
}

namespace {

/* tame symbol of e*{a, b} at an odd prime, as a unit mod p */
Int tame_at_odd_prime(const Rat& a, const Rat& b, const Int& e, const Int& p) {
  auto val = [&](const Rat& x) {
    long v = 0;
    Int n = x.get_num(), d = x.get_den();
    while (n % p == 0) { n /= p; ++v; }
    while (d % p == 0) { d /= p; --v; }
    return v;
  };
  long alpha = val(a), beta = val(b);
  Rat t(1);
  if ((alpha % 2 != 0) && (beta % 2 != 0)) t = -t;
  for (long i = 0; i < beta; ++i) t *= a;
  for (long i = 0; i > beta; --i) t /= a;
  for (long i = 0; i < alpha; ++i) t /= b;
  for (long i = 0; i > alpha; --i) t *= b;
  Int num = t.get_num(), den = t.get_den(), r;
  mpz_powm_ui(r.get_mpz_t(), den.get_mpz_t(), p.get_ui() - 2, p.get_mpz_t());
  r = Int(r * num % p);
  Int exp = Int(((e % (p - 1)) + (p - 1)) % (p - 1));
  Int out;
  mpz_powm(out.get_mpz_t(), r.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
  return Int((out + p) % p);
}

Ternary k2_zero_over_q(const std::vector<MilnorSymbol::Term>& terms) {
  std::vector<Rat> entries;
  for (const auto& t : terms) {
    entries.push_back(t.first.first.rat_value());
    entries.push_back(t.first.second.rat_value());
  }
  std::vector<Int> primes;
  for (const Rat& x : entries)
    for (const Int& p : odd_prime_support(Int(x.get_num() * x.get_den())))
      if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  for (const Int& p : primes) {
    Int prod = 1;
    for (const auto& t : terms)
      prod = Int(prod *
                 tame_at_odd_prime(t.first.first.rat_value(), t.first.second.rat_value(),
                                   t.second, p) %
             p);
    if (prod != 1) return Ternary::no;
  }
  int dyadic = 1;
  for (const auto& t : terms)
    if (t.second % 2 != 0)
      dyadic *= hilbert_symbol(t.first.first.rat_value(), t.first.second.rat_value(),
                               QPlace::prime(Int(2)));
  return dyadic == 1 ? Ternary::yes : Ternary::no;
}

Ternary k2_zero_over_ratfunc(const MilnorSymbol& x) {
  const FieldPtr& kt = x.field();
  std::vector<Place> support;
  auto add_support = [&](const Elem& f) {
    for (const Place& v : support_places(f))
      if (std::find(support.begin(), support.end(), v) == support.end())
        support.push_back(v);
  };
  for (const auto& t : x.terms()) {
    add_support(t.first.first);
    add_support(t.first.second);
  }
  for (const Place& v : support) {
    Ternary r = milnor_is_zero(milnor_residue(x, v));
    if (r != Ternary::yes) return r;
  }
  const FieldPtr& k = kt->base();
  if (k->is_finite()) return Ternary::yes;
  for (long h = 0;; ++h) {
    for (long s : {h, -h}) {
      if (s == 0 && h != 0) continue;
      Elem c = Elem::integer(k, Int(s));
      bool good = true;
      std::vector<MilnorSymbol::Term> spec;
      for (const auto& t : x.terms()) {
        Elem an = t.first.first.num_poly().eval(c), ad = t.first.first.den_poly().eval(c);
        Elem bn = t.first.second.num_poly().eval(c), bd = t.first.second.den_poly().eval(c);
        if (an.is_zero() || ad.is_zero() || bn.is_zero() || bd.is_zero()) {
          good = false;
          break;
        }
        spec.push_back({{an / ad, bn / bd}, t.second});
      }
      if (!good) continue;
      MilnorSymbol y = MilnorSymbol::zero(k, 2);
      for (const auto& t : spec)
        y = y + MilnorSymbol::pair(t.first.first, t.first.second).scaled_by_int(t.second);
      return k2_is_zero(y);
    }
  }
}

}  // namespace

Ternary k2_is_zero(const MilnorSymbol& x) {
  require_degree(x, 2, "k2_is_zero");
  if (x.syntactically_zero()) return Ternary::yes;
  const FieldPtr& k = x.field();
  switch (k->kind()) {
    case Field::Kind::prime:
      return Ternary::yes;
    case Field::Kind::rationals:
      return k2_zero_over_q(x.terms());
    case Field::Kind::rational_functions:
      return k2_zero_over_ratfunc(x);
    case Field::Kind::extension:
      return k->is_finite() ? Ternary::yes : Ternary::unknown;
  }
  fail("UnsupportedField", "k2_is_zero");
}

Ternary milnor_is_zero(const MilnorSymbol& x) {
  switch (x.degree()) {
    case 0: return x.constant_value() == 0 ? Ternary::yes : Ternary::no;
    case 1: return x.syntactically_zero() ? Ternary::yes : Ternary::no;
    default: return k2_is_zero(x);
  }
}

Ternary milnor_equal(const MilnorSymbol& a, const MilnorSymbol& b) {
  return milnor_is_zero(a - b);
}

MilnorSymbol milnor_residue(const MilnorSymbol& x, const Place& v) {
  require_same_field(x.field(), v.function_field(), "milnor residue");
  FieldPtr kappa = v.residue_field();
  switch (x.degree()) {
    case 0:
      fail("DegreeUnderflow", "milnor residue below degree 0");
    case 1:
      return MilnorSymbol::constant(kappa, Int(valuation(x.unit_value(), v)));
    default: {
      MilnorSymbol out = MilnorSymbol::zero(kappa, 1);
      for (const auto& t : x.terms()) {
        const Elem& f = t.first.first;
        const Elem& g = t.first.second;
        long alpha = valuation(f, v), beta = valuation(g, v);
        Elem w = f.pow(beta) / g.pow(alpha);
        if ((alpha % 2 != 0) && (beta % 2 != 0)) w = -w;
        if (!t.second.fits_slong_p()) fail("MalformedInput", "symbol multiple too large");
        out = out + MilnorSymbol::unit(reduce_unit(w, v).pow(t.second.get_si()));
      }
      return out;
    }
  }
}

}  // namespace qz
