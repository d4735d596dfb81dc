#include "qz/errors.hpp"
#include "qz/field.hpp"

namespace qz {

namespace {

Int mod_reduce(const Int& v, const Int& p) {
  Int r = v % p;
  if (r < 0) r += p;
  return r;
}

bool is_atom_kind(const FieldPtr& f) {
  return f->kind() == Field::Kind::rationals || f->kind() == Field::Kind::prime;
}

}  // namespace

Elem Elem::rational(const Rat& v) {
  Elem e;
  e.f_ = Field::rationals();
  e.q_ = v;
  e.q_.canonicalize();
  return e;
}

Elem Elem::residue(const FieldPtr& f, const Int& v) {
  if (f->kind() != Field::Kind::prime)
    fail("DescriptorMismatch", "residue constructor needs a prime field");
  Elem e;
  e.f_ = f;
  e.r_ = mod_reduce(v, f->p());
  return e;
}

Elem Elem::zero(const FieldPtr& f) { return integer(f, 0); }
Elem Elem::one(const FieldPtr& f) { return integer(f, 1); }

Elem Elem::integer(const FieldPtr& f, const Int& n) {
  switch (f->kind()) {
    case Field::Kind::rationals:
      return rational(Rat(n));
    case Field::Kind::prime:
      return residue(f, n);
    case Field::Kind::extension: {
      Elem c = integer(f->base(), n);
      Elem e;
      e.f_ = f;
      if (!c.is_zero()) e.nc_.push_back(std::move(c));
      return e;
    }
    case Field::Kind::rational_functions: {
      Elem c = integer(f->base(), n);
      Elem e;
      e.f_ = f;
      if (!c.is_zero()) e.nc_.push_back(std::move(c));
      e.dc_.push_back(one(f->base()));
      return e;
    }
  }
  fail("DescriptorMismatch", "unknown field kind");
}

Elem Elem::ratio(const FieldPtr& f, const Rat& v) {
  Rat c = v;
  c.canonicalize();
  return integer(f, Int(c.get_num())) / integer(f, Int(c.get_den()));
}

Elem Elem::generator(const FieldPtr& f) {
  Elem e;
  e.f_ = f;
  switch (f->kind()) {
    case Field::Kind::extension:
      e.nc_ = {zero(f->base()), one(f->base())};
      return e;
    case Field::Kind::rational_functions:
      e.nc_ = {zero(f->base()), one(f->base())};
      e.dc_ = {one(f->base())};
      return e;
    default:
      fail("DescriptorMismatch", "field has no generator");
  }
}

Elem Elem::from_coords(const FieldPtr& f, std::vector<Elem> coords) {
  if (f->kind() != Field::Kind::extension)
    fail("DescriptorMismatch", "coordinate constructor needs a simple extension");
  for (const Elem& c : coords)
    require_same_field(c.field(), f->base(), "extension coordinate");
  Poly p(f->base(), std::move(coords));
  p = p % f->minpoly();
  Elem e;
  e.f_ = f;
  e.nc_ = p.coeffs();
  return e;
}

Elem Elem::from_fraction(const FieldPtr& f, const Poly& num, const Poly& den) {
  if (f->kind() != Field::Kind::rational_functions)
    fail("DescriptorMismatch", "fraction constructor needs a rational function field");
  require_same_field(num.base(), f->base(), "fraction numerator");
  require_same_field(den.base(), f->base(), "fraction denominator");
  if (den.is_zero()) fail("DivisionByZero", "zero denominator");
  Poly n = num, d = den;
  if (n.is_zero()) {
    Elem e;
    e.f_ = f;
    e.dc_ = {one(f->base())};
    return e;
  }
  Poly g = gcd_poly(n, d);
  if (g.deg() > 0) {
    n = n / g;
    d = d / g;
  }
  Elem s = d.lc().inverse();
  n = s * n;
  d = s * d;
  Elem e;
  e.f_ = f;
  e.nc_ = n.coeffs();
  e.dc_ = d.coeffs();
  return e;
}

bool Elem::is_zero() const {
  switch (f_->kind()) {
    case Field::Kind::rationals: return q_ == 0;
    case Field::Kind::prime: return r_ == 0;
    default: return nc_.empty();
  }
}

bool Elem::is_one() const {
  switch (f_->kind()) {
    case Field::Kind::rationals: return q_ == 1;
    case Field::Kind::prime: return r_ == 1;
    case Field::Kind::extension:
      return nc_.size() == 1 && nc_[0].is_one();
    case Field::Kind::rational_functions:
      return nc_.size() == 1 && nc_[0].is_one() && dc_.size() == 1;
  }
  return false;
}

Poly Elem::num_poly() const {
  if (f_->kind() == Field::Kind::extension || f_->kind() == Field::Kind::rational_functions)
    return Poly(f_->base(), nc_);
  fail("DescriptorMismatch", "element has no numerator polynomial");
}

Poly Elem::den_poly() const {
  if (f_->kind() == Field::Kind::rational_functions) return Poly(f_->base(), dc_);
  fail("DescriptorMismatch", "element has no denominator polynomial");
}

const Rat& Elem::rat_value() const {
  if (f_->kind() != Field::Kind::rationals)
    fail("DescriptorMismatch", "not a rational value");
  return q_;
}

const Int& Elem::residue_value() const {
  if (f_->kind() != Field::Kind::prime)
    fail("DescriptorMismatch", "not a prime-field value");
  return r_;
}

const std::vector<Elem>& Elem::coords() const {
  if (f_->kind() != Field::Kind::extension)
    fail("DescriptorMismatch", "not an extension value");
  return nc_;
}

const std::vector<Elem>& Elem::num_coeffs() const { return nc_; }
const std::vector<Elem>& Elem::den_coeffs() const { return dc_; }

Elem operator+(const Elem& a, const Elem& b) {
  require_same_field(a.f_, b.f_, "addition");
  switch (a.f_->kind()) {
    case Field::Kind::rationals:
      return Elem::rational(a.q_ + b.q_);
    case Field::Kind::prime:
      return Elem::residue(a.f_, a.r_ + b.r_);
    case Field::Kind::extension: {
      Poly s = Poly(a.f_->base(), a.nc_) + Poly(a.f_->base(), b.nc_);
      Elem e;
      e.f_ = a.f_;
      e.nc_ = s.coeffs();
      return e;
    }
    case Field::Kind::rational_functions: {
      Poly an = a.num_poly(), ad = a.den_poly();
      Poly bn = b.num_poly(), bd = b.den_poly();
      return Elem::from_fraction(a.f_, an * bd + bn * ad, ad * bd);
    }
  }
  fail("DescriptorMismatch", "unknown field kind");
}

Elem Elem::operator-() const {
  switch (f_->kind()) {
    case Field::Kind::rationals:
      return rational(-q_);
    case Field::Kind::prime:
      return residue(f_, -r_);
    default: {
      Elem e = *this;
      for (Elem& c : e.nc_) c = -c;
      return e;
    }
  }
}

Elem operator-(const Elem& a, const Elem& b) { return a + (-b); }

Elem operator*(const Elem& a, const Elem& b) {
  require_same_field(a.f_, b.f_, "multiplication");
  switch (a.f_->kind()) {
    case Field::Kind::rationals:
      return Elem::rational(a.q_ * b.q_);
    case Field::Kind::prime:
      return Elem::residue(a.f_, a.r_ * b.r_);
    case Field::Kind::extension: {
      Poly p = (Poly(a.f_->base(), a.nc_) * Poly(a.f_->base(), b.nc_)) % a.f_->minpoly();
      Elem e;
      e.f_ = a.f_;
      e.nc_ = p.coeffs();
      return e;
    }
    case Field::Kind::rational_functions:
      return Elem::from_fraction(a.f_, a.num_poly() * b.num_poly(),
                                 a.den_poly() * b.den_poly());
  }
  fail("DescriptorMismatch", "unknown field kind");
}

Elem Elem::inverse() const {
  if (is_zero()) fail("DivisionByZero", "inverse of zero in " + f_->describe());
  switch (f_->kind()) {
    case Field::Kind::rationals:
      return rational(1 / q_);
    case Field::Kind::prime: {
      Int inv;
      if (mpz_invert(inv.get_mpz_t(), r_.get_mpz_t(), f_->p().get_mpz_t()) == 0)
        fail("DivisionByZero", "residue not invertible");
      return residue(f_, inv);
    }
    case Field::Kind::extension: {
      // extended euclid against the minimal polynomial
      Poly r0 = f_->minpoly(), r1 = num_poly();
      Poly s0(f_->base()), s1 = Poly::constant(one(f_->base()));
      while (!r1.is_zero()) {
        Poly q, r;
        Poly::divmod(r0, r1, q, r);
        Poly s2 = s0 - q * s1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
      }
      // r0 = gcd = s0 * this mod minpoly; irreducibility makes it a constant
      Poly inv = r0.lc().inverse() * s0;
      return from_coords(f_, inv.coeffs());
    }
    case Field::Kind::rational_functions:
      return from_fraction(f_, den_poly(), num_poly());
  }
  fail("DescriptorMismatch", "unknown field kind");
}

Elem operator/(const Elem& a, const Elem& b) { return a * b.inverse(); }

Elem Elem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Elem acc = one(f_), base = *this;
  unsigned long n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool operator==(const Elem& a, const Elem& b) {
  require_same_field(a.f_, b.f_, "comparison");
  switch (a.f_->kind()) {
    case Field::Kind::rationals: return a.q_ == b.q_;
    case Field::Kind::prime: return a.r_ == b.r_;
    default: return a.nc_ == b.nc_ && a.dc_ == b.dc_;
  }
}

int cmp(const Elem& a, const Elem& b) {
  require_same_field(a.f_, b.f_, "ordering");
  auto sgn = [](int v) { return v < 0 ? -1 : v > 0 ? 1 : 0; };
  switch (a.f_->kind()) {
    case Field::Kind::rationals:
      return sgn(mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()));
    case Field::Kind::prime:
      return sgn(::cmp(a.r_, b.r_));
    case Field::Kind::extension:
      return cmp(Poly(a.f_->base(), a.nc_), Poly(a.f_->base(), b.nc_));
    case Field::Kind::rational_functions: {
      int c = cmp(Poly(a.f_->base(), a.nc_), Poly(b.f_->base(), b.nc_));
      if (c) return c;
      return cmp(Poly(a.f_->base(), a.dc_), Poly(b.f_->base(), b.dc_));
    }
  }
  return 0;
}

std::string Elem::str() const {
  switch (f_->kind()) {
    case Field::Kind::rationals:
      return q_.get_str();
    case Field::Kind::prime:
      return r_.get_str();
    case Field::Kind::extension:
      return num_poly().str(f_->var());
    case Field::Kind::rational_functions: {
      Poly d = den_poly();
      if (d.deg() == 0 && d.lc().is_one()) return num_poly().str(f_->var());
      return "(" + num_poly().str(f_->var()) + ")/(" + d.str(f_->var()) + ")";
    }
  }
  return "?";
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case Field::Kind::rationals:
      return true;
    case Field::Kind::prime:
      return a->p() == b->p();
    case Field::Kind::extension:
      return a->var() == b->var() && same_field(a->base(), b->base()) &&
             a->minpoly() == b->minpoly();
    case Field::Kind::rational_functions:
      return a->var() == b->var() && same_field(a->base(), b->base());
  }
  return false;
}

void require_same_field(const FieldPtr& a, const FieldPtr& b, const char* where) {
  if (!a || !b) fail("DescriptorMismatch", std::string(where) + ": detached element");
  if (!same_field(a, b))
    fail("DescriptorMismatch", std::string(where) + ": " + a->describe() +
                                   " vs " + b->describe());
}

bool extends(const FieldPtr& target, const FieldPtr& k) {
  if (same_field(target, k)) return true;
  if (target->kind() == Field::Kind::extension ||
      target->kind() == Field::Kind::rational_functions)
    return extends(target->base(), k);
  return false;
}

Elem embed(const FieldPtr& target, const Elem& x) {
  if (same_field(target, x.field())) return x;
  if (target->kind() == Field::Kind::extension ||
      target->kind() == Field::Kind::rational_functions) {
    Elem c = embed(target->base(), x);
    if (target->kind() == Field::Kind::extension)
      return Elem::from_coords(target, {c});
    return Elem::from_fraction(target, Poly::constant(c),
                               Poly::constant(Elem::one(target->base())));
  }
  fail("DescriptorMismatch",
       "cannot embed " + x.field()->describe() + " into " + target->describe());
}

}  // namespace qz
