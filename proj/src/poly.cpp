#include "qz/errors.hpp"
#include "qz/field.hpp"

namespace qz {

Poly::Poly(FieldPtr k, std::vector<Elem> coeffs) : k_(std::move(k)), c_(std::move(coeffs)) {
  for (const Elem& c : c_) require_same_field(c.field(), k_, "polynomial coefficient");
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Elem& c) {
  Poly p(c.field());
  if (!c.is_zero()) p.c_.push_back(c);
  return p;
}

Poly Poly::variable(const FieldPtr& k) {
  Poly p(k);
  p.c_ = {Elem::zero(k), Elem::one(k)};
  return p;
}

Poly Poly::from_ints(const FieldPtr& k, const std::vector<long>& c) {
  std::vector<Elem> v;
  v.reserve(c.size());
  for (long x : c) v.push_back(Elem::integer(k, x));
  return Poly(k, std::move(v));
}

const Elem& Poly::coeff(int i) const {
  if (i < 0 || i > deg()) {
    thread_local Elem zero_cache;
    zero_cache = Elem::zero(k_);
    return zero_cache;
  }
  return c_[static_cast<std::size_t>(i)];
}

const Elem& Poly::lc() const {
  if (is_zero()) fail("ZeroInput", "leading coefficient of zero polynomial");
  return c_.back();
}

bool Poly::is_monic() const { return !is_zero() && lc().is_one(); }

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a.k_, b.k_, "polynomial addition");
  Poly r(a.k_);
  std::size_t n = std::max(a.c_.size(), b.c_.size());
  r.c_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Elem s = Elem::zero(a.k_);
    if (i < a.c_.size()) s = s + a.c_[i];
    if (i < b.c_.size()) s = s + b.c_[i];
    r.c_.push_back(std::move(s));
  }
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Elem& c : r.c_) c = -c;
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a.k_, b.k_, "polynomial multiplication");
  if (a.is_zero() || b.is_zero()) return Poly(a.k_);
  Poly r(a.k_);
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Elem::zero(a.k_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

Poly operator*(const Elem& s, const Poly& a) {
  Poly r = a;
  for (Elem& c : r.c_) c = s * c;
  r.trim();
  return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  require_same_field(a.k_, b.k_, "polynomial division");
  if (b.is_zero()) fail("DivisionByZero", "polynomial division by zero");
  q = Poly(a.k_);
  r = a;
  Elem inv_lead = b.lc().inverse();
  int db = b.deg();
  while (r.deg() >= db) {
    int k = r.deg() - db;
    Elem c = r.lc() * inv_lead;
    // r -= c x^k b;  q += c x^k
    if (q.c_.size() < static_cast<std::size_t>(k) + 1)
      q.c_.resize(static_cast<std::size_t>(k) + 1, Elem::zero(a.k_));
    q.c_[static_cast<std::size_t>(k)] = q.c_[static_cast<std::size_t>(k)] + c;
    for (int i = 0; i <= db; ++i) {
      std::size_t idx = static_cast<std::size_t>(i + k);
      r.c_[idx] = r.c_[idx] - c * b.c_[static_cast<std::size_t>(i)];
    }
    r.trim();
  }
  q.trim();
}

Poly operator/(const Poly& a, const Poly& b) {
  Poly q, r;
  Poly::divmod(a, b, q, r);
  return q;
}

Poly operator%(const Poly& a, const Poly& b) {
  Poly q, r;
  Poly::divmod(a, b, q, r);
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return lc().inverse() * *this;
}

Poly Poly::derivative() const {
  Poly r(k_);
  for (int i = 1; i <= deg(); ++i)
    r.c_.push_back(Elem::integer(k_, i) * c_[static_cast<std::size_t>(i)]);
  r.trim();
  return r;
}

Poly Poly::shift_compose(const Elem& s) const {
  Poly acc(k_);
  Poly lin(k_, {s, Elem::one(k_)});
  for (int i = deg(); i >= 0; --i)
    acc = acc * lin + Poly::constant(c_[static_cast<std::size_t>(i)]);
  return acc;
}

Elem Poly::eval(const Elem& x) const {
  Elem acc = Elem::zero(k_);
  for (int i = deg(); i >= 0; --i) acc = acc * x + c_[static_cast<std::size_t>(i)];
  return acc;
}

Elem Poly::eval_embedded(const Elem& x) const {
  const FieldPtr& target = x.field();
  Elem acc = Elem::zero(target);
  for (int i = deg(); i >= 0; --i)
    acc = acc * x + embed(target, c_[static_cast<std::size_t>(i)]);
  return acc;
}

Poly gcd_poly(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

Poly Poly::pow_mod(const Int& e, const Poly& mod) const {
  if (e < 0) fail("ZeroInput", "negative exponent in pow_mod");
  Poly acc = Poly::constant(Elem::one(k_));
  Poly base = *this % mod;
  Int n = e;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) acc = acc * base % mod;
    base = base * base % mod;
    n >>= 1;
  }
  return acc;
}

bool operator==(const Poly& a, const Poly& b) {
  require_same_field(a.k_, b.k_, "polynomial comparison");
  return a.c_ == b.c_;
}

int cmp(const Poly& a, const Poly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
  for (int i = a.deg(); i >= 0; --i) {
    int c = cmp(a.c_[static_cast<std::size_t>(i)], b.c_[static_cast<std::size_t>(i)]);
    if (c) return c;
  }
  return 0;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  auto power = [&var](int i) -> std::string {
    if (i == 0) return "";
    if (i == 1) return var;
    return var + "^" + std::to_string(i);
  };
  auto atom = [](const Elem& c) {
    auto k = c.field()->kind();
    return k == Field::Kind::rationals || k == Field::Kind::prime;
  };
  std::string out;
  for (int i = deg(); i >= 0; --i) {
    const Elem& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string term;
    bool neg = false;
    if (atom(c)) {
      std::string cs = c.str();
      if (!cs.empty() && cs[0] == '-') {
        neg = true;
        cs.erase(0, 1);
      }
      if (i == 0) {
        term = cs;
      } else if (cs == "1") {
        term = power(i);
      } else {
        term = cs + "*" + power(i);
      }
    } else {
      term = "(" + c.str() + ")";
      if (i > 0) term += "*" + power(i);
    }
    if (out.empty()) {
      out = (neg ? "-" : "") + term;
    } else {
      out += (neg ? "-" : "+") + term;
    }
  }
  return out;
}

}  // namespace qz
