#include "qz/sqclass.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>

#include "qz/polyfactor.hpp"
#include "qz/trace.hpp"

namespace qz {

namespace {

bool euler_square(const Elem& a) {
  Int e = (a.field()->order() - 1) / 2;
  Elem acc = Elem::one(a.field());
  Elem base = a;
  Int n = e;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc.is_one();
}

long rat_height(const Rat& r) {
  Int h = abs(r.get_num());
  if (h < r.get_den()) h = r.get_den();
  return h.get_si();
}

/* all reduced p/q with max(|p|, q) == h, ascending; h = 1 includes zero */
std::vector<Rat> rationals_of_height(long h) {
  std::vector<Rat> out;
  for (long q = 1; q <= h; ++q)
    for (long p = -h; p <= h; ++p) {
      if (std::max(std::labs(p), q) != h) continue;
      if (std::gcd(std::labs(p), q) != 1) continue;
      out.emplace_back(p, q);
    }
  if (h == 1) out.emplace_back(0);
  std::sort(out.begin(), out.end());
  return out;
}

/* squares in k[theta]/(theta^2 + b theta + c): (x + y theta)^2 = u + v theta
 * forces x = (v + b y^2) / (2y) when y != 0, and z = y^2 then satisfies
 * (b^2 - 4c) z^2 + (2bv - 4u) z + v^2 = 0, a quadratic over the base field */
Ternary quadratic_ext_square(const Elem& a) {
  const FieldPtr& L = a.field();
  const FieldPtr& k = L->base();
  const Poly& m = L->minpoly();
  Elem b = m.coeff(1), c = m.coeff(0);
  const auto& co = a.coords();
  Elem u = co.empty() ? Elem::zero(k) : co[0];
  Elem v = co.size() > 1 ? co[1] : Elem::zero(k);
  Elem two = Elem::integer(k, 2), four = Elem::integer(k, 4);
  Elem A = b * b - four * c;  // nonzero: the minimal polynomial is separable
  Elem B = two * b * v - four * u;
  Elem C = v * v;
  Elem disc = B * B - four * A * C;
  if (!disc.is_zero()) {
    Ternary has_root = is_square(disc);
    if (has_root == Ternary::unknown) return Ternary::unknown;
    if (has_root == Ternary::no) disc = Elem::zero(k);  // mark: no y != 0 branch
  }
  std::vector<Elem> zs;
  if (disc.is_zero() && (B * B == four * A * C)) {
    zs.push_back(-B / (two * A));
  } else if (!disc.is_zero()) {
    Elem r = sqrt_exact(disc);
    zs.push_back((-B + r) / (two * A));
    zs.push_back((-B - r) / (two * A));
  }
  for (const Elem& z : zs) {
    if (z.is_zero()) continue;
    Ternary z_sq = is_square(z);
    if (z_sq == Ternary::unknown) return Ternary::unknown;
    if (z_sq != Ternary::yes) continue;
    Elem y = sqrt_exact(z);
    Elem x = (v + b * z) / (two * y);
    Elem cand = Elem::from_coords(L, {x, y});
    if (cand * cand == a) return Ternary::yes;
  }
  if (v.is_zero()) {  // remaining possibility: a = x^2 with x in the base
    Ternary base_sq = is_square(u);
    if (base_sq != Ternary::no) return base_sq;
  }
  return Ternary::no;
}

bool simple_over_rationals(const FieldPtr& k) {
  return k->tower_depth() == 1 && k->base()->kind() == Field::Kind::rationals;
}

Ternary bounded_ext_square(const Elem& a, long height) {
  if (!simple_over_rationals(a.field())) return Ternary::unknown;
  bool found = enumerate_elements_by_height(
      a.field(), height, [&a](const Elem& y) { return y * y == a; });
  return found ? Ternary::yes : Ternary::unknown;
}

/* exact square root of a monic polynomial by matching coefficients from the
 * top (characteristic != 2); empty when there is none */
std::optional<Poly> monic_sqrt(const Poly& f) {
  if (f.deg() % 2 != 0) return std::nullopt;
  const FieldPtr& b = f.base();
  int m = f.deg() / 2;
  Elem half = (Elem::integer(b, Int(2))).inverse();
  std::vector<Elem> g(static_cast<std::size_t>(m) + 1, Elem::zero(b));
  g[static_cast<std::size_t>(m)] = Elem::one(b);
  for (int i = m - 1; i >= 0; --i) {
    Elem s = f.coeff(m + i);
    for (int j = i + 1; j < m; ++j)
      s = s - g[static_cast<std::size_t>(j)] * g[static_cast<std::size_t>(m + i - j)];
    g[static_cast<std::size_t>(i)] = s * half;
  }
  Poly root(b, g);
  if (root * root != f) return std::nullopt;
  return root;
}

}  // namespace

Ternary is_square(const Elem& a) {
  if (a.is_zero()) fail("ZeroInput", "square class of zero");
  const FieldPtr& k = a.field();
  switch (k->kind()) {
    case Field::Kind::rationals:
      return is_square(a.rat_value()) ? Ternary::yes : Ternary::no;
    case Field::Kind::prime:
      return euler_square(a) ? Ternary::yes : Ternary::no;
    case Field::Kind::extension: {
      if (k->is_finite()) return euler_square(a) ? Ternary::yes : Ternary::no;
      if (k->ext_deg() == 2) return quadratic_ext_square(a);
      // the norm of a square is a square: a cheap definite refutation
      if (is_square(field_norm(a)) == Ternary::no) return Ternary::no;
      return bounded_ext_square(a, 3);
    }
    case Field::Kind::rational_functions: {
      if (k->characteristic() == 2) {
        PolyFactorization fn = factor_poly(a.num_poly());
        PolyFactorization fd = factor_poly(a.den_poly());
        for (const auto& [p, e] : fn.factors)
          if (e & 1) return Ternary::no;
        for (const auto& [p, e] : fd.factors)
          if (e & 1) return Ternary::no;
        return is_square(fn.unit / fd.unit);
      }
      // the numerator and denominator are coprime with a monic denominator,
      // so each must be a unit times a squared polynomial on its own
      if (!monic_sqrt(a.num_poly().monic()) || !monic_sqrt(a.den_poly())) return Ternary::no;
      return is_square(a.num_poly().lc());
    }
  }
  fail("DescriptorMismatch", "unknown field kind");
}

Elem sqrt_exact(const Elem& a) {
  const FieldPtr& k = a.field();
  if (a.is_zero()) return a;
  switch (k->kind()) {
    case Field::Kind::rationals: {
      const Rat& v = a.rat_value();
      if (!is_square(v)) fail("NotASquare", "sqrt of " + a.str());
      Int rn, rd;
      mpz_sqrt(rn.get_mpz_t(), v.get_num().get_mpz_t());
      mpz_sqrt(rd.get_mpz_t(), v.get_den().get_mpz_t());
      return Elem::rational(Rat(rn, rd));
    }
    case Field::Kind::prime: {
      // deterministic scan; fields here are small enough that Tonelli-Shanks
      // would be an optimization without a payoff
      for (Int x = 1; x * 2 <= k->p(); ++x)
        if ((x * x - a.residue_value()) % k->p() == 0) return Elem::residue(k, x);
      fail("NotASquare", "sqrt of " + a.str());
    }
    case Field::Kind::extension: {
      if (k->is_finite()) {
        for (const Elem& x : finite_field_elements(k))
          if (x * x == a) return x;
        fail("NotASquare", "sqrt of " + a.str());
      }
      if (k->ext_deg() == 2) {
        const FieldPtr& base = k->base();
        const Poly& m = k->minpoly();
        Elem b = m.coeff(1), c = m.coeff(0);
        const auto& co = a.coords();
        Elem u = co.empty() ? Elem::zero(base) : co[0];
        Elem v = co.size() > 1 ? co[1] : Elem::zero(base);
        Elem two = Elem::integer(base, 2), four = Elem::integer(base, 4);
        if (v.is_zero() && is_square(u) == Ternary::yes)
          return Elem::from_coords(k, {sqrt_exact(u)});
        Elem A = b * b - four * c;
        Elem B = two * b * v - four * u;
        Elem C = v * v;
        Elem disc = B * B - four * A * C;
        std::vector<Elem> zs;
        if (disc.is_zero()) {
          zs.push_back(-B / (two * A));
        } else if (is_square(disc) == Ternary::yes) {
          Elem r = sqrt_exact(disc);
          zs.push_back((-B + r) / (two * A));
          zs.push_back((-B - r) / (two * A));
        }
        for (const Elem& z : zs) {
          if (z.is_zero() || is_square(z) != Ternary::yes) continue;
          Elem y = sqrt_exact(z);
          Elem x = (v + b * z) / (two * y);
          Elem cand = Elem::from_coords(k, {x, y});
          if (cand * cand == a) return cand;
        }
        fail("NotASquare", "sqrt of " + a.str());
      }
      Elem out = Elem::zero(k);
      if (simple_over_rationals(k) &&
          enumerate_elements_by_height(k, 4, [&](const Elem& y) {
            if (y * y == a) {
              out = y;
              return true;
            }
            return false;
          }))
        return out;
      fail("UndecidableAtBound", "no square root found within the search bound");
    }
    case Field::Kind::rational_functions: {
      PolyFactorization fn = factor_poly(a.num_poly());
      PolyFactorization fd = factor_poly(a.den_poly());
      Poly num = Poly::constant(Elem::one(k->base()));
      Poly den = num;
      for (const auto& [p, e] : fn.factors) {
        if (e & 1) fail("NotASquare", "sqrt of " + a.str());
        for (int i = 0; i < e / 2; ++i) num = num * p;
      }
      for (const auto& [p, e] : fd.factors) {
        if (e & 1) fail("NotASquare", "sqrt of " + a.str());
        for (int i = 0; i < e / 2; ++i) den = den * p;
      }
      Elem u = sqrt_exact(fn.unit / fd.unit);
      return Elem::from_fraction(k, Poly::constant(u) * num, den);
    }
  }
  fail("DescriptorMismatch", "unknown field kind");
}

Ternary same_square_class(const Elem& a, const Elem& b) { return is_square(a / b); }

Elem square_class_rep(const Elem& a) {
  if (a.is_zero()) fail("ZeroInput", "square class of zero");
  const FieldPtr& k = a.field();
  switch (k->kind()) {
    case Field::Kind::rationals:
      return Elem::rational(Rat(squarefree_part(a.rat_value())));
    case Field::Kind::prime:
      return euler_square(a) ? Elem::one(k) : canonical_nonsquare(k);
    case Field::Kind::extension: {
      if (k->is_finite())
        return euler_square(a) ? Elem::one(k) : canonical_nonsquare(k);
      if (is_square(a) == Ternary::yes) return Elem::one(k);
      // normalize the rational content; not canonical across a class, but
      // stable and square-class preserving
      Rat content(0);
      for (const Elem& c : a.coords()) {
        if (c.field()->kind() != Field::Kind::rationals) return a;
        if (c.is_zero()) continue;
        Rat v = abs(c.rat_value());
        if (content == 0)
          content = v;
        else
          content = Rat(gcd(Int(content.get_num() * v.get_den()),
                            Int(v.get_num() * content.get_den())),
                        Int(content.get_den() * v.get_den()));
        content.canonicalize();
      }
      if (content == 0) return a;
      Rat scale = Rat(squarefree_part(content)) / content;
      return Elem::ratio(k, scale) * a;
    }
    case Field::Kind::rational_functions: {
      PolyFactorization fn = factor_poly(a.num_poly());
      PolyFactorization fd = factor_poly(a.den_poly());
      Poly acc = Poly::constant(square_class_rep(fn.unit / fd.unit));
      for (const auto& [p, e] : fn.factors)
        if (e & 1) acc = acc * p;
      for (const auto& [p, e] : fd.factors)
        if (e & 1) acc = acc * p;
      return Elem::from_fraction(k, acc, Poly::constant(Elem::one(k->base())));
    }
  }
  fail("DescriptorMismatch", "unknown field kind");
}

Elem canonical_nonsquare(const FieldPtr& k) {
  if (!k->is_finite())
    fail("DescriptorMismatch", "canonical nonsquare needs a finite field");
  for (const Elem& x : finite_field_elements(k)) {
    if (x.is_zero()) continue;
    if (!euler_square(x)) return x;
  }
  fail("DescriptorMismatch", "no nonsquare found");
}

std::vector<Elem> square_class_candidates(const FieldPtr& k, int tier) {
  std::vector<Elem> out;
  switch (k->kind()) {
    case Field::Kind::rationals: {
      long bound = 10L << tier;
      out.push_back(Elem::rational(1));
      out.push_back(Elem::rational(-1));
      for (long d = 2; d <= bound; ++d) {
        if (squarefree_part(Int(d)) != d) continue;
        out.push_back(Elem::rational(d));
        out.push_back(Elem::rational(-d));
      }
      return out;
    }
    case Field::Kind::prime:
    case Field::Kind::extension: {
      if (k->is_finite()) return {Elem::one(k), canonical_nonsquare(k)};
      long bound = 2L + tier;
      enumerate_elements_by_height(k, bound, [&out](const Elem& x) {
        out.push_back(x);
        return false;
      });
      return out;
    }
    case Field::Kind::rational_functions: {
      std::vector<Elem> base = square_class_candidates(k->base(), tier);
      for (const Elem& u : base) out.push_back(embed(k, u));
      // degree-one shifts widen the search across nontrivial classes
      long bound = std::min<long>(4 + tier, 12);
      Poly t = Poly::variable(k->base());
      Poly one = Poly::constant(Elem::one(k->base()));
      for (long s = 0; s <= bound; ++s) {
        for (int sign : {1, -1}) {
          if (s == 0 && sign < 0) continue;
          Poly shift = t - Poly::constant(Elem::integer(k->base(), sign * s));
          Elem pi = Elem::from_fraction(k, shift, one);
          for (const Elem& u : base) out.push_back(embed(k, u) * pi);
        }
      }
      return out;
    }
  }
  fail("DescriptorMismatch", "unknown field kind");
}

bool enumerate_elements_by_height(const FieldPtr& k, long max_height,
                                  const std::function<bool(const Elem&)>& fn) {
  if (k->is_finite()) {
    for (const Elem& x : finite_field_elements(k)) {
      if (x.is_zero()) continue;
      if (fn(x)) return true;
    }
    return false;
  }
  if (k->kind() == Field::Kind::rationals) {
    for (long h = 1; h <= max_height; ++h)
      for (const Rat& r : rationals_of_height(h)) {
        if (r == 0) continue;
        if (fn(Elem::rational(r))) return true;
      }
    return false;
  }
  if (k->kind() == Field::Kind::extension && simple_over_rationals(k)) {
    int d = k->absolute_degree();
    std::vector<Rat> pool;
    for (long h = 1; h <= max_height; ++h) {
      for (const Rat& r : rationals_of_height(h)) pool.push_back(r);
      std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
      while (true) {
        long hmax = 0;
        for (std::size_t i : idx) hmax = std::max(hmax, rat_height(pool[i]));
        if (hmax == h) {  // exactly-new vectors only: lower heights already seen
          std::vector<Elem> coords;
          coords.reserve(idx.size());
          for (std::size_t i : idx) coords.push_back(Elem::rational(pool[i]));
          Elem x = Elem::from_coords(k, coords);
          if (!x.is_zero() && fn(x)) return true;
        }
        std::size_t pos = 0;
        while (pos < idx.size()) {
          if (++idx[pos] < pool.size()) break;
          idx[pos] = 0;
          ++pos;
        }
        if (pos == idx.size()) break;
      }
    }
    return false;
  }
  fail("UnsupportedField", "height enumeration over " + k->describe());
}

}  // namespace qz
