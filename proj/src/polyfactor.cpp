#include "qz/polyfactor.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>

#include "qz/errors.hpp"
#include "qz/intnum.hpp"
#include "qz/sqclass.hpp"

namespace qz {

namespace {

void sort_factors(std::vector<std::pair<Poly, int>>& fs) {
  std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
    if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
    return cmp(a.first, b.first) < 0;
  });
}

/* ---------- finite fields: squarefree / distinct-degree / equal-degree ---- */

Elem frobenius_inverse(const Elem& c) {
  // c^(q/p) undoes x -> x^p on F_q
  const FieldPtr& k = c.field();
  Int n = k->order() / k->characteristic();
  Elem acc = Elem::one(k);
  Elem base = c;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

Poly pth_root(const Poly& f) {
  // f with vanishing derivative is g(x^p); returns the r with r^p = f
  const FieldPtr& k = f.base();
  int p = static_cast<int>(k->characteristic().get_ui());
  std::vector<Elem> out;
  for (int i = 0; i <= f.deg(); i += p) out.push_back(frobenius_inverse(f.coeff(i)));
  return Poly(k, std::move(out));
}

void squarefree_finite(const Poly& f, int mult,
                       std::vector<std::pair<Poly, int>>& out) {
  if (f.deg() <= 0) return;
  const FieldPtr& k = f.base();
  int p = static_cast<int>(k->characteristic().get_ui());
  Poly d = f.derivative();
  if (d.is_zero()) {
    squarefree_finite(pth_root(f), mult * p, out);
    return;
  }
  Poly g = gcd_poly(f, d);
  Poly w = f / g;
  int i = 1;
  while (w.deg() > 0) {
    Poly y = gcd_poly(w, g);
    Poly z = w / y;
    if (z.deg() > 0) out.emplace_back(z.monic(), i * mult);
    ++i;
    w = y;
    g = g / y;
  }
  if (g.deg() > 0) squarefree_finite(pth_root(g), mult * p, out);
}

/* next polynomial over F_q in counting order (coefficient odometer) */
bool next_poly(std::vector<Elem>& coords, const std::vector<Elem>& elems) {
  for (auto& c : coords) {
    std::size_t idx = 0;
    while (!(elems[idx] == c)) ++idx;
    if (idx + 1 < elems.size()) {
      c = elems[idx + 1];
      return true;
    }
    c = elems[0];
  }
  return false;
}

void equal_degree_split(const Poly& f, int d, std::vector<Poly>& out) {
  if (f.deg() == d) {
    out.push_back(f.monic());
    return;
  }
  const FieldPtr& k = f.base();
  Int exp = (pow_int(k->order(), static_cast<unsigned long>(d)) - 1) / 2;
  std::vector<Elem> elems = finite_field_elements(k);
  // deterministic sweep over candidate splitting polynomials; a splitter of
  // degree < 2d always exists and f.deg() >= 2d here
  for (int deg_a = 1; deg_a < f.deg(); ++deg_a) {
    std::vector<Elem> coords(static_cast<std::size_t>(deg_a) + 1, elems[0]);
    coords.back() = Elem::one(k);
    do {
      Poly a(k, coords);
      if (a.deg() != deg_a) continue;
      Poly g = gcd_poly(a, f);
      if (g.deg() > 0 && g.deg() < f.deg()) {
        equal_degree_split(g, d, out);
        equal_degree_split(f / g, d, out);
        return;
      }
      Poly b = a.pow_mod(exp, f) - Poly::constant(Elem::one(k));
      g = gcd_poly(b, f);
      if (g.deg() > 0 && g.deg() < f.deg()) {
        equal_degree_split(g, d, out);
        equal_degree_split(f / g, d, out);
        return;
      }
    } while (next_poly(coords, elems));
  }
  fail("SearchExhausted", "equal-degree splitting ran out of candidates");
}

std::vector<Poly> factor_finite_squarefree(const Poly& f) {
  const FieldPtr& k = f.base();
  std::vector<Poly> out;
  Poly rest = f.monic();
  Poly x = Poly::variable(k);
  Poly frob = x;  // x^(q^i) mod rest, re-reduced as rest shrinks
  Int q = k->order();
  int i = 0;
  while (rest.deg() > 0) {
    if (2 * (i + 1) > rest.deg()) {
      out.push_back(rest);
      break;
    }
    ++i;
    frob = frob.pow_mod(q, rest);
    Poly g = gcd_poly(frob - x, rest);
    if (g.deg() > 0) {
      equal_degree_split(g, i, out);
      rest = rest / g;
      if (rest.deg() > 0) frob = frob % rest;
    }
  }
  return out;
}

PolyFactorization factor_over_finite(const Poly& f) {
  PolyFactorization out;
  out.unit = f.lc();
  if (f.deg() == 0) return out;
  std::vector<std::pair<Poly, int>> sqf;
  squarefree_finite(f.monic(), 1, sqf);
  for (const auto& [part, mult] : sqf)
    for (Poly& irr : factor_finite_squarefree(part))
      out.factors.emplace_back(std::move(irr), mult);
  sort_factors(out.factors);
  return out;
}

/* ---------- rationals: Yun + Zassenhaus ----------------------------------- */

using ZPoly = std::vector<Int>;  // ascending, trimmed

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

ZPoly zadd(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Int(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  ztrim(a);
  return a;
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Int(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  ztrim(a);
  return a;
}

Int smod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;  // symmetric representative in (-m/2, m/2]
}

ZPoly zmod(ZPoly a, const Int& m) {
  for (Int& c : a) c = smod(c, m);
  ztrim(a);
  return a;
}

/* division in (Z/m)[x] by a divisor with invertible leading coefficient */
void zdivmod_mod(const ZPoly& a, const ZPoly& b, const Int& m, ZPoly& q, ZPoly& r) {
  r = zmod(a, m);
  q.clear();
  int db = zdeg(b);
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), b.back().get_mpz_t(), m.get_mpz_t()) == 0)
    fail("DivisionByZero", "leading coefficient is not invertible");
  while (zdeg(r) >= db) {
    auto k = static_cast<std::size_t>(zdeg(r) - db);
    Int c = smod(r.back() * inv, m);
    if (q.size() < k + 1) q.resize(k + 1, Int(0));
    q[k] = smod(q[k] + c, m);
    for (int i = 0; i <= db; ++i)
      r[k + static_cast<std::size_t>(i)] =
          smod(r[k + static_cast<std::size_t>(i)] - c * b[static_cast<std::size_t>(i)], m);
    ztrim(r);
  }
}

/* integer division by a monic divisor; true iff the remainder vanishes */
bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  ZPoly r = a;
  q.clear();
  int db = zdeg(b);
  while (zdeg(r) >= db) {
    auto k = static_cast<std::size_t>(zdeg(r) - db);
    Int c = r.back();
    if (q.size() < k + 1) q.resize(k + 1, Int(0));
    q[k] += c;
    for (int i = 0; i <= db; ++i)
      r[k + static_cast<std::size_t>(i)] -= c * b[static_cast<std::size_t>(i)];
    ztrim(r);
  }
  return r.empty();
}

/* s a + t b = 1 in F_p[x] for coprime a, b */
void zbezout_mod(const ZPoly& a, const ZPoly& b, const Int& p, ZPoly& s, ZPoly& t) {
  ZPoly r0 = zmod(a, p), r1 = zmod(b, p);
  ZPoly s0{Int(1)}, s1, t0, t1{Int(1)};
  while (!r1.empty()) {
    ZPoly q, r;
    zdivmod_mod(r0, r1, p, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    ZPoly s2 = zmod(zsub(s0, zmul(q, s1)), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    ZPoly t2 = zmod(zsub(t0, zmul(q, t1)), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (zdeg(r0) != 0) fail("SearchExhausted", "modular factors were not coprime");
  Int inv;
  mpz_invert(inv.get_mpz_t(), r0[0].get_mpz_t(), p.get_mpz_t());
  s = zmod(zmul(s0, ZPoly{inv}), p);
  t = zmod(zmul(t0, ZPoly{inv}), p);
}

struct HenselPair {
  ZPoly g, h, s, t;  // f = g h and s g + t h = 1 (mod the current modulus)
};

/* one quadratic step, modulus m -> m^2; f monic, h monic,
 * deg f = deg g + deg h, deg s < deg h, deg t < deg g */
void hensel_step(const ZPoly& f, HenselPair& pr, const Int& m) {
  Int m2 = m * m;
  ZPoly e = zmod(zsub(f, zmul(pr.g, pr.h)), m2);
  ZPoly q, r;
  zdivmod_mod(zmul(pr.s, e), pr.h, m2, q, r);
  ZPoly g1 = zmod(zadd(pr.g, zadd(zmul(pr.t, e), zmul(q, pr.g))), m2);
  ZPoly h1 = zmod(zadd(pr.h, r), m2);
  ZPoly b = zmod(zsub(zadd(zmul(pr.s, g1), zmul(pr.t, h1)), ZPoly{Int(1)}), m2);
  ZPoly c, d;
  zdivmod_mod(zmul(pr.s, b), h1, m2, c, d);
  pr.s = zmod(zsub(pr.s, d), m2);
  pr.t = zmod(zsub(pr.t, zadd(zmul(pr.t, b), zmul(c, g1))), m2);
  pr.g = std::move(g1);
  pr.h = std::move(h1);
}

/* lift f = prod facs[lo..hi) from mod p to mod p^(2^steps), splitting in two
 * and lifting each half's product */
void lift_tree(const ZPoly& f, const std::vector<ZPoly>& facs, std::size_t lo,
               std::size_t hi, const Int& p, int steps, std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(f);
    return;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  ZPoly g{Int(1)}, h{Int(1)};
  for (std::size_t i = lo; i < mid; ++i) g = zmod(zmul(g, facs[i]), p);
  for (std::size_t i = mid; i < hi; ++i) h = zmod(zmul(h, facs[i]), p);
  HenselPair pr;
  zbezout_mod(g, h, p, pr.s, pr.t);
  pr.g = std::move(g);
  pr.h = std::move(h);
  Int m = p;
  for (int i = 0; i < steps; ++i) {
    hensel_step(f, pr, m);
    m = m * m;
  }
  lift_tree(pr.g, facs, lo, mid, p, steps, out);
  lift_tree(pr.h, facs, mid, hi, p, steps, out);
}

/* monic rational F of degree n -> monic integer G(y) = L^n F(y/L) */
ZPoly rational_monic_to_integer(const Poly& F, Int& L) {
  int n = F.deg();
  L = 1;
  for (int i = 0; i < n; ++i) L = lcm(L, Int(F.coeff(i).rat_value().get_den()));
  ZPoly G(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    Rat scaled = F.coeff(i).rat_value() *
                 Rat(pow_int(L, static_cast<unsigned long>(n - i)));
    G[static_cast<std::size_t>(i)] = scaled.get_num();
  }
  return G;
}

/* inverse of the scaling: monic integer g(y) -> monic rational L^-d g(Lx) */
Poly integer_factor_to_rational(const ZPoly& g, const Int& L) {
  int d = zdeg(g);
  std::vector<Elem> coeffs;
  for (int i = 0; i <= d; ++i) {
    Rat v(g[static_cast<std::size_t>(i)]);
    v /= Rat(pow_int(L, static_cast<unsigned long>(d - i)));
    coeffs.push_back(Elem::rational(v));
  }
  return Poly(Field::rationals(), std::move(coeffs));
}

Poly zpoly_mod_p(const ZPoly& g, const FieldPtr& kp) {
  std::vector<Elem> c;
  for (const Int& v : g) {
    Int r = v % kp->p();
    if (r < 0) r += kp->p();
    c.push_back(Elem::residue(kp, r));
  }
  return Poly(kp, std::move(c));
}

ZPoly fp_to_zpoly(const Poly& f, const Int& p) {
  ZPoly out;
  for (const Elem& c : f.coeffs()) out.push_back(smod(c.residue_value(), p));
  ztrim(out);
  return out;
}

/* monic squarefree rational S -> its monic irreducible rational factors */
std::vector<Poly> zassenhaus(const Poly& S) {
  std::vector<Poly> out;
  if (S.deg() == 1) {
    out.push_back(S);
    return out;
  }
  Int L;
  ZPoly G = rational_monic_to_integer(S, L);

  FieldPtr kp;
  Int p = 0;
  std::vector<std::pair<Poly, int>> modular;
  for (Int cand = 3; cand < 10000; cand += 2) {
    if (!is_prime(cand)) continue;
    FieldPtr kc = Field::prime(cand);
    Poly gm = zpoly_mod_p(G, kc);
    if (gcd_poly(gm, gm.derivative()).deg() != 0) continue;
    kp = kc;
    p = cand;
    modular = factor_over_finite(gm).factors;
    break;
  }
  if (p == 0) fail("SearchExhausted", "no prime kept the polynomial squarefree");
  if (modular.size() == 1) {
    out.push_back(S);
    return out;
  }

  Int norm2 = 0;
  for (const Int& c : G) norm2 += c * c;
  Int root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  Int bound = (Int(1) << static_cast<unsigned long>(zdeg(G))) * (root + 1);
  Int goal = 2 * bound + 1;
  int steps = 0;
  Int modulus = p;
  while (modulus < goal) {
    modulus = modulus * modulus;
    ++steps;
  }

  std::vector<ZPoly> facs;
  facs.reserve(modular.size());
  for (const auto& [q, e] : modular) facs.push_back(fp_to_zpoly(q, p));
  std::vector<ZPoly> lifted;
  lift_tree(G, facs, 0, facs.size(), p, steps, lifted);

  std::vector<std::size_t> active(lifted.size());
  std::iota(active.begin(), active.end(), std::size_t{0});
  ZPoly rest = G;
  std::vector<ZPoly> zfactors;
  std::size_t size = 1;
  while (2 * size <= active.size()) {
    std::vector<std::size_t> sel(size);
    std::iota(sel.begin(), sel.end(), std::size_t{0});
    bool split = false;
    while (true) {
      ZPoly candpoly{Int(1)};
      for (std::size_t j : sel) candpoly = zmod(zmul(candpoly, lifted[active[j]]), modulus);
      ZPoly quotient;
      if (zdivides(rest, candpoly, quotient)) {
        zfactors.push_back(candpoly);
        rest = std::move(quotient);
        std::vector<std::size_t> keep;
        for (std::size_t j = 0, si = 0; j < active.size(); ++j) {
          if (si < sel.size() && sel[si] == j) {
            ++si;
            continue;
          }
          keep.push_back(active[j]);
        }
        active = std::move(keep);
        split = true;
        break;
      }
      // next combination of indices into active
      std::size_t i = size;
      while (i > 0 && sel[i - 1] == active.size() - size + (i - 1)) --i;
      if (i == 0) break;
      ++sel[i - 1];
      for (std::size_t j = i; j < size; ++j) sel[j] = sel[j - 1] + 1;
    }
    if (!split) ++size;
  }
  if (zdeg(rest) > 0) zfactors.push_back(rest);

  out.reserve(zfactors.size());
  for (const ZPoly& zf : zfactors) out.push_back(integer_factor_to_rational(zf, L));
  return out;
}

std::vector<std::pair<Poly, int>> yun_char0(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  Poly d = f.derivative();
  Poly g = gcd_poly(f, d);
  if (g.deg() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  Poly c = f / g;
  Poly w = d / g - c.derivative();
  int i = 1;
  while (c.deg() > 0) {
    Poly a = gcd_poly(c, w);
    if (a.deg() > 0) out.emplace_back(a, i);
    c = c / a;
    w = w / a - c.derivative();
    ++i;
  }
  return out;
}

PolyFactorization factor_over_rationals(const Poly& f) {
  PolyFactorization out;
  out.unit = f.lc();
  if (f.deg() == 0) return out;
  if (f.deg() > 16)
    fail("UndecidableAtBound", "factorization over Q is provided in degree <= 16");
  for (const auto& [part, mult] : yun_char0(f.monic()))
    for (const Poly& irr : zassenhaus(part)) out.factors.emplace_back(irr, mult);
  sort_factors(out.factors);
  return out;
}

}  // namespace

std::vector<Elem> finite_field_elements(const FieldPtr& f) {
  if (!f->is_finite()) fail("DescriptorMismatch", "field is not finite");
  if (f->kind() == Field::Kind::prime) {
    std::vector<Elem> out;
    for (Int v = 0; v < f->p(); ++v) out.push_back(Elem::residue(f, v));
    return out;
  }
  std::vector<Elem> base = finite_field_elements(f->base());
  int d = f->ext_deg();
  std::vector<Elem> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  while (true) {
    std::vector<Elem> coords;
    coords.reserve(idx.size());
    for (std::size_t i : idx) coords.push_back(base[i]);
    out.push_back(Elem::from_coords(f, std::move(coords)));
    std::size_t pos = 0;
    while (pos < idx.size()) {
      if (++idx[pos] < base.size()) break;
      idx[pos] = 0;
      ++pos;
    }
    if (pos == idx.size()) break;
  }
  return out;
}

PolyFactorization factor_poly(const Poly& f) {
  if (f.is_zero()) fail("ZeroInput", "cannot factor the zero polynomial");
  const FieldPtr& k = f.base();
  if (k->is_finite()) return factor_over_finite(f);
  if (k->kind() == Field::Kind::rationals) return factor_over_rationals(f);
  fail("UnsupportedField",
       "factorization over " + k->describe() + " is out of scope");
}

bool poly_is_irreducible(const Poly& f) {
  if (f.is_zero()) fail("ZeroInput", "irreducibility of the zero polynomial");
  if (f.deg() == 0) return false;
  if (f.deg() == 1) return true;
  const FieldPtr& k = f.base();
  if (k->is_finite() || k->kind() == Field::Kind::rationals) {
    PolyFactorization fac = factor_poly(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
  }
  if (k->kind() == Field::Kind::extension) {
    if (f.deg() == 2) {
      Elem disc = f.coeff(1) * f.coeff(1) -
                  Elem::integer(k, 4) * f.coeff(2) * f.coeff(0);
      if (disc.is_zero()) return false;
      Ternary sq = is_square(disc);
      if (sq == Ternary::unknown)
        fail("UndecidableAtBound",
             "irreducibility over " + k->describe() + " was not decided");
      return sq == Ternary::no;
    }
    fail("UndecidableAtBound", "irreducibility over " + k->describe() +
                                   " is only decided in degree <= 2");
  }
  fail("UnsupportedField",
       "irreducibility over " + k->describe() + " is out of scope");
}

std::vector<Elem> poly_roots(const Poly& f) {
  if (f.is_zero()) fail("ZeroInput", "roots of the zero polynomial");
  const FieldPtr& k = f.base();
  std::vector<Elem> out;
  if (f.deg() == 0) return out;
  auto by_cmp = [](const Elem& a, const Elem& b) { return cmp(a, b) < 0; };
  if (k->is_finite() || k->kind() == Field::Kind::rationals) {
    for (const auto& [irr, mult] : factor_poly(f).factors)
      if (irr.deg() == 1) out.push_back(-irr.coeff(0));
    std::sort(out.begin(), out.end(), by_cmp);
    return out;
  }
  if (k->kind() == Field::Kind::extension) {
    if (f.deg() == 1) {
      out.push_back(-(f.coeff(0) / f.coeff(1)));
      return out;
    }
    if (f.deg() == 2) {
      Elem a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
      Elem disc = b * b - Elem::integer(k, 4) * a * c;
      Elem two_a = Elem::integer(k, 2) * a;
      if (disc.is_zero()) {
        out.push_back(-b / two_a);
        return out;
      }
      Ternary sq = is_square(disc);
      if (sq == Ternary::unknown)
        fail("UndecidableAtBound",
             "root finding over " + k->describe() + " was not decided");
      if (sq == Ternary::yes) {
        Elem r = sqrt_exact(disc);
        out.push_back((-b + r) / two_a);
        out.push_back((-b - r) / two_a);
        std::sort(out.begin(), out.end(), by_cmp);
      }
      return out;
    }
    fail("UndecidableAtBound",
         "root finding over " + k->describe() + " is only available in degree <= 2");
  }
  fail("UnsupportedField", "root finding over " + k->describe() + " is out of scope");
}

}  // namespace qz
