#include "qz/sturm.hpp"

#include <vector>

#include "qz/errors.hpp"

namespace qz {

namespace {

std::vector<Poly> sturm_chain(const Poly& f) {
  Poly g = f / gcd_poly(f, f.derivative());  // squarefree part
  std::vector<Poly> chain{g, g.derivative()};
  while (!chain.back().is_zero() && chain.back().deg() > 0) {
    Poly r = chain[chain.size() - 2] % chain.back();
    chain.push_back(-r);
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

int rat_sign(const Rat& v) { return mpq_sgn(v.get_mpq_t()); }

int sign_at(const Poly& p, const Rat& x) {
  return rat_sign(p.eval(Elem::rational(x)).rat_value());
}

int sign_at_plus_inf(const Poly& p) { return rat_sign(p.lc().rat_value()); }

int sign_at_minus_inf(const Poly& p) {
  int s = rat_sign(p.lc().rat_value());
  return p.deg() % 2 == 0 ? s : -s;
}

int variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

int count_real_roots(const Poly& f) {
  if (f.is_zero()) fail("ZeroInput", "root counting needs a nonzero polynomial");
  if (f.base()->kind() != Field::Kind::rationals)
    fail("UnsupportedField", "Sturm chains run over Q");
  if (f.deg() == 0) return 0;
  std::vector<Poly> chain = sturm_chain(f);
  std::vector<int> lo, hi;
  for (const Poly& p : chain) {
    lo.push_back(sign_at_minus_inf(p));
    hi.push_back(sign_at_plus_inf(p));
  }
  return variations(lo) - variations(hi);
}

int count_real_roots_in(const Poly& f, const Rat& a, const Rat& b) {
  if (f.is_zero()) fail("ZeroInput", "root counting needs a nonzero polynomial");
  if (f.base()->kind() != Field::Kind::rationals)
    fail("UnsupportedField", "Sturm chains run over Q");
  if (f.deg() == 0 || !(a < b)) return 0;
  std::vector<Poly> chain = sturm_chain(f);
  std::vector<int> lo, hi;
  for (const Poly& p : chain) {
    lo.push_back(sign_at(p, a));
    hi.push_back(sign_at(p, b));
  }
  return variations(lo) - variations(hi);
}

}  // namespace qz
