#include "qz/intnum.hpp"

#include "qz/errors.hpp"

namespace qz {

bool is_prime(const Int& n) {
  if (n < 2) return false;
  // BPSW + Miller-Rabin; no composite below any desk-scale magnitude passes
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

namespace {

Int pollard_rho(const Int& n) {
  // Brent's cycle finding; n odd composite, not a prime power of small prime
  for (Int c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    Int diff, prod = 1;
    int steps = 0;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      diff = x > y ? x - y : y - x;
      if (diff == 0) break;  // cycle without factor, retry with next c
      prod = prod * diff % n;
      if (++steps % 64 == 0) {
        mpz_gcd(d.get_mpz_t(), prod.get_mpz_t(), n.get_mpz_t());
        if (d > 1) break;
      }
    }
    if (d == 1 && diff != 0) mpz_gcd(d.get_mpz_t(), prod.get_mpz_t(), n.get_mpz_t());
    if (d > 1 && d < n) return d;
    if (d == n) {
      // unlucky accumulation, fall back to stepwise gcd with the same c
      x = 2;
      y = 2;
      while (true) {
        x = (x * x + c) % n;
        y = (y * y + c) % n;
        y = (y * y + c) % n;
        diff = x > y ? x - y : y - x;
        if (diff == 0) break;
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        if (d > 1 && d < n) return d;
        if (d == n) break;
      }
    }
  }
}

void factor_rec(Int n, std::map<Int, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  // perfect powers first so rho always sees a genuine composite
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    factor_rec(r, out);
    factor_rec(r, out);
    return;
  }
  Int d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::map<Int, int> factor_int(const Int& n) {
  if (n == 0) fail("ZeroInput", "cannot factor zero");
  Int m = abs(n);
  std::map<Int, int> out;
  for (long p : {2L, 3L, 5L, 7L}) {
    while (m % p == 0) {
      out[p] += 1;
      m /= p;
    }
  }
  for (Int p = 11; p * p <= m && p < 10000; p += 2) {
    while (m % p == 0) {
      out[p] += 1;
      m /= p;
    }
  }
  if (m > 1) factor_rec(m, out);
  return out;
}

Int squarefree_part(const Int& n) {
  if (n == 0) fail("ZeroInput", "squarefree part of zero");
  Int r = n < 0 ? -1 : 1;
  for (const auto& [p, e] : factor_int(n))
    if (e & 1) r *= p;
  return r;
}

Int squarefree_part(const Rat& q) {
  if (q == 0) fail("ZeroInput", "squarefree part of zero");
  return squarefree_part(Int(q.get_num() * q.get_den()));
}

bool is_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_square(const Rat& q) {
  return is_square(Int(q.get_num())) && is_square(Int(q.get_den()));
}

int legendre(const Int& a, const Int& p) {
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

std::vector<Int> odd_prime_support(const Rat& q) {
  std::vector<Int> out;
  for (const auto& [p, e] : factor_int(squarefree_part(q)))
    if (p != 2) out.push_back(p);
  return out;
}

}  // namespace qz
