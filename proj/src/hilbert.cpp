#include "qz/hilbert.hpp"

#include <algorithm>

#include "qz/errors.hpp"

namespace qz {

QPlace QPlace::prime(const Int& p) {
  if (p < 2 || !is_prime(p)) fail("MalformedInput", "not a prime: " + p.get_str());
  return QPlace(p, false);
}

const Int& QPlace::p() const {
  if (infinite_) fail("MalformedInput", "the real place has no prime");
  return p_;
}

int cmp(const QPlace& a, const QPlace& b) {
  if (a.infinite_ != b.infinite_) return a.infinite_ ? 1 : -1;
  return ::cmp(a.p_, b.p_);
}

namespace {

long vp(const Rat& a, const Int& p) {
  long v = 0;
  Int n = a.get_num();
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  Int d = a.get_den();
  while (d % p == 0) {
    d /= p;
    --v;
  }
  return v;
}

/* the unit a / p^{v_p(a)} as a residue mod p^k */
Int unit_mod(const Rat& a, const Int& p, const Int& pk) {
  Int n = a.get_num(), d = a.get_den();
  while (n % p == 0) n /= p;
  while (d % p == 0) d /= p;
  Int dinv;
  mpz_invert(dinv.get_mpz_t(), Int(d % pk).get_mpz_t(), pk.get_mpz_t());
  Int r = (n * dinv) % pk;
  if (r < 0) r += pk;
  return r;
}

int sign_exponent(long e) { return (e % 2 + 2) % 2; }

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const QPlace& v) {
  if (a == 0 || b == 0) fail("ZeroInput", "hilbert symbol needs nonzero arguments");
  if (v.is_infinity()) return (a < 0 && b < 0) ? -1 : 1;
  const Int& p = v.p();
  long alpha = vp(a, p), beta = vp(b, p);
  if (p == 2) {
    Int u = unit_mod(a, p, 8), w = unit_mod(b, p, 8);
    // epsilon(u) = (u-1)/2, omega(u) = (u^2-1)/8, both mod 2
    long eu = Int((u - 1) / 2).get_si() % 2, ew = Int((w - 1) / 2).get_si() % 2;
    long ou = Int((u * u - 1) / 8).get_si() % 2, ow = Int((w * w - 1) / 8).get_si() % 2;
    long e = eu * ew + alpha * ow + beta * ou;
    return sign_exponent(e) ? -1 : 1;
  }
  Int u = unit_mod(a, p, p), w = unit_mod(b, p, p);
  int s = 1;
  if (sign_exponent(alpha * beta) && sign_exponent(Int((p - 1) / 2).get_si())) s = -s;
  if (sign_exponent(beta) && legendre(u, p) == -1) s = -s;
  if (sign_exponent(alpha) && legendre(w, p) == -1) s = -s;
  return s;
}

bool is_local_square(const Rat& a, const QPlace& v) {
  if (a == 0) fail("ZeroInput", "local square test needs a nonzero argument");
  if (v.is_infinity()) return a > 0;
  const Int& p = v.p();
  long val = vp(a, p);
  if (val % 2 != 0) return false;
  if (p == 2) return unit_mod(a, p, 8) == 1;
  return legendre(unit_mod(a, p, p), p) == 1;
}

std::vector<QPlace> relevant_places(const std::vector<Rat>& entries) {
  std::vector<Int> primes;
  for (const Rat& a : entries)
    for (const Int& p : odd_prime_support(a)) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<QPlace> out{QPlace::prime(2)};
  for (const Int& p : primes) out.push_back(QPlace::prime(p));
  out.push_back(QPlace::infinity());
  return out;
}

int hasse_symbol(const std::vector<Rat>& entries, const QPlace& v) {
  int s = 1;
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      s *= hilbert_symbol(entries[i], entries[j], v);
  return s;
}

}  // namespace qz
