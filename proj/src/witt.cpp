#include "qz/witt.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "qz/errors.hpp"
#include "qz/intnum.hpp"
#include "qz/isotropy.hpp"
#include "qz/places.hpp"
#include "qz/sqclass.hpp"
#include "qz/sturm.hpp"

namespace qz {

namespace {

/* whether <a, b> is a cancellable hyperbolic pair; over number fields of
 * degree 3 and up only the inexpensive certificates run, since the bounded
 * element search behind the full square-class test is far too slow to sit
 * inside an O(n^2) reduction loop */
Ternary pair_cancels(const Elem& a, const Elem& b) {
  const FieldPtr& k = a.field();
  if (k->kind() != Field::Kind::extension || k->is_finite() || k->ext_deg() == 2)
    return same_square_class(a, -b);
  if ((a + b).is_zero()) return Ternary::yes;
  Elem r = -(a / b);
  if (r.coords().size() <= 1) {
    Elem c = r.coords().empty() ? Elem::zero(k->base()) : r.coords()[0];
    if (!c.is_zero() && is_square(c) == Ternary::yes) return Ternary::yes;
  }
  return Ternary::unknown;
}

DiagonalForm cheap_reduce(const DiagonalForm& q) {
  std::vector<Elem> entries = q.normalized().entries();
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t i = 0; i < entries.size() && !again; ++i)
      for (std::size_t j = i + 1; j < entries.size() && !again; ++j)
        if (pair_cancels(entries[i], entries[j]) == Ternary::yes) {
          entries.erase(entries.begin() + static_cast<long>(j));
          entries.erase(entries.begin() + static_cast<long>(i));
          again = true;
        }
  }
  return DiagonalForm(q.field(), std::move(entries));
}

/* Hasse symbol of the hyperbolic form of rank 2m at v */
int hyperbolic_hasse(int m, const QPlace& v) {
  return (m * (m - 1) / 2) % 2 == 0 ? 1 : hilbert_symbol(Rat(-1), Rat(-1), v);
}

/* ---- exact reduction to the anisotropic kernel ----
 *
 * Pairwise cancellation alone lets representatives grow without bound under
 * sums and tensor products.  Over finite fields and over Q the classifying
 * invariants are complete, so the kernel can be rebuilt from them instead of
 * searched for vector by vector. */

DiagonalForm finite_kernel(const DiagonalForm& q) {
  const FieldPtr& k = q.field();
  Elem sd = q.signed_det();
  if (q.rank() % 2 == 0)
    return is_square(sd) == Ternary::yes ? DiagonalForm::zero(k)
                                         : DiagonalForm(k, {Elem::one(k), -sd});
  return DiagonalForm(k, {sd}).normalized();
}

int sign_of(const Rat& x) { return x > 0 ? 1 : -1; }

/* product of square classes, kept as a signed squarefree integer */
Rat class_mul(const Rat& a, const Rat& b) { return Rat(squarefree_part(Rat(a * b))); }

/* Hasse symbols of a diagonal form at each listed place, via suffix classes
 * so the cost stays linear in the rank */
std::vector<int> hasse_profile(const std::vector<Rat>& entries, const std::vector<QPlace>& places) {
  std::size_t n = entries.size();
  std::vector<Rat> suffix(n + 1, Rat(1));
  for (std::size_t i = n; i-- > 0;) suffix[i] = class_mul(entries[i], suffix[i + 1]);
  std::vector<int> out;
  for (const QPlace& v : places) {
    int s = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) s *= hilbert_symbol(entries[i], suffix[i + 1], v);
    out.push_back(s);
  }
  return out;
}

/* signed squarefree products of subsets of the primes in play, ordered by
 * subset size so small square classes are tried first */
std::vector<Rat> candidate_pool(const std::vector<Int>& primes) {
  std::size_t m = primes.size();
  std::vector<std::vector<std::uint32_t>> by_count(m + 1);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask)
    by_count[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
  std::vector<Rat> out;
  for (const auto& level : by_count)
    for (std::uint32_t mask : level) {
      Int prod(1);
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (std::uint32_t{1} << i)) prod *= primes[i];
      out.push_back(Rat(prod));
      out.push_back(Rat(-prod));
    }
  return out;
}

struct KernelCtx {
  std::vector<QPlace> places;  // finite places where any symbol can be nontrivial
  std::vector<Rat> pool;
};

/* whether the entries realize exactly the prescribed rank-r invariants */
bool kernel_matches(const std::vector<Rat>& cand, const KernelCtx& ctx, const std::vector<int>& eps,
                    const Rat& d, int sigma) {
  int sig = 0;
  Rat det(1);
  for (const Rat& a : cand) {
    sig += sign_of(a);
    det = class_mul(det, a);
  }
  if (sig != sigma) return false;
  if (squarefree_part(det) != squarefree_part(d)) return false;
  return hasse_profile(cand, ctx.places) == eps;
}

/* a diagonal form of rank r with the given determinant class, Hasse symbols
 * at ctx.places, and signature; empty when none is found within budget (the
 * signature also settles the symbol at infinity, so finite places suffice) */
std::optional<std::vector<Rat>> search_kernel(int r, const Rat& d, const std::vector<int>& eps,
                                              int sigma, const KernelCtx& ctx, long& budget) {
  if (budget <= 0) return std::nullopt;
  if (std::abs(sigma) > r || (r - sigma) % 2 != 0) return std::nullopt;
  if (r == 0) {
    if (squarefree_part(d) != 1) return std::nullopt;
    for (int e : eps)
      if (e != 1) return std::nullopt;
    return std::vector<Rat>{};
  }
  if (r == 1) {
    if (sign_of(d) != sigma) return std::nullopt;
    for (int e : eps)
      if (e != 1) return std::nullopt;
    return std::vector<Rat>{Rat(squarefree_part(d))};
  }
  if (std::abs(sigma) == r) {
    // definite; every definite form of rank >= 3 splits off s<1> repeatedly
    // down to a ternary tail, so s<1,...,1> + s<a, b, ab|d|> is a complete
    // template with two free positive classes
    int s = sigma > 0 ? 1 : -1;
    if (sign_of(d) != (r % 2 == 0 ? 1 : s)) return std::nullopt;
    Rat dpos(squarefree_part(d) > 0 ? squarefree_part(d) : -squarefree_part(d));
    int m = r >= 3 ? r - 3 : 0;
    for (const Rat& a : ctx.pool) {
      if (a < 0) continue;
      for (const Rat& b : ctx.pool) {
        if (--budget <= 0) return std::nullopt;
        if (b < 0) continue;
        std::vector<Rat> tail;
        if (r == 2) {
          if (!(b == Rat(1))) continue;  // one free class suffices in rank 2
          tail = {Rat(s) * a, Rat(s) * class_mul(a, dpos)};
        } else {
          tail = {Rat(s) * a, Rat(s) * b, Rat(s) * class_mul(class_mul(a, b), dpos)};
        }
        // symbols of s<1>^m + tail from the tail alone (direct-sum rule)
        std::vector<int> prof = hasse_profile(tail, ctx.places);
        if (m > 0 && s == -1) {
          Rat dtail(1);
          for (const Rat& t : tail) dtail = class_mul(dtail, t);
          for (std::size_t i = 0; i < ctx.places.size(); ++i) {
            if ((m * (m - 1) / 2) % 2 == 1)
              prof[i] *= hilbert_symbol(Rat(-1), Rat(-1), ctx.places[i]);
            if (m % 2 == 1) prof[i] *= hilbert_symbol(Rat(-1), dtail, ctx.places[i]);
          }
        }
        if (prof != eps) continue;
        std::vector<Rat> cand(static_cast<std::size_t>(m), Rat(s));
        cand.insert(cand.end(), tail.begin(), tail.end());
        if (kernel_matches(cand, ctx, eps, d, sigma)) return cand;
      }
    }
    return std::nullopt;
  }
  if (r == 2) {
    // indefinite binary <c, cd>; (c, -d)_v must hit every prescribed symbol
    if (sign_of(d) != -1) return std::nullopt;
    for (std::size_t i = 0; i < ctx.places.size(); ++i)
      if (eps[i] == -1 && is_local_square(-d, ctx.places[i])) return std::nullopt;
    for (const Rat& c : ctx.pool) {
      if (--budget <= 0) return std::nullopt;
      std::vector<Rat> cand{c, class_mul(c, d)};
      if (kernel_matches(cand, ctx, eps, d, sigma)) return cand;
    }
    return std::nullopt;
  }
  // mixed signature in rank 3 or 4: peel off one entry and recurse
  for (const Rat& a : ctx.pool) {
    if (--budget <= 0) return std::nullopt;
    if (std::abs(sigma - sign_of(a)) > r - 1) continue;
    std::vector<int> sub_eps(eps);
    for (std::size_t i = 0; i < ctx.places.size(); ++i)
      sub_eps[i] *= hilbert_symbol(a, -d, ctx.places[i]);
    auto sub = search_kernel(r - 1, class_mul(a, d), sub_eps, sigma - sign_of(a), ctx, budget);
    if (!sub) continue;
    sub->insert(sub->begin(), a);
    if (kernel_matches(*sub, ctx, eps, d, sigma)) return sub;
  }
  return std::nullopt;
}

/* anisotropic kernel over Q, rebuilt from signature, determinant, and Hasse
 * symbols; candidate ranks rise from the signature bound, so the first
 * verified hit is the kernel; empty when the search misses, in which case the
 * caller keeps the pairwise-reduced representative */
std::optional<DiagonalForm> rationals_kernel(const DiagonalForm& q) {
  const FieldPtr& k = q.field();
  int n = q.rank();
  int sigma = 0;
  std::vector<Rat> entries;
  std::vector<Int> primes{Int(2)};
  for (const Rat& a : rational_entries(q)) {
    Rat c(squarefree_part(a));
    sigma += sign_of(c);
    entries.push_back(c);
    for (const Int& p : odd_prime_support(c)) primes.push_back(p);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  // spare primes widen the square classes the search can reach
  std::size_t want = std::min<std::size_t>(primes.size() + 3, 14);
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    if (primes.size() >= want) break;
    Int ip(p);
    if (!std::binary_search(primes.begin(), primes.end(), ip)) {
      primes.push_back(ip);
      std::sort(primes.begin(), primes.end());
    }
  }
  if (primes.size() > 14) return std::nullopt;

  KernelCtx ctx;
  for (const Int& p : primes) ctx.places.push_back(QPlace::prime(p));
  ctx.pool = candidate_pool(primes);
  std::vector<int> eps0 = hasse_profile(entries, ctx.places);
  Rat d0(1);
  for (const Rat& a : entries) d0 = class_mul(d0, a);

  std::vector<int> ladder;
  int as = std::abs(sigma);
  if (as > 4)
    ladder.push_back(as);
  else
    for (int r = as; r <= 4; r += 2) ladder.push_back(r);

  long budget = 50000;
  for (int r : ladder) {
    int j = (n - r) / 2;
    Rat dk = j % 2 == 0 ? d0 : class_mul(d0, Rat(-1));
    std::vector<int> eps(eps0);
    for (std::size_t i = 0; i < ctx.places.size(); ++i) {
      eps[i] *= hyperbolic_hasse(j, ctx.places[i]);
      if (j % 2 == 1) eps[i] *= hilbert_symbol(dk, Rat(-1), ctx.places[i]);
    }
    auto found = search_kernel(r, dk, eps, sigma, ctx, budget);
    if (!found) continue;
    std::vector<Elem> es;
    for (const Rat& c : *found) es.push_back(Elem::rational(c));
    DiagonalForm cand(k, std::move(es));
    if (r >= 2 && as != r && is_isotropic(cand)) continue;
    return cand;
  }
  return std::nullopt;
}

Ternary form_is_witt_zero(const DiagonalForm& q);

DiagonalForm reduce_rep(const DiagonalForm& q) {
  const FieldPtr& k = q.field();
  if (k->is_finite() && q.rank() >= 3) return finite_kernel(q);
  if (k->kind() == Field::Kind::rationals && q.rank() >= 5)
    if (auto kernel = rationals_kernel(q)) return *kernel;
  return cheap_reduce(q);
}

}  // namespace

DiagonalForm second_residue_form(const DiagonalForm& q, const Place& v, DiagonalForm* first) {
  FieldPtr res = v.residue_field();
  std::vector<Elem> second, firstv;
  for (const Elem& a : q.entries()) {
    long val = valuation(a, v);
    Elem u = reduce_unit(unit_part(a, v), v);
    if (val % 2 != 0)
      second.push_back(u);
    else
      firstv.push_back(u);
  }
  if (first) *first = DiagonalForm(res, std::move(firstv));
  return DiagonalForm(res, std::move(second));
}

namespace {

Ternary ratfunc_witt_zero(const DiagonalForm& q) {
  const FieldPtr& kt = q.field();
  // Milnor: a class over k(t) vanishes iff every second residue vanishes and
  // the first residue at one chosen place (t) vanishes over k
  std::vector<Place> support;
  for (const Elem& a : q.entries())
    for (const Place& v : support_places(a)) support.push_back(v);
  Place at_t = Place::finite(kt, Poly::variable(kt->base()));
  support.push_back(at_t);
  std::sort(support.begin(), support.end(),
            [](const Place& a, const Place& b) { return cmp(a, b) < 0; });
  support.erase(std::unique(support.begin(), support.end()), support.end());

  bool unknown = false;
  for (const Place& v : support) {
    if (v.at_infinity()) continue;
    DiagonalForm first = DiagonalForm::zero(v.residue_field());
    DiagonalForm second = v == at_t ? second_residue_form(q, v, &first)
                                    : second_residue_form(q, v);
    Ternary t2 = form_is_witt_zero(second);
    if (t2 == Ternary::no) return Ternary::no;
    if (t2 == Ternary::unknown) unknown = true;
    if (v == at_t) {
      Ternary t1 = form_is_witt_zero(first);
      if (t1 == Ternary::no) return Ternary::no;
      if (t1 == Ternary::unknown) unknown = true;
    }
  }
  return unknown ? Ternary::unknown : Ternary::yes;
}

Ternary number_field_witt_zero(const DiagonalForm& q) {
  if (q.rank() % 2 != 0) return Ternary::no;
  if (q.rank() == 0) return Ternary::yes;
  Ternary sd = is_square(q.signed_det());
  if (sd == Ternary::no) return Ternary::no;
  if (q.rank() == 2) return sd;  // <a,b> hyperbolic iff -ab square
  return Ternary::unknown;
}

Ternary form_is_witt_zero(const DiagonalForm& q) {
  DiagonalForm d = cheap_reduce(q);
  if (d.rank() == 0) return Ternary::yes;
  if (d.rank() % 2 != 0) return Ternary::no;
  const FieldPtr& k = d.field();
  if (k->is_finite())
    return is_square(d.signed_det()) == Ternary::yes ? Ternary::yes : Ternary::no;
  if (k->kind() == Field::Kind::rationals) {
    std::vector<Rat> entries = rational_entries(d);
    int sig = 0;
    for (const Rat& a : entries) sig += a > 0 ? 1 : -1;
    if (sig != 0) return Ternary::no;
    if (!is_square(Rat(d.signed_det().rat_value()))) return Ternary::no;
    int m = d.rank() / 2;
    for (const QPlace& v : relevant_places(entries))
      if (hasse_symbol(entries, v) != hyperbolic_hasse(m, v)) return Ternary::no;
    return Ternary::yes;
  }
  if (k->kind() == Field::Kind::rational_functions) return ratfunc_witt_zero(d);
  return number_field_witt_zero(d);
}

}  // namespace

WittClass::WittClass(const DiagonalForm& rep) : rep_(reduce_rep(rep)) {}

DiagonalForm WittClass::anisotropic_kernel() const { return witt_decompose(rep_).kernel; }

Ternary witt_is_zero(const WittClass& w) { return form_is_witt_zero(w.representative()); }

Ternary witt_equal(const WittClass& a, const WittClass& b) {
  require_same_field(a.field(), b.field(), "witt comparison");
  return form_is_witt_zero(direct_sum(a.representative(), b.representative().negated()));
}

Ternary in_fundamental_power(const WittClass& w, int n) {
  if (n < 0) fail("MalformedInput", "negative fundamental-ideal degree");
  if (n > 3) fail("UnsupportedDegree", "fundamental-ideal membership is provided for n <= 3");
  if (n == 0) return Ternary::yes;
  const DiagonalForm& d = w.representative();
  if (d.rank() % 2 != 0) return Ternary::no;
  if (n == 1) return Ternary::yes;
  const FieldPtr& k = w.field();

  if (k->is_finite()) return witt_is_zero(w);  // I^2(F_q) = 0

  if (k->kind() == Field::Kind::rationals) {
    std::vector<Rat> entries = rational_entries(d);
    if (!is_square(Rat(d.signed_det().rat_value()))) return Ternary::no;
    if (n == 2) return Ternary::yes;
    // Clifford invariant from the Hasse symbol; with trivial signed
    // discriminant the correction is (-1,-1) exactly when rank = 4, 6 mod 8
    int r = d.rank() % 8;
    for (const QPlace& v : relevant_places(entries)) {
      int c = hasse_symbol(entries, v);
      if (r == 4 || r == 6) c *= hilbert_symbol(Rat(-1), Rat(-1), v);
      if (c != 1) return Ternary::no;
    }
    return Ternary::yes;
  }

  if (k->kind() == Field::Kind::rational_functions) {
    std::vector<Place> support;
    for (const Elem& a : d.entries())
      for (const Place& v : support_places(a)) support.push_back(v);
    Place at_t = Place::finite(k, Poly::variable(k->base()));
    support.push_back(at_t);
    std::sort(support.begin(), support.end(),
              [](const Place& x, const Place& y) { return cmp(x, y) < 0; });
    support.erase(std::unique(support.begin(), support.end()), support.end());
    bool unknown = false;
    for (const Place& v : support) {
      if (v.at_infinity()) continue;
      DiagonalForm first = DiagonalForm::zero(v.residue_field());
      DiagonalForm second = v == at_t ? second_residue_form(d, v, &first)
                                      : second_residue_form(d, v);
      Ternary ts = in_fundamental_power(WittClass(second), n - 1);
      if (ts == Ternary::no) return Ternary::no;
      if (ts == Ternary::unknown) unknown = true;
      if (v == at_t) {
        Ternary tf = in_fundamental_power(WittClass(first), n);
        if (tf == Ternary::no) return Ternary::no;
        if (tf == Ternary::unknown) unknown = true;
      }
    }
    return unknown ? Ternary::unknown : Ternary::yes;
  }

  // number fields: rank parity was checked; the signed discriminant decides
  // I^2 when the square test does
  Ternary sd = is_square(d.signed_det());
  if (sd == Ternary::no) return Ternary::no;
  if (n == 2) return sd;
  if (witt_is_zero(w) == Ternary::yes) return Ternary::yes;
  return Ternary::unknown;
}

bool is_formally_real(const FieldPtr& k) {
  switch (k->kind()) {
    case Field::Kind::rationals:
      return true;
    case Field::Kind::prime:
      return false;
    case Field::Kind::rational_functions:
      return is_formally_real(k->base());
    case Field::Kind::extension: {
      if (k->is_finite()) return false;
      if (k->tower_depth() > 1)
        fail("UnsupportedField",
             "formal reality needs a real-root certificate; towers over " +
                 k->base()->describe() + " have none");
      return count_real_roots(k->minpoly()) >= 1;
    }
  }
  fail("UnsupportedField", "unclassified field kind");
}

WittClass witt_unit_inverse(const WittClass& w) {
  const FieldPtr& k = w.field();
  if (is_formally_real(k))
    fail("UnsupportedField", "W(k) is local only for non-formally-real k");
  if (w.rank_parity() == 0) fail("NotAUnit", "even-rank witt class is not a unit");

  for (int tier = 0; tier <= 2; ++tier) {
    std::vector<Elem> cands = square_class_candidates(k, tier);
    // rank-1 candidates first, then rank-3 multisets
    for (const Elem& c : cands) {
      WittClass cand(DiagonalForm(k, {c}));
      if (witt_equal(w * cand, WittClass::one(k)) == Ternary::yes) return cand;
    }
    for (std::size_t i = 0; i < cands.size(); ++i)
      for (std::size_t j = i; j < cands.size(); ++j)
        for (std::size_t l = j; l < cands.size(); ++l) {
          WittClass cand(DiagonalForm(k, {cands[i], cands[j], cands[l]}));
          if (witt_equal(w * cand, WittClass::one(k)) == Ternary::yes) return cand;
        }
  }
  fail("SearchExhausted", "no witt inverse among small diagonal classes");
}

}  // namespace qz
