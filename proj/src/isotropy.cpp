#include "qz/isotropy.hpp"

#include <algorithm>

#include "qz/errors.hpp"
#include "qz/polyfactor.hpp"
#include "qz/sqclass.hpp"

namespace qz {

namespace {

/* <a_i, a_j> with -a_i a_j a square is an explicit hyperbolic pair */
std::optional<std::pair<int, int>> square_pair(const DiagonalForm& q) {
  for (int i = 0; i < q.rank(); ++i)
    for (int j = i + 1; j < q.rank(); ++j)
      if (is_square(-(q.entry(i) * q.entry(j))) == Ternary::yes) return std::make_pair(i, j);
  return std::nullopt;
}

/* local isotropy over Q_v from rank, determinant, and Hasse symbol; the
 * rank >= 5 case never reaches here */
bool local_isotropic(int n, const Rat& d, int eps, const QPlace& v) {
  if (n <= 1) return false;
  if (n == 2) return is_local_square(-d, v);
  if (n == 3) return hilbert_symbol(Rat(-1), -d, v) == eps;
  return !is_local_square(d, v) || eps == hilbert_symbol(Rat(-1), Rat(-1), v);
}

bool rationals_isotropic(const DiagonalForm& q) {
  std::vector<Rat> entries = rational_entries(q);
  int n = q.rank();
  if (n == 2) return is_square(Rat(-entries[0] * entries[1]));
  if (n >= 5) {
    int sig = 0;
    for (const Rat& a : entries) sig += a > 0 ? 1 : -1;
    return sig != n && sig != -n;
  }
  Rat d(1);
  for (const Rat& a : entries) d *= a;
  for (const QPlace& v : relevant_places(entries))
    if (!local_isotropic(n, d, hasse_symbol(entries, v), v)) return false;
  return true;
}

}  // namespace

bool is_locally_isotropic(const DiagonalForm& q, const QPlace& v) {
  std::vector<Rat> entries = rational_entries(q);
  int n = q.rank();
  if (n <= 1) return false;
  if (v.is_infinity() || n >= 5) {
    int sig = 0;
    for (const Rat& a : entries) sig += a > 0 ? 1 : -1;
    if (v.is_infinity()) return sig != n && sig != -n;
    return true;
  }
  Rat d(1);
  for (const Rat& a : entries) d *= a;
  return local_isotropic(n, d, hasse_symbol(entries, v), v);
}

namespace {

bool finite_isotropic(const DiagonalForm& q) {
  if (q.rank() >= 3) return true;  // Chevalley-Warning
  return is_square(-(q.entry(0) * q.entry(1))) == Ternary::yes;
}

/* Pool of search coordinates.  Heights are clamped per field family so the
 * odometer below stays at desk scale; the bound in error messages reflects
 * the caller's request, the search is simply conservative. */
std::vector<Elem> coordinate_pool(const FieldPtr& k, long height) {
  std::vector<Elem> pool{Elem::zero(k)};
  if (k->kind() == Field::Kind::rational_functions) {
    std::vector<Elem> base = coordinate_pool(k->base(), std::min(height, 2L));
    for (const Elem& c0 : base)
      for (const Elem& c1 : base) {
        if (c0.is_zero() && c1.is_zero()) continue;
        Poly num(k->base(), {c0, c1});
        pool.push_back(Elem::from_fraction(k, num, Poly::constant(Elem::one(k->base()))));
      }
    return pool;
  }
  long h = height;
  if (k->kind() == Field::Kind::extension && !k->is_finite())
    h = std::min(height, k->ext_deg() == 2 ? 3L : 2L);
  enumerate_elements_by_height(k, h, [&](const Elem& x) {
    if (!x.is_zero()) pool.push_back(x);
    return false;
  });
  return pool;
}

/* is_square is cheap and exact here, so the last coordinate can be solved
 * for instead of enumerated */
bool solvable_last_coordinate(const FieldPtr& k) {
  if (k->kind() == Field::Kind::rationals || k->is_finite()) return true;
  if (k->kind() == Field::Kind::extension) return k->ext_deg() == 2 && k->tower_depth() == 1;
  if (k->kind() == Field::Kind::rational_functions)
    return solvable_last_coordinate(k->base());
  return false;
}

std::optional<std::vector<Elem>> odometer_solve(const DiagonalForm& q,
                                                const std::vector<Elem>& pool) {
  const FieldPtr& k = q.field();
  int n = q.rank();
  for (int solved = n - 1; solved >= 0; --solved) {
    std::vector<int> others;
    for (int i = 0; i < n; ++i)
      if (i != solved) others.push_back(i);
    std::vector<std::size_t> idx(others.size(), 0);
    while (true) {
      Elem s = Elem::zero(k);
      bool any = false;
      for (std::size_t t = 0; t < others.size(); ++t) {
        const Elem& x = pool[idx[t]];
        if (!x.is_zero()) any = true;
        s = s + q.entry(others[t]) * x * x;
      }
      // need entry(solved) * y^2 = -s
      Elem target = -s / q.entry(solved);
      std::optional<Elem> y;
      if (target.is_zero()) {
        if (any) y = Elem::zero(k);
      } else if (is_square(target) == Ternary::yes) {
        y = sqrt_exact(target);
      }
      if (y) {
        std::vector<Elem> out(static_cast<std::size_t>(n), Elem::zero(k));
        for (std::size_t t = 0; t < others.size(); ++t)
          out[static_cast<std::size_t>(others[t])] = pool[idx[t]];
        out[static_cast<std::size_t>(solved)] = *y;
        return out;
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
  return std::nullopt;
}

std::optional<std::vector<Elem>> odometer_full(const DiagonalForm& q,
                                               const std::vector<Elem>& pool) {
  const FieldPtr& k = q.field();
  int n = q.rank();
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    bool any = false;
    for (std::size_t i : idx)
      if (!pool[i].is_zero()) any = true;
    if (any) {
      Elem s = Elem::zero(k);
      for (int i = 0; i < n; ++i) {
        const Elem& x = pool[idx[static_cast<std::size_t>(i)]];
        s = s + q.entry(i) * x * x;
      }
      if (s.is_zero()) {
        std::vector<Elem> out;
        for (std::size_t i : idx) out.push_back(pool[i]);
        return out;
      }
    }
    std::size_t pos = 0;
    while (pos < idx.size()) {
      if (++idx[pos] < pool.size()) break;
      idx[pos] = 0;
      ++pos;
    }
    if (pos == idx.size()) break;
  }
  return std::nullopt;
}

std::optional<std::vector<Elem>> bounded_witness(const DiagonalForm& q, long height) {
  std::vector<Elem> pool = coordinate_pool(q.field(), height);
  return solvable_last_coordinate(q.field()) ? odometer_solve(q, pool)
                                             : odometer_full(q, pool);
}

}  // namespace

bool is_isotropic(const DiagonalForm& q, long search_height) {
  if (q.rank() < 1) fail("ZeroInput", "isotropy of the zero form");
  if (q.rank() == 1) return false;
  const FieldPtr& k = q.field();
  if (k->is_finite()) return finite_isotropic(q);
  if (k->kind() == Field::Kind::rationals) return rationals_isotropic(q);
  if (square_pair(q)) return true;
  if (bounded_witness(q, search_height)) return true;
  fail("UndecidableAtBound",
       "no isotropy decision procedure over " + k->describe() + "; witness search at height " +
           std::to_string(search_height) + " found nothing");
}

bool represents(const DiagonalForm& q, const Elem& c, long search_height) {
  require_same_field(q.field(), c.field(), "representation test");
  if (c.is_zero()) fail("ZeroInput", "representation of zero is isotropy");
  if (q.rank() == 0) return false;
  return is_isotropic(direct_sum(q, DiagonalForm(q.field(), {-c})), search_height);
}

std::optional<std::vector<Elem>> isotropic_vector(const DiagonalForm& q, long cap) {
  const FieldPtr& k = q.field();
  int n = q.rank();
  if (n <= 1) return std::nullopt;

  if (auto pr = square_pair(q)) {
    auto [i, j] = *pr;
    std::vector<Elem> out(static_cast<std::size_t>(n), Elem::zero(k));
    out[static_cast<std::size_t>(i)] = sqrt_exact(-(q.entry(j) / q.entry(i)));
    out[static_cast<std::size_t>(j)] = Elem::one(k);
    return out;
  }

  if (k->is_finite()) {
    if (n == 2) return std::nullopt;  // pair check was exhaustive
    // rank >= 3: some zero of <a_0,a_1,a_2> has last coordinate nonzero,
    // else the pair check would have fired
    for (const Elem& x : finite_field_elements(k)) {
      Elem target = -(q.entry(2) + q.entry(0) * x * x) / q.entry(1);
      std::optional<Elem> y;
      if (target.is_zero())
        y = Elem::zero(k);
      else if (is_square(target) == Ternary::yes)
        y = sqrt_exact(target);
      if (y) {
        std::vector<Elem> out(static_cast<std::size_t>(n), Elem::zero(k));
        out[0] = x;
        out[1] = *y;
        out[2] = Elem::one(k);
        return out;
      }
    }
    fail("SearchExhausted", "no isotropic vector over " + k->describe());
  }

  bool known = false;
  if (k->kind() == Field::Kind::rationals) {
    if (!is_isotropic(q)) return std::nullopt;
    known = true;
  }

  std::size_t last_pool = 0;
  for (long h : {2L, 3L, 4L, 6L, 8L, 12L, 16L, 24L, 32L, 48L, 64L}) {
    if (h > cap) break;
    std::vector<Elem> pool = coordinate_pool(k, h);
    if (pool.size() == last_pool) continue;  // clamped; nothing new to try
    last_pool = pool.size();
    double cost = 1;
    int exponent = solvable_last_coordinate(k) ? n - 1 : n;
    for (int i = 0; i < exponent; ++i) cost *= static_cast<double>(pool.size());
    if (cost > 3e6) break;
    auto v = solvable_last_coordinate(k) ? odometer_solve(q, pool) : odometer_full(q, pool);
    if (v) return v;
  }
  if (known)
    fail("SearchExhausted",
         "isotropic form, but no witness within height " + std::to_string(cap));
  fail("UndecidableAtBound", "isotropy unknown over " + k->describe());
}

WittDecomposition witt_decompose(const DiagonalForm& q) {
  const FieldPtr& k = q.field();
  DiagonalForm current = q;
  int index = 0;
  while (current.rank() >= 2) {
    std::optional<std::vector<Elem>> v = isotropic_vector(current);
    if (!v) break;
    int n = current.rank();
    // B(x, e_i) = a_i x_i; pick a basis vector pairing nontrivially with v
    int piv = -1;
    for (int i = 0; i < n; ++i)
      if (!(*v)[static_cast<std::size_t>(i)].is_zero()) piv = i;
    // orthogonal complement of the hyperbolic plane span(v, e_piv)
    Matrix rows(2, std::vector<Elem>());
    for (int i = 0; i < n; ++i) {
      rows[0].push_back(current.entry(i) * (*v)[static_cast<std::size_t>(i)]);
      rows[1].push_back(i == piv ? current.entry(i) : Elem::zero(k));
    }
    Matrix comp = kernel_basis(k, rows);
    if (comp.empty()) {
      current = DiagonalForm::zero(k);
      ++index;
      break;
    }
    Matrix gram(comp.size(), std::vector<Elem>(comp.size(), Elem::zero(k)));
    for (std::size_t s = 0; s < comp.size(); ++s)
      for (std::size_t t = 0; t < comp.size(); ++t) {
        Elem b = Elem::zero(k);
        for (int i = 0; i < n; ++i)
          b = b + current.entry(i) * comp[s][static_cast<std::size_t>(i)] *
                      comp[t][static_cast<std::size_t>(i)];
        gram[s][t] = b;
      }
    current = DiagonalForm::from_gram(k, gram);
    ++index;
  }
  return {index, current};
}

}  // namespace qz
