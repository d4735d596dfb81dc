#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qz/errors.hpp"
#include "qz/field.hpp"
#include "qz/intnum.hpp"
#include "qz/places.hpp"

namespace qz {

/* An element of Milnor K-theory in degree 0, 1 or 2.
 *
 * Degree 0 is the integers.  Degree 1 is the multiplicative group of the
 * field, so a sum of symbols {a} folds eagerly into a single unit and
 * equality is field equality.  Degree 2 keeps an integer combination of
 * symbols {a, b}; construction applies the rewriting that follows directly
 * from bilinearity and the Steinberg relation ({1, b}, {a, -a} and {a, 1-a}
 * vanish, {a, a} = {a, -1}, swaps negate) and merges equal pairs, but genuine
 * equality questions go through k2_is_zero. */
class MilnorSymbol {
 public:
  using Term = std::pair<std::pair<Elem, Elem>, Int>;

  static MilnorSymbol constant(const FieldPtr& k, const Int& n);
  static MilnorSymbol unit(const Elem& a);
  static MilnorSymbol pair(const Elem& a, const Elem& b);
  static MilnorSymbol zero(const FieldPtr& k, int degree);

  const FieldPtr& field() const { return k_; }
  int degree() const { return degree_; }

  const Int& constant_value() const;
  const Elem& unit_value() const;
  const std::vector<Term>& terms() const;

  /* zero by inspection of the stored data (no decision procedure) */
  bool syntactically_zero() const;

  MilnorSymbol scaled_by_int(const Int& n) const;

  friend MilnorSymbol operator+(const MilnorSymbol& a, const MilnorSymbol& b);
  friend MilnorSymbol operator-(const MilnorSymbol& a);
  friend MilnorSymbol operator-(const MilnorSymbol& a, const MilnorSymbol& b) {
    return a + (-b);
  }

  std::string str() const;

 private:
  MilnorSymbol(FieldPtr k, int degree) : k_(std::move(k)), degree_(degree) {}
  void normalize();

  FieldPtr k_;
  int degree_;
  Int n_ = 0;
  std::optional<Elem> u_;
  std::vector<Term> terms_;
};

/* product; the degrees add and must stay at most 2 */
MilnorSymbol milnor_mul(const MilnorSymbol& a, const MilnorSymbol& b);

/* Whether a degree-2 combination vanishes in K_2 of its field.  Finite
 * fields: always.  Q: tame symbols at the odd primes of the support plus the
 * dyadic Hilbert symbol (the kernel of the tame symbols is generated by
 * {-1, -1}).  k(t): tame residues at the support plus specialization at a
 * point where every entry is a unit, recursively.  Number fields: only the
 * syntactic answer. */
Ternary k2_is_zero(const MilnorSymbol& x);

Ternary milnor_is_zero(const MilnorSymbol& x);
Ternary milnor_equal(const MilnorSymbol& a, const MilnorSymbol& b);

/* Tame residue at a place of k(t), one degree down: the valuation in degree
 * 1, the unit (-1)^{v(f)v(g)} f^{v(g)} / g^{v(f)} reduced at v in degree 2. */
MilnorSymbol milnor_residue(const MilnorSymbol& x, const Place& v);

}  // namespace qz
