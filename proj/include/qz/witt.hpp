#pragma once

#include "qz/errors.hpp"
#include "qz/forms.hpp"
#include "qz/isotropy.hpp"
#include "qz/places.hpp"

namespace qz {

/* A Witt class, stored as a diagonal representative.  Construction performs
 * the cheap reduction (square-class normalization plus cancellation of
 * explicit hyperbolic pairs); the anisotropic kernel is computed on demand
 * where a decision procedure exists.  Equality is witt_equal, a genuine
 * tri-state: number fields beyond the quadratic case have no complete
 * procedure here. */
class WittClass {
 public:
  explicit WittClass(const DiagonalForm& rep);

  static WittClass zero(const FieldPtr& k) { return WittClass(DiagonalForm::zero(k)); }
  static WittClass one(const FieldPtr& k) { return WittClass(DiagonalForm::unit(k)); }

  const FieldPtr& field() const { return rep_.field(); }
  const DiagonalForm& representative() const { return rep_; }
  int rank_parity() const { return rep_.rank() % 2; }
  bool syntactically_zero() const { return rep_.rank() == 0; }

  WittClass scaled(const Elem& c) const { return WittClass(rep_.scaled(c)); }
  DiagonalForm anisotropic_kernel() const;

  friend WittClass operator+(const WittClass& a, const WittClass& b) {
    return WittClass(direct_sum(a.rep_, b.rep_));
  }
  friend WittClass operator-(const WittClass& a) { return WittClass(a.rep_.negated()); }
  friend WittClass operator-(const WittClass& a, const WittClass& b) { return a + (-b); }
  friend WittClass operator*(const WittClass& a, const WittClass& b) {
    return WittClass(tensor(a.rep_, b.rep_));
  }

  std::string str() const { return rep_.str(); }

 private:
  DiagonalForm rep_;
};

Ternary witt_is_zero(const WittClass& w);
Ternary witt_equal(const WittClass& a, const WittClass& b);

/* Springer residues of a diagonal form at a finite place of k(t): the second
 * residue collects the reduced units of the odd-valuation entries, the first
 * residue (when requested) those of even valuation.  No trivialization twist
 * is applied here. */
DiagonalForm second_residue_form(const DiagonalForm& q, const Place& v,
                                 DiagonalForm* first = nullptr);

/* membership in I^n for n in {0,1,2,3} */
Ternary in_fundamental_power(const WittClass& w, int n);

bool is_formally_real(const FieldPtr& k);

/* inverse of an odd-rank class in the local ring W(k), k not formally real;
 * bounded search over small diagonal forms, verified by witt_equal */
WittClass witt_unit_inverse(const WittClass& w);

}  // namespace qz
