#pragma once

#include "qz/witt.hpp"

namespace qz {

/* GW(k) as the fiber product Z x_{Z/2} W(k): a rank and a Witt class whose
 * parities agree.  The hyperbolic element is (2, 0). */
class GWElement {
 public:
  GWElement(long rank, WittClass witt);

  static GWElement from_form(const DiagonalForm& q) {
    return GWElement(q.rank(), WittClass(q));
  }
  static GWElement zero(const FieldPtr& k) { return GWElement(0, WittClass::zero(k)); }
  static GWElement one(const FieldPtr& k) { return GWElement(1, WittClass::one(k)); }
  static GWElement hyperbolic(const FieldPtr& k) { return GWElement(2, WittClass::zero(k)); }

  const FieldPtr& field() const { return witt_.field(); }
  long rank() const { return rank_; }
  const WittClass& witt() const { return witt_; }

  /* multiplication by the rank-1 unit <c> */
  GWElement scaled(const Elem& c) const { return GWElement(rank_, witt_.scaled(c)); }

  friend GWElement operator+(const GWElement& a, const GWElement& b) {
    return GWElement(a.rank_ + b.rank_, a.witt_ + b.witt_);
  }
  friend GWElement operator-(const GWElement& a) { return GWElement(-a.rank_, -a.witt_); }
  friend GWElement operator-(const GWElement& a, const GWElement& b) { return a + (-b); }
  friend GWElement operator*(const GWElement& a, const GWElement& b) {
    return GWElement(a.rank_ * b.rank_, a.witt_ * b.witt_);
  }

  std::string str() const;

 private:
  long rank_;
  WittClass witt_;
};

Ternary gw_is_zero(const GWElement& x);
Ternary gw_equal(const GWElement& a, const GWElement& b);

/* n-fold sum of the unit form, n >= 0, as a convenience */
GWElement gw_int(const FieldPtr& k, long n);

/* n<1> for any sign of n */
GWElement gw_of_int(const FieldPtr& k, long n);

/* base change along the base chain of target */
GWElement gw_embed(const FieldPtr& target, const GWElement& x);

}  // namespace qz
