#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qz/curve.hpp"
#include "qz/gw.hpp"
#include "qz/mw.hpp"

namespace qz {

/* The canonical generator of the cotangent line at a point of the projective
 * line: the class of pi at a finite place pi, of 1/t at infinity.  All cycle
 * coefficients below are read against this choice; switching to another
 * uniformizer rescales the coefficient by the declared unit. */
struct TwistTrivialization {
  ClosedPoint point;
  Elem uniformizer;  // element of k(t)

  static TwistTrivialization canonical(const ClosedPoint& x);

  /* the unit of the residue field relating another uniformizer to this one */
  Elem rescale_unit(const Elem& other) const;
};

/* A quadratic zero-cycle: finitely many closed points weighted by classes in
 * GW of their residue fields, coefficients read in the canonical
 * trivializations.  Terms are kept sorted with syntactically zero
 * coefficients dropped. */
class QuadraticZeroCycle {
 public:
  using Term = std::pair<ClosedPoint, GWElement>;

  explicit QuadraticZeroCycle(Curve X) : X_(std::move(X)) {}
  QuadraticZeroCycle(Curve X, std::vector<Term> terms);

  const Curve& curve() const { return X_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  QuadraticZeroCycle with(const ClosedPoint& x, const GWElement& coeff) const;
  /* multiply every coefficient by the base change of c in GW(k) */
  QuadraticZeroCycle scaled(const GWElement& c) const;

  friend QuadraticZeroCycle operator+(const QuadraticZeroCycle& a,
                                      const QuadraticZeroCycle& b);
  friend QuadraticZeroCycle operator-(const QuadraticZeroCycle& a);
  friend QuadraticZeroCycle operator-(const QuadraticZeroCycle& a,
                                      const QuadraticZeroCycle& b) {
    return a + (-b);
  }

  std::string str() const;

 private:
  Curve X_;
  std::vector<Term> terms_;
};

/* An integral zero-cycle on the same footing. */
class ZeroCycle {
 public:
  using Term = std::pair<ClosedPoint, Int>;

  explicit ZeroCycle(Curve X) : X_(std::move(X)) {}
  ZeroCycle(Curve X, std::vector<Term> terms);

  const Curve& curve() const { return X_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  ZeroCycle with(const ClosedPoint& x, const Int& n) const;

  friend ZeroCycle operator+(const ZeroCycle& a, const ZeroCycle& b);
  friend ZeroCycle operator-(const ZeroCycle& a);
  friend ZeroCycle operator-(const ZeroCycle& a, const ZeroCycle& b) { return a + (-b); }

  std::string str() const;

 private:
  Curve X_;
  std::vector<Term> terms_;
};

/* quadratic degree: the sum over the support of the trace-form transfers of
 * the coefficients, landing in GW of the base field */
GWElement qdeg(const QuadraticZeroCycle& z);

/* classical degree: sum of coefficients times residue degrees */
Int cdeg(const ZeroCycle& z);

/* pointwise rank */
ZeroCycle forget(const QuadraticZeroCycle& z);

/* section of forget: n becomes the n-fold unit class */
QuadraticZeroCycle integral_lift(const ZeroCycle& z);

/* the divisor of residues of a degree-1 element over k(t): the cycle on the
 * projective line collecting the residue at every place, infinity included */
QuadraticZeroCycle residue_divisor(const MWElement& x);

/* pointwise comparison through gw_equal; missing points count as zero */
Ternary quadratic_cycle_equal(const QuadraticZeroCycle& a, const QuadraticZeroCycle& b);

enum class ChowWittVerdict { equal_with_certificate, not_equal, unknown };

struct ChowWittOutcome {
  ChowWittVerdict verdict;
  /* degree-1 element with residue_divisor(certificate) = a - b, pointwise */
  std::optional<MWElement> certificate;
  std::string detail;
};

/* Equality of cycle classes modulo residue divisors on the projective line
 * over Q or F_p.  Distinct quadratic degrees separate classes; equal classes
 * are certified by an explicit element, found by eliminating the support of
 * the difference place by place (highest residue degree first) and then
 * replaced by the least member of the canonical one-symbol family
 *   <s> * [product of support places ^ {-1,0,1}]
 * that certifies the same difference, if any does.  search_bound caps the
 * elimination rounds. */
ChowWittOutcome chowwitt_equal(const QuadraticZeroCycle& a, const QuadraticZeroCycle& b,
                               int search_bound = 64);

}  // namespace qz
