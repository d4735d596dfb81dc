#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qz/field.hpp"
#include "qz/forms.hpp"
#include "qz/places.hpp"

namespace qz {

/* A desk-scale curve: the projective line over k, or a smooth diagonal plane
 * conic a*x^2 + b*y^2 + c*z^2 = 0 (a, b, c nonzero, characteristic not 2). */
class Curve {
 public:
  enum class Kind { line, conic };

  static Curve projective_line(const FieldPtr& k, const std::string& var = "t");
  static Curve conic(const FieldPtr& k, const Elem& a, const Elem& b, const Elem& c);

  Kind kind() const { return kind_; }
  bool is_line() const { return kind_ == Kind::line; }
  const FieldPtr& field() const { return k_; }

  /* k(t), lines only */
  const FieldPtr& function_field() const;

  /* the diagonal form <a, b, c>, conics only */
  const DiagonalForm& conic_form() const;
  const Elem& a() const;
  const Elem& b() const;
  const Elem& c() const;

  std::string str() const;

 private:
  Curve(Kind kind, FieldPtr k) : kind_(kind), k_(std::move(k)) {}

  Kind kind_;
  FieldPtr k_;
  FieldPtr kt_;
  std::optional<DiagonalForm> form_;
};

bool operator==(const Curve& a, const Curve& b);
inline bool operator!=(const Curve& a, const Curve& b) { return !(a == b); }

/* A closed point.  On the line it is a place of k(t): a monic irreducible or
 * infinity.  On a conic it is certified by an explicit solution over its
 * residue field L: coordinates are normalized projectively (last nonzero
 * coordinate 1) and, for quadratic L, replaced by the conjugate tuple that
 * compares smaller, so structural equality decides equality of closed
 * points.  L must be the base field or a one-step extension whose degree is
 * witnessed by a single coordinate; anything else is rejected rather than
 * miscounted. */
class ClosedPoint {
 public:
  static ClosedPoint on_line(const Curve& X, const Poly& pi);
  static ClosedPoint at_infinity(const Curve& X);
  static ClosedPoint on_conic(const Curve& X, const FieldPtr& L,
                              const Elem& x, const Elem& y, const Elem& z);

  const Curve& curve() const { return X_; }
  int degree() const;
  FieldPtr residue_field() const;

  /* line points */
  const Place& place() const;
  bool at_infinity_point() const;

  /* conic points */
  const std::vector<Elem>& coords() const;

  std::string str() const;

 private:
  ClosedPoint(Curve X, Place v) : X_(std::move(X)), place_(std::move(v)) {}
  ClosedPoint(Curve X, FieldPtr L, std::vector<Elem> coords)
      : X_(std::move(X)), L_(std::move(L)), coords_(std::move(coords)) {}

  Curve X_;
  std::optional<Place> place_;
  FieldPtr L_;
  std::vector<Elem> coords_;
};

bool operator==(const ClosedPoint& a, const ClosedPoint& b);
inline bool operator!=(const ClosedPoint& a, const ClosedPoint& b) { return !(a == b); }

/* total order used for canonical support listings */
int cmp(const ClosedPoint& a, const ClosedPoint& b);

/* degree of the subfield generated by one element of a one-step extension */
int element_degree(const Elem& x);

}  // namespace qz
