#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qz/intnum.hpp"

namespace qz {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Poly;

/* An element of a field tower.  The payload in use is determined by the
 * owning field's kind:
 *   rationals            -> q_ (reduced fraction)
 *   prime field          -> r_ (residue in [0, p))
 *   simple extension     -> nc_ (coordinates on the power basis, trimmed)
 *   rational functions   -> nc_/dc_ (num/den coefficients; den monic, coprime
 *                           with num; zero is 0/1)
 * Canonical representations make operator== structural equality. */
class Elem {
 public:
  Elem() = default;  // detached placeholder for containers; not a field value

  static Elem rational(const Rat& v);
  static Elem integer(const FieldPtr& f, const Int& n);
  static Elem ratio(const FieldPtr& f, const Rat& v);
  static Elem residue(const FieldPtr& f, const Int& v);
  static Elem generator(const FieldPtr& f);
  static Elem from_coords(const FieldPtr& f, std::vector<Elem> coords);
  static Elem from_fraction(const FieldPtr& f, const Poly& num, const Poly& den);
  static Elem zero(const FieldPtr& f);
  static Elem one(const FieldPtr& f);

  bool valid() const { return f_ != nullptr; }
  const FieldPtr& field() const { return f_; }

  bool is_zero() const;
  bool is_one() const;

  friend Elem operator+(const Elem& a, const Elem& b);
  friend Elem operator-(const Elem& a, const Elem& b);
  friend Elem operator*(const Elem& a, const Elem& b);
  friend Elem operator/(const Elem& a, const Elem& b);
  Elem operator-() const;
  Elem inverse() const;  // DivisionByZero on zero
  Elem pow(long e) const;

  friend bool operator==(const Elem& a, const Elem& b);
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

  /* canonical textual form; parse_elem() round-trips it */
  std::string str() const;

  const Rat& rat_value() const;
  const Int& residue_value() const;
  const std::vector<Elem>& coords() const;
  const std::vector<Elem>& num_coeffs() const;
  const std::vector<Elem>& den_coeffs() const;

  /* numerator/denominator of a rational-function element as polynomials */
  Poly num_poly() const;
  Poly den_poly() const;

 private:
  friend int cmp(const Elem& a, const Elem& b);

  FieldPtr f_;
  Rat q_;
  Int r_;
  std::vector<Elem> nc_, dc_;
};

/* total order on same-field elements, used for canonical output ordering */
int cmp(const Elem& a, const Elem& b);

/* Dense univariate polynomial over a field in the tower.  Coefficients are
 * stored ascending; the zero polynomial has an empty vector and degree -1. */
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr k) : k_(std::move(k)) {}
  Poly(FieldPtr k, std::vector<Elem> coeffs);

  static Poly constant(const Elem& c);
  static Poly variable(const FieldPtr& k);
  static Poly from_ints(const FieldPtr& k, const std::vector<long>& c);

  const FieldPtr& base() const { return k_; }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Elem& coeff(int i) const;
  const Elem& lc() const;
  const std::vector<Elem>& coeffs() const { return c_; }
  bool is_monic() const;
  bool is_constant() const { return deg() <= 0; }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend Poly operator*(const Elem& s, const Poly& a);

  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  friend Poly operator/(const Poly& a, const Poly& b);  // exact or euclidean quotient
  friend Poly operator%(const Poly& a, const Poly& b);

  Poly monic() const;
  Poly derivative() const;
  Poly shift_compose(const Elem& s) const;  // p(x + s)

  Elem eval(const Elem& x) const;
  /* evaluate at a point of an extension of the base, embedding coefficients */
  Elem eval_embedded(const Elem& x) const;

  friend Poly gcd_poly(Poly a, Poly b);  // monic gcd, gcd(0,0) = 0
  Poly pow_mod(const Int& e, const Poly& mod) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  friend int cmp(const Poly& a, const Poly& b);

  std::string str(const std::string& var) const;

 private:
  void trim();

  FieldPtr k_;
  std::vector<Elem> c_;
};

/* Field descriptor: Q, F_p, a simple extension, or rational functions.
 * Immutable and shared; structural equality via same_field(). */
class Field : public std::enable_shared_from_this<Field> {
 public:
  enum class Kind { rationals, prime, extension, rational_functions };

  static const FieldPtr& rationals();
  static FieldPtr prime(const Int& p);
  /* verifies monic + irreducible + separable + tower bounds */
  static FieldPtr extension(const FieldPtr& base, const Poly& minpoly,
                            const std::string& var);
  static FieldPtr rational_functions(const FieldPtr& base, const std::string& var);

  Kind kind() const { return kind_; }
  const Int& p() const;
  const FieldPtr& base() const;
  const Poly& minpoly() const;
  const std::string& var() const;

  Int characteristic() const;
  bool is_finite() const;
  Int order() const;         // finite fields only
  int ext_deg() const;       // [this : base], extension only
  int absolute_degree() const;
  int tower_depth() const;   // extension steps stacked on the ground field

  std::string describe() const;

 private:
  Field() = default;

  Kind kind_ = Kind::rationals;
  Int p_;
  FieldPtr base_;
  std::shared_ptr<Poly> minpoly_;
  std::string var_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

/* embed x along the base chain of target; DescriptorMismatch if x's field is
 * not a (possibly improper) base of target */
Elem embed(const FieldPtr& target, const Elem& x);

/* is target built (possibly in several steps) on top of k? */
bool extends(const FieldPtr& target, const FieldPtr& k);

void require_same_field(const FieldPtr& a, const FieldPtr& b, const char* where);

}  // namespace qz
