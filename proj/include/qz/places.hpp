#pragma once

#include <string>
#include <vector>

#include "qz/field.hpp"

namespace qz {

/* A place of k(t): either a monic irreducible pi over k (uniformizer pi) or
 * the place at infinity (uniformizer 1/t). */
class Place {
 public:
  static Place finite(const FieldPtr& function_field, Poly pi);
  static Place infinity(const FieldPtr& function_field);

  const FieldPtr& function_field() const { return kt_; }
  bool at_infinity() const { return infinite_; }
  const Poly& pi() const;

  /* degree of the residue field over the coefficient field */
  int degree() const;
  FieldPtr residue_field() const;
  std::string str() const;

 private:
  Place(FieldPtr kt, Poly pi, bool infinite)
      : kt_(std::move(kt)), pi_(std::move(pi)), infinite_(infinite) {}

  FieldPtr kt_;
  Poly pi_;
  bool infinite_;
};

bool operator==(const Place& a, const Place& b);

/* finite places by (degree, polynomial order); infinity last */
int cmp(const Place& a, const Place& b);

long valuation(const Elem& x, const Place& v);

/* x * uniformizer^(-valuation); a unit at v */
Elem unit_part(const Elem& x, const Place& v);

/* image of a valuation-zero element in the residue field */
Elem reduce_unit(const Elem& u, const Place& v);

/* finite places with nonzero valuation on x, in canonical order */
std::vector<Place> support_places(const Elem& x);

}  // namespace qz
