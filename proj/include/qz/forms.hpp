#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qz/field.hpp"
#include "qz/hilbert.hpp"
#include "qz/linalg.hpp"

namespace qz {

/* A nondegenerate diagonal quadratic form <a_1,...,a_n>.  The empty list is
 * the zero form.  Entries keep their given order; normalization to square
 * class representatives is explicit, never silent. */
class DiagonalForm {
 public:
  DiagonalForm(FieldPtr k, std::vector<Elem> entries);

  static DiagonalForm zero(const FieldPtr& k) { return DiagonalForm(k, {}); }
  static DiagonalForm unit(const FieldPtr& k) { return DiagonalForm(k, {Elem::one(k)}); }
  static DiagonalForm hyperbolic(const FieldPtr& k) {
    return DiagonalForm(k, {Elem::one(k), -Elem::one(k)});
  }
  /* diagonalize a symmetric Gram matrix; rejects degenerate input */
  static DiagonalForm from_gram(const FieldPtr& k, const Matrix& g);

  const FieldPtr& field() const { return k_; }
  int rank() const { return static_cast<int>(entries_.size()); }
  const std::vector<Elem>& entries() const { return entries_; }
  const Elem& entry(int i) const { return entries_[static_cast<std::size_t>(i)]; }

  /* product of the entries; one for the zero form */
  Elem det() const;
  /* (-1)^{n(n-1)/2} * det, the signed discriminant */
  Elem signed_det() const;

  DiagonalForm scaled(const Elem& c) const;
  DiagonalForm negated() const;
  /* entry-wise square class representatives, order kept */
  DiagonalForm normalized() const;
  /* evaluate at a vector */
  Elem eval(const std::vector<Elem>& x) const;

  std::string str() const;

  friend bool operator==(const DiagonalForm& a, const DiagonalForm& b) {
    return same_field(a.k_, b.k_) && a.entries_ == b.entries_;
  }
  friend bool operator!=(const DiagonalForm& a, const DiagonalForm& b) { return !(a == b); }

 private:
  FieldPtr k_;
  std::vector<Elem> entries_;
};

DiagonalForm direct_sum(const DiagonalForm& a, const DiagonalForm& b);
DiagonalForm tensor(const DiagonalForm& a, const DiagonalForm& b);

/* entries embedded along the base chain of target */
DiagonalForm embed_form(const FieldPtr& target, const DiagonalForm& q);

/* The classical invariant package.  signature and hasse are only populated
 * over Q; disc and signed_disc are square class representatives. */
struct FormInvariants {
  int rank = 0;
  Elem disc;
  Elem signed_disc;
  std::optional<int> signature;
  std::vector<std::pair<QPlace, int>> hasse;

  FormInvariants(int r, Elem d, Elem sd) : rank(r), disc(std::move(d)), signed_disc(std::move(sd)) {}
};

FormInvariants invariants(const DiagonalForm& q);

/* entries as rationals; only for forms over Q */
std::vector<Rat> rational_entries(const DiagonalForm& q);

}  // namespace qz
