#pragma once

#include <string>
#include <vector>

#include "qz/intnum.hpp"

namespace qz {

/* Places of Q: the primes and the real place.  These are the decision sites
 * for everything local-global over Q (isotropy, Witt equality, the
 * fundamental-ideal filtration). */
class QPlace {
 public:
  static QPlace infinity() { return QPlace(Int(0), true); }
  static QPlace prime(const Int& p);

  bool is_infinity() const { return infinite_; }
  bool is_dyadic() const { return !infinite_ && p_ == 2; }
  const Int& p() const;

  std::string str() const { return infinite_ ? "infinity" : p_.get_str(); }

  friend bool operator==(const QPlace& a, const QPlace& b) {
    return a.infinite_ == b.infinite_ && a.p_ == b.p_;
  }
  friend bool operator!=(const QPlace& a, const QPlace& b) { return !(a == b); }
  /* finite places by magnitude, then the real place */
  friend int cmp(const QPlace& a, const QPlace& b);

 private:
  QPlace(Int p, bool infinite) : p_(std::move(p)), infinite_(infinite) {}
  Int p_;
  bool infinite_;
};

/* Hilbert symbol (a,b)_v in {+1,-1}: whether z^2 = a x^2 + b y^2 has a
 * nontrivial solution in the completion at v.  Closed-form evaluation from
 * valuations and residues; no approximation anywhere. */
int hilbert_symbol(const Rat& a, const Rat& b, const QPlace& v);

/* whether a is a square in the completion at v */
bool is_local_square(const Rat& a, const QPlace& v);

/* the real place, 2, and the odd primes dividing some entry's squarefree
 * part; the Hilbert symbols of the entries are +1 everywhere else */
std::vector<QPlace> relevant_places(const std::vector<Rat>& entries);

/* Hasse symbol of a diagonal form: product of (a_i, a_j)_v over i < j */
int hasse_symbol(const std::vector<Rat>& entries, const QPlace& v);

}  // namespace qz
