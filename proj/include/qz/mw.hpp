#pragma once

#include <string>

#include "qz/gw.hpp"
#include "qz/milnor.hpp"
#include "qz/transfer.hpp"
#include "qz/witt.hpp"

namespace qz {

/* An element of Milnor-Witt K-theory in degree -1 to 2, stored as the pair
 * of its Milnor-theoretic and Witt-theoretic shadows glued over the mod-2
 * fiber: degree -1 is a plain Witt class; in degree n >= 0 the Witt part must
 * lie in the n-th fundamental power with its invariants matching the Milnor
 * part (rank parity in degree 0, signed discriminant in degree 1, Clifford
 * invariant in degree 2).  Construction rejects pairs that definitely violate
 * the matching and accepts the ones no decision procedure here can refute.
 *
 * The generator [u] is ({u}, <u, -1>) and eta is the degree -1 unit; with
 * these choices [uv] = [u] + [v] + eta*[u]*[v] holds on the nose. */
class MWElement {
 public:
  MWElement(MilnorSymbol milnor, WittClass witt);

  /* degree -1: a bare Witt class */
  static MWElement from_witt(const WittClass& w);
  /* degree 0: GW via its rank and Witt class */
  static MWElement from_gw(const GWElement& x);
  /* degree 1: the symbol [u] of a nonzero u */
  static MWElement unit_symbol(const Elem& u);
  static MWElement eta(const FieldPtr& k);
  static MWElement zero(const FieldPtr& k, int degree);

  const FieldPtr& field() const { return witt_.field(); }
  int degree() const { return degree_; }
  const MilnorSymbol& milnor() const;
  const WittClass& witt() const { return witt_; }
  GWElement to_gw() const;

  friend MWElement operator+(const MWElement& a, const MWElement& b);
  friend MWElement operator-(const MWElement& a);
  friend MWElement operator-(const MWElement& a, const MWElement& b) { return a + (-b); }

  std::string str() const;

 private:
  MWElement(int degree, MilnorSymbol milnor, WittClass witt);

  int degree_;
  MilnorSymbol milnor_;
  WittClass witt_;
};

/* product; degrees add and must stay within [-1, 2] */
MWElement mw_mul(const MWElement& a, const MWElement& b);
MWElement eta_mul(const MWElement& x);

Ternary mw_is_zero(const MWElement& x);
Ternary mw_equal(const MWElement& a, const MWElement& b);

/* Compatibility of a candidate pair over the mod-2 fiber, as far as the
 * decision procedures reach; construction rejects exactly the 'no' cases. */
Ternary mw_fiber_compatible(const MilnorSymbol& m, const WittClass& w);

/* Residue at a place of k(t), one degree down, valued over the residue
 * field.  The Milnor part takes the tame residue; the Witt part takes the
 * Springer second residue twisted by pi'(theta) at a finite place pi and by
 * -1 at infinity, which makes the transferred residues over all places sum
 * to zero. */
MWElement mw_residue(const MWElement& x, const Place& v);

/* Transfer along the extension step L/k: the trace-form Scharlau transfer on
 * the Witt side at every degree (the residues already carry the twist that
 * makes this pairing reciprocal), glued with the field norm in degree 1.
 * Degree 2 is not available here. */
MWElement mw_transfer(const MWElement& x);

/* places where some stored entry of x has nonzero valuation */
std::vector<Place> mw_support(const MWElement& x);

/* sum over all places of the transferred residues, a class over the
 * coefficient field; zero is the reciprocity law */
MWElement reciprocity_sum(const MWElement& x);

}  // namespace qz
