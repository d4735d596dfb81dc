#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

namespace qz {

using Int = mpz_class;
using Rat = mpq_class;

/* Exact integer number theory on top of GMP.  Factorization is trial division
 * below 10^4 followed by Miller-Rabin + Pollard rho (Brent variant), which is
 * plenty for the magnitudes produced by desk-scale Gram matrices and
 * discriminants. */

bool is_prime(const Int& n);

/* prime -> exponent, for |n| >= 1; the sign is not part of the map */
std::map<Int, int> factor_int(const Int& n);

/* squarefree part of a nonzero integer, sign preserved */
Int squarefree_part(const Int& n);

/* squarefree part of a nonzero rational: squarefree part of num*den */
Int squarefree_part(const Rat& q);

bool is_square(const Int& n);
bool is_square(const Rat& q);

/* Legendre symbol (a|p) for odd prime p, in {-1, 0, 1} */
int legendre(const Int& a, const Int& p);

/* odd primes dividing the squarefree part of a nonzero rational */
std::vector<Int> odd_prime_support(const Rat& q);

Int pow_int(const Int& base, unsigned long e);

}  // namespace qz
