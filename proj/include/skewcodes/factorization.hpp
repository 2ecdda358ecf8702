#pragma once

#include <utility>
#include <vector>

#include "skewcodes/skew_poly.hpp"

namespace skewcodes {

// Commutative F_q[X] utilities (the automorphism must be the identity).
// These back the rational canonical form, dimension feasibility sets and
// the invariant-code counting; desk-scale trial division throughout.

bool is_irreducible_commutative(const SkewPoly& p);

// Monic irreducible factorization, factors ascending by (degree, rep order);
// returns (irreducible, multiplicity) pairs.  p must be nonzero.
std::vector<std::pair<SkewPoly, unsigned>> factor_commutative(const SkewPoly& p);

// Monic gcd / lcm in F_q[X].
SkewPoly poly_gcd_commutative(const SkewPoly& a, const SkewPoly& b);
SkewPoly poly_lcm_commutative(const SkewPoly& a, const SkewPoly& b);

}  // namespace skewcodes
