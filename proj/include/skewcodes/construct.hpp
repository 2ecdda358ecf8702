#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "skewcodes/codes.hpp"

namespace skewcodes {

// Chain A_1..A_h with A_k = A_{theta^{k-1}} * ... * A_theta * A, so that the
// k-fold semi-linear power collapses to (Theta o A)^k = Theta^k o A_k.
struct TwistedPowers {
    Matrix A;
    Automorphism theta;
    std::vector<Matrix> powers;  // powers[k-1] = A_k

    std::size_t h() const { return powers.size(); }
    const Matrix& at(std::size_t k) const;  // A_k, 1 <= k <= h
};

// Builds the chain and cross-checks the power identity on every basis
// vector before returning.
TwistedPowers twisted_powers(const Matrix& A, const Automorphism& theta, std::size_t h);

// det(I x_0 + A_1 x_1 + ... + A_h x_h) at point = (x_0, ..., x_h);
// homogeneous of degree n in the point, so its projective zero locus is
// well defined.
FieldElement fh_eval(const TwistedPowers& tp, const RowVec& point);

struct ZeroLocusPoint {
    RowVec point;         // projective representative, first nonzero entry 1
    Matrix kernel;        // left kernel of I x_0 + sum A_j x_j
    Matrix fixed_kernel;  // the vectors of that kernel with all coordinates
                          // fixed by theta (a basis over the fixed subfield)
};

// Every projective point of P^h with F_h = 0, in lexicographic order of the
// normalized representative.  Seed vectors for invariant codes are read off
// fixed_kernel: a nonzero row v there spans a cyclic code of dim <= h.
std::vector<ZeroLocusPoint> zero_locus_scan(const TwistedPowers& tp,
                                            std::uint64_t budget = (std::uint64_t)1 << 20);

// The cyclic code [v] generated by v under T; refuses dimensions above the
// promised bound h (a seed from zero_locus_scan never trips this).
LinearCode code_from_point(const SemiLinearMap& T, const RowVec& v, std::size_t h);

// Ker p(M) for a commutative polynomial, computed as Ker g(M) with
// g = gcd(p, minpoly(M)); the kernel is nonzero exactly when g != 1.
Matrix gcd_kernel(const SkewPoly& p, const Matrix& M);

// Coefficientwise theta: an [n+1, k+1] generator g becomes the [n, k]
// generator G = sum theta(g_j) X^j whose code is at least as distant.
SkewPoly shorten_generator(const SkewPoly& g);

// Best minimum distance D(n, k) over all module theta-codes of the given
// shape; cells whose enumeration blows the budget stay empty, never guessed.
struct DistanceTable {
    std::uint64_t q = 0;
    unsigned theta_exponent = 0;
    std::map<std::pair<std::size_t, std::size_t>, std::optional<std::uint64_t>> cells;

    std::optional<std::uint64_t> at(std::size_t n, std::size_t k) const;
};

DistanceTable distance_table(const FieldPtr& F, const Automorphism& theta, std::size_t n_max,
                             std::uint64_t budget = (std::uint64_t)1 << 20);

// Generator matrix of the [n, n - deg g] code with the twisted-shift rows
// theta^j(g) X^j; this is the code of any modulus f of degree n that g
// right-divides, no f required.
Matrix stripe_matrix(const SkewPoly& g, std::size_t n);

}  // namespace skewcodes
