#pragma once

#include <cstddef>
#include <vector>

#include "skewcodes/codes.hpp"
#include "skewcodes/embed.hpp"

namespace skewcodes {

// Plain Euclidean dual {x : x . c = 0 for every codeword c}.
LinearCode euclidean_dual(const LinearCode& code);

// Euclidean dual of (C_1 x ... x C_r) * Chat, assembled componentwise:
// (dual(C_1) x ... x dual(C_r)) * (Chat_t)^{-1}.
LinearCode euclidean_dual_product(const std::vector<LinearCode>& components,
                                  const Matrix& Chat);

// For T = Theta o M, the companion map T' = Theta^{-1} o (M_t)_{theta^{-1}}.
// The Euclidean dual of every T-invariant code is T'-invariant; the same
// recipe applied to an Mhat with B_theta Mhat = M B covers the dual taken
// with respect to the form B.
SemiLinearMap dual_invariance_map(const SemiLinearMap& T);

// Dual with respect to the form a . b = a B b_t carried by the embedding:
// the Euclidean orthogonal of code * B.
LinearCode quasi_euclidean_dual(const LinearCode& code, const EmbeddingData& ed);

// How the reversed cofactor h of the generator is twisted coefficientwise.
// The intended convention twists h_{k-j} by theta^j (summation_index); the
// alternative twists every coefficient by theta^i with i the 1-based
// component position (component_index).  quasi_dual_generator checks its
// output against quasi_euclidean_dual, so a wrong choice cannot go unnoticed.
enum class TwistReading { summation_index, component_index };

// sum_j twist(h_{k-j}) X^j for h of degree k
SkewPoly reversed_cofactor(const SkewPoly& h, TwistReading reading,
                           std::size_t component_index = 1);

// One component of the dual generator: factor X^m - 1 = g * q_f * h, reverse
// h, and recover g* from left_lcm(reversed h, q_f) = g* q_f.  Needs the
// automorphism order to divide m so that the factorization rotates.
SkewPoly quasi_dual_component_generator(const SkewPoly& g, const PeriodData& pd,
                                        TwistReading reading,
                                        std::size_t component_index = 1);

// The dual of a product code, produced again as a product code over the same
// ambient polynomials and conjugator.  The row space is verified against
// quasi_euclidean_dual before returning; a mismatch aborts, signalling that
// the coefficient twist convention does not fit.
ProductTCode quasi_dual_generator(const ProductTCode& code, const EmbeddingData& ed,
                                  TwistReading reading = TwistReading::summation_index);

// Carrier for the conjugation pairing on prod R/R(X^{m_i} - 1).  The pairing
// only makes sense when the automorphism order divides every component
// period (X^{m_i} - 1 is then central); operations refuse to run otherwise.
class HermitianContext {
public:
    explicit HermitianContext(EmbeddingData ed);

    const EmbeddingData& data() const { return ed_; }
    bool valid() const { return valid_; }
    // throws DomainError when the order condition fails
    void require_valid() const;

private:
    EmbeddingData ed_;
    bool valid_;
};

// a X^i |-> theta^{-i}(a) X^{(m - i) mod m}, extended additively; an
// involution on polynomials of degree < m whenever the automorphism order
// divides m.
SkewPoly conjugate_reverse(const SkewPoly& p, std::size_t m);

// Skew product reduced mod X^m - 1 by wrapping exponents (reduction by right
// division leaves coefficients untouched).
SkewPoly cyclic_skew_mul(const SkewPoly& p, const SkewPoly& t, std::size_t m);

// <a, b> componentwise: embed both tuples with j(a_i) = a_i * q_{f_i}, then
// multiply j(a_i) by the conjugate-reversal of j(b_i) mod X^{m_i} - 1.
// Inputs must be reduced, i.e. deg a_i < n_i.
std::vector<SkewPoly> hermitian_product(const std::vector<SkewPoly>& a,
                                        const std::vector<SkewPoly>& b,
                                        const HermitianContext& ctx);

// {x : <x(X), c(X)> = 0 for every codeword c}, with words read through the
// code's conjugator into polynomial tuples.  For product codes this equals
// the quasi-Euclidean dual.
LinearCode hermitian_dual(const ProductTCode& code, const HermitianContext& ctx);

}  // namespace skewcodes
