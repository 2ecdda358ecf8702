#pragma once

#include <cstddef>
#include <vector>

#include "skewcodes/matrix.hpp"
#include "skewcodes/skew_poly.hpp"

namespace skewcodes {

// The period of f: the minimal m >= deg f with X^m - 1 = f * q_f (f on the
// left).  Requires f(0) != 0; then n <= m <= q^n + n - 2.
struct PeriodData {
    SkewPoly f;
    std::size_t m = 0;
    SkewPoly q_f;  // left cofactor, degree m - n
};

PeriodData period(const SkewPoly& f);

// Same m through linear algebra, valid only for the identity automorphism:
// p_0 = order of det A, B = A^{p_0} for the companion matrix A of f, and
// m = p_0 * lcm of the orders of the rational canonical blocks of B.
std::size_t period_commutative(const SkewPoly& f);

// Minimal j with X^j - 1 = p * star(f) (divisor on the RIGHT); always equal
// to period(f).m.
std::size_t period_star(const SkewPoly& f);

// n x m matrix Q whose row j holds the coefficients of X^j * q_f, padded to
// length m.  Equivalently row j = (q)(Theta o P)^j for the m-cycle P, and
// v Q carries v to the coefficient vector of pi(v) * q_f.
Matrix q_matrix(const PeriodData& pd);

// Everything needed to immerse F_q^n into F_q^m = prod F_q^{m_i} and to
// evaluate the induced bilinear form.
struct EmbeddingData {
    std::vector<PeriodData> periods;
    std::vector<Matrix> Q;  // diagonal blocks of Qhat, sizes n_i x m_i
    Matrix Qhat;            // n x m
    Matrix Phat;            // m x m, block diagonal of the m_i-cycles
    Matrix C;               // coordinate change on F_q^n
    Matrix Cinv;
    Matrix B;               // C^{-1} Qhat Qhat_t (C^{-1})_t, symmetric
    std::size_t rank_B = 0;

    const FieldPtr& field() const { return Qhat.field(); }
    Automorphism theta() const { return periods.front().f.theta(); }
    std::size_t n() const { return Qhat.rows(); }
    std::size_t m() const { return Qhat.cols(); }
};

EmbeddingData embedding(const std::vector<SkewPoly>& components, const Matrix& C);
EmbeddingData embedding(const std::vector<SkewPoly>& components);  // C = I

// v C^{-1} Qhat: the (injective) immersion of a length-n vector into F_q^m.
RowVec immerse(const EmbeddingData& ed, const RowVec& v);

// Two facts relating the period to the automorphism order s:
//  - the coefficient vector of q_f is fixed by theta^(m mod s);
//  - if no theta^t with 0 < t < s fixes f's coefficient vector, then s | m
//    (one-directional: s may divide m anyway).
struct CorollaryReport {
    std::size_t m = 0;
    std::size_t s = 1;
    std::size_t r = 0;             // m mod s
    bool q_f_fixed = false;        // theta^r fixes every coefficient of q_f
    bool f_moved_below_s = false;  // hypothesis of the divisibility fact
    bool s_divides_m = false;

    bool multiplier_fixed() const { return q_f_fixed; }
    bool order_implication() const { return !f_moved_below_s || s_divides_m; }
};

CorollaryReport corollary_checks(const PeriodData& pd);

}  // namespace skewcodes
