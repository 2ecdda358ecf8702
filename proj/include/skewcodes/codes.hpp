#pragma once

#include <cstdint>
#include <vector>

#include "skewcodes/semilinear.hpp"

namespace skewcodes {

// Module theta-code (g)_{n,q}^{k,theta}: the left submodule Rg/Rf of R/Rf
// read through the coordinate dictionary.  f has degree n and nonzero
// constant term, g is a monic right divisor with nonzero constant term, and
// k = deg f - deg g >= 0 (deg g = deg f gives the zero code, which turns up
// as a dual).  The code is the row space of the k x n matrix whose rows are
// pi_inv(X^j g) for j = 0..k-1.
class ModuleThetaCode {
public:
    ModuleThetaCode(SkewPoly f, SkewPoly g);

    const SkewPoly& f() const { return f_; }
    const SkewPoly& g() const { return g_; }
    const FieldPtr& field() const { return f_.field(); }
    Automorphism theta() const { return f_.theta(); }
    std::size_t n() const { return f_.degree(); }
    std::size_t k() const { return f_.degree() - g_.degree(); }

    Matrix generator_matrix() const;
    // Theta o companion(f); the code is invariant under it.
    SemiLinearMap invariance_map() const;
    // exact membership: g right-divides the dictionary image of v
    bool contains(const RowVec& v) const;

private:
    SkewPoly f_, g_;
};

// Standard-form pair from the remainders r_i of X^{n-k+i} = q_i g + r_i:
// S stacks the low n-k coordinates of the r_i, G_std = (-S | I_k) generates
// the code and H = (I_{n-k} | S_t) is a parity-check matrix for it.
struct StandardForm {
    Matrix S;
    Matrix G_std;
    Matrix H;
};
StandardForm parity_check(const ModuleThetaCode& code);

// Product T-code (C_1 x ... x C_r) * C with C invertible over the common
// field; all components share one automorphism.
class ProductTCode {
public:
    ProductTCode(std::vector<ModuleThetaCode> components, Matrix C);
    // C = identity
    static ProductTCode direct_product(std::vector<ModuleThetaCode> components);

    const std::vector<ModuleThetaCode>& components() const { return comps_; }
    const ModuleThetaCode& component(std::size_t i) const { return comps_[i]; }
    std::size_t component_count() const { return comps_.size(); }
    const Matrix& conjugator() const { return C_; }
    const FieldPtr& field() const { return C_.field(); }
    Automorphism theta() const { return comps_.front().theta(); }

    std::size_t n() const;
    std::size_t k() const;

    // blockdiag(G_1..G_r) * C, full row rank k
    Matrix generator_matrix() const;
    // T = C^{-1} (Theta o diag(companion(f_i))) C, i.e. the semi-linear map
    // with matrix (C_theta)^{-1} blockdiag C
    SemiLinearMap invariance_map() const;
    bool contains(const RowVec& v) const;

    // coordinate plumbing between the ambient word v and the component
    // word w = v C^{-1} = (w_1,...,w_r)
    RowVec to_components(const RowVec& v) const;
    RowVec from_components(const RowVec& w) const;
    std::vector<RowVec> split(const RowVec& w) const;
    RowVec join(const std::vector<RowVec>& parts) const;

private:
    std::vector<ModuleThetaCode> comps_;
    Matrix C_, Cinv_;
};

// Plain [n,k]_q code held by a canonical (RREF) generator matrix.
class LinearCode {
public:
    explicit LinearCode(const Matrix& spanning_rows);

    const Matrix& generators() const { return gen_; }
    const FieldPtr& field() const { return gen_.field(); }
    std::size_t n() const { return gen_.cols(); }
    std::size_t k() const { return gen_.rows(); }

    bool contains(const RowVec& v) const;
    bool operator==(const LinearCode& o) const { return gen_ == o.gen_; }
    bool operator!=(const LinearCode& o) const { return !(*this == o); }

private:
    Matrix gen_;  // RREF, zero rows dropped
};

// Minimum Hamming weight over the q^k - 1 nonzero codewords; BudgetError
// when the enumeration would exceed the budget.
std::uint64_t min_distance(const LinearCode& code,
                           std::uint64_t budget = (std::uint64_t)1 << 20);

// theta = id only: the set of dimensions k for which a code invariant under
// the transformation exists, read off the irreducible-power decomposition
// of the characteristic polynomial as all sums a_i deg F_i, 0 <= a_i <= e_i.
std::vector<std::size_t> feasible_dimensions(const SemiLinearMap& T);

}  // namespace skewcodes
