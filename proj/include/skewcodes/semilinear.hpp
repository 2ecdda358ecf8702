#pragma once

#include <cstdint>
#include <vector>

#include "skewcodes/matrix.hpp"

namespace skewcodes {

// theta-semi-linear transformation T = Theta o M acting on row vectors:
// (v)T = (v Theta) M, where Theta applies theta to every coordinate.
class SemiLinearMap {
public:
    SemiLinearMap(Automorphism theta, Matrix M);

    const Automorphism& theta() const { return th_; }
    const Matrix& matrix() const { return M_; }
    std::size_t dim() const { return M_.rows(); }

    // k-fold application.
    RowVec apply(const RowVec& v, std::uint64_t k = 1) const;

private:
    Automorphism th_;
    Matrix M_;
};

struct CyclicSubspace {
    Matrix basis;     // rows v, vT, ..., vT^{dim-1}
    std::size_t dim;  // least d with vT^d dependent on the rows above it
};

// The T-cyclic subspace [v]; dim 0 for v = 0.  The basis rows are the raw
// iterates, not an echelon form, so [v]-coordinates read off directly.
CyclicSubspace cyclic_subspace(const SemiLinearMap& T, const RowVec& v);

// F_q^n = [u_1] (+) ... (+) [u_r] with n_1 >= ... >= n_r.  C stacks the
// cyclic bases in order, blocks[i] is the companion matrix M_i of the
// normal form, and factors[i] = (-1)^{n_i}(X^{n_i} - sum_j a_{i,j} X^j) is
// the signed block characteristic polynomial; a_{i,0} != 0 throughout.
// Every decomposition returned by decompose() satisfies the certificate
//   C_theta * M = block_diag(M_1..M_r) * C,   C invertible,
// which is equivalent to T = C^{-1} (Theta o diag(M_i)) C as maps.
struct CyclicDecomposition {
    std::vector<RowVec> generators;
    std::vector<std::size_t> sizes;
    std::vector<SkewPoly> factors;
    std::vector<Matrix> blocks;
    Matrix C;

    std::size_t block_count() const { return blocks.size(); }
    Matrix block_diag_matrix() const;
};

// Decompose F_q^n into T-cyclic subspaces.  M must be invertible (this is
// what forces the nonzero constant terms).  Matrices already in (block)
// companion shape are recognized directly; otherwise the commutative normal
// form is used when the automorphism acts trivially on the entries, and a
// certified generator search runs in the general case.  The budget caps the
// number of cyclic-subspace evaluations the search may spend.
CyclicDecomposition decompose(const SemiLinearMap& T,
                              std::uint64_t budget = (std::uint64_t)1 << 18);

// Dictionary F_q^n <-> R/Rf.  pi reads v = (c_0,...,c_{n-1}) as the class
// sum c_i X^i (v must have exactly deg f entries); pi_inv reduces its
// argument mod f (division on the right) and pads the remainder back out to
// a length-deg-f coordinate vector.
SkewPoly pi(const RowVec& v, const SkewPoly& f);
RowVec pi_inv(const SkewPoly& p, const SkewPoly& f);

// True iff (b)T stays inside the row space of `basis` for every row b.
bool is_invariant(const SemiLinearMap& T, const Matrix& basis);

}  // namespace skewcodes
