#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skewcodes/skew_poly.hpp"

namespace skewcodes {

// Raw row vector of element reps; the owning Field travels alongside.
using RowVec = std::vector<Field::Rep>;

// Dense matrix over F_q.  All code in this library works with ROW vectors:
// maps act as v -> v*M, kernels and images are row spaces.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr f, std::size_t rows, std::size_t cols);  // zero-filled
    static Matrix identity(FieldPtr f, std::size_t n);
    static Matrix from_rows(FieldPtr f, const std::vector<RowVec>& rows, std::size_t cols);
    static Matrix block_diag(const std::vector<Matrix>& blocks);

    const FieldPtr& field() const { return f_; }
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }

    Field::Rep at(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }
    void set(std::size_t i, std::size_t j, Field::Rep v) { d_[i * c_ + j] = v; }
    FieldElement elem_at(std::size_t i, std::size_t j) const { return f_->elem(at(i, j)); }

    RowVec row(std::size_t i) const;
    void set_row(std::size_t i, const RowVec& v);

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    Matrix scale(Field::Rep c) const;
    bool is_zero() const;
    bool is_identity() const;
    bool is_symmetric() const;

    // Stack other's rows below this matrix; column counts must match.
    Matrix vstack(const Matrix& o) const;
    // Glue other's columns to the right; row counts must match.
    Matrix hstack(const Matrix& o) const;

private:
    void check_same_field(const Matrix& o) const;
    FieldPtr f_;
    std::size_t r_ = 0, c_ = 0;
    std::vector<Field::Rep> d_;
};

// v * M for a row vector.
RowVec mul_row(const FieldPtr& f, const RowVec& v, const Matrix& M);
Field::Rep dot(const FieldPtr& f, const RowVec& a, const RowVec& b);
RowVec add_rows(const FieldPtr& f, const RowVec& a, const RowVec& b);
RowVec scale_row(const FieldPtr& f, Field::Rep c, const RowVec& v);

// Reduced row echelon form; optionally reports pivot columns.
Matrix rref(const Matrix& M, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& M);
// RREF basis of the left kernel {x : x M = 0} (rows of the result).
Matrix left_kernel(const Matrix& M);
// RREF basis of the row space (zero rows dropped).
Matrix row_image(const Matrix& M);
Matrix inverse(const Matrix& M);  // DomainError if singular
FieldElement det(const Matrix& M);

// Smallest e >= 1 with M^e = I; DomainError if M is singular,
// BudgetError if e would exceed the budget.
std::uint64_t matrix_order(const Matrix& M, std::uint64_t budget = (std::uint64_t)1 << 20);

// Companion matrix of f (monic-normalized first): superdiagonal ones and
// last row (a_0, ..., a_{n-1}) where f = (-1)^n (X^n - sum a_i X^i),
// i.e. a_i = -coeff_i(monic f).
Matrix companion(const SkewPoly& f);

// theta^k applied to every entry.
Matrix entrywise_theta(const Matrix& M, const Automorphism& theta, long long k = 1);

// p(M) for a commutative polynomial (identity automorphism required).
Matrix eval_poly_matrix(const SkewPoly& p, const Matrix& M);

// Solve x * A = b for the row vector x; nullopt when inconsistent.
std::optional<RowVec> solve_left(const Matrix& A, const RowVec& b);

// Is v in the row space spanned by `basis` (any spanning set)?
bool row_space_contains(const Matrix& basis, const RowVec& v);
// Row-space intersection (RREF basis).
Matrix row_space_intersection(const Matrix& A, const Matrix& B);

// Rational canonical form data of a square matrix over F_q (commutative):
//   C * M = block_diag(blocks) * C  with C invertible,
//   factors[0] | factors[1] | ... | factors.back() = minimal polynomial,
//   blocks[i] = companion(factors[i]), generators[i] = first C-row of block i.
struct Rcf {
    std::vector<SkewPoly> factors;
    std::vector<Matrix> blocks;
    std::vector<RowVec> generators;
    Matrix C;
};
Rcf rational_canonical_form(const Matrix& M);

// Monic minimal polynomial (identity automorphism on M's field).
SkewPoly minpoly(const Matrix& M);

}  // namespace skewcodes
