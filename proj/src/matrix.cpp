#include "skewcodes/matrix.hpp"

#include <algorithm>

#include "skewcodes/factorization.hpp"

namespace skewcodes {

Matrix::Matrix(FieldPtr f, std::size_t rows, std::size_t cols)
    : f_(std::move(f)), r_(rows), c_(cols), d_(rows * cols, 0) {
    if (!f_) throw DomainError("matrix needs a field");
}

Matrix Matrix::identity(FieldPtr f, std::size_t n) {
    Matrix m(std::move(f), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(FieldPtr f, const std::vector<RowVec>& rows, std::size_t cols) {
    Matrix m(std::move(f), rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DomainError("ragged rows in matrix construction");
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::block_diag(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) throw DomainError("block_diag of nothing");
    std::size_t R = 0, C = 0;
    for (const auto& b : blocks) { R += b.rows(); C += b.cols(); }
    Matrix m(blocks.front().field(), R, C);
    std::size_t ro = 0, co = 0;
    for (const auto& b : blocks) {
        if (!b.field()->same_as(*m.field())) throw DomainError("block_diag across fields");
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m.set(ro + i, co + j, b.at(i, j));
        ro += b.rows();
        co += b.cols();
    }
    return m;
}

RowVec Matrix::row(std::size_t i) const {
    RowVec v(c_);
    for (std::size_t j = 0; j < c_; ++j) v[j] = at(i, j);
    return v;
}

void Matrix::set_row(std::size_t i, const RowVec& v) {
    if (v.size() != c_) throw DomainError("row length mismatch");
    for (std::size_t j = 0; j < c_; ++j) set(i, j, v[j]);
}

void Matrix::check_same_field(const Matrix& o) const {
    if (!f_->same_as(*o.f_)) throw DomainError("matrices over different fields");
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_same_field(o);
    if (r_ != o.r_ || c_ != o.c_) throw DomainError("matrix addition shape mismatch");
    Matrix m(f_, r_, c_);
    for (std::size_t i = 0; i < d_.size(); ++i) m.d_[i] = f_->add(d_[i], o.d_[i]);
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_same_field(o);
    if (r_ != o.r_ || c_ != o.c_) throw DomainError("matrix subtraction shape mismatch");
    Matrix m(f_, r_, c_);
    for (std::size_t i = 0; i < d_.size(); ++i) m.d_[i] = f_->sub(d_[i], o.d_[i]);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_same_field(o);
    if (c_ != o.r_) throw DomainError("matrix product shape mismatch");
    Matrix m(f_, r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            Field::Rep a = at(i, k);
            if (!a) continue;
            for (std::size_t j = 0; j < o.c_; ++j) {
                Field::Rep b = o.at(k, j);
                if (!b) continue;
                m.set(i, j, f_->add(m.at(i, j), f_->mul(a, b)));
            }
        }
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    return r_ == o.r_ && c_ == o.c_ && f_->same_as(*o.f_) && d_ == o.d_;
}

Matrix Matrix::transpose() const {
    Matrix m(f_, c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m.set(j, i, at(i, j));
    return m;
}

Matrix Matrix::scale(Field::Rep c) const {
    Matrix m(f_, r_, c_);
    for (std::size_t i = 0; i < d_.size(); ++i) m.d_[i] = f_->mul(c, d_[i]);
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(d_.begin(), d_.end(), [](Field::Rep x) { return x == 0; });
}

bool Matrix::is_identity() const {
    if (r_ != c_) return false;
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if (at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

bool Matrix::is_symmetric() const {
    if (r_ != c_) return false;
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = i + 1; j < c_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Matrix Matrix::vstack(const Matrix& o) const {
    check_same_field(o);
    if (c_ != o.c_) throw DomainError("vstack column mismatch");
    Matrix m(f_, r_ + o.r_, c_);
    std::copy(d_.begin(), d_.end(), m.d_.begin());
    std::copy(o.d_.begin(), o.d_.end(), m.d_.begin() + (long)d_.size());
    return m;
}

Matrix Matrix::hstack(const Matrix& o) const {
    check_same_field(o);
    if (r_ != o.r_) throw DomainError("hstack row mismatch");
    Matrix m(f_, r_, c_ + o.c_);
    for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t j = 0; j < c_; ++j) m.set(i, j, at(i, j));
        for (std::size_t j = 0; j < o.c_; ++j) m.set(i, c_ + j, o.at(i, j));
    }
    return m;
}

RowVec mul_row(const FieldPtr& f, const RowVec& v, const Matrix& M) {
    if (v.size() != M.rows()) throw DomainError("row-vector product shape mismatch");
    RowVec out(M.cols(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i]) continue;
        for (std::size_t j = 0; j < M.cols(); ++j) {
            Field::Rep b = M.at(i, j);
            if (b) out[j] = f->add(out[j], f->mul(v[i], b));
        }
    }
    return out;
}

Field::Rep dot(const FieldPtr& f, const RowVec& a, const RowVec& b) {
    if (a.size() != b.size()) throw DomainError("dot product length mismatch");
    Field::Rep s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = f->add(s, f->mul(a[i], b[i]));
    return s;
}

RowVec add_rows(const FieldPtr& f, const RowVec& a, const RowVec& b) {
    if (a.size() != b.size()) throw DomainError("row addition length mismatch");
    RowVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f->add(a[i], b[i]);
    return out;
}

RowVec scale_row(const FieldPtr& f, Field::Rep c, const RowVec& v) {
    RowVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = f->mul(c, v[i]);
    return out;
}

namespace {

bool vec_is_zero(const RowVec& v) {
    return std::all_of(v.begin(), v.end(), [](Field::Rep x) { return x == 0; });
}

// Reduced row echelon form in place, pivoting only on the first `pivot_cols`
// columns (trailing columns ride along, which implements augmented systems).
// Returns the pivot column of each of the first `rank` rows.
std::vector<std::size_t> echelonize(const FieldPtr& f, std::vector<RowVec>& rows,
                                    std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < pivot_cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        Field::Rep inv = f->inv(rows[rank][c]);
        for (auto& x : rows[rank]) x = f->mul(inv, x);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][c] == 0) continue;
            Field::Rep m = rows[i][c];
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                rows[i][j] = f->sub(rows[i][j], f->mul(m, rows[rank][j]));
        }
        pivots.push_back(c);
        ++rank;
    }
    return pivots;
}

std::vector<RowVec> matrix_rows(const Matrix& M) {
    std::vector<RowVec> rows;
    rows.reserve(M.rows());
    for (std::size_t i = 0; i < M.rows(); ++i) rows.push_back(M.row(i));
    return rows;
}

}  // namespace

Matrix rref(const Matrix& M, std::vector<std::size_t>* pivots) {
    auto rows = matrix_rows(M);
    auto p = echelonize(M.field(), rows, M.cols());
    if (pivots) *pivots = p;
    return Matrix::from_rows(M.field(), rows, M.cols());
}

std::size_t rank(const Matrix& M) {
    auto rows = matrix_rows(M);
    return echelonize(M.field(), rows, M.cols()).size();
}

Matrix left_kernel(const Matrix& M) {
    const auto& f = M.field();
    const std::size_t n = M.rows(), c = M.cols();
    std::vector<RowVec> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i] = M.row(i);
        rows[i].resize(c + n, 0);
        rows[i][c + i] = 1;
    }
    std::size_t rk = echelonize(f, rows, c).size();
    std::vector<RowVec> ker;
    for (std::size_t i = rk; i < n; ++i)
        ker.emplace_back(rows[i].begin() + (long)c, rows[i].end());
    auto kp = ker;
    echelonize(f, kp, n);
    while (!kp.empty() && vec_is_zero(kp.back())) kp.pop_back();
    return Matrix::from_rows(f, kp, n);
}

Matrix row_image(const Matrix& M) {
    auto rows = matrix_rows(M);
    std::size_t rk = echelonize(M.field(), rows, M.cols()).size();
    rows.resize(rk, RowVec(M.cols(), 0));
    return Matrix::from_rows(M.field(), rows, M.cols());
}

Matrix inverse(const Matrix& M) {
    if (M.rows() != M.cols()) throw DomainError("inverse of a non-square matrix");
    const auto& f = M.field();
    const std::size_t n = M.rows();
    std::vector<RowVec> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i] = M.row(i);
        rows[i].resize(2 * n, 0);
        rows[i][n + i] = 1;
    }
    if (echelonize(f, rows, n).size() != n) throw DomainError("singular matrix has no inverse");
    std::vector<RowVec> inv(n);
    for (std::size_t i = 0; i < n; ++i)
        inv[i] = RowVec(rows[i].begin() + (long)n, rows[i].end());
    return Matrix::from_rows(f, inv, n);
}

FieldElement det(const Matrix& M) {
    if (M.rows() != M.cols()) throw DomainError("determinant of a non-square matrix");
    const auto& f = M.field();
    auto rows = matrix_rows(M);
    const std::size_t n = M.rows();
    Field::Rep d = 1;
    bool negate = false;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && rows[p][c] == 0) ++p;
        if (p == n) return f->zero();
        if (p != c) { std::swap(rows[p], rows[c]); negate = !negate; }
        d = f->mul(d, rows[c][c]);
        Field::Rep inv = f->inv(rows[c][c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (rows[i][c] == 0) continue;
            Field::Rep m = f->mul(rows[i][c], inv);
            for (std::size_t j = c; j < n; ++j)
                rows[i][j] = f->sub(rows[i][j], f->mul(m, rows[c][j]));
        }
    }
    if (negate) d = f->neg(d);
    return f->elem(d);
}

std::uint64_t matrix_order(const Matrix& M, std::uint64_t budget) {
    if (M.rows() != M.cols() || M.rows() == 0)
        throw DomainError("matrix order needs a nonempty square matrix");
    if (det(M).is_zero()) throw DomainError("matrix order of a singular matrix");
    Matrix P = M;
    std::uint64_t e = 1;
    while (!P.is_identity()) {
        if (++e > budget) throw BudgetError("matrix order exceeds budget");
        P = P * M;
    }
    return e;
}

Matrix companion(const SkewPoly& f) {
    if (f.is_zero() || f.degree() == 0)
        throw DomainError("companion matrix needs degree >= 1");
    const auto& F = f.field();
    const unsigned n = f.degree();
    SkewPoly m = f.monic();
    Matrix M(F, n, n);
    for (unsigned i = 0; i + 1 < n; ++i) M.set(i, i + 1, 1);
    for (unsigned j = 0; j < n; ++j) M.set(n - 1, j, F->neg(m.coeff(j)));
    return M;
}

Matrix entrywise_theta(const Matrix& M, const Automorphism& theta, long long k) {
    if (!M.field()->same_as(*theta.field()))
        throw DomainError("automorphism from another field applied to matrix");
    Matrix out(M.field(), M.rows(), M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) out.set(i, j, theta.apply(M.at(i, j), k));
    return out;
}

Matrix eval_poly_matrix(const SkewPoly& p, const Matrix& M) {
    if (p.aut_exponent() != 0)
        throw DomainError("polynomial evaluation at a matrix needs the identity automorphism");
    if (M.rows() != M.cols()) throw DomainError("polynomial of a non-square matrix");
    const auto& F = M.field();
    Matrix acc(F, M.rows(), M.rows());
    if (p.is_zero()) return acc;
    for (std::size_t i = p.coeff_count(); i-- > 0;) {
        acc = acc * M;
        if (p.coeff(i)) acc = acc + Matrix::identity(F, M.rows()).scale(p.coeff(i));
    }
    return acc;
}

std::optional<RowVec> solve_left(const Matrix& A, const RowVec& b) {
    const auto& f = A.field();
    if (b.size() != A.cols()) throw DomainError("solve_left shape mismatch");
    const std::size_t k = A.rows(), n = A.cols();
    std::vector<RowVec> rows(k);
    for (std::size_t i = 0; i < k; ++i) {
        rows[i] = A.row(i);
        rows[i].resize(n + k, 0);
        rows[i][n + i] = 1;
    }
    auto pivots = echelonize(f, rows, n);
    RowVec residue = b;
    RowVec x(k, 0);
    for (std::size_t t = 0; t < pivots.size(); ++t) {
        Field::Rep c = residue[pivots[t]];
        if (!c) continue;
        for (std::size_t j = 0; j < n; ++j)
            residue[j] = f->sub(residue[j], f->mul(c, rows[t][j]));
        for (std::size_t j = 0; j < k; ++j)
            x[j] = f->add(x[j], f->mul(c, rows[t][n + j]));
    }
    if (!vec_is_zero(residue)) return std::nullopt;
    return x;
}

bool row_space_contains(const Matrix& basis, const RowVec& v) {
    if (basis.rows() == 0) return vec_is_zero(v);
    return solve_left(basis, v).has_value();
}

Matrix row_space_intersection(const Matrix& A, const Matrix& B) {
    if (!A.field()->same_as(*B.field()) || A.cols() != B.cols())
        throw DomainError("row-space intersection shape mismatch");
    const auto& f = A.field();
    Matrix stacked = A.vstack(B);
    Matrix ker = left_kernel(stacked);  // (x | y) with xA + yB = 0
    std::vector<RowVec> inter;
    for (std::size_t i = 0; i < ker.rows(); ++i) {
        RowVec xy = ker.row(i);
        RowVec x(xy.begin(), xy.begin() + (long)A.rows());
        inter.push_back(mul_row(f, x, A));
    }
    return row_image(Matrix::from_rows(f, inter, A.cols()));
}

// ---- rational canonical form ----

namespace {

// minimal monic p (identity automorphism) with v * p(M) = 0
SkewPoly order_poly(const Matrix& M, const RowVec& v) {
    const auto& F = M.field();
    const Automorphism id(F, 0);
    const std::size_t n = M.rows();
    std::vector<RowVec> krylov;
    RowVec cur = v;
    for (std::size_t d = 0; d <= n; ++d) {
        std::optional<RowVec> sol;
        if (d == 0) {
            if (vec_is_zero(cur)) sol = RowVec{};
        } else {
            sol = solve_left(Matrix::from_rows(F, krylov, n), cur);
        }
        if (sol) {
            std::vector<Field::Rep> c(d + 1, 0);
            for (std::size_t i = 0; i < d; ++i) c[i] = F->neg((*sol)[i]);
            c[d] = 1;
            return SkewPoly::of_reps(id, std::move(c));
        }
        krylov.push_back(cur);
        cur = mul_row(F, cur, M);
    }
    throw Error("order polynomial search did not terminate (internal)");
}

unsigned multiplicity_of(const std::vector<std::pair<SkewPoly, unsigned>>& fac,
                         const SkewPoly& p) {
    for (const auto& [f, m] : fac)
        if (f == p) return m;
    return 0;
}

// vector whose order polynomial is the full minimal polynomial
RowVec max_order_vector(const Matrix& M, const SkewPoly& mu) {
    const auto& F = M.field();
    const std::size_t n = M.rows();
    RowVec u(n, 0);
    u[0] = 1;
    SkewPoly fu = order_poly(M, u);
    for (std::size_t i = 1; i < n && fu != mu; ++i) {
        RowVec e(n, 0);
        e[i] = 1;
        SkewPoly g = order_poly(M, e);
        SkewPoly l = poly_lcm_commutative(fu, g);
        if (l == fu) continue;
        // split l = f1 * g1 with f1 | fu, g1 | g and gcd(f1, g1) = 1
        auto Ff = factor_commutative(fu), Fg = factor_commutative(g),
             Fl = factor_commutative(l);
        SkewPoly f1 = SkewPoly::one(mu.theta()), g1 = f1;
        for (const auto& [p, a] : Fl) {
            unsigned vf = multiplicity_of(Ff, p), vg = multiplicity_of(Fg, p);
            (void)a;
            if (vf >= vg)
                f1 = f1 * p.pow(vf);
            else
                g1 = g1 * p.pow(vg);
        }
        RowVec u1 = mul_row(F, u, eval_poly_matrix(right_quotrem(fu, f1).quot, M));
        RowVec u2 = mul_row(F, e, eval_poly_matrix(right_quotrem(g, g1).quot, M));
        u = add_rows(F, u1, u2);
        fu = order_poly(M, u);
        if (fu != l) throw Error("cyclic vector combination failed (internal)");
    }
    if (fu != mu) throw Error("no cyclic vector of maximal order found (internal)");
    return u;
}

std::vector<RowVec> krylov_rows(const Matrix& M, const RowVec& v, std::size_t count) {
    std::vector<RowVec> rows;
    RowVec cur = v;
    for (std::size_t i = 0; i < count; ++i) {
        rows.push_back(cur);
        cur = mul_row(M.field(), cur, M);
    }
    return rows;
}

}  // namespace

SkewPoly minpoly(const Matrix& M) {
    if (M.rows() != M.cols() || M.rows() == 0)
        throw DomainError("minimal polynomial needs a nonempty square matrix");
    const auto& F = M.field();
    SkewPoly mu = SkewPoly::one(Automorphism(F, 0));
    for (std::size_t i = 0; i < M.rows(); ++i) {
        RowVec e(M.rows(), 0);
        e[i] = 1;
        mu = poly_lcm_commutative(mu, order_poly(M, e));
    }
    return mu;
}

Rcf rational_canonical_form(const Matrix& M) {
    if (M.rows() != M.cols() || M.rows() == 0)
        throw DomainError("rational canonical form needs a nonempty square matrix");
    const auto& F = M.field();
    const std::size_t n = M.rows();

    SkewPoly mu = minpoly(M);
    RowVec u = max_order_vector(M, mu);
    const std::size_t d1 = mu.degree();

    Rcf out;
    if (d1 == n) {
        out.factors = {mu};
        out.blocks = {companion(mu)};
        out.generators = {u};
        out.C = Matrix::from_rows(F, krylov_rows(M, u, n), n);
    } else {
        Matrix V = Matrix::from_rows(F, krylov_rows(M, u, d1), n);
        std::vector<std::size_t> pivots;
        Matrix R = rref(V, &pivots);
        if (pivots.size() != d1) throw Error("cyclic subspace rank mismatch (internal)");
        std::vector<std::size_t> qcols;
        {
            std::size_t pi = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (pi < pivots.size() && pivots[pi] == c) { ++pi; continue; }
                qcols.push_back(c);
            }
        }
        auto reduce_mod_V = [&](RowVec w) {
            for (std::size_t t = 0; t < pivots.size(); ++t) {
                Field::Rep c = w[pivots[t]];
                if (!c) continue;
                RowVec rt = R.row(t);
                for (std::size_t j = 0; j < n; ++j) w[j] = F->sub(w[j], F->mul(c, rt[j]));
            }
            return w;
        };
        const std::size_t nq = qcols.size();
        Matrix Mq(F, nq, nq);
        for (std::size_t j = 0; j < nq; ++j) {
            RowVec e(n, 0);
            e[qcols[j]] = 1;
            RowVec w = reduce_mod_V(mul_row(F, e, M));
            for (std::size_t k2 = 0; k2 < nq; ++k2) Mq.set(j, k2, w[qcols[k2]]);
        }
        Rcf sub = rational_canonical_form(Mq);
        for (std::size_t b = 0; b < sub.factors.size(); ++b) {
            const SkewPoly& fb = sub.factors[b];
            RowVec u0(n, 0);
            for (std::size_t t = 0; t < nq; ++t) u0[qcols[t]] = sub.generators[b][t];
            RowVec w = mul_row(F, u0, eval_poly_matrix(fb, M));
            Matrix Vf = V * eval_poly_matrix(fb, M);
            auto y = solve_left(Vf, w);
            if (!y) throw Error("cyclic complement lift failed (internal)");
            RowVec corr = mul_row(F, *y, V);
            RowVec ub(n);
            for (std::size_t j = 0; j < n; ++j) ub[j] = F->sub(u0[j], corr[j]);
            if (order_poly(M, ub) != fb) throw Error("lifted generator has wrong order (internal)");
            out.factors.push_back(fb);
            out.generators.push_back(ub);
        }
        out.factors.push_back(mu);
        out.generators.push_back(u);
        std::vector<RowVec> crows;
        for (std::size_t b = 0; b < out.factors.size(); ++b) {
            out.blocks.push_back(companion(out.factors[b]));
            auto kr = krylov_rows(M, out.generators[b], out.factors[b].degree());
            crows.insert(crows.end(), kr.begin(), kr.end());
        }
        out.C = Matrix::from_rows(F, crows, n);
    }

    // certification: C M = D C with C invertible, and the divisibility chain
    if (rank(out.C) != n) throw Error("canonical basis is singular (internal)");
    Matrix D = Matrix::block_diag(out.blocks);
    if (out.C * M != D * out.C) throw Error("canonical form does not conjugate (internal)");
    for (std::size_t i = 0; i + 1 < out.factors.size(); ++i)
        if (!right_quotrem(out.factors[i + 1], out.factors[i]).rem.is_zero())
            throw Error("invariant factors do not form a chain (internal)");
    return out;
}

}  // namespace skewcodes
