#include "skewcodes/embed.hpp"

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "skewcodes/errors.hpp"

namespace skewcodes {

namespace {

void check_period_input(const SkewPoly& f, const char* who) {
    if (f.is_zero() || f.degree() < 1)
        throw DomainError(std::string(who) + ": need deg f >= 1");
    if (f.constant() == 0)
        throw DomainError(std::string(who) +
                          ": f has zero constant term, so X^m - 1 is never a multiple");
}

// q^n + n - 2, saturating; only a stop for runaway searches.
std::uint64_t period_bound(std::uint32_t q, std::size_t n) {
    std::uint64_t qn = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (qn > std::numeric_limits<std::uint64_t>::max() / q)
            return std::numeric_limits<std::uint64_t>::max();
        qn *= q;
    }
    return qn + n - 2;
}

bool is_one_vector(const std::vector<Field::Rep>& r) {
    if (r.empty() || r[0] != 1) return false;
    for (std::size_t j = 1; j < r.size(); ++j)
        if (r[j] != 0) return false;
    return true;
}

}  // namespace

PeriodData period(const SkewPoly& f) {
    check_period_input(f, "period");
    const FieldPtr& F = f.field();
    Automorphism th = f.theta();
    const std::size_t n = f.degree();
    const std::uint64_t bound = period_bound(F->q(), n);

    // Walk the remainders of X^i modulo the left ideal Rf.  Multiplying by X
    // on the right keeps left multiples of f, so each step is one coefficient
    // shift plus at most one reduction by f*d (d a constant); X^m - 1 lands
    // in Rf exactly when the remainder returns to 1.  The reduction constants
    // d_i are the coefficients of the cofactor: q_f = sum d_i X^{m-i}.
    std::vector<Field::Rep> r(n, 0);
    r[0] = 1;
    std::vector<Field::Rep> ds;
    const Field::Rep lead_inv = F->inv(f.lead());
    for (std::uint64_t i = 1; i <= bound; ++i) {
        Field::Rep top = r[n - 1];
        for (std::size_t j = n; j-- > 1;) r[j] = r[j - 1];
        r[0] = 0;
        Field::Rep d = 0;
        if (top != 0) {
            d = th.apply(F->mul(top, lead_inv), -static_cast<long long>(n));
            for (std::size_t j = 0; j < n; ++j)
                r[j] = F->sub(r[j], F->mul(f.coeff(j), th.apply(d, static_cast<long long>(j))));
        }
        ds.push_back(d);
        if (is_one_vector(r)) {
            const std::size_t m = static_cast<std::size_t>(i);
            std::vector<Field::Rep> qc(m - n + 1, 0);
            for (std::size_t j = 0; j + n <= m; ++j) qc[j] = ds[m - j - 1];
            PeriodData pd{f, m, SkewPoly::of_reps(th, std::move(qc))};
            if (pd.q_f.is_zero() || pd.q_f.degree() != m - n)
                throw Error("internal: period cofactor has the wrong degree");
            return pd;
        }
    }
    throw Error("internal: period search passed the q^n + n - 2 bound");
}

std::size_t period_commutative(const SkewPoly& f) {
    check_period_input(f, "period_commutative");
    if (!f.theta().is_identity())
        throw DomainError("period_commutative: automorphism must be the identity");
    const FieldPtr& F = f.field();
    Matrix A = companion(f);
    std::uint64_t p0 = F->element_order(det(A).rep());
    Matrix B = Matrix::identity(F, A.rows());
    for (std::uint64_t i = 0; i < p0; ++i) B = B * A;
    std::uint64_t l = 1;
    for (const Matrix& blk : rational_canonical_form(B).blocks)
        l = std::lcm(l, matrix_order(blk));
    return static_cast<std::size_t>(p0 * l);
}

std::size_t period_star(const SkewPoly& f) {
    check_period_input(f, "period_star");
    const FieldPtr& F = f.field();
    Automorphism th = f.theta();
    const SkewPoly g = star(f);
    const std::size_t n = g.degree();
    const std::uint64_t bound = period_bound(F->q(), n);

    // Same walk on the other side: X * (p * g + r) = (X p) * g + X r, so
    // left multiplication by X keeps right multiples of g.
    std::vector<Field::Rep> r(n, 0);
    r[0] = 1;
    const Field::Rep lead_inv = F->inv(g.lead());
    for (std::uint64_t i = 1; i <= bound; ++i) {
        Field::Rep top = th.apply(r[n - 1]);
        for (std::size_t j = n; j-- > 1;) r[j] = th.apply(r[j - 1]);
        r[0] = 0;
        if (top != 0) {
            Field::Rep d = F->mul(top, lead_inv);
            for (std::size_t j = 0; j < n; ++j)
                r[j] = F->sub(r[j], F->mul(d, g.coeff(j)));
        }
        if (is_one_vector(r)) return static_cast<std::size_t>(i);
    }
    throw Error("internal: period search passed the q^n + n - 2 bound");
}

Matrix q_matrix(const PeriodData& pd) {
    const FieldPtr& F = pd.f.field();
    const std::size_t n = pd.f.degree(), m = pd.m;
    Matrix Q(F, n, m);
    for (std::size_t j = 0; j < n; ++j) {
        SkewPoly p = pd.q_f.mul_x_left(static_cast<unsigned>(j));
        for (std::size_t t = 0; t < p.coeff_count(); ++t) Q.set(j, t, p.coeff(t));
    }
    return Q;
}

EmbeddingData embedding(const std::vector<SkewPoly>& components, const Matrix& C) {
    if (components.empty()) throw DomainError("embedding: need at least one component");
    const FieldPtr& F = components.front().field();
    Automorphism th = components.front().theta();
    for (const SkewPoly& f : components) {
        if (!f.field()->same_as(*F) || f.theta() != th)
            throw DomainError("embedding: components live in different rings");
    }

    EmbeddingData ed;
    std::vector<Matrix> qs, cycles;
    std::size_t n = 0;
    for (const SkewPoly& f : components) {
        PeriodData pd = period(f);
        qs.push_back(q_matrix(pd));
        SkewPoly xm1 = SkewPoly::monomial(th, F->one(), static_cast<unsigned>(pd.m)) -
                       SkewPoly::one(th);
        cycles.push_back(companion(xm1));
        n += f.degree();
        ed.periods.push_back(std::move(pd));
    }
    ed.Q = qs;
    ed.Qhat = Matrix::block_diag(qs);
    ed.Phat = Matrix::block_diag(cycles);

    if (C.rows() != n || C.cols() != n)
        throw DomainError("embedding: coordinate change must be n x n");
    if (!C.field()->same_as(*F))
        throw DomainError("embedding: coordinate change over the wrong field");
    ed.C = C;
    ed.Cinv = inverse(C);
    Matrix ciQ = ed.Cinv * ed.Qhat;
    ed.B = ciQ * ciQ.transpose();
    if (!ed.B.is_symmetric()) throw Error("internal: bilinear form matrix not symmetric");
    ed.rank_B = rank(ed.B);
    return ed;
}

EmbeddingData embedding(const std::vector<SkewPoly>& components) {
    if (components.empty()) throw DomainError("embedding: need at least one component");
    std::size_t n = 0;
    for (const SkewPoly& f : components) {
        if (f.is_zero()) throw DomainError("embedding: zero component");
        n += f.degree();
    }
    return embedding(components, Matrix::identity(components.front().field(), n));
}

RowVec immerse(const EmbeddingData& ed, const RowVec& v) {
    if (v.size() != ed.n())
        throw DomainError("immerse: expected a vector of length " + std::to_string(ed.n()));
    const FieldPtr& F = ed.field();
    return mul_row(F, mul_row(F, v, ed.Cinv), ed.Qhat);
}

CorollaryReport corollary_checks(const PeriodData& pd) {
    CorollaryReport rep;
    Automorphism th = pd.f.theta();
    rep.m = pd.m;
    rep.s = th.order();
    rep.r = pd.m % rep.s;
    rep.q_f_fixed = pd.q_f.theta_shift(static_cast<long long>(rep.r)) == pd.q_f;
    rep.s_divides_m = rep.r == 0;

    // Does every theta^t with 0 < t < s move f's coefficient vector?  The
    // lead is normalized away first: scaling f on the left does not change
    // the period, and the stated vector is f's in monic form up to sign.
    SkewPoly fm = pd.f.monic();
    rep.f_moved_below_s = true;
    for (std::size_t t = 1; t < rep.s; ++t) {
        if (fm.theta_shift(static_cast<long long>(t)) == fm) {
            rep.f_moved_below_s = false;
            break;
        }
    }
    return rep;
}

}  // namespace skewcodes
