#include "skewcodes/construct.hpp"

#include <algorithm>

#include "skewcodes/errors.hpp"
#include "skewcodes/semilinear.hpp"

namespace skewcodes {

const Matrix& TwistedPowers::at(std::size_t k) const {
    if (k < 1 || k > powers.size()) throw DomainError("power index out of range");
    return powers[k - 1];
}

TwistedPowers twisted_powers(const Matrix& A, const Automorphism& theta, std::size_t h) {
    if (A.rows() != A.cols()) throw DomainError("twisted powers need a square matrix");
    if (A.field() != theta.field() && !A.field()->same_as(*theta.field()))
        throw DomainError("matrix and automorphism live over different fields");
    if (h < 1) throw DomainError("need at least one power");

    TwistedPowers tp{A, theta, {}};
    tp.powers.reserve(h);
    tp.powers.push_back(A);
    for (std::size_t k = 2; k <= h; ++k)
        tp.powers.push_back(entrywise_theta(A, theta, (long long)k - 1) * tp.powers.back());

    // the chain must reproduce k-fold application of Theta o A; unit vectors
    // are theta-fixed, so e_i (Theta o A)^k is just row i of A_k
    SemiLinearMap T(theta, A);
    const std::size_t n = A.rows();
    for (std::size_t k = 1; k <= h; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            RowVec e(n, 0);
            e[i] = 1;
            if (T.apply(e, k) != tp.powers[k - 1].row(i))
                throw Error("internal: twisted power chain disagrees with direct application");
        }
    return tp;
}

namespace {

Matrix locus_matrix(const TwistedPowers& tp, const RowVec& point) {
    const std::size_t n = tp.A.rows();
    Matrix S = Matrix::identity(tp.A.field(), n).scale(point[0]);
    for (std::size_t j = 1; j < point.size(); ++j)
        S = S + tp.powers[j - 1].scale(point[j]);
    return S;
}

// basis of {v : v S = 0, theta(v_i) = v_i for all i}.  Both constraints are
// F_p-linear, so the system is solved over the prime field in the base-p
// digit coordinates of each entry, then reassembled and echelonized; every
// step keeps the entries inside the fixed subfield.
Matrix fixed_point_kernel(const Matrix& S, const Automorphism& th) {
    const FieldPtr& F = S.field();
    const unsigned p = F->p(), s = F->s();
    const std::size_t n = S.rows();
    FieldPtr Fp = Field::make(p, 1);

    Matrix sys(Fp, n * s, 2 * n * s);
    for (std::size_t i = 0; i < n; ++i)
        for (unsigned d = 0; d < s; ++d) {
            const std::size_t row = i * s + d;
            std::vector<unsigned> unit(s, 0);
            unit[d] = 1;
            const Field::Rep b = F->digits_rep(unit);
            const auto fix = F->rep_digits(F->sub(th.apply(b), b));
            for (unsigned e = 0; e < s; ++e) sys.set(row, i * s + e, fix[e]);
            for (std::size_t c = 0; c < n; ++c) {
                const auto prod = F->rep_digits(F->mul(b, S.at(i, c)));
                for (unsigned e = 0; e < s; ++e) sys.set(row, n * s + c * s + e, prod[e]);
            }
        }

    Matrix null = left_kernel(sys);
    std::vector<RowVec> rows;
    rows.reserve(null.rows());
    for (std::size_t r = 0; r < null.rows(); ++r) {
        RowVec v(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<unsigned> dig(s);
            for (unsigned d = 0; d < s; ++d) dig[d] = (unsigned)null.at(r, i * s + d);
            v[i] = F->digits_rep(dig);
        }
        rows.push_back(std::move(v));
    }
    return row_image(Matrix::from_rows(F, rows, n));
}

}  // namespace

FieldElement fh_eval(const TwistedPowers& tp, const RowVec& point) {
    if (point.size() != tp.h() + 1) throw DomainError("point needs h+1 coordinates");
    const auto& F = tp.A.field();
    bool nonzero = false;
    for (Field::Rep c : point) {
        if (c >= F->q()) throw DomainError("point coordinate out of field range");
        nonzero = nonzero || c != 0;
    }
    if (!nonzero) throw DomainError("the zero tuple is not a projective point");
    return det(locus_matrix(tp, point));
}

std::vector<ZeroLocusPoint> zero_locus_scan(const TwistedPowers& tp, std::uint64_t budget) {
    const auto& F = tp.A.field();
    const std::size_t h = tp.h();

    std::uint64_t count = 0, power = 1;  // (q^{h+1} - 1)/(q - 1)
    for (std::size_t l = 0; l <= h; ++l) {
        count += power;
        if (count > budget) throw BudgetError("projective point scan exceeds the budget");
        if (l < h) power *= F->q();
    }

    std::vector<ZeroLocusPoint> found;
    for (std::size_t lead = 0; lead <= h; ++lead) {
        RowVec point(h + 1, 0);
        point[lead] = 1;
        const std::size_t free = h - lead;
        std::vector<Field::Rep> tail(free, 0);
        bool more = true;
        while (more) {
            for (std::size_t i = 0; i < free; ++i) point[lead + 1 + i] = tail[i];
            Matrix S = locus_matrix(tp, point);
            if (det(S).is_zero())
                found.push_back({point, left_kernel(S), fixed_point_kernel(S, tp.theta)});
            more = false;
            for (std::size_t i = free; i-- > 0;) {
                if (++tail[i] < F->q()) {
                    more = true;
                    break;
                }
                tail[i] = 0;
            }
        }
    }
    return found;
}

LinearCode code_from_point(const SemiLinearMap& T, const RowVec& v, std::size_t h) {
    bool zero = true;
    for (Field::Rep c : v) zero = zero && c == 0;
    if (zero) throw DomainError("seed vector must be nonzero");
    CyclicSubspace cyc = cyclic_subspace(T, v);
    if (cyc.dim > h)
        throw DomainError("the cyclic span of the seed exceeds the promised bound");
    return LinearCode(cyc.basis);
}

Matrix gcd_kernel(const SkewPoly& p, const Matrix& M) {
    if (!p.theta().is_identity())
        throw DomainError("gcd kernel is a commutative-polynomial tool");
    if (M.rows() != M.cols() || det(M).is_zero())
        throw DomainError("need an invertible matrix");
    SkewPoly m = minpoly(M);
    SkewPoly g = p.is_zero() ? m : right_gcd(p, m).g;
    return left_kernel(eval_poly_matrix(g, M));
}

SkewPoly shorten_generator(const SkewPoly& g) {
    if (!g.is_monic() || g.constant() == 0)
        throw DomainError("shortening needs a monic generator with nonzero constant term");
    return theta_shift(g, 1);
}

Matrix stripe_matrix(const SkewPoly& g, std::size_t n) {
    if (g.is_zero() || g.constant() == 0 || !g.is_monic())
        throw DomainError("stripe rows need a monic generator with nonzero constant term");
    if (g.degree() > n) throw DomainError("generator degree exceeds the length");
    const std::size_t k = n - g.degree();
    Matrix G(g.field(), k, n);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i <= g.degree(); ++i)
            G.set(j, j + i, g.theta().apply(g.coeff(i), (long long)j));
    return G;
}

std::optional<std::uint64_t> DistanceTable::at(std::size_t n, std::size_t k) const {
    auto it = cells.find({n, k});
    return it == cells.end() ? std::nullopt : it->second;
}

DistanceTable distance_table(const FieldPtr& F, const Automorphism& theta, std::size_t n_max,
                             std::uint64_t budget) {
    DistanceTable tab;
    tab.q = F->q();
    tab.theta_exponent = theta.exponent();
    for (std::size_t n = 1; n <= n_max; ++n)
        for (std::size_t k = 1; k <= n; ++k) {
            const std::size_t r = n - k;
            // q^{r-1}(q-1) generators, q^k words each
            const auto sat_mul = [](std::uint64_t a, std::uint64_t b) {
                return (a != 0 && b > UINT64_MAX / a) ? UINT64_MAX : a * b;
            };
            std::uint64_t work = r >= 1 ? F->q() - 1 : 1;
            for (std::size_t i = 1; i < r; ++i) work = sat_mul(work, F->q());
            for (std::size_t i = 0; i < k; ++i) work = sat_mul(work, F->q());
            if (work > budget) {
                tab.cells[{n, k}] = std::nullopt;
                continue;
            }

            std::uint64_t best = 0;
            bool blown = false;
            if (r == 0) {
                best = 1;  // g = 1 spans the whole space
            } else {
                std::vector<Field::Rep> mid(r - 1, 0);  // g_1..g_{r-1}
                for (Field::Rep g0 = 1; g0 < F->q() && !blown; ++g0) {
                    bool more = true;
                    while (more && !blown) {
                        std::vector<Field::Rep> coeffs;
                        coeffs.reserve(r + 1);
                        coeffs.push_back(g0);
                        for (Field::Rep c : mid) coeffs.push_back(c);
                        coeffs.push_back(1);
                        SkewPoly g = SkewPoly::of_reps(theta, coeffs);
                        try {
                            best = std::max(best,
                                            min_distance(LinearCode(stripe_matrix(g, n)), budget));
                        } catch (const BudgetError&) {
                            blown = true;
                        }
                        more = false;
                        for (std::size_t i = mid.size(); i-- > 0;) {
                            if (++mid[i] < F->q()) {
                                more = true;
                                break;
                            }
                            mid[i] = 0;
                        }
                    }
                }
            }
            tab.cells[{n, k}] = blown ? std::nullopt : std::optional<std::uint64_t>(best);
        }
    return tab;
}

}  // namespace skewcodes
