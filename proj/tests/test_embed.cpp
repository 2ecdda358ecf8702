#include <doctest.h>

#include <random>

#include "skewcodes/codes.hpp"
#include "skewcodes/embed.hpp"
#include "skewcodes/semilinear.hpp"

using namespace skewcodes;

namespace {

struct F4 {
    FieldPtr F = Field::make(2, 2);
    Automorphism th{F, 1};  // Frobenius
    Automorphism id{F, 0};
    Field::Rep a = 2, a2 = 3;
    SkewPoly poly(std::vector<Field::Rep> c) const { return SkewPoly::of_reps(th, std::move(c)); }
};

// The four cubics over F_4 (theta = Frobenius) used as worked instances.
SkewPoly showcase(const F4& k, int i) {
    switch (i) {
        case 0: return k.poly({1, 0, 1, 1});          // X^3 + X^2 + 1
        case 1: return k.poly({k.a, k.a2, k.a2, 1});  // X^3 + a^2 X^2 + a^2 X + a
        case 2: return k.poly({k.a2, k.a, 1, 1});     // X^3 + X^2 + a X + a^2
        default: return k.poly({k.a2, 0, 0, 1});      // X^3 + a^2
    }
}

SkewPoly random_monic(const FieldPtr& F, const Automorphism& th, std::mt19937& rng,
                      unsigned deg) {
    std::vector<Field::Rep> c(deg + 1, 0);
    c[deg] = 1;
    c[0] = 1 + rng() % (F->q() - 1);
    for (unsigned i = 1; i < deg; ++i) c[i] = rng() % F->q();
    return SkewPoly::of_reps(th, std::move(c));
}

Matrix random_invertible(const FieldPtr& F, std::size_t n, std::mt19937& rng) {
    for (;;) {
        Matrix M(F, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) M.set(i, j, rng() % F->q());
        if (rank(M) == n) return M;
    }
}

RowVec random_vec(const FieldPtr& F, std::size_t n, std::mt19937& rng) {
    RowVec v(n);
    for (auto& c : v) c = rng() % F->q();
    return v;
}

SkewPoly x_power_minus_one(const Automorphism& th, std::size_t m) {
    return SkewPoly::monomial(th, th.field()->one(), static_cast<unsigned>(m)) -
           SkewPoly::one(th);
}

Matrix cycle_matrix(const Automorphism& th, std::size_t m) {
    return companion(x_power_minus_one(th, m));
}

// All monic degree-deg polynomials with nonzero constant term.
template <typename Fn>
void for_each_monic(const FieldPtr& F, const Automorphism& th, unsigned deg, Fn fn) {
    std::vector<Field::Rep> c(deg + 1, 0);
    c[deg] = 1;
    c[0] = 1;
    for (;;) {
        fn(SkewPoly::of_reps(th, c));
        unsigned i = 0;
        while (i < deg) {
            ++c[i];
            if (c[i] == F->q()) {
                c[i] = (i == 0) ? 1 : 0;
                ++i;
            } else {
                break;
            }
        }
        if (i == deg) break;
    }
}

}  // namespace

TEST_CASE("period of a skew polynomial") {
    F4 k;
    SUBCASE("period 8 against matrix order 21") {
        SkewPoly f = k.poly({1, k.a, 0, 1});  // X^3 + a X + 1
        PeriodData pd = period(f);
        CHECK(pd.m == 8);
        CHECK(pd.q_f == k.poly({1, k.a, 1, k.a2, 0, 1}));  // X^5+a^2X^3+X^2+aX+1
        CHECK(f * pd.q_f == x_power_minus_one(k.th, 8));

        // The matrix order is 21 here, strictly larger than the period, and
        // X^21 - 1 is not even a left multiple of f.
        Matrix A = companion(f);
        CHECK(matrix_order(A) == 21);
        QuotRem qr = left_quotrem(x_power_minus_one(k.th, 21), f);
        CHECK(qr.rem == k.poly({k.a, k.a2, 1}));  // X^2 + a^2 X + a
        std::vector<Field::Rep> qc(19, 0);
        qc[0] = k.a2;
        qc[2] = 1;
        qc[5] = 1;
        qc[6] = k.a;
        qc[7] = 1;
        qc[8] = k.a2;
        qc[10] = 1;
        qc[13] = 1;
        qc[14] = k.a;
        qc[15] = 1;
        qc[16] = k.a2;
        qc[18] = 1;
        CHECK(qr.quot == SkewPoly::of_reps(k.th, qc));
    }
    SUBCASE("degree-5 inputs with subfield coefficients") {
        CHECK(period(k.poly({1, 0, 1, 1, 0, 1})).m == 12);  // X^5+X^3+X^2+1
        CHECK(period(k.poly({1, 0, 1, 0, 0, 1})).m == 31);  // X^5+X^2+1
    }
    SUBCASE("already of the target shape") {
        FieldPtr F2 = Field::make(2, 1);
        Automorphism id(F2, 0);
        PeriodData pd = period(SkewPoly::of_reps(id, {1, 0, 1}));  // X^2 - 1
        CHECK(pd.m == 2);
        CHECK(pd.q_f.is_one());
    }
    SUBCASE("input validation") {
        CHECK_THROWS_AS(period(k.poly({0, 1, 1})), DomainError);  // zero constant
        CHECK_THROWS_AS(period(k.poly({k.a})), DomainError);      // degree 0
        CHECK_THROWS_AS(period(SkewPoly::zero(k.th)), DomainError);
    }
    SUBCASE("bounds and reconstruction on random inputs") {
        std::mt19937 rng(71);
        for (int trial = 0; trial < 80; ++trial) {
            unsigned deg = 1 + rng() % 3;
            SkewPoly f = random_monic(k.F, k.th, rng, deg);
            if (trial % 3 == 0) f = f.scale_left(1 + rng() % 3);  // non-monic too
            PeriodData pd = period(f);
            std::uint64_t qn = 1;
            for (unsigned i = 0; i < deg; ++i) qn *= k.F->q();
            CHECK(pd.m >= deg);
            CHECK(pd.m <= qn + deg - 2);
            CHECK(pd.q_f.degree() == pd.m - deg);
            CHECK(f * pd.q_f == x_power_minus_one(k.th, pd.m));
        }
    }
}

TEST_CASE("commutative period through the companion matrix") {
    SUBCASE("binary cubic") {
        FieldPtr F2 = Field::make(2, 1);
        Automorphism id(F2, 0);
        CHECK(period_commutative(SkewPoly::of_reps(id, {1, 0, 1, 1})) == 7);
        F4 k;
        CHECK(period_commutative(SkewPoly::of_reps(k.id, {1, 0, 1, 1})) == 7);
    }
    SUBCASE("already of the target shape") {
        FieldPtr F2 = Field::make(2, 1);
        Automorphism id(F2, 0);
        CHECK(period_commutative(SkewPoly::of_reps(id, {1, 0, 1})) == 2);
    }
    SUBCASE("rejects a genuinely twisted ring") {
        F4 k;
        CHECK_THROWS_AS(period_commutative(k.poly({1, k.a, 0, 1})), DomainError);
    }
    SUBCASE("agreement with the skew search and the matrix order") {
        // Exhaustive over monic f with f(0) != 0, deg <= 5, q <= 4.  Two
        // extra shortcuts are checked along the way: m = n + min{h :
        // (last companion row) A^h = e_1}, and m = p_0 m' where p_0 is the
        // order of det A and m' the order of A^{p_0}.
        for (auto [p, s] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {2, 2}}) {
            FieldPtr F = Field::make(p, s);
            Automorphism id(F, 0);
            for (unsigned deg = 1; deg <= 5; ++deg) {
                for_each_monic(F, id, deg, [&](const SkewPoly& f) {
                    PeriodData pd = period(f);
                    REQUIRE(period_commutative(f) == pd.m);
                    Matrix A = companion(f);
                    REQUIRE(matrix_order(A) == pd.m);

                    RowVec e1(deg, 0);
                    e1[0] = 1;
                    RowVec w = A.row(deg - 1);
                    std::size_t h = 0;
                    while (w != e1) {
                        w = mul_row(F, w, A);
                        ++h;
                        REQUIRE(h <= pd.m);
                    }
                    REQUIRE(pd.m == deg + h);
                    REQUIRE(pd.q_f.degree() == h);

                    std::uint64_t p0 = F->element_order(det(A).rep());
                    Matrix B = Matrix::identity(F, deg);
                    for (std::uint64_t i = 0; i < p0; ++i) B = B * A;
                    REQUIRE(pd.m == p0 * matrix_order(B));
                });
            }
        }
    }
}

TEST_CASE("star period equals the period") {
    F4 k;
    SUBCASE("order-8 cubic") {
        SkewPoly f = k.poly({1, k.a, 0, 1});
        CHECK(star(f) == k.poly({1, 0, k.a, 1}));  // X^3 + a X^2 + 1
        CHECK(period_star(f) == 8);
    }
    SUBCASE("identity automorphism") {
        FieldPtr F2 = Field::make(2, 1);
        Automorphism id(F2, 0);
        CHECK(period_star(SkewPoly::of_reps(id, {1, 0, 1})) == 2);
    }
    SUBCASE("random agreement") {
        std::mt19937 rng(72);
        for (int trial = 0; trial < 40; ++trial) {
            SkewPoly f = random_monic(k.F, k.th, rng, 1 + rng() % 4);
            CHECK(period_star(f) == period(f).m);
        }
        FieldPtr F9 = Field::make(3, 2);
        Automorphism frob(F9, 1);
        for (int trial = 0; trial < 20; ++trial) {
            SkewPoly f = random_monic(F9, frob, rng, 1 + rng() % 3);
            CHECK(period_star(f) == period(f).m);
        }
    }
}

TEST_CASE("multiplier matrix") {
    F4 k;
    const Field::Rep a = k.a, b = k.a2;
    SUBCASE("the four showcase matrices") {
        std::vector<std::size_t> ms = {7, 6, 6, 6};
        std::vector<SkewPoly> qs = {
            k.poly({1, 0, 1, 1, 1}),  // X^4+X^3+X^2+1
            k.poly({b, b, a, 1}),     // X^3+aX^2+a^2X+a^2
            k.poly({a, a, 1, 1}),     // X^3+X^2+aX+a
            k.poly({a, 0, 0, 1}),     // X^3+a
        };
        std::vector<std::vector<RowVec>> rows = {
            {{1, 0, 1, 1, 1, 0, 0}, {0, 1, 0, 1, 1, 1, 0}, {0, 0, 1, 0, 1, 1, 1}},
            {{b, b, a, 1, 0, 0}, {0, a, a, b, 1, 0}, {0, 0, b, b, a, 1}},
            {{a, a, 1, 1, 0, 0}, {0, b, b, 1, 1, 0}, {0, 0, a, a, 1, 1}},
            {{a, 0, 0, 1, 0, 0}, {0, b, 0, 0, 1, 0}, {0, 0, a, 0, 0, 1}},
        };
        for (int i = 0; i < 4; ++i) {
            CAPTURE(i);
            PeriodData pd = period(showcase(k, i));
            CHECK(pd.m == ms[i]);
            CHECK(pd.q_f == qs[i]);
            CHECK(q_matrix(pd) == Matrix::from_rows(k.F, rows[i], ms[i]));
        }
    }
    SUBCASE("rows follow the twisted cycle") {
        for (int i = 0; i < 4; ++i) {
            PeriodData pd = period(showcase(k, i));
            Matrix Q = q_matrix(pd);
            SemiLinearMap shift(k.th, cycle_matrix(k.th, pd.m));
            for (std::size_t j = 0; j < Q.rows(); ++j)
                CHECK(Q.row(j) == shift.apply(Q.row(0), j));
        }
    }
    SUBCASE("vectors are carried to multiples of the cofactor") {
        std::mt19937 rng(73);
        for (int i = 0; i < 4; ++i) {
            PeriodData pd = period(showcase(k, i));
            Matrix Q = q_matrix(pd);
            SkewPoly ambient = x_power_minus_one(k.th, pd.m);
            for (int trial = 0; trial < 12; ++trial) {
                RowVec v = random_vec(k.F, 3, rng);
                CHECK(pi(mul_row(k.F, v, Q), ambient) == pi(v, pd.f) * pd.q_f);
            }
        }
    }
}

TEST_CASE("embedding data and the bilinear form") {
    F4 k;
    const Field::Rep a = k.a, b = k.a2;
    SUBCASE("single components with identity change") {
        std::vector<std::vector<RowVec>> bs = {
            {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}},
            {{a, 1, a}, {1, b, 1}, {a, 1, a}},
            {{0, b, 0}, {b, 0, a}, {0, a, 0}},
            {{a, 0, 0}, {0, b, 0}, {0, 0, a}},
        };
        for (int i = 0; i < 4; ++i) {
            CAPTURE(i);
            EmbeddingData ed = embedding({showcase(k, i)});
            CHECK(ed.B == Matrix::from_rows(k.F, bs[i], 3));
            CHECK(ed.rank_B == static_cast<std::size_t>(i));
            CHECK(ed.B.is_symmetric());
            CHECK(ed.C.is_identity());

            // rank B = n - dim(Ker Qhat_t meet image of the immersion)
            Matrix K = left_kernel(ed.Qhat.transpose());
            Matrix I = row_image(ed.Cinv * ed.Qhat);
            CHECK(ed.rank_B == 3 - row_space_intersection(K, I).rows());
        }
        EmbeddingData ed2 = embedding({showcase(k, 2)});
        Matrix ker = left_kernel(ed2.B);
        CHECK(ker.rows() == 1);
        CHECK(row_space_contains(ker, {b, 0, 1}));
        CHECK(ker.row(0) == RowVec{1, 0, a});  // the same line, normalized
    }
    SUBCASE("a vanishing form means a self-orthogonal image") {
        EmbeddingData ed = embedding({showcase(k, 0)});
        CHECK(ed.B.is_zero());
        Matrix Q = ed.Qhat;
        CHECK(rank(Q) == 3);
        CHECK((Q * Q.transpose()).is_zero());
        LinearCode image(Q);
        CHECK(image.k() == 3);
        // every nonzero word is a combination u + a*v of two weight-4 binary
        // words with distinct or equal supports, so the distance is exactly 4
        CHECK(min_distance(image) == 4);
        // its row space is closed under both the twisted and the plain shift
        CHECK(is_invariant(SemiLinearMap(k.th, cycle_matrix(k.th, 7)), Q));
        CHECK(is_invariant(SemiLinearMap(k.id, cycle_matrix(k.th, 7)), Q));
    }
    SUBCASE("products and a coordinate change") {
        std::mt19937 rng(74);
        std::vector<SkewPoly> comps = {showcase(k, 1), showcase(k, 3)};
        EmbeddingData plain = embedding(comps);
        CHECK(plain.C.is_identity());
        CHECK(plain.n() == 6);
        CHECK(plain.m() == 12);
        CHECK(plain.Qhat == Matrix::block_diag({plain.Q[0], plain.Q[1]}));
        CHECK(plain.Phat ==
              Matrix::block_diag({cycle_matrix(k.th, 6), cycle_matrix(k.th, 6)}));

        for (int trial = 0; trial < 8; ++trial) {
            Matrix C = random_invertible(k.F, 6, rng);
            EmbeddingData ed = embedding(comps, C);
            Matrix ciQ = ed.Cinv * ed.Qhat;
            CHECK(ed.B == ciQ * ciQ.transpose());
            CHECK(ed.B.is_symmetric());
            Matrix K = left_kernel(ed.Qhat.transpose());
            CHECK(ed.rank_B == 6 - row_space_intersection(K, row_image(ciQ)).rows());
        }
    }
    SUBCASE("input validation") {
        CHECK_THROWS_AS(embedding({}), DomainError);
        CHECK_THROWS_AS(embedding({k.poly({0, 1})}), DomainError);  // f(0) = 0
        CHECK_THROWS_AS(embedding({showcase(k, 1)}, Matrix::identity(k.F, 4)),
                        DomainError);
        CHECK_THROWS_AS(embedding({showcase(k, 1)}, Matrix(k.F, 3, 3)), DomainError);
        SkewPoly plain = SkewPoly::of_reps(k.id, {1, 0, 1, 1});
        CHECK_THROWS_AS(embedding({showcase(k, 0), plain}), DomainError);
    }
}

TEST_CASE("immersion") {
    F4 k;
    SUBCASE("zero and shape") {
        EmbeddingData ed = embedding({showcase(k, 1)});
        CHECK(immerse(ed, {0, 0, 0}) == RowVec(6, 0));
        CHECK_THROWS_AS(immerse(ed, {0, 0}), DomainError);
    }
    SUBCASE("intertwines the semi-linear map with the twisted shift") {
        std::mt19937 rng(75);
        std::vector<SkewPoly> comps = {showcase(k, 1), showcase(k, 2)};
        Matrix D = Matrix::block_diag({companion(comps[0]), companion(comps[1])});
        for (int trial = 0; trial < 6; ++trial) {
            Matrix C = random_invertible(k.F, 6, rng);
            EmbeddingData ed = embedding(comps, C);
            SemiLinearMap T(k.th, inverse(entrywise_theta(C, k.th)) * D * C);
            SemiLinearMap shift(k.th, ed.Phat);
            for (int t = 0; t < 10; ++t) {
                RowVec v = random_vec(k.F, 6, rng);
                std::size_t steps = rng() % 4;
                CHECK(immerse(ed, T.apply(v, steps)) ==
                      shift.apply(immerse(ed, v), steps));
            }
        }
    }
    SUBCASE("module codes immerse to twist-invariant codes") {
        SkewPoly f = k.poly({1, k.a, 0, 1});
        EmbeddingData ed = embedding({f});
        auto divs = right_divisors(f, 1);
        REQUIRE(!divs.empty());
        ModuleThetaCode code(f, divs.front().first);
        Matrix G = code.generator_matrix();
        std::vector<RowVec> rows;
        for (std::size_t i = 0; i < G.rows(); ++i) rows.push_back(immerse(ed, G.row(i)));
        Matrix image = Matrix::from_rows(k.F, rows, ed.m());
        CHECK(is_invariant(SemiLinearMap(k.th, ed.Phat), image));
    }
    SUBCASE("injectivity") {
        for (int i = 0; i < 4; ++i) {
            EmbeddingData ed = embedding({showcase(k, i)});
            CHECK(rank(ed.Cinv * ed.Qhat) == 3);
        }
    }
}

TEST_CASE("automorphism order facts") {
    F4 k;
    SUBCASE("order-8 cubic satisfies both") {
        CorollaryReport rep = corollary_checks(period(k.poly({1, k.a, 0, 1})));
        CHECK(rep.m == 8);
        CHECK(rep.s == 2);
        CHECK(rep.r == 0);
        CHECK(rep.q_f_fixed);
        CHECK(rep.f_moved_below_s);  // (1, a, 0) is moved by Frobenius
        CHECK(rep.s_divides_m);
        CHECK(rep.multiplier_fixed());
        CHECK(rep.order_implication());
    }
    SUBCASE("subfield coefficients leave the hypothesis unsatisfied") {
        CorollaryReport even = corollary_checks(period(k.poly({1, 0, 1, 1, 0, 1})));
        CHECK(even.m == 12);
        CHECK_FALSE(even.f_moved_below_s);
        CHECK(even.s_divides_m);  // the conclusion may hold anyway
        CHECK(even.order_implication());

        CorollaryReport odd = corollary_checks(period(k.poly({1, 0, 1, 0, 0, 1})));
        CHECK(odd.m == 31);
        CHECK_FALSE(odd.f_moved_below_s);
        CHECK_FALSE(odd.s_divides_m);  // ...or fail: the fact is one-directional
        CHECK(odd.order_implication());
        CHECK(odd.q_f_fixed);  // theta fixes the cofactor's coefficients here
    }
    SUBCASE("identity automorphism is trivial") {
        FieldPtr F3 = Field::make(3, 1);
        Automorphism id(F3, 0);
        CorollaryReport rep = corollary_checks(period(SkewPoly::of_reps(id, {2, 1, 1})));
        CHECK(rep.s == 1);
        CHECK(rep.r == 0);
        CHECK(rep.multiplier_fixed());
        CHECK(rep.order_implication());
    }
    SUBCASE("the cofactor is always fixed by theta^(m mod s)") {
        std::mt19937 rng(76);
        for (int trial = 0; trial < 40; ++trial) {
            SkewPoly f = random_monic(k.F, k.th, rng, 1 + rng() % 4);
            CHECK(corollary_checks(period(f)).q_f_fixed);
        }
        FieldPtr F9 = Field::make(3, 2);
        Automorphism frob(F9, 1);
        for (int trial = 0; trial < 15; ++trial) {
            SkewPoly f = random_monic(F9, frob, rng, 1 + rng() % 3);
            CHECK(corollary_checks(period(f)).q_f_fixed);
        }
    }
}
