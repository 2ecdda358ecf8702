#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "skewcodes/factorization.hpp"
#include "skewcodes/semilinear.hpp"

using namespace skewcodes;

namespace {

struct F4 {
    FieldPtr F = Field::make(2, 2);
    Automorphism th{F, 1};  // Frobenius
    Field::Rep a = 2, a2 = 3;

    SkewPoly poly(std::vector<Field::Rep> c) const { return SkewPoly::of_reps(th, std::move(c)); }
};

Matrix three_cycle(const FieldPtr& F) {
    Matrix E(F, 3, 3);
    E.set(0, 1, 1);
    E.set(1, 2, 1);
    E.set(2, 0, 1);
    return E;
}

Matrix random_invertible(const FieldPtr& F, std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        Matrix M(F, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                M.set(i, j, (Field::Rep)(rng() % F->q()));
        if (rank(M) == n) return M;
    }
}

std::string rref_key(const Matrix& M) {
    Matrix R = row_image(M);
    std::string k = std::to_string(R.rows()) + ":";
    for (std::size_t i = 0; i < R.rows(); ++i)
        for (std::size_t j = 0; j < R.cols(); ++j) k += std::to_string(R.at(i, j)) + ",";
    return k;
}

// Every subspace of F_q^n (including the zero one), each as an RREF basis.
// Spans of all <= n element subsets of the nonzero vectors cover everything;
// only usable at very small q^n.
std::vector<Matrix> all_subspaces(const FieldPtr& F, std::size_t n) {
    std::vector<RowVec> vecs;
    std::vector<std::size_t> dig(n, 0);
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= F->q();
    for (std::size_t c = 1; c < total; ++c) {
        std::size_t rest = c;
        RowVec v(n);
        for (std::size_t i = n; i-- > 0;) {
            v[i] = (Field::Rep)(rest % F->q());
            rest /= F->q();
        }
        vecs.push_back(v);
    }

    std::set<std::string> seen;
    std::vector<Matrix> out;
    out.push_back(Matrix(F, 0, n));
    seen.insert(rref_key(out.back()));
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (!pick.empty()) {
            std::vector<RowVec> rows;
            for (auto i : pick) rows.push_back(vecs[i]);
            Matrix S = row_image(Matrix::from_rows(F, rows, n));
            if (seen.insert(rref_key(S)).second) out.push_back(S);
        }
        if (pick.size() == n) return;
        for (std::size_t i = from; i < vecs.size(); ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

void check_certified(const SemiLinearMap& T, const CyclicDecomposition& dec) {
    const std::size_t n = T.dim();
    std::size_t total = 0;
    for (std::size_t i = 0; i < dec.sizes.size(); ++i) {
        total += dec.sizes[i];
        if (i) CHECK(dec.sizes[i] <= dec.sizes[i - 1]);
        CHECK(dec.blocks[i] == companion(dec.factors[i]));
        CHECK(dec.factors[i].monic().constant() != 0);
        CHECK(dec.blocks[i].rows() == dec.sizes[i]);
    }
    CHECK(total == n);
    CHECK(rank(dec.C) == n);
    Matrix D = dec.block_diag_matrix();
    CHECK(entrywise_theta(dec.C, T.theta()) * T.matrix() == D * dec.C);

    // reassembly: T = C^{-1} (Theta o D) C pointwise on the unit vectors
    Matrix Cinv = inverse(dec.C);
    for (std::size_t i = 0; i < n; ++i) {
        RowVec e(n, 0);
        e[i] = 1;
        RowVec w = mul_row(dec.C.field(), e, Cinv);
        for (auto& c : w) c = T.theta().apply(c);
        w = mul_row(dec.C.field(), w, D);
        w = mul_row(dec.C.field(), w, dec.C);
        CHECK(w == T.apply(e));
    }

    // the C rows are exactly the stacked cyclic bases of the generators
    std::size_t row = 0;
    for (std::size_t i = 0; i < dec.generators.size(); ++i) {
        RowVec u = dec.generators[i];
        for (std::size_t j = 0; j < dec.sizes[i]; ++j) {
            CHECK(dec.C.row(row++) == u);
            u = T.apply(u);
        }
    }
}

}  // namespace

TEST_CASE("semi-linear apply") {
    F4 k;
    SemiLinearMap T(k.th, three_cycle(k.F));
    CHECK(T.apply({1, 1, 1}) == RowVec{1, 1, 1});
    CHECK(T.apply({1, k.a, 0}) == RowVec{0, 1, k.a2});  // rotate after squaring
    CHECK(T.apply({1, k.a, 0}, 0) == RowVec{1, k.a, 0});
    CHECK_THROWS_AS(T.apply({1, 0}), DomainError);

    SemiLinearMap I(Automorphism(k.F, 0), Matrix::identity(k.F, 3));
    CHECK(I.apply({k.a, 1, k.a2}, 5) == RowVec{k.a, 1, k.a2});

    // fixed-subfield vectors return after lcm(ord theta, ord M) steps when
    // M itself has fixed entries
    std::uint64_t e = std::lcm((std::uint64_t)k.th.order(), matrix_order(three_cycle(k.F)));
    CHECK(T.apply({1, 0, 1}, e) == RowVec{1, 0, 1});
    CHECK(T.apply({1, 1, 0}, e) == RowVec{1, 1, 0});

    CHECK_THROWS_AS(SemiLinearMap(k.th, Matrix(k.F, 2, 3)), DomainError);
}

TEST_CASE("cyclic subspaces") {
    F4 k;
    SUBCASE("zero vector") {
        SemiLinearMap T(k.th, three_cycle(k.F));
        auto c = cyclic_subspace(T, {0, 0, 0});
        CHECK(c.dim == 0);
        CHECK(c.basis.rows() == 0);
    }
    SUBCASE("unit vector under a companion map fills the space") {
        SkewPoly f = k.poly({1, k.a, 0, 1});  // X^3 + aX + 1
        SemiLinearMap T(k.th, companion(f));
        auto c = cyclic_subspace(T, {1, 0, 0});
        CHECK(c.dim == 3);
        CHECK(c.basis.row(1) == RowVec{0, 1, 0});
        CHECK(c.basis.row(2) == RowVec{0, 0, 1});
    }
    SUBCASE("all-ones line under the doubled rotation") {
        Matrix D = Matrix::block_diag({three_cycle(k.F), three_cycle(k.F)});
        SemiLinearMap T(k.th, D);
        auto c = cyclic_subspace(T, {1, 1, 1, 1, 1, 1});
        CHECK(c.dim == 1);
    }
}

TEST_CASE("pi and pi_inv dictionaries") {
    F4 k;
    SkewPoly f = k.poly({1, k.a, 0, 1});
    CHECK(pi({1, k.a, 0}, f) == k.poly({1, k.a}));
    CHECK(pi_inv(k.poly({1, k.a}), f) == RowVec{1, k.a, 0});
    CHECK_THROWS_AS(pi({1, 0}, f), DomainError);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        RowVec v(3);
        for (auto& c : v) c = (Field::Rep)(rng() % 4);
        CHECK(pi_inv(pi(v, f), f) == v);
    }

    // X * pi(v) mod f matches the dictionary image of vT
    SemiLinearMap T(k.th, companion(f));
    for (int t = 0; t < 50; ++t) {
        RowVec v(3);
        for (auto& c : v) c = (Field::Rep)(rng() % 4);
        SkewPoly lhs = right_quotrem(pi(v, f).mul_x_left(1), f).rem;
        CHECK(lhs == pi(T.apply(v), f));
    }

    // reduction happens before reading coordinates off
    SkewPoly big = k.poly({0, 0, 0, 1});  // X^3 = f - aX - 1 mod f
    CHECK(pi_inv(big, f) == RowVec{1, k.a, 0});
}

TEST_CASE("invariance test") {
    F4 k;
    SUBCASE("all-ones line is invariant under the doubled rotation") {
        Matrix D = Matrix::block_diag({three_cycle(k.F), three_cycle(k.F)});
        SemiLinearMap T(k.th, D);
        Matrix one = Matrix::from_rows(k.F, {{1, 1, 1, 1, 1, 1}}, 6);
        CHECK(is_invariant(T, one));
        Matrix e1 = Matrix::from_rows(k.F, {{1, 0, 0, 0, 0, 0}}, 6);
        CHECK_FALSE(is_invariant(T, e1));
        CHECK(is_invariant(T, Matrix::identity(k.F, 6)));
    }
    SUBCASE("last two coordinates are not a module code here") {
        SkewPoly f = k.poly({k.a2, k.a, 1, 1});  // X^3 + X^2 + aX + a^2
        SemiLinearMap T(k.th, companion(f));
        Matrix S = Matrix::from_rows(k.F, {{0, 1, 0}, {0, 0, 1}}, 3);
        CHECK_FALSE(is_invariant(T, S));  // e_3 maps to (a^2, a, 1)
        CHECK(T.apply({0, 0, 1}) == RowVec{k.a2, k.a, 1});
    }
}

TEST_CASE("decompose: companion shapes are read off directly") {
    F4 k;
    SUBCASE("single companion block, Frobenius") {
        SkewPoly f = k.poly({1, k.a, 0, 1});
        SemiLinearMap T(k.th, companion(f));
        auto dec = decompose(T);
        REQUIRE(dec.block_count() == 1);
        CHECK(dec.sizes == std::vector<std::size_t>{3});
        CHECK(dec.C == Matrix::identity(k.F, 3));
        CHECK(dec.factors[0].monic() == f);
        check_certified(T, dec);
    }
    SUBCASE("two commutative blocks come back ordered by degree") {
        FieldPtr F3 = Field::make(3, 1);
        Automorphism id(F3, 0);
        SkewPoly fa = SkewPoly::of_reps(id, {1, 0, 1});     // X^2 + 1
        SkewPoly fb = SkewPoly::of_reps(id, {2, 1, 0, 1});  // X^3 + X + 2
        Matrix M = Matrix::block_diag({companion(fa), companion(fb)});
        SemiLinearMap T(id, M);
        auto dec = decompose(T);
        REQUIRE(dec.block_count() == 2);
        CHECK(dec.sizes == std::vector<std::size_t>{3, 2});
        CHECK(dec.factors[0].monic() == fb);
        CHECK(dec.factors[1].monic() == fa);
        CHECK(dec.generators[0] == RowVec{0, 0, 1, 0, 0});
        CHECK(dec.generators[1] == RowVec{1, 0, 0, 0, 0});
        check_certified(T, dec);
    }
    SUBCASE("signed characteristic polynomials in odd characteristic") {
        FieldPtr F3 = Field::make(3, 1);
        Automorphism id(F3, 0);
        SkewPoly fb = SkewPoly::of_reps(id, {2, 1, 0, 1});
        SemiLinearMap T(id, companion(fb));
        auto dec = decompose(T);
        // degree 3 is odd: the stored factor is -f_b
        CHECK(dec.factors[0] == fb.scale_left(2));
        CHECK(dec.factors[0].monic() == fb);
    }
}

TEST_CASE("decompose: general maps are certified") {
    F4 k;
    SUBCASE("random invertible with Frobenius") {
        std::mt19937_64 rng(42);
        for (int t = 0; t < 12; ++t) {
            Matrix M = random_invertible(k.F, 4, rng);
            SemiLinearMap T(k.th, M);
            auto dec = decompose(T);
            check_certified(T, dec);
        }
    }
    SUBCASE("random invertible over F_9 with Frobenius, n = 3") {
        FieldPtr F9 = Field::make(3, 2);
        Automorphism th(F9, 1);
        std::mt19937_64 rng(43);
        for (int t = 0; t < 8; ++t) {
            Matrix M = random_invertible(F9, 3, rng);
            SemiLinearMap T(th, M);
            auto dec = decompose(T);
            check_certified(T, dec);
        }
    }
    SUBCASE("fixed-subfield entries, Frobenius") {
        std::mt19937_64 rng(44);
        for (int t = 0; t < 8; ++t) {
            Matrix M(k.F, 4, 4);
            do {
                for (std::size_t i = 0; i < 4; ++i)
                    for (std::size_t j = 0; j < 4; ++j) M.set(i, j, (Field::Rep)(rng() % 2));
            } while (rank(M) != 4);
            SemiLinearMap T(k.th, M);
            auto dec = decompose(T);
            check_certified(T, dec);
        }
    }
    SUBCASE("the doubled rotation decomposes") {
        Matrix D = Matrix::block_diag({three_cycle(k.F), three_cycle(k.F)});
        SemiLinearMap T(k.th, D);
        auto dec = decompose(T);
        check_certified(T, dec);
    }
    SUBCASE("singular matrix is rejected") {
        Matrix Z(k.F, 3, 3);
        Z.set(0, 0, 1);
        CHECK_THROWS_AS(decompose(SemiLinearMap(k.th, Z)), DomainError);
    }
    SUBCASE("budget exhaustion reports") {
        // unitriangular, with a non-fixed entry so only the search path runs
        Matrix M = Matrix::identity(k.F, 3);
        M.set(0, 1, k.a);
        M.set(1, 2, 1);
        SemiLinearMap T(k.th, M);
        CHECK_THROWS_AS(decompose(T, 1), BudgetError);
    }
}

TEST_CASE("invariant codes match X-closed submodules") {
    // under T = Theta o companion(f), a subspace is T-invariant exactly when
    // its dictionary image is closed under left multiplication by X mod f
    auto closed_under_x = [](const Matrix& S, const SkewPoly& f) {
        for (std::size_t i = 0; i < S.rows(); ++i) {
            SkewPoly xp = right_quotrem(pi(S.row(i), f).mul_x_left(1), f).rem;
            if (!row_space_contains(S, pi_inv(xp, f))) return false;
        }
        return true;
    };

    SUBCASE("exhaustive over F_2^4") {
        FieldPtr F2 = Field::make(2, 1);
        Automorphism id(F2, 0);
        SkewPoly f = SkewPoly::of_reps(id, {1, 0, 1, 0, 1});  // (X^2+X+1)^2
        SemiLinearMap T(id, companion(f));
        int invariant = 0;
        for (const auto& S : all_subspaces(F2, 4)) {
            bool inv = is_invariant(T, S);
            CHECK(inv == closed_under_x(S, f));
            invariant += inv;
        }
        // counting rule: one code per divisor, (2+1) of them for a square
        CHECK(invariant == 3);
    }
    SUBCASE("sampled over F_4^3") {
        F4 k;
        SkewPoly f = k.poly({1, k.a, 0, 1});
        SemiLinearMap T(k.th, companion(f));
        std::mt19937_64 rng(9);
        for (int t = 0; t < 120; ++t) {
            std::size_t nrows = 1 + rng() % 3;
            std::vector<RowVec> rows;
            for (std::size_t i = 0; i < nrows; ++i) {
                RowVec v(3);
                for (auto& c : v) c = (Field::Rep)(rng() % 4);
                rows.push_back(v);
            }
            Matrix S = row_image(Matrix::from_rows(k.F, rows, 3));
            CHECK(is_invariant(T, S) == closed_under_x(S, f));
        }
    }
}

TEST_CASE("invariant code counting in the commutative case") {
    SUBCASE("F_2, f = (X^2+X+1)^2") {
        FieldPtr F2 = Field::make(2, 1);
        Automorphism id(F2, 0);
        SkewPoly f = SkewPoly::of_reps(id, {1, 0, 1, 0, 1});
        SemiLinearMap T(id, companion(f));
        int count = 0;
        for (const auto& S : all_subspaces(F2, 4)) count += is_invariant(T, S);
        CHECK(count == 3);
    }
    SUBCASE("F_2, f = (X+1)^2 (X^2+X+1)") {
        FieldPtr F2 = Field::make(2, 1);
        Automorphism id(F2, 0);
        SkewPoly f = SkewPoly::of_reps(id, {1, 1, 0, 1, 1});  // X^4+X^3+X+1
        auto fac = factor_commutative(f);
        REQUIRE(fac.size() == 2);
        int expected = 1;
        for (const auto& [p, e] : fac) {
            (void)p;
            expected *= (int)(e + 1);
        }
        CHECK(expected == 6);
        SemiLinearMap T(id, companion(f));
        int count = 0;
        for (const auto& S : all_subspaces(F2, 4)) count += is_invariant(T, S);
        CHECK(count == expected);
    }
    SUBCASE("F_3, f = (X+1)^2 (X+2)") {
        FieldPtr F3 = Field::make(3, 1);
        Automorphism id(F3, 0);
        // (X+1)^2 (X+2) = X^3 + X^2 + X + 2... expand: (X^2+2X+1)(X+2)
        SkewPoly f = SkewPoly::of_reps(id, {1, 2, 1}) * SkewPoly::of_reps(id, {2, 1});
        SemiLinearMap T(id, companion(f));
        int count = 0;
        for (const auto& S : all_subspaces(F3, 3)) count += is_invariant(T, S);
        CHECK(count == 6);
    }
}
