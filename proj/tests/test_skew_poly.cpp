#include <doctest.h>

#include <random>

#include "skewcodes/skew_poly.hpp"

using namespace skewcodes;

namespace {

struct F4 {
    FieldPtr F = Field::make(2, 2);
    Automorphism th{F, 1};
    Field::Rep a = 2, a2 = 3;
    SkewPoly poly(std::vector<Field::Rep> c) const { return SkewPoly::of_reps(th, std::move(c)); }
};

SkewPoly random_poly(const Automorphism& th, unsigned deg, std::mt19937& rng) {
    const auto& F = th.field();
    std::vector<Field::Rep> c(deg + 1);
    for (unsigned i = 0; i < deg; ++i) c[i] = (Field::Rep)(rng() % F->q());
    c[deg] = 1 + (Field::Rep)(rng() % (F->q() - 1));
    return SkewPoly::of_reps(th, std::move(c));
}

}  // namespace

TEST_CASE("skew multiplication twists coefficients") {
    F4 k;
    // X * a = a^2 * X
    SkewPoly lhs = SkewPoly::x(k.th) * k.poly({k.a});
    CHECK(lhs == k.poly({0, k.a2}));
    // (X + a)^2 = X^2 + X + a^2
    SkewPoly xa = k.poly({k.a, 1});
    CHECK(xa * xa == k.poly({k.a2, 1, 1}));
    // identity automorphism multiplies commutatively
    Automorphism id(k.F, 0);
    SkewPoly u = SkewPoly::of_reps(id, {k.a, 1});
    SkewPoly v = SkewPoly::of_reps(id, {k.a2, 1});
    CHECK(u * v == v * u);
    // the twisted product does not commute
    SkewPoly w = k.poly({1, 1});
    CHECK(xa * w == k.poly({k.a, k.a2, 1}));
    CHECK(w * xa == k.poly({k.a, k.a, 1}));
}

TEST_CASE("normalization and accessors") {
    F4 k;
    SkewPoly z = SkewPoly::zero(k.th);
    CHECK(z.is_zero());
    CHECK_THROWS_AS((void)z.degree(), DomainError);
    CHECK(z.coeff(5) == 0);
    SkewPoly f = k.poly({1, k.a, 0, 1});
    CHECK(f.degree() == 3);
    CHECK(f.lead() == 1);
    CHECK(f.constant() == 1);
    CHECK(f.is_monic());
    CHECK((f - f).is_zero());
    SkewPoly g = f.scale_left(k.a);
    CHECK(g.coeff(3) == k.a);
    CHECK(g.monic() == f);
    // f * c twists c by theta^i per coefficient
    SkewPoly xc = SkewPoly::x(k.th).scale_right(k.a);
    CHECK(xc == k.poly({0, k.a2}));
    CHECK(SkewPoly::x(k.th).scale_left(k.a) == k.poly({0, k.a}));
    CHECK(f.theta_shift(1) == k.poly({1, k.a2, 0, 1}));
    CHECK(f.theta_shift(-1) == f.theta_shift(1));  // theta has order 2
    CHECK(f.mul_x_left(2) == k.poly({0, 0, 1, k.a, 0, 1}));  // theta^2 = id on F_4
    CHECK(f.mul_x_right(1) == k.poly({0, 1, k.a, 0, 1}));
    CHECK(SkewPoly::monomial(k.th, k.F->elem(k.a), 2) == k.poly({0, 0, k.a}));
    CHECK(f.pow(2) == f * f);
    CHECK(f.pow(0).is_one());
}

TEST_CASE("division identities hold on random input") {
    F4 k;
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        SkewPoly a = random_poly(k.th, 1 + rng() % 7, rng);
        SkewPoly b = random_poly(k.th, 1 + rng() % 5, rng);
        auto [q, r] = right_quotrem(a, b);
        CHECK(q * b + r == a);
        if (!r.is_zero()) CHECK(r.degree() < b.degree());
        auto [ql, rl] = left_quotrem(a, b);
        CHECK(b * ql + rl == a);
        if (!rl.is_zero()) CHECK(rl.degree() < b.degree());
    }
    SkewPoly f = k.poly({1, k.a, 0, 1});
    CHECK_THROWS_AS(right_quotrem(f, SkewPoly::zero(k.th)), DomainError);
    CHECK_THROWS_AS(left_quotrem(f, SkewPoly::zero(k.th)), DomainError);
}

TEST_CASE("period witness of X^3 + aX + 1") {
    F4 k;
    SkewPoly f = k.poly({1, k.a, 0, 1});
    // X^8 - 1 = f * q_f with q_f = X^5 + a^2 X^3 + X^2 + a X + 1
    std::vector<Field::Rep> x8m1(9, 0);
    x8m1[0] = 1;  // -1 = 1 in characteristic 2
    x8m1[8] = 1;
    SkewPoly target = k.poly(x8m1);
    auto [q, r] = left_quotrem(target, f);
    CHECK(r.is_zero());
    CHECK(q == k.poly({1, k.a, 1, k.a2, 0, 1}));
    // and no smaller exponent works: X^7 - 1 leaves a remainder
    std::vector<Field::Rep> x7m1(8, 0);
    x7m1[0] = 1;
    x7m1[7] = 1;
    CHECK_FALSE(left_quotrem(k.poly(x7m1), f).rem.is_zero());
    // q_f is then a right divisor with cofactor f
    auto [q2, r2] = right_quotrem(target, q);
    CHECK(r2.is_zero());
    CHECK(q2 == f);
    // left remainder of X^21 - 1 by f (21 = multiplicative order of the
    // companion matrix; divisibility of orders does not transfer to f itself)
    std::vector<Field::Rep> x21m1(22, 0);
    x21m1[0] = 1;
    x21m1[21] = 1;
    CHECK(left_quotrem(k.poly(x21m1), f).rem == k.poly({k.a, k.a2, 1}));
}

TEST_CASE("companion polynomial via star") {
    F4 k;
    SkewPoly f = k.poly({1, k.a, 0, 1});
    CHECK(star(f) == k.poly({1, 0, k.a, 1}));  // X^3 + a X^2 + 1
    CHECK(star(star(f)) == k.poly({1, k.a2, 0, 1}));
    SkewPoly no_const = k.poly({0, 1});
    CHECK_THROWS_AS((void)star(no_const), DomainError);
}

TEST_CASE("right gcd certificate") {
    F4 k;
    std::mt19937 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        SkewPoly a = random_poly(k.th, 1 + rng() % 6, rng);
        SkewPoly b = random_poly(k.th, 1 + rng() % 6, rng);
        auto g = right_gcd(a, b);
        CHECK(g.g == g.u * a + g.v * b);
        CHECK(g.g.is_monic());
        CHECK(right_quotrem(a, g.g).rem.is_zero());
        CHECK(right_quotrem(b, g.g).rem.is_zero());
    }
    // q_f right-divides X^8 - 1, so it is the gcd with anything it divides
    SkewPoly qf = k.poly({1, k.a, 1, k.a2, 0, 1});
    std::vector<Field::Rep> x8m1(9, 0);
    x8m1[0] = x8m1[8] = 1;
    CHECK(right_gcd(k.poly(x8m1), qf).g == qf);
}

TEST_CASE("least left common multiple") {
    F4 k;
    Automorphism id(k.F, 0);
    SkewPoly u = SkewPoly::of_reps(id, {1, 1});   // X + 1
    SkewPoly v = SkewPoly::of_reps(id, {k.a, 1});  // X + a
    CHECK(left_lcm(u, v) == SkewPoly::of_reps(id, {k.a, k.a2, 1}));
    std::mt19937 rng(999);
    for (int trial = 0; trial < 60; ++trial) {
        SkewPoly a = random_poly(k.th, 1 + rng() % 4, rng);
        SkewPoly b = random_poly(k.th, 1 + rng() % 4, rng);
        SkewPoly L = left_lcm(a, b);
        CHECK(L.is_monic());
        CHECK(right_quotrem(L, a).rem.is_zero());
        CHECK(right_quotrem(L, b).rem.is_zero());
        CHECK(L.degree() <= a.degree() + b.degree());
    }
}

TEST_CASE("right divisor enumeration") {
    F4 k;
    SkewPoly f = k.poly({1, k.a, 0, 1});
    auto divs = right_divisors(f, 1);
    // cross-check against direct scan over monic X + c, c != 0
    unsigned direct = 0;
    for (Field::Rep c = 1; c < 4; ++c)
        if (right_quotrem(f, k.poly({c, 1})).rem.is_zero()) ++direct;
    CHECK(divs.size() == direct);
    for (const auto& [g, q] : divs) {
        CHECK(q * g == f);
        CHECK(g.is_monic());
        CHECK(g.degree() == 1);
        CHECK(g.constant() != 0);
    }
    CHECK(right_divisors(f, 0).size() == 1);
    CHECK(right_divisors(f, 0)[0].first.is_one());
    CHECK(right_divisors(f, 4).empty());
    CHECK_THROWS_AS(right_divisors(k.poly({1, 0, 0, 0, 1}), 3, true, 3), BudgetError);
}
