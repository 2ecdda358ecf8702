#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "skewcodes/formats.hpp"

using namespace skewcodes;

namespace {

FieldPtr f4() { return Field::make(2, 2); }
FieldPtr f9() { return Field::make(3, 2); }

}  // namespace

TEST_CASE("field specs print canonically and parse back") {
    auto F = f4();
    CHECK(field_spec_text(F) == "p=2,s=2,mod=x^2+x+1,gen=a");
    auto G = parse_field_spec("p=2,s=2,mod=x^2+x+1,gen=a");
    CHECK(G->same_as(*F));
    CHECK(G->gen_name() == "a");

    auto P = Field::make(5, 1);
    CHECK(field_spec_text(P) == "p=5,s=1");
    CHECK(parse_field_spec("p=5,s=1")->same_as(*P));

    auto N = Field::make(3, 2, {}, "b");
    std::string spec = field_spec_text(N);
    CHECK(spec.find("gen=b") != std::string::npos);
    CHECK(parse_field_spec(spec)->gen_name() == "b");
    CHECK(parse_field_spec(spec)->same_as(*N));

    // key order and whitespace are free
    CHECK(parse_field_spec(" s = 2 , p = 2 ")->same_as(*F));

    CHECK_THROWS_AS(parse_field_spec("s=2"), ParseError);
    CHECK_THROWS_AS(parse_field_spec("p=2"), ParseError);
    CHECK_THROWS_AS(parse_field_spec("p=2,s=2,color=red"), ParseError);
    CHECK_THROWS_AS(parse_field_spec("p=2,p=3,s=1"), ParseError);
    CHECK_THROWS_AS(parse_field_spec("p=2,s=2,gen=x"), ParseError);
    CHECK_THROWS_AS(parse_field_spec("p=2,s=2,gen=a2"), ParseError);
    CHECK_THROWS_AS(parse_field_spec("p=two,s=1"), ParseError);
    // grammatically fine, but the modulus is reducible
    CHECK_THROWS_AS(parse_field_spec("p=2,s=2,mod=x^2+1"), DomainError);
}

TEST_CASE("element literals are generator polynomials") {
    auto F = f4();
    CHECK(element_text(F, 0) == "0");
    CHECK(element_text(F, 1) == "1");
    CHECK(element_text(F, F->gen_rep()) == "a");
    CHECK(element_text(F, 3) == "a+1");

    for (auto K : {f4(), f9(), Field::make(2, 3), Field::make(5, 1)})
        for (Field::Rep r = 0; r < K->q(); ++r)
            CHECK(parse_element(K, element_text(K, r)) == r);

    // tolerated input shapes
    auto N = f9();
    auto P5 = Field::make(5, 1);
    CHECK(parse_element(F, " a + 1 ") == 3);
    CHECK(parse_element(F, "1+a") == 3);
    CHECK(parse_element(F, "a^2") == F->pow(F->gen_rep(), 2));
    CHECK(parse_element(F, "3*a") == F->gen_rep());
    CHECK(parse_element(N, "2a") == N->mul(N->from_int(2), N->gen_rep()));
    CHECK(parse_element(N, "(2a+1)") == N->add(N->mul(2, N->gen_rep()), 1));
    CHECK(parse_element(P5, "-1") == 4);
    CHECK(parse_element(P5, "7") == 2);

    CHECK_THROWS_AS(parse_element(F, ""), ParseError);
    CHECK_THROWS_AS(parse_element(F, "b"), ParseError);
    CHECK_THROWS_AS(parse_element(P5, "a"), ParseError);
    CHECK_THROWS_AS(parse_element(F, "a^"), ParseError);
    CHECK_THROWS_AS(parse_element(F, "1++1"), ParseError);
    CHECK_THROWS_AS(parse_element(F, "(a"), ParseError);
}

TEST_CASE("skew polynomial text round trips in either term order") {
    auto F = f4();
    Automorphism th(F, 1);
    Field::Rep a = F->gen_rep();

    SkewPoly p = SkewPoly::of_reps(th, {1, a, 0, 1});
    CHECK(poly_text(p) == "x^3 + a*x + 1");
    CHECK(parse_poly(th, "x^3 + a*x + 1") == p);
    CHECK(parse_poly(th, "1 + a*x + x^3") == p);
    CHECK(parse_poly(th, "x^3+ax+1") == p);

    SkewPoly m = SkewPoly::of_reps(th, {0, 1, 3});
    CHECK(poly_text(m) == "(a+1)*x^2 + x");
    CHECK(parse_poly(th, poly_text(m)) == m);
    CHECK(parse_poly(th, "(a+1)*x^2 - x") == m);

    CHECK(poly_text(SkewPoly::zero(th)) == "0");
    CHECK(parse_poly(th, "0").is_zero());
    CHECK(parse_poly(th, "x + x").is_zero());
    CHECK(poly_text(SkewPoly::of_reps(th, {3})) == "a+1");
    CHECK(parse_poly(th, "a+1") == SkewPoly::of_reps(th, {3}));

    Automorphism id3(Field::make(3, 1), 0);
    CHECK(parse_poly(id3, "x + x") == SkewPoly::of_reps(id3, {0, 2}));
    CHECK(parse_poly(id3, "x^2 - 1") == SkewPoly::of_reps(id3, {2, 0, 1}));
    CHECK(parse_poly(id3, "2x^3") == SkewPoly::of_reps(id3, {0, 0, 0, 2}));

    std::mt19937 rng(77);
    std::vector<Automorphism> twists{Automorphism(f4(), 1), Automorphism(f4(), 0),
                                     Automorphism(f9(), 1), Automorphism(Field::make(2, 3), 1)};
    for (const Automorphism& tw : twists) {
        std::uniform_int_distribution<Field::Rep> pick(0, tw.field()->q() - 1);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Field::Rep> c(1 + rng() % 7);
            for (auto& v : c) v = pick(rng);
            SkewPoly r = SkewPoly::of_reps(tw, c);
            CHECK(parse_poly(tw, poly_text(r)) == r);
        }
    }

    CHECK_THROWS_AS(parse_poly(th, ""), ParseError);
    CHECK_THROWS_AS(parse_poly(th, "x^"), ParseError);
    CHECK_THROWS_AS(parse_poly(th, "y + 1"), ParseError);
    CHECK_THROWS_AS(parse_poly(th, "a*"), ParseError);
    CHECK_THROWS_AS(parse_poly(th, "(a+1"), ParseError);
    CHECK_THROWS_AS(parse_poly(th, "x^3 ++ 1"), ParseError);
    CHECK_THROWS_AS(parse_poly(th, "x*x"), ParseError);
}

TEST_CASE("matrix text uses comma entries and semicolon rows") {
    auto F = f4();
    Matrix M = parse_matrix(F, "0,1,0; 0,0,1; 1,a,0");
    CHECK(M.rows() == 3);
    CHECK(M.cols() == 3);
    CHECK(M.at(0, 1) == 1);
    CHECK(M.at(2, 1) == F->gen_rep());
    CHECK(matrix_text(M) == "0,1,0; 0,0,1; 1,a,0");

    Matrix I = Matrix::identity(F, 2);
    CHECK(parse_matrix(F, matrix_text(I)) == I);
    CHECK(parse_matrix(F, "  ").rows() == 0);
    CHECK(parse_matrix(F, "a+1, 1; 0, a^2").at(0, 0) == 3);

    RowVec v = parse_row(F, "1, a, a+1, 0");
    CHECK(v == RowVec{1, 2, 3, 0});
    CHECK(row_text(F, v) == "1,a,a+1,0");

    CHECK_THROWS_AS(parse_matrix(F, "1,0; 1"), ParseError);
    CHECK_THROWS_AS(parse_matrix(F, "1,; 1,0"), ParseError);
    CHECK_THROWS_AS(parse_matrix(F, "1,0;"), ParseError);
}

TEST_CASE("code descriptors round trip with an optional conjugator") {
    auto F = f4();
    Automorphism th(F, 1);
    SkewPoly f1 = SkewPoly::of_reps(th, {1, 0, 0, 0, 0, 0, 0, 1});
    SkewPoly g1 = SkewPoly::of_reps(th, {1, 0, 1, 1, 1});
    SkewPoly f2 = SkewPoly::of_reps(th, {1, 0, 1});
    SkewPoly g2 = SkewPoly::of_reps(th, {1, 1});
    Matrix C = Matrix::identity(F, 9);
    C.set(0, 8, F->gen_rep());

    ProductTCode code({ModuleThetaCode(f1, g1), ModuleThetaCode(f2, g2)}, C);
    ProductTCode back = parse_code_descriptor(code_descriptor_text(code));
    CHECK(back.component_count() == 2);
    CHECK(back.component(0).f() == f1);
    CHECK(back.component(0).g() == g1);
    CHECK(back.component(1).f() == f2);
    CHECK(back.component(1).g() == g2);
    CHECK(back.conjugator() == C);
    CHECK(back.theta().exponent() == 1);

    ProductTCode plain = ProductTCode::direct_product({ModuleThetaCode(f1, g1)});
    std::string text = code_descriptor_text(plain);
    CHECK(text.find("C=") == std::string::npos);
    CHECK(parse_code_descriptor(text).conjugator().is_identity());

    Automorphism id2(Field::make(2, 1), 0);
    ProductTCode small = ProductTCode::direct_product({ModuleThetaCode(
        SkewPoly::of_reps(id2, {1, 0, 0, 1}), SkewPoly::of_reps(id2, {1, 1}))});
    CHECK(code_descriptor_text(small) == "p=2,s=1\nt=0\nf=x^3 + 1; g=x + 1\n");

    std::string noisy =
        "# one ternary component\r\n"
        "p=2,s=1\r\n"
        "\r\n"
        "t=0   # identity twist\r\n"
        "f=x^3 + 1; g=x^2 + x + 1\r\n";
    CHECK(parse_code_descriptor(noisy).k() == 1);

    CHECK_THROWS_AS(parse_code_descriptor(""), ParseError);
    CHECK_THROWS_AS(parse_code_descriptor("p=2,s=1\nt=0\n"), ParseError);
    CHECK_THROWS_AS(parse_code_descriptor("p=2,s=1\nt=0\nf=x^3+1\n"), ParseError);
    CHECK_THROWS_AS(parse_code_descriptor("p=2,s=1\nt=0\ng=x+1; f=x^3+1\n"), ParseError);
    CHECK_THROWS_AS(parse_code_descriptor("p=2,s=1\nt=0\nC=1\nf=x^3+1; g=x+1\n"), ParseError);
    CHECK_THROWS_AS(parse_code_descriptor("p=2,s=1\nt=x\nf=x^3+1; g=x+1\n"), ParseError);
}

TEST_CASE("semi-linear map descriptors") {
    auto F = f4();
    SemiLinearMap T(Automorphism(F, 1), parse_matrix(F, "0,1; 1,a"));
    std::string text = map_descriptor_text(T);
    CHECK(text == "p=2,s=2,mod=x^2+x+1,gen=a\nt=1\nM=0,1; 1,a\n");
    SemiLinearMap back = parse_map_descriptor(text);
    CHECK(back.theta() == T.theta());
    CHECK(back.matrix() == T.matrix());

    CHECK_THROWS_AS(parse_map_descriptor("p=2,s=2\nt=1\n"), ParseError);
    CHECK_THROWS_AS(parse_map_descriptor("p=2,s=1\nt=0\nX=1\n"), ParseError);
}
