#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "vertexlab/gr.hpp"
#include "vertexlab/invariants.hpp"
#include "vertexlab/linalg.hpp"
#include "vertexlab/polynomial.hpp"

using namespace vtx;

namespace {
VarId X = free_var(0), Y = free_var(1), Z = free_var(2);
Polynomial pv(VarId v) { return Polynomial::var(v); }

Polynomial random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 3), exp(0, 2), coef(-4, 4);
    Polynomial p;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m = Monomial::var(X, exp(rng)).mul(Monomial::var(Y, exp(rng)))
                         .mul(Monomial::var(Z, exp(rng)));
        p.add_term(m, Rational(coef(rng)));
    }
    return p;
}
}  // namespace

TEST_CASE("rational invariants and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-4, -8).str() == "1/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(0, 5).denominator() == 1);
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(3, 7) * Rational(7, 3)) == Rational(1));
    CHECK((Rational(1) / Rational(-3)).str() == "-1/3");
    CHECK_THROWS_AS(Rational(1, 0), value_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), value_error);
    CHECK(Rational::binomial(5, 2) == Rational(10));
    CHECK(Rational::binomial(-1, 3) == Rational(-1));
    CHECK(Rational::factorial(5) == Rational(120));
    CHECK(Rational::falling(4, 2) == Rational(12));
    CHECK(Rational::falling(2, 3) == Rational(0));
    CHECK(Rational::falling(3, 0) == Rational(1));
}

TEST_CASE("rational big-value promotion stays exact") {
    Rational big(1);
    for (int i = 0; i < 5; ++i) big *= Rational(INT64_C(3037000499));  // > 2^31
    Rational inv = Rational(1) / big;
    CHECK((big * inv) == Rational(1));
    Rational sum = big + Rational(1, 3);
    CHECK((sum - big) == Rational(1, 3));
    CHECK((big / big).str() == "1");
    CHECK((big * big) > big);
}

TEST_CASE("poly_arith examples") {
    Polynomial a = pv(X) + Polynomial(Rational(1));
    Polynomial b = pv(X) - Polynomial(Rational(1));
    CHECK(poly_arith(a, b, ArithOp::Add) == pv(X) * Rational(2));
    Polynomial c = poly_arith(pv(X) + pv(Y), pv(X) - pv(Y), ArithOp::Mul);
    CHECK(c == Polynomial::var(X, 2) - Polynomial::var(Y, 2));
    CHECK(poly_arith(c, Polynomial(), ArithOp::Mul).is_zero());
}

TEST_CASE("universe mismatch is rejected") {
    Polynomial state_side = Polynomial::var(beta_mode(0, 0));
    Polynomial gr_side = Polynomial::var(gr_beta(0, 0));
    CHECK_THROWS_AS(poly_arith(state_side, gr_side, ArithOp::Add), universe_error);
    CHECK_THROWS_AS(poly_arith(pv(X), gr_side, ArithOp::Mul), universe_error);
    // constants are compatible with anything
    CHECK(poly_arith(Polynomial(Rational(2)), gr_side, ArithOp::Mul) == gr_side * Rational(2));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 100; ++t) {
        Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("grade_components splits and reassembles") {
    GradingDescriptor deg{"deg", [](const VarId&) { return 1L; }};
    Polynomial p = Polynomial::var(X, 2) + pv(X);
    auto comp = grade_components(p, deg);
    REQUIRE(comp.size() == 2);
    CHECK(comp[2] == Polynomial::var(X, 2));
    CHECK(comp[1] == pv(X));

    Polynomial homog = Polynomial::var(X, 2) + pv(X) * pv(Y);
    CHECK(grade_components(homog, deg).size() == 1);
    CHECK(grade_components(Polynomial(), deg).empty());

    std::mt19937_64 rng(7);
    GradingDescriptor lev{"lvl", [](const VarId& v) { return long(v.basis); }};
    for (int t = 0; t < 20; ++t) {
        Polynomial p2 = random_poly(rng);
        Polynomial sum;
        for (auto& [g, q] : grade_components(p2, lev)) sum += q;
        CHECK(sum == p2);
    }
}

TEST_CASE("apply_derivation is the Leibniz extension") {
    std::map<VarId, Polynomial> d_dx{{X, Polynomial(Rational(1))}};
    CHECK(apply_derivation(d_dx, Polynomial::var(X, 2)) == pv(X) * Rational(2));
    std::map<VarId, Polynomial> x_to_y{{X, pv(Y)}};
    CHECK(apply_derivation(x_to_y, pv(X) * pv(Z)) == pv(Y) * pv(Z));

    // the closed-form rule of the h-triple action at mode 1 on level 2:
    // beta_2 -> -c^1_2 beta_1 = -2 beta_1
    std::map<VarId, Polynomial> rule{
        {gr_beta(0, 2), Polynomial::var(gr_beta(0, 1)) * Rational(-2)}};
    CHECK(apply_derivation(rule, Polynomial::var(gr_beta(0, 2))) ==
          Polynomial::var(gr_beta(0, 1)) * Rational(-2));
    auto table = v_table(sl2_adjoint(), 2, 1);
    CHECK(table(gr_beta(0, 2)) == Polynomial::var(gr_beta(0, 1)) * Rational(-2));

    std::mt19937_64 rng(3);
    std::map<VarId, Polynomial> rules{{X, pv(Y) + Polynomial(Rational(1))}, {Y, pv(Z) * pv(X)}};
    for (int t = 0; t < 40; ++t) {
        Polynomial p = random_poly(rng), q = random_poly(rng);
        CHECK(apply_derivation(rules, p * q) ==
              apply_derivation(rules, p) * q + p * apply_derivation(rules, q));
    }
}

TEST_CASE("rational_matrix_kernel examples") {
    auto r = [](long x) { return Rational(x); };
    std::vector<std::vector<Rational>> m{{r(1), r(2)}, {r(2), r(4)}};
    auto ker = rational_matrix_kernel(m);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] == r(-2));
    CHECK(ker[0][1] == r(1));

    std::vector<std::vector<Rational>> id3{
        {r(1), r(0), r(0)}, {r(0), r(1), r(0)}, {r(0), r(0), r(1)}};
    CHECK(rational_matrix_kernel(id3).empty());

    std::vector<std::vector<Rational>> zero23(2, std::vector<Rational>(3, r(0)));
    CHECK(rational_matrix_kernel(zero23).size() == 3);
}

TEST_CASE("kernel vectors annihilate; rank + nullity = columns") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dim(1, 6), coef(-3, 3);
    for (int t = 0; t < 25; ++t) {
        int rows = dim(rng), cols = dim(rng);
        std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
        for (auto& row : m)
            for (auto& x : row) x = Rational(coef(rng));
        auto ker = rational_matrix_kernel(m);
        int rank = matrix_rank(m);
        CHECK(rank + int(ker.size()) == cols);
        for (auto& v : ker)
            for (auto& row : m) {
                Rational dot(0);
                for (int j = 0; j < cols; ++j) dot += row[j] * v[j];
                CHECK(dot.is_zero());
            }
    }
}

TEST_CASE("matrix_rank examples") {
    auto r = [](long x) { return Rational(x); };
    CHECK(matrix_rank({{r(1), r(2)}, {r(2), r(4)}}) == 1);
    std::vector<std::vector<Rational>> id4(4, std::vector<Rational>(4, r(0)));
    for (int i = 0; i < 4; ++i) id4[i][i] = r(1);
    CHECK(matrix_rank(id4) == 4);
}

TEST_CASE("Jacobian of the tau family (k <= 1) has rank 6 at all-ones") {
    std::vector<Polynomial> taus;
    for (int u = 0; u < 3; ++u)
        for (int k = 0; k <= 1; ++k) taus.push_back(tau_poly(u, k));
    std::set<VarId> vars;
    for (auto& p : taus)
        for (auto& v : p.variables()) vars.insert(v);
    REQUIRE(vars.size() == 12);
    std::vector<std::vector<Rational>> jac;
    for (auto& p : taus) {
        std::vector<Rational> row;
        for (auto& v : vars)
            row.push_back(p.partial(v).evaluate([](const VarId&) { return Rational(1); }));
        jac.push_back(std::move(row));
    }
    CHECK(matrix_rank(jac) == 6);
}

TEST_CASE("canonical text rendering") {
    Polynomial p = Polynomial::var(X, 2) * Rational(3, 2) - pv(Y) + Polynomial(Rational(1, 3));
    CHECK(p.str([](const VarId& v) { return v == X ? std::string("x")
                                          : v == Y ? std::string("y")
                                                   : std::string("z"); }) ==
          "1/3 + 3/2*x^2 - y");
}
