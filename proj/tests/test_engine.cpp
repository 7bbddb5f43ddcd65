#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vertexlab/builders.hpp"
#include "vertexlab/engine.hpp"

using namespace vtx;

namespace {

struct Fixture {
    LieRepSpec spec = sl2_adjoint();
    AlgebraPtr S = spec.ghost_algebra();
    Engine eng{S};
    std::vector<State> thetas = build_thetas(spec);

    State b(int i, int k = 0) { return beta_state(S, i, k); }
    State g(int i, int k = 0) { return gamma_state(S, i, k); }
    State vac() { return vacuum(S); }
};

// independent oracle for B = -Tr(rho rho) on the adjoint module: explicit
// 3x3 ad matrices multiplied and traced
Rational minus_killing(const LieRepSpec& spec, int a, int b) {
    return -trace(matmul(spec.rho(a), spec.rho(b)));
}

}  // namespace

TEST_CASE("vacuum rules: 1 o_n b") {
    Fixture f;
    State s = f.b(0);
    CHECK(f.eng.apply_mode(f.vac(), -1, s) == s);
    CHECK(f.eng.apply_mode(f.vac(), 0, s).is_zero());
    CHECK(f.eng.apply_mode(f.vac(), 3, s).is_zero());
    CHECK(f.eng.wick(s, f.vac()) == s);
}

TEST_CASE("pairing contraction OPE") {
    Fixture f;
    CHECK(f.eng.apply_mode(f.b(0), 0, f.g(0)) == f.vac());
    CHECK(f.eng.apply_mode(f.b(0), 0, f.g(1)).is_zero());
    CHECK(f.eng.ope(f.b(0), f.b(0)).empty());
    CHECK(f.eng.ope(f.g(1), f.g(2)).empty());
    OpeTable t = f.eng.ope(f.b(2), f.g(2));
    REQUIRE(t.entries.size() == 1);
    CHECK(t.entries[0].first == 0);
    CHECK(t.entries[0].second == f.vac());
}

TEST_CASE("gamma o_0 beta sign is derived from skew-symmetry, not assumed") {
    Fixture f;
    // skew-symmetry rhs at n = 0: sum_p (-1)^{p+1} (beta o_p gamma) o_{-p-1} 1
    State rhs{f.S, {}};
    for (int p = 0; p < 2; ++p) {
        State bp = f.eng.apply_mode(f.b(0), p, f.g(0));
        if (bp.is_zero()) continue;
        State term = f.eng.circle_vacuum(bp, -p - 1);
        rhs = rhs + term * Rational(p % 2 == 0 ? -1 : 1);
    }
    CHECK(rhs == f.vac() * Rational(-1));
    CHECK(f.eng.apply_mode(f.g(0), 0, f.b(0)) == rhs);
    CHECK(f.eng.check_identity(IdentityKind::SkewSymmetry, f.g(0), f.b(0), f.vac(), 0));
}

TEST_CASE("theta products against the trace oracle") {
    Fixture f;
    CHECK(minus_killing(f.spec, 0, 1) == Rational(-4));
    CHECK(minus_killing(f.spec, 2, 2) == Rational(-8));
    CHECK(f.eng.apply_mode(f.thetas[0], 1, f.thetas[1]) == f.vac() * Rational(-4));
    CHECK(f.eng.apply_mode(f.thetas[2], 1, f.thetas[2]) == f.vac() * Rational(-8));
    CHECK(f.eng.apply_mode(f.thetas[0], 0, f.thetas[1]) == f.thetas[2]);  // [x,y] = h
    OpeTable t = f.eng.ope(f.thetas[2], f.thetas[0]);  // theta^h theta^x
    REQUIRE(t.entries.size() == 1);
    CHECK(t.entries[0].first == 0);
    CHECK(t.entries[0].second == f.thetas[0] * Rational(2));  // [h,x] = 2x, B(h,x) = 0
}

TEST_CASE("derivative") {
    Fixture f;
    CHECK(f.eng.derivative(f.g(0)) == f.g(0, 1));
    CHECK(f.eng.derivative(f.vac()).is_zero());
    State bg = f.eng.wick(f.b(0), f.g(0));
    State expect = f.eng.wick(f.b(0, 1), f.g(0)) + f.eng.wick(f.b(0), f.g(0, 1));
    CHECK(f.eng.derivative(bg) == expect);
    // derivative = o_{-2} vacuum, raises weight by 1
    CHECK(f.eng.apply_mode(f.thetas[0], -2, f.vac()) == f.eng.derivative(f.thetas[0]));
    CHECK(weight(f.eng.derivative(f.thetas[0])) == 2);
}

TEST_CASE("wick product examples") {
    Fixture f;
    State bg = f.eng.wick(f.b(0), f.g(0));
    CHECK(bg.value ==
          Polynomial::monomial(Monomial::var(beta_mode(0, 0)).mul_var(gamma_mode(0, 0))));
    CHECK(f.eng.iterated_wick({f.thetas[0]}) == f.thetas[0]);
    CHECK(f.eng.wick(f.vac(), f.thetas[1]) == f.thetas[1]);
    // right-nested convention: :abc: = :a(:bc:):
    State abc = f.eng.iterated_wick({f.b(0), f.g(1), f.g(2)});
    CHECK(abc == f.eng.wick(f.b(0), f.eng.wick(f.g(1), f.g(2))));
}

TEST_CASE("weight bookkeeping") {
    Fixture f;
    CHECK(weight(f.thetas[0]) == 1);
    CHECK(weight(f.vac()) == 0);
    CHECK(weight(f.b(0)) == 1);
    CHECK(weight(f.g(0)) == 0);
    CHECK(weight(f.g(0, 2)) == 2);
    auto [vx, vy, vh] = build_sl2_triple(f.spec, f.S);
    CHECK(weight(vx) == 0);
    CHECK(weight(vy) == 2);
    CHECK(weight(vh) == 1);
    State mixed = f.b(0) + f.g(0);
    CHECK_THROWS_AS(weight(mixed), value_error);
    CHECK(weight_components(mixed).size() == 2);
}

TEST_CASE("ope weight bound captures every pole") {
    Fixture f;
    auto [vx, vy, vh] = build_sl2_triple(f.spec, f.S);
    OpeTable t = f.eng.ope(vh, vh);
    REQUIRE(t.entries.size() == 1);
    CHECK(t.entries[0].first == 1);
    CHECK(t.entries[0].second == f.vac() * Rational(-3));
    OpeTable t2 = f.eng.ope(vx, vy);
    REQUIRE(t2.at(1) != nullptr);
    CHECK(*t2.at(1) == f.vac() * Rational(-3, 2));
    CHECK(*t2.at(0) == vh);
}

TEST_CASE("commutant membership with witness") {
    Fixture f;
    auto [vx, vy, vh] = build_sl2_triple(f.spec, f.S);
    CHECK(f.eng.is_commutant_member({vx, vy, vh}, f.thetas[2]).member);
    auto w = f.eng.is_commutant_member(f.thetas, f.b(0));
    CHECK_FALSE(w.member);
    // theta o_0 beta^x is a nonzero multiple of a beta
    CHECK_FALSE(w.product.is_zero());
    CHECK(w.mode == 0);
}

TEST_CASE("structural identities on hand-picked states") {
    Fixture f;
    CHECK(f.eng.check_identity(IdentityKind::WickAssociativity, f.b(0), f.b(0), f.b(0), 0));
    CHECK(f.eng.check_identity(IdentityKind::WickAssociativity, f.thetas[2], f.thetas[0], f.thetas[1], 0));
    CHECK(f.eng.check_identity(IdentityKind::ModeDerivation, f.thetas[2], f.b(0), f.g(0), 1));
    CHECK(f.eng.check_identity(IdentityKind::SkewSymmetry, f.b(0), f.g(0), f.vac(), 0));
    State LS = build_L_S(f.spec, f.S);
    CHECK(f.eng.check_identity(IdentityKind::SkewSymmetry, LS, LS, f.vac(), -1));
    CHECK(f.eng.check_identity(IdentityKind::CommutatorFormula, f.thetas[2], f.thetas[0], f.thetas[1], 1));
    CHECK(f.eng.check_identity(IdentityKind::CommutatorFormula, LS, f.thetas[2], f.vac(), -2));
    CHECK_THROWS_AS(f.eng.check_identity(IdentityKind::ModeDerivation, f.b(0), f.b(1), f.b(2), -1),
                    value_error);
}

TEST_CASE("virasoro and primary checks") {
    Fixture f;
    State LS = build_L_S(f.spec, f.S);
    CHECK(f.eng.verify_virasoro(LS, Rational(6)));
    CHECK_FALSE(f.eng.verify_virasoro(LS, Rational(5)));
    CHECK(f.eng.check_primary(LS, f.b(1), Rational(1)));
    CHECK(f.eng.check_primary(LS, f.g(1), Rational(0)));
    CHECK_FALSE(f.eng.check_primary(LS, f.b(1), Rational(0)));
}

TEST_CASE("current algebra: level form OPE and PBW straightening") {
    LieRepSpec spec = sl2_adjoint();
    AlgebraPtr O = spec.current_algebra(Rational(-1));  // O(sl2, -K)
    Engine eng(O);
    auto u = [&](int a, int k = 0) { return current_state(O, a, k); };

    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            State o1 = eng.apply_mode(u(a), 1, u(b));
            CHECK(o1 == vacuum(O) * (Rational(-1) * spec.K(a, b)));
            State bracket{O, {}};
            for (int c = 0; c < 3; ++c)
                if (!spec.f(a, b, c).is_zero()) bracket = bracket + u(c) * spec.f(a, b, c);
            CHECK(eng.apply_mode(u(a), 0, u(b)) == bracket);
            for (int n = 2; n < 4; ++n) CHECK(eng.apply_mode(u(a), n, u(b)).is_zero());
        }

    // x(-1) y(-1) 1 = y(-1) x(-1) 1 + h(-2) 1 in the PBW basis
    State xy = eng.wick(u(0), u(1));
    Polynomial expect =
        Polynomial::monomial(Monomial::var(current_mode(0, 0)).mul_var(current_mode(1, 0))) +
        Polynomial::var(current_mode(2, 1));
    CHECK(xy.value == expect);
    State yx = eng.wick(u(1), u(0));
    CHECK(xy - yx == State{O, Polynomial::var(current_mode(2, 1))});

    CHECK(eng.check_identity(IdentityKind::WickAssociativity, u(0), u(1), u(2), 0));
    CHECK(eng.check_identity(IdentityKind::ModeDerivation, u(2), u(0), u(1), 2));
    CHECK(eng.check_identity(IdentityKind::SkewSymmetry, u(0), u(1), u(2), -1));
    CHECK(eng.apply_mode(xy, -2, vacuum(O)) == eng.derivative(xy));
}

TEST_CASE("mismatched algebras are rejected") {
    Fixture f;
    AlgebraPtr other = AlgebraSpec::ghost_system(3);
    CHECK_THROWS_AS(f.eng.apply_mode(f.b(0), 0, gamma_state(other, 0)), algebra_error);
}

TEST_CASE("engine results are deterministic and memo-stable") {
    Fixture f;
    State a = f.eng.wick(f.thetas[0], f.thetas[1]);
    State r1 = f.eng.apply_mode(a, 1, a);
    State r2 = f.eng.apply_mode(a, 1, a);
    CHECK(r1 == r2);
    CHECK(f.eng.cache_size() > 0);
}
