#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vertexlab/builders.hpp"
#include "vertexlab/invariants.hpp"

using namespace vtx;

TEST_CASE("build_theta reproduces the explicit adjoint currents") {
    LieRepSpec spec = sl2_adjoint();
    AlgebraPtr S = spec.ghost_algebra();
    // theta^x = 2 :beta^x gamma^{h'}: - :beta^h gamma^{y'}:
    Polynomial tx;
    tx.add_term(Monomial::var(beta_mode(0, 0)).mul_var(gamma_mode(2, 0)), Rational(2));
    tx.add_term(Monomial::var(beta_mode(2, 0)).mul_var(gamma_mode(1, 0)), Rational(-1));
    CHECK(build_theta(spec, 0).value == tx);
    // theta^h = -2 :beta^x gamma^{x'}: + 2 :beta^y gamma^{y'}:
    Polynomial th;
    th.add_term(Monomial::var(beta_mode(0, 0)).mul_var(gamma_mode(0, 0)), Rational(-2));
    th.add_term(Monomial::var(beta_mode(1, 0)).mul_var(gamma_mode(1, 0)), Rational(2));
    CHECK(build_theta(spec, 2).value == th);
    CHECK_THROWS_AS(build_theta(spec, 3), value_error);

    // the zero representation gives zero currents
    LieRepSpec ab = abelian(2);
    CHECK(build_theta(ab, 0).is_zero());
    CHECK(build_theta(ab, 1).is_zero());
}

TEST_CASE("current OPEs of the thetas for each builtin spec") {
    for (const char* name : {"sl2-adjoint", "sl2-standard", "abelian-1", "abelian-3"}) {
        LieRepSpec spec = lookup_spec(name);
        Engine eng(spec.ghost_algebra());
        CHECK(check_current_ope(spec, eng, build_thetas(spec)));
    }
    // frozen oracle values for the two sl(2) specs
    LieRepSpec adj = sl2_adjoint();
    CHECK(adj.B(0, 1) == Rational(-4));
    CHECK(adj.B(2, 2) == Rational(-8));
    CHECK(adj.B(0, 0) == Rational(0));
    LieRepSpec std2 = sl2_standard();
    CHECK(std2.B(0, 1) == Rational(-1));
    CHECK(std2.B(2, 2) == Rational(-2));
}

TEST_CASE("sugawara vector") {
    LieRepSpec spec = sl2_adjoint();
    Engine eng(spec.current_algebra(Rational(-1)));
    State LO = sugawara(spec, Rational(-1), eng);
    // central charge 2 lambda dim g / (2 lambda + 1) = 6 at lambda = -1
    CHECK(eng.verify_virasoro(LO, Rational(6)));
    for (int a = 0; a < 3; ++a)
        CHECK(eng.check_primary(LO, current_state(eng.algebra(), a), Rational(1)));
    CHECK_THROWS_AS(sugawara(spec, Rational(-1, 2), eng), value_error);

    // a different non-critical level: lambda = 1, c = 2
    Engine eng2(spec.current_algebra(Rational(1)));
    State LO2 = sugawara(spec, Rational(1), eng2);
    CHECK(eng2.verify_virasoro(LO2, Rational(2)));
}

TEST_CASE("L_S, Euler element, script L") {
    LieRepSpec spec = sl2_adjoint();
    Engine eng(spec.ghost_algebra());
    State LS = build_L_S(spec, eng.algebra());
    CHECK(eng.verify_virasoro(LS, Rational(6)));  // 2 dim V

    State euler = build_euler(spec, eng.algebra());
    OpeTable t = eng.ope(euler, euler);
    REQUIRE(t.entries.size() == 1);
    CHECK(t.entries[0].second == vacuum(eng.algebra()) * Rational(-3));  // -dim V
    CHECK(eng.is_commutant_member(build_thetas(spec), euler).member);

    State scrL = build_script_L(spec, eng);
    CHECK(eng.verify_virasoro(scrL, Rational(0)));
    CHECK(eng.is_commutant_member(build_thetas(spec), scrL).member);
}

TEST_CASE("sl(2) triple from the invariant form") {
    LieRepSpec spec = sl2_adjoint();
    Engine eng(spec.ghost_algebra());
    auto [vx, vy, vh] = build_sl2_triple(spec, eng.algebra());

    // the explicit quadratic expressions in the x, y, h basis
    Polynomial ex;
    ex.add_term(Monomial::var(gamma_mode(2, 0), 2), Rational(1, 2));
    ex.add_term(Monomial::var(gamma_mode(0, 0)).mul_var(gamma_mode(1, 0)), Rational(1, 2));
    CHECK(vx.value == ex);
    Polynomial ey;
    ey.add_term(Monomial::var(beta_mode(2, 0), 2), Rational(-1, 2));
    ey.add_term(Monomial::var(beta_mode(0, 0)).mul_var(beta_mode(1, 0)), Rational(-2));
    CHECK(vy.value == ey);
    CHECK(vh == build_euler(spec, eng.algebra()));

    // O(sl(2), -(dim V / 8) K) current OPEs: B'(x,y) = -3/2, B'(h,h) = -3
    CHECK(eng.apply_mode(vx, 1, vy) == vacuum(eng.algebra()) * Rational(-3, 2));
    CHECK(eng.apply_mode(vh, 1, vh) == vacuum(eng.algebra()) * Rational(-3));
    CHECK(eng.apply_mode(vx, 0, vy) == vh);
    CHECK(eng.apply_mode(vh, 0, vx) == vx * Rational(2));
    CHECK(eng.apply_mode(vh, 0, vy) == vy * Rational(-2));
    CHECK(eng.apply_mode(vx, 2, vy).is_zero());

    // images land in the Theta-commutant
    auto thetas = build_thetas(spec);
    CHECK(eng.is_commutant_member(thetas, vx).member);
    CHECK(eng.is_commutant_member(thetas, vy).member);

    // no symmetric invariant form on the standard module
    LieRepSpec std2 = sl2_standard();
    CHECK_THROWS_AS(build_sl2_triple(std2, std2.ghost_algebra()), algebra_error);
}

TEST_CASE("theta is primary of weight 1 for both Virasoro vectors") {
    LieRepSpec spec = sl2_adjoint();
    Engine eng(spec.ghost_algebra());
    State LS = build_L_S(spec, eng.algebra());
    State rLO = build_rho_L_O(spec, eng);
    for (int a = 0; a < 3; ++a) {
        State th = build_theta(spec, a);
        CHECK(eng.check_primary(LS, th, Rational(1)));
        CHECK(eng.check_primary(rLO, th, Rational(1)));
    }
}

TEST_CASE("weight-zero commutant is the classical invariant ring") {
    // degree-2, level-0, gamma-only component of P under the theta(0)
    // actions: one invariant, the quadratic Casimir of Sym(g*)^g
    LieRepSpec spec = sl2_adjoint();
    FiltrationSpec filt{spec.ghost_algebra(), 1};
    Engine eng(filt.algebra);
    auto ops = gt_operators(eng, filt, spec, 0);
    ComponentSpec cs;
    cs.max_var_level = 0;
    cs.level = 0;
    cs.degree = 2;
    for (int i = 0; i < 3; ++i) cs.family_degree.push_back({Family::GrBeta, i, 0});
    auto ker = invariant_kernel(ops, cs, spec.rep_dim());
    CHECK(ker.size() == 1);
}

TEST_CASE("named operator sets") {
    LieRepSpec spec = sl2_adjoint();
    Engine eng(spec.ghost_algebra());
    NamedOperatorSet ops = named_operator_set(spec, eng);
    for (const char* n : {"theta_x", "theta_y", "theta_h", "L_S", "L_O", "script_L", "euler",
                          "v_x", "v_y", "v_h"})
        CHECK(ops.has(n));
    CHECK(ops.at("v_h") == ops.at("euler"));
    CHECK(ops.at("script_L") == ops.at("L_S") - ops.at("L_O"));
    CHECK_THROWS_AS(ops.at("no_such"), value_error);

    // standard module: no form, no triple; abelian: no Sugawara
    LieRepSpec std2 = sl2_standard();
    Engine eng2(std2.ghost_algebra());
    NamedOperatorSet ops2 = named_operator_set(std2, eng2);
    CHECK(ops2.has("L_S"));
    CHECK(ops2.has("script_L"));  // lambda = -1/4 is non-critical
    CHECK_FALSE(ops2.has("v_x"));

    // the euler precondition Tr rho = 0 is enforced
    CHECK(trace(std2.rho(2)).is_zero());
    CHECK(ops2.has("euler"));
}

TEST_CASE("LieRepSpec validation") {
    auto f = sl2_adjoint();
    // tampered rho is rejected (no longer a homomorphism)
    auto bad_rho = std::vector<Matrix>{f.rho(0), f.rho(1), f.rho(0)};
    std::vector<std::vector<std::vector<Rational>>> fc(
        3, std::vector<std::vector<Rational>>(3, std::vector<Rational>(3, Rational(0))));
    fc[0][1][2] = Rational(1);
    fc[1][0][2] = Rational(-1);
    fc[2][0][0] = Rational(2);
    fc[0][2][0] = Rational(-2);
    fc[2][1][1] = Rational(-2);
    fc[1][2][1] = Rational(2);
    CHECK_THROWS_AS(LieRepSpec(fc, bad_rho), algebra_error);
    // lambda recovery: adjoint has B = -K
    CHECK(f.lambda().value() == Rational(-1));
}
