#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vertexlab/context.hpp"
#include "vertexlab/suites.hpp"

using namespace vtx;

TEST_CASE("parse builds the expected AST") {
    ExprPtr e = parse("C(theta_x, 1, theta_y)");
    REQUIRE(e->kind == Expr::Kind::Circle);
    CHECK(e->circle_mode == 1);
    CHECK(e->args[0]->kind == Expr::Kind::Name);
    CHECK(e->args[0]->name == "theta_x");

    ExprPtr w = parse("W(b[1,0], g[1,0])");
    REQUIRE(w->kind == Expr::Kind::Wick);
    CHECK(w->args[0]->atom_family == 'b');
    CHECK(w->args[1]->atom_family == 'g');

    ExprPtr d = parse("D(g[1,0])");
    CHECK(d->kind == Expr::Kind::Derive);

    ExprPtr sum = parse("2 * v_x + C(v_h, 0, v_x) - 1/2 * 1");
    CHECK(sum->kind == Expr::Kind::Sub);

    CHECK(parse("C(a, -2, b)")->circle_mode == -2);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse("C(theta_x 1, theta_y)"), parse_error);
    try {
        parse("C(theta_x 1, theta_y)");
    } catch (const parse_error& e) {
        CHECK(e.offset == 10);  // where the comma was expected
    }
    CHECK_THROWS_AS(parse("W(b[1,0)"), parse_error);
    CHECK_THROWS_AS(parse("Q(a, b)"), parse_error);   // unknown function
    CHECK_THROWS_AS(parse("b[0,0]"), parse_error);    // 1-based index
    CHECK_THROWS_AS(parse("1 + "), parse_error);
    CHECK_THROWS_AS(parse("1 2"), parse_error);       // trailing input
}

TEST_CASE("eval against the adjoint context") {
    EvalContext ctx = EvalContext::make("sl2-adjoint");
    CHECK(ctx.eval("C(v_h, 1, v_h)") == vacuum(ctx.algebra()) * Rational(-3));
    CHECK(ctx.eval("1") == vacuum(ctx.algebra()));
    CHECK(ctx.eval("D(g[1,0])") == gamma_state(ctx.algebra(), 0, 1));
    CHECK(ctx.eval("3/2 * b[1,0]") == beta_state(ctx.algebra(), 0) * Rational(3, 2));
    CHECK(ctx.eval("b[1,0] * 2") == beta_state(ctx.algebra(), 0) * Rational(2));
    CHECK(ctx.eval("-v_x") == ctx.named().at("v_x") * Rational(-1));
    CHECK(ctx.eval("C(theta_x, 0, theta_y)") == ctx.named().at("theta_h"));
    CHECK(ctx.eval("W(1, theta_x)") == ctx.named().at("theta_x"));

    CHECK_THROWS_AS(ctx.eval("no_such_name"), value_error);
    CHECK_THROWS_AS(ctx.eval("u[1,0]"), algebra_error);           // currents need O(g,B)
    CHECK_THROWS_AS(ctx.eval("W(b[1,0], b[2,0]) * v_x"), value_error);  // non-scalar '*'
    CHECK_THROWS_AS(ctx.eval("b[7,0]"), algebra_error);           // index out of range
}

TEST_CASE("eval against the current-algebra context") {
    EvalContext ctx = EvalContext::make("sl2-current");
    CHECK(ctx.engine().verify_virasoro(ctx.eval("L_O"), Rational(6)));
    CHECK(ctx.eval("C(u[1,0], 0, u[2,0])") == current_state(ctx.algebra(), 2));
    CHECK_THROWS_AS(ctx.eval("b[1,0]"), algebra_error);
}

TEST_CASE("render round-trips through parse and eval") {
    EvalContext ctx = EvalContext::make("sl2-adjoint");
    std::vector<std::string> exprs = {
        "theta_x", "theta_h", "L_S", "script_L", "v_y",
        "W(b[1,0], W(b[2,1], g[3,0])) - 2/3 * g[1,2]",
        "C(L_S, 0, theta_x)",
    };
    for (auto& s : exprs) {
        State v = ctx.eval(s);
        State again = ctx.eval(ctx.render(v));
        CHECK(again == v);
    }
    CHECK(ctx.render(State{ctx.algebra(), {}}) == "0");

    EvalContext cur = EvalContext::make("sl2-current");
    State lo = cur.eval("L_O");
    CHECK(cur.eval(cur.render(lo)) == lo);
}

TEST_CASE("eval is deterministic") {
    EvalContext a = EvalContext::make("sl2-adjoint");
    EvalContext b = EvalContext::make("sl2-adjoint");
    CHECK(a.render(a.eval("C(L_S, 1, script_L)")) == b.render(b.eval("C(L_S, 1, script_L)")));
}

TEST_CASE("report JSON round-trip") {
    VerificationReport rep;
    rep.suite = "demo";
    rep.params["N"] = "1";
    rep.add("alpha", "1", "1");
    rep.add("beta", "2", "3");
    rep.elapsed_ms = 17;
    CHECK_FALSE(rep.pass());
    VerificationReport back = VerificationReport::from_json(rep.json());
    CHECK(back.suite == rep.suite);
    CHECK(back.params == rep.params);
    CHECK(back.elapsed_ms == rep.elapsed_ms);
    REQUIRE(back.cases.size() == 2);
    CHECK(back.cases[1].actual == "3");
    CHECK_FALSE(back.pass());
    // and the round-trip is stable
    CHECK(VerificationReport::from_json(back.json()).json() == back.json());
}

TEST_CASE("suite registry") {
    auto names = suite_names();
    CHECK(names.size() == 11);
    CHECK_THROWS_AS(run_suite("bogus", SuiteParams{}), value_error);
    // reports are reproducible for fixed parameters and seed
    SuiteParams p;
    auto r1 = run_suite("ope-currents", p);
    auto r2 = run_suite("ope-currents", p);
    r1.elapsed_ms = r2.elapsed_ms = 0;
    CHECK(r1.json() == r2.json());
    CHECK(r1.pass());
}
