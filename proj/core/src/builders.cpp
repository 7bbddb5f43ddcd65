#include "vertexlab/builders.hpp"

namespace vtx {

State build_theta(const LieRepSpec& spec, int a) {
    if (a < 0 || a >= spec.lie_dim()) throw value_error("build_theta: index out of range");
    AlgebraPtr g = spec.ghost_algebra();
    const int n = spec.rep_dim();
    Polynomial p;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rational& r = spec.rho(a)[j][i];
            if (r.is_zero()) continue;
            p.add_term(Monomial::var(beta_mode(j, 0)).mul_var(gamma_mode(i, 0)), -r);
        }
    return {g, std::move(p)};
}

std::vector<State> build_thetas(const LieRepSpec& spec) {
    std::vector<State> out;
    for (int a = 0; a < spec.lie_dim(); ++a) out.push_back(build_theta(spec, a));
    return out;
}

bool check_current_ope(const LieRepSpec& spec, Engine& eng, const std::vector<State>& thetas) {
    const int m = spec.lie_dim();
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            State o1 = eng.apply_mode(thetas[a], 1, thetas[b]);
            if (!(o1 == vacuum(eng.algebra()) * spec.B(a, b))) return false;
            State o0 = eng.apply_mode(thetas[a], 0, thetas[b]);
            State bracket{eng.algebra(), {}};
            for (int c = 0; c < m; ++c)
                if (!spec.f(a, b, c).is_zero()) bracket = bracket + thetas[c] * spec.f(a, b, c);
            if (!(o0 == bracket)) return false;
            for (int n = 2; n < 4; ++n)
                if (!eng.apply_mode(thetas[a], n, thetas[b]).is_zero()) return false;
        }
    return true;
}

State sugawara(const LieRepSpec& spec, const Rational& lambda, Engine& eng) {
    if (lambda == Rational(-1, 2)) throw value_error("sugawara: singular level lambda = -1/2");
    if (eng.algebra()->kind() != AlgebraKind::CurrentAlgebra)
        throw algebra_error("sugawara: engine must run over O(g, lambda K)");
    Matrix Kinv = matrix_inverse(spec.K_matrix());
    const int m = spec.lie_dim();
    Rational pref = Rational(1) / (Rational(2) * lambda + Rational(1));
    State acc{eng.algebra(), {}};
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) {
            if (Kinv[j][k].is_zero()) continue;
            State w = eng.wick(current_state(eng.algebra(), j), current_state(eng.algebra(), k));
            acc = acc + w * (pref * Kinv[j][k]);
        }
    return acc;
}

State build_L_S(const LieRepSpec& spec, AlgebraPtr ghost) {
    Polynomial p;
    for (int i = 0; i < spec.rep_dim(); ++i)
        p.add_term(Monomial::var(beta_mode(i, 0)).mul_var(gamma_mode(i, 1)), Rational(1));
    return {std::move(ghost), std::move(p)};
}

State build_euler(const LieRepSpec& spec, AlgebraPtr ghost) {
    for (int a = 0; a < spec.lie_dim(); ++a)
        if (!trace(spec.rho(a)).is_zero())
            throw algebra_error("build_euler: needs Tr rho(u) = 0 for all u");
    Polynomial p;
    for (int i = 0; i < spec.rep_dim(); ++i)
        p.add_term(Monomial::var(beta_mode(i, 0)).mul_var(gamma_mode(i, 0)), Rational(1));
    return {std::move(ghost), std::move(p)};
}

State build_rho_L_O(const LieRepSpec& spec, Engine& ghost_eng) {
    auto lam = spec.lambda();
    if (!lam) throw algebra_error("rho(L_O): B is not a multiple of the Killing form");
    if (*lam == Rational(-1, 2)) throw value_error("rho(L_O): singular level lambda = -1/2");
    Matrix Kinv = matrix_inverse(spec.K_matrix());
    const int m = spec.lie_dim();
    Rational pref = Rational(1) / (Rational(2) * (*lam) + Rational(1));
    auto thetas = build_thetas(spec);
    State acc{ghost_eng.algebra(), {}};
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) {
            if (Kinv[j][k].is_zero()) continue;
            acc = acc + ghost_eng.wick(thetas[j], thetas[k]) * (pref * Kinv[j][k]);
        }
    return acc;
}

State build_script_L(const LieRepSpec& spec, Engine& ghost_eng) {
    return build_L_S(spec, ghost_eng.algebra()) - build_rho_L_O(spec, ghost_eng);
}

std::array<State, 3> build_sl2_triple(const LieRepSpec& spec, AlgebraPtr ghost) {
    const Matrix& F = spec.form();  // throws when absent
    Matrix Finv = matrix_inverse(F);
    const int n = spec.rep_dim();
    Polynomial px, py, ph;
    for (int j = 0; j < n; ++j) {
        ph.add_term(Monomial::var(beta_mode(j, 0)).mul_var(gamma_mode(j, 0)), Rational(1));
        for (int k = 0; k < n; ++k) {
            if (!F[j][k].is_zero())
                px.add_term(Monomial::var(gamma_mode(j, 0)).mul(Monomial::var(gamma_mode(k, 0))),
                            F[j][k] * Rational(1, 2));
            if (!Finv[j][k].is_zero())
                py.add_term(Monomial::var(beta_mode(j, 0)).mul(Monomial::var(beta_mode(k, 0))),
                            Finv[j][k] * Rational(-1, 2));
        }
    }
    return {State{ghost, std::move(px)}, State{ghost, std::move(py)}, State{ghost, std::move(ph)}};
}

const State& NamedOperatorSet::at(const std::string& n) const {
    auto it = ops.find(n);
    if (it == ops.end()) throw value_error("unknown operator name: " + n);
    return it->second;
}

NamedOperatorSet named_operator_set(const LieRepSpec& spec, Engine& ghost_eng) {
    NamedOperatorSet s;
    s.algebra = ghost_eng.algebra();
    auto names = spec.basis_names();
    for (int a = 0; a < spec.lie_dim(); ++a) {
        std::string suffix = a < int(names.size()) ? names[a] : std::to_string(a + 1);
        s.ops["theta_" + suffix] = build_theta(spec, a);
    }
    s.ops["L_S"] = build_L_S(spec, s.algebra);
    bool euler_ok = true;
    for (int a = 0; a < spec.lie_dim(); ++a) euler_ok = euler_ok && trace(spec.rho(a)).is_zero();
    if (euler_ok) s.ops["euler"] = build_euler(spec, s.algebra);
    if (auto lam = spec.lambda(); lam && *lam != Rational(-1, 2)) {
        s.ops["L_O"] = build_rho_L_O(spec, ghost_eng);
        s.ops["script_L"] = s.ops["L_S"] - s.ops["L_O"];
    }
    if (spec.has_form()) {
        auto [vx, vy, vh] = build_sl2_triple(spec, s.algebra);
        s.ops["v_x"] = vx;
        s.ops["v_y"] = vy;
        s.ops["v_h"] = vh;
    }
    return s;
}

}  // namespace vtx
