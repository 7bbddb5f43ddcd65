#include "vertexlab/gr.hpp"

namespace vtx {

namespace {

VarId to_gr_var(const VarId& v) {
    switch (v.family) {
        case Family::BetaMode: return gr_beta(v.basis, v.level);
        case Family::GammaMode: return gr_gamma(v.basis, v.level);
        case Family::CurrentMode: return v;  // current gr variables reuse the family
        default: throw value_error("phi: not a state variable");
    }
}

VarId to_state_var(const VarId& v) {
    switch (v.family) {
        case Family::GrBeta: return beta_mode(v.basis, v.level);
        case Family::GrGamma: return gamma_mode(v.basis, v.level);
        case Family::CurrentMode: return v;
        default: throw value_error("lift: not a gr variable");
    }
}

}  // namespace

long filtration_degree(const State& a, const FiltrationSpec& f) {
    long d = 0;
    for (auto& [m, c] : a.value.terms()) d = std::max(d, m.degree() * f.scale);
    return d;
}

Polynomial phi(const State& a, long d, const FiltrationSpec& f) {
    if (filtration_degree(a, f) > d) throw value_error("phi: filtration degree exceeds d");
    Polynomial out;
    for (auto& [m, c] : a.value.terms()) {
        if (m.degree() * f.scale != d) continue;
        Monomial gm;
        Rational coef = c;
        for (auto& [v, e] : m.factors()) {
            gm = gm.mul_var(to_gr_var(v), e);
            Rational kf = Rational::factorial(unsigned(v.level));
            for (uint32_t i = 0; i < e; ++i) coef /= kf;
        }
        out.add_term(gm, coef);
    }
    return out;
}

State lift_gr(const Polynomial& p, const FiltrationSpec& f) {
    Polynomial out;
    for (auto& [m, c] : p.terms()) {
        Monomial sm;
        Rational coef = c;
        for (auto& [v, e] : m.factors()) {
            sm = sm.mul_var(to_state_var(v), e);
            Rational kf = Rational::factorial(unsigned(v.level));
            for (uint32_t i = 0; i < e; ++i) coef *= kf;
        }
        out.add_term(sm, coef);
    }
    return {f.algebra, std::move(out)};
}

std::vector<State> lift_gr_generators(const std::vector<Polynomial>& gens,
                                      const FiltrationSpec& f) {
    std::vector<State> out;
    out.reserve(gens.size());
    for (auto& g : gens) out.push_back(lift_gr(g, f));
    return out;
}

Polynomial gr_derivative(const Polynomial& p) {
    Polynomial out;
    for (auto& [m, c] : p.terms())
        for (auto& [v, e] : m.factors()) {
            VarId v2{v.family, v.basis, v.level + 1, v.extra};
            out.add_term(m.div_var(v).mul_var(v2), c * Rational(long(e)));
        }
    return out;
}

Polynomial gr_derivative(const Polynomial& p, int times) {
    Polynomial r = p;
    for (int i = 0; i < times; ++i) r = gr_derivative(r);
    return r;
}

std::optional<long> k_invariant(Engine& eng, const FiltrationSpec& f,
                                const std::vector<State>& generators) {
    std::optional<long> k;
    for (auto& a : generators)
        for (auto& b : generators) {
            long bound = max_weight(a) + max_weight(b);
            for (int n = 0; n < bound; ++n) {
                State p = eng.apply_mode(a, n, b);
                if (p.is_zero()) continue;
                long v = filtration_degree(a, f) + filtration_degree(b, f) -
                         filtration_degree(p, f);
                if (!k || v < *k) k = v;
            }
        }
    return k;
}

GrDerOp::GrDerOp(Engine& eng, FiltrationSpec filt, State a, int n, VarTable table,
                 std::string name)
    : eng_(&eng),
      filt_(std::move(filt)),
      a_(std::move(a)),
      n_(n),
      table_(std::move(table)),
      name_(std::move(name)) {
    d_ = filtration_degree(a_, filt_);
    for (auto& [m, c] : a_.value.terms())
        if (m.degree() * filt_.scale != d_)
            throw value_error("GrDerOp: operator state not degree-homogeneous");
}

Polynomial GrDerOp::table_apply(const Polynomial& p) const {
    if (!table_) throw value_error("GrDerOp: no table attached");
    Polynomial out;
    for (auto& [m, c] : p.terms())
        for (auto& [v, e] : m.factors())
            out += table_(v).mul_monomial(m.div_var(v), c * Rational(long(e)));
    return out;
}

Polynomial GrDerOp::apply(const Polynomial& p) const {
    Polynomial out;
    for (auto& [m, c] : p.terms()) {
        long r = m.degree() * filt_.scale;
        State lifted = lift_gr(Polynomial::monomial(m), filt_);
        State image = eng_->apply_mode(a_, n_, lifted);
        out += phi(image, r + d_ - filt_.k(), filt_) * c;
    }
    if (table_) {
        // the printed tables are assertions against the engine, not a
        // second code path; disagreement is an internal error
        if (!(table_apply(p) == out))
            throw value_error("GrDerOp '" + name_ + "': table disagrees with engine");
    }
    return out;
}

namespace {

Polynomial theta_var_action(const Matrix& rho, int mode, const VarId& v) {
    if (mode > v.level) return {};
    Rational c = Rational::falling(v.level, unsigned(mode));
    int n = int(rho.size());
    Polynomial out;
    if (v.family == Family::GrBeta) {
        for (int j = 0; j < n; ++j)
            if (!rho[j][v.basis].is_zero())
                out.add_term(Monomial::var(gr_beta(j, v.level - mode)), c * rho[j][v.basis]);
    } else if (v.family == Family::GrGamma) {
        for (int j = 0; j < n; ++j)
            if (!rho[v.basis][j].is_zero())
                out.add_term(Monomial::var(gr_gamma(j, v.level - mode)), -c * rho[v.basis][j]);
    } else {
        throw value_error("theta table: not a gr(S(V)) variable");
    }
    return out;
}

Polynomial v_var_action(const LieRepSpec& spec, int u, int mode, const VarId& v) {
    if (mode > v.level) return {};
    Rational c = Rational::falling(v.level, unsigned(mode));
    const int n = spec.rep_dim();
    Polynomial out;
    if (u == 2) {  // v^h: beta -> -beta, gamma -> +gamma, level drops by mode
        if (v.family == Family::GrBeta)
            out.add_term(Monomial::var(gr_beta(v.basis, v.level - mode)), -c);
        else
            out.add_term(Monomial::var(gr_gamma(v.basis, v.level - mode)), c);
        return out;
    }
    if (u == 0) {  // v^x kills gamma; beta_j -> -c sum_l form_{jl} gamma_l
        if (v.family != Family::GrBeta) return {};
        const Matrix& F = spec.form();
        for (int l = 0; l < n; ++l)
            if (!F[v.basis][l].is_zero())
                out.add_term(Monomial::var(gr_gamma(l, v.level - mode)), -c * F[v.basis][l]);
        return out;
    }
    // v^y kills beta; gamma_j -> -c sum_l (form^{-1})_{jl} beta_l
    if (v.family != Family::GrGamma) return {};
    Matrix Finv = matrix_inverse(spec.form());
    for (int l = 0; l < n; ++l)
        if (!Finv[v.basis][l].is_zero())
            out.add_term(Monomial::var(gr_beta(l, v.level - mode)), -c * Finv[v.basis][l]);
    return out;
}

}  // namespace

GrDerOp::VarTable theta_table(const LieRepSpec& spec, int u, int mode) {
    Matrix rho = spec.rho(u);
    return [rho, mode](const VarId& v) { return theta_var_action(rho, mode, v); };
}

GrDerOp::VarTable v_table(const LieRepSpec& spec, int u, int mode) {
    auto spec_copy = std::make_shared<LieRepSpec>(spec);
    return [spec_copy, u, mode](const VarId& v) { return v_var_action(*spec_copy, u, mode, v); };
}

std::vector<GrDerOp> sl2t_operators(Engine& eng, const FiltrationSpec& filt,
                                    const LieRepSpec& spec, int max_mode) {
    auto triple = build_sl2_triple(spec, filt.algebra);
    static const char* names[] = {"v_x", "v_y", "v_h"};
    std::vector<GrDerOp> ops;
    for (int u = 0; u < 3; ++u)
        for (int n = 0; n <= max_mode; ++n)
            ops.emplace_back(eng, filt, triple[u], n, v_table(spec, u, n),
                             std::string(names[u]) + "(" + std::to_string(n) + ")");
    return ops;
}

std::vector<GrDerOp> gt_operators(Engine& eng, const FiltrationSpec& filt,
                                  const LieRepSpec& spec, int max_mode) {
    std::vector<GrDerOp> ops;
    auto names = spec.basis_names();
    for (int u = 0; u < spec.lie_dim(); ++u) {
        State th = build_theta(spec, u);
        for (int n = 0; n <= max_mode; ++n) {
            std::string nm = "theta_" + (u < int(names.size()) ? names[u] : std::to_string(u));
            ops.emplace_back(eng, filt, th, n, theta_table(spec, u, n),
                             nm + "(" + std::to_string(n) + ")");
        }
    }
    return ops;
}

std::string gr_poly_str(const Polynomial& p, const LieRepSpec& spec) {
    auto names = spec.basis_names();
    auto label = [&](int i) {
        return i < int(names.size()) ? names[i] : std::to_string(i + 1);
    };
    return p.str([&](const VarId& v) {
        std::string lvl = std::to_string(v.level);
        switch (v.family) {
            case Family::GrBeta: return "b[" + label(v.basis) + "," + lvl + "]";
            case Family::GrGamma: return "g[" + label(v.basis) + "'," + lvl + "]";
            default: return var_name(v);
        }
    });
}

GradingDescriptor gr_degree_grading(int scale) {
    return {"degree", [scale](const VarId&) { return long(scale); }};
}

GradingDescriptor gr_level_grading() {
    return {"level", [](const VarId& v) { return long(v.level); }};
}

GradingDescriptor gr_family_degree(Family fam, int basis) {
    return {"family-degree",
            [fam, basis](const VarId& v) { return v.family == fam && v.basis == basis ? 1L : 0L; }};
}

GradingDescriptor gr_family_level(Family fam, int basis) {
    return {"family-level", [fam, basis](const VarId& v) {
                return v.family == fam && v.basis == basis ? long(v.level) : 0L;
            }};
}

namespace {
// W^1 = <beta^x, gamma^{y'}>, W^2 = <beta^y, gamma^{x'}>, W^3 = <beta^h, gamma^{h'}>
bool in_W(int i, const VarId& v) {
    if (v.family == Family::GrBeta) return v.basis == i - 1;
    if (v.family == Family::GrGamma) {
        if (i == 1) return v.basis == 1;
        if (i == 2) return v.basis == 0;
        return v.basis == 2;
    }
    return false;
}
}  // namespace

GradingDescriptor gr_W_degree(int i) {
    return {"W-degree", [i](const VarId& v) { return in_W(i, v) ? 1L : 0L; }};
}

GradingDescriptor gr_W_level(int i) {
    return {"W-level", [i](const VarId& v) { return in_W(i, v) ? long(v.level) : 0L; }};
}

}  // namespace vtx
