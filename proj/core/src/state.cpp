#include "vertexlab/state.hpp"

namespace vtx {

State State::operator+(const State& o) const {
    check_same_algebra(*this, o);
    return {algebra ? algebra : o.algebra, value + o.value};
}

State State::operator-(const State& o) const {
    check_same_algebra(*this, o);
    return {algebra ? algebra : o.algebra, value - o.value};
}

State vacuum(AlgebraPtr alg) { return {std::move(alg), Polynomial(Rational(1))}; }

static void check_ghost(const AlgebraPtr& alg, int i, int k) {
    if (alg->kind() != AlgebraKind::GhostSystem)
        throw algebra_error("beta/gamma state in a non-ghost algebra");
    if (i < 0 || i >= alg->dimension()) throw algebra_error("basis index out of range");
    if (k < 0) throw algebra_error("creation level must be >= 0");
}

State beta_state(AlgebraPtr alg, int i, int k) {
    check_ghost(alg, i, k);
    return {std::move(alg), Polynomial::var(beta_mode(i, k))};
}

State gamma_state(AlgebraPtr alg, int i, int k) {
    check_ghost(alg, i, k);
    return {std::move(alg), Polynomial::var(gamma_mode(i, k))};
}

State current_state(AlgebraPtr alg, int a, int k) {
    if (alg->kind() != AlgebraKind::CurrentAlgebra)
        throw algebra_error("current state in a non-current algebra");
    if (a < 0 || a >= alg->dimension()) throw algebra_error("basis index out of range");
    if (k < 0) throw algebra_error("creation level must be >= 0");
    return {std::move(alg), Polynomial::var(current_mode(a, k))};
}

long weight(const State& a) {
    std::optional<long> w;
    for (auto& [m, c] : a.value.terms()) {
        long mw = m.weight();
        if (w && *w != mw) throw value_error("weight: state not weight-homogeneous");
        w = mw;
    }
    return w.value_or(0);
}

std::map<long, State> weight_components(const State& a) {
    std::map<long, State> out;
    for (auto& [m, c] : a.value.terms()) {
        auto& s = out[m.weight()];
        s.algebra = a.algebra;
        s.value.add_term(m, c);
    }
    return out;
}

bool is_weight_homogeneous(const State& a) {
    std::optional<long> w;
    for (auto& [m, c] : a.value.terms()) {
        if (w && *w != m.weight()) return false;
        w = m.weight();
    }
    return true;
}

long max_weight(const State& a) {
    long w = 0;
    for (auto& [m, c] : a.value.terms()) w = std::max(w, m.weight());
    return w;
}

void check_same_algebra(const State& a, const State& b) {
    if (a.algebra && b.algebra && a.algebra != b.algebra)
        throw algebra_error("states belong to different algebras");
}

std::string state_str(const State& a) { return a.value.str(); }

}  // namespace vtx
