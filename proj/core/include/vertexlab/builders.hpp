#pragma once

#include <map>

#include "vertexlab/engine.hpp"
#include "vertexlab/lie.hpp"

namespace vtx {

/// theta^u(z) = -sum_i :beta^{rho(u)(x_i)}(z) gamma^{x'_i}(z): in S(V)
State build_theta(const LieRepSpec& spec, int a);
std::vector<State> build_thetas(const LieRepSpec& spec);

/// all basis pairs satisfy theta^u o_1 theta^v = B(u,v) 1,
/// theta^u o_0 theta^v = theta^{[u,v]}, higher products vanish
bool check_current_ope(const LieRepSpec& spec, Engine& eng, const std::vector<State>& thetas);

/// Sugawara vector of O(g, lambda K), g simple; handles non-orthonormal
/// bases through the inverse Gram matrix of K. Throws at the singular level
/// lambda = -1/2.
State sugawara(const LieRepSpec& spec, const Rational& lambda, Engine& eng);

/// L_S(z) = sum_i :beta^{x_i} d gamma^{x'_i}: , central charge 2 dim V
State build_L_S(const LieRepSpec& spec, AlgebraPtr ghost);
/// Euler element v(z) = sum_i :beta^{x_i} gamma^{x'_i}: (requires Tr rho = 0)
State build_euler(const LieRepSpec& spec, AlgebraPtr ghost);
/// image of the Sugawara vector under rho-hat: currents replaced by thetas
State build_rho_L_O(const LieRepSpec& spec, Engine& ghost_eng);
/// script L = L_S - rho-hat(L_O); central charge (2l+2) dim g / (2l+1)
State build_script_L(const LieRepSpec& spec, Engine& ghost_eng);

/// (v^x, v^y, v^h) from the symmetric invariant form on V:
///   v^h = sum_i beta_i gamma_i,  v^x = 1/2 sum form_{jk} gamma_j gamma_k,
///   v^y = -1/2 sum (form^{-1})_{jk} beta_j beta_k
std::array<State, 3> build_sl2_triple(const LieRepSpec& spec, AlgebraPtr ghost);

/// named operators over the ghost system of a spec; "L_O" denotes the
/// rho-hat image of the Sugawara vector when it exists
struct NamedOperatorSet {
    AlgebraPtr algebra;
    std::map<std::string, State> ops;

    bool has(const std::string& n) const { return ops.count(n) != 0; }
    const State& at(const std::string& n) const;
};

NamedOperatorSet named_operator_set(const LieRepSpec& spec, Engine& ghost_eng);

}  // namespace vtx
