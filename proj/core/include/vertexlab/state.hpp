#pragma once

#include <map>
#include <optional>

#include "vertexlab/algebra.hpp"

namespace vtx {

/// An element of the state space of S(V) or O(g, B): an exact-rational
/// polynomial in creation-mode variables. beta_mode(i,k) is beta^{x_i}(-k-1),
/// gamma_mode(i,k) is gamma^{x'_i}(-k-1), current_mode(a,k) is u_a(-k-1); the
/// empty monomial is the vacuum. Current-algebra monomials are PBW words read
/// in descending variable order.
struct State {
    AlgebraPtr algebra;
    Polynomial value;

    bool is_zero() const { return value.is_zero(); }
    friend bool operator==(const State& a, const State& b) {
        return a.algebra == b.algebra && a.value == b.value;
    }
    State operator+(const State& o) const;
    State operator-(const State& o) const;
    State operator*(const Rational& c) const { return {algebra, value * c}; }
    friend State operator*(const Rational& c, const State& s) { return s * c; }
};

State vacuum(AlgebraPtr alg);
/// beta^{x_i}(-k-1) acting on the vacuum; i is 0-based
State beta_state(AlgebraPtr alg, int i, int k = 0);
State gamma_state(AlgebraPtr alg, int i, int k = 0);
State current_state(AlgebraPtr alg, int a, int k = 0);

/// conformal weight of a homogeneous state; throws for inhomogeneous input
long weight(const State& a);
/// per-weight split, always defined
std::map<long, State> weight_components(const State& a);
bool is_weight_homogeneous(const State& a);
/// largest weight appearing (0 for the zero state)
long max_weight(const State& a);

void check_same_algebra(const State& a, const State& b);

std::string state_str(const State& a);

}  // namespace vtx
