#pragma once

#include <memory>
#include <string>
#include <vector>

#include "vertexlab/polynomial.hpp"

namespace vtx {

struct algebra_error : value_error {
    using value_error::value_error;
};

enum class AlgebraKind { GhostSystem, CurrentAlgebra };

/// The ambient vertex algebra of a state space: either a beta-gamma ghost
/// system S(V) with the canonical pairing <x'_i, x_j> = delta_ij, or a
/// current algebra O(g, B) given by structure constants and the level form B.
class AlgebraSpec {
  public:
    /// S(V), dim V = n
    static std::shared_ptr<const AlgebraSpec> ghost_system(int n, std::string name = "");
    /// O(g, B): f[a][b][c] with [u_a, u_b] = sum_c f^c_{ab} u_c. Checks B
    /// symmetric, f antisymmetric in (a, b), and the Jacobi identity.
    static std::shared_ptr<const AlgebraSpec> current_algebra(
        int n, std::vector<std::vector<std::vector<Rational>>> f,
        std::vector<std::vector<Rational>> B, std::string name = "");

    AlgebraKind kind() const { return kind_; }
    int dimension() const { return n_; }
    const std::string& name() const { return name_; }

    const Rational& B(int a, int b) const { return B_[a][b]; }
    /// structure constant f^c_{ab}
    const Rational& f(int a, int b, int c) const { return f_[a][b][c]; }
    const std::vector<std::vector<std::vector<Rational>>>& structure() const { return f_; }
    const std::vector<std::vector<Rational>>& form() const { return B_; }

  private:
    AlgebraSpec() = default;
    AlgebraKind kind_ = AlgebraKind::GhostSystem;
    int n_ = 0;
    std::string name_;
    std::vector<std::vector<std::vector<Rational>>> f_;
    std::vector<std::vector<Rational>> B_;
};

using AlgebraPtr = std::shared_ptr<const AlgebraSpec>;

}  // namespace vtx
