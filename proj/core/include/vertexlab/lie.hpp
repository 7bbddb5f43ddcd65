#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vertexlab/algebra.hpp"

namespace vtx {

using Matrix = std::vector<std::vector<Rational>>;

Matrix matmul(const Matrix& a, const Matrix& b);
Rational trace(const Matrix& a);
Matrix matrix_inverse(const Matrix& a);  // throws on singular input

/// A finite-dimensional Lie algebra with structure constants, its Killing
/// form, and a representation rho on V; B(u,v) = -Tr(rho(u) rho(v)) is
/// derived. Optionally V carries a symmetric invariant bilinear form.
class LieRepSpec {
  public:
    /// f^c_{ab}: [u_a, u_b] = sum f^c_{ab} u_c; rho: m matrices of size n x n.
    /// Checks rho([u,v]) = [rho u, rho v] and, when present, invariance of
    /// the form on V.
    LieRepSpec(std::vector<std::vector<std::vector<Rational>>> f, std::vector<Matrix> rho,
               std::optional<Matrix> form_on_V = std::nullopt, std::string name = "",
               std::vector<std::string> basis_names = {});

    int lie_dim() const { return m_; }
    int rep_dim() const { return n_; }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& basis_names() const { return basis_names_; }

    const Rational& f(int a, int b, int c) const { return f_[a][b][c]; }
    const Matrix& rho(int a) const { return rho_[a]; }
    /// B(u_a, u_b) = -Tr(rho(u_a) rho(u_b))
    const Rational& B(int a, int b) const { return B_[a][b]; }
    const Matrix& B_matrix() const { return B_; }
    /// Killing form K(u_a, u_b) = Tr(ad u_a ad u_b)
    const Rational& K(int a, int b) const { return K_[a][b]; }
    const Matrix& K_matrix() const { return K_; }

    bool has_form() const { return form_.has_value(); }
    const Matrix& form() const;
    bool form_orthonormal() const;

    /// the level scalar lambda with B = lambda K, if B is proportional to a
    /// nondegenerate K (g simple)
    std::optional<Rational> lambda() const;

    /// the current algebra O(g, B) at the derived level B
    AlgebraPtr current_algebra_at_B() const;
    /// O(g, lambda K)
    AlgebraPtr current_algebra(const Rational& lambda) const;
    /// the ghost system S(V)
    AlgebraPtr ghost_algebra() const;

  private:
    int m_ = 0, n_ = 0;
    std::string name_;
    std::vector<std::string> basis_names_;
    std::vector<std::vector<std::vector<Rational>>> f_;
    std::vector<Matrix> rho_;
    Matrix B_, K_;
    std::optional<Matrix> form_;
    mutable AlgebraPtr ghost_cache_, current_cache_;
};

/// sl(2) with basis x, y, h ([x,y] = h, [h,x] = 2x, [h,y] = -2y) acting on
/// itself by ad; the form on V is K/8, which reproduces the standard
/// quadratic expressions for the sl(2) triple in this basis
LieRepSpec sl2_adjoint();
/// sl(2) on its standard 2-dimensional module (no symmetric invariant form)
LieRepSpec sl2_standard();
/// abelian Lie algebra of dimension n acting by zero on C^n
LieRepSpec abelian(int n);

/// named registry used by the CLI: "sl2-adjoint", "sl2-standard", "abelian-<n>"
LieRepSpec lookup_spec(const std::string& name);

}  // namespace vtx
