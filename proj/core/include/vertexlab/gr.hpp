#pragma once

#include <functional>
#include <optional>

#include "vertexlab/builders.hpp"
#include "vertexlab/engine.hpp"

namespace vtx {

/// Good increasing filtration data for a state space: every creation
/// variable has degree `scale` (1 for standalone algebras, 2 for current
/// algebras mapped into S(V)); k(V, deg) follows the algebra kind.
struct FiltrationSpec {
    AlgebraPtr algebra;
    int scale = 1;

    long k() const { return (algebra->kind() == AlgebraKind::GhostSystem ? 2 : 1) * scale; }
};

/// filtration degree: max over monomials of (#creation factors) * scale
long filtration_degree(const State& a, const FiltrationSpec& f);

/// phi_d: project the degree-d top part into gr; v(-k-1) -> (1/k!) var_k.
/// Throws if filtration_degree(a) > d.
Polynomial phi(const State& a, long d, const FiltrationSpec& f);

/// canonical lift of a gr polynomial: var_k -> k! v(-k-1), monomial-wise
State lift_gr(const Polynomial& p, const FiltrationSpec& f);
std::vector<State> lift_gr_generators(const std::vector<Polynomial>& gens,
                                      const FiltrationSpec& f);

/// derivation d on gr: var_k -> var_{k+1}
Polynomial gr_derivative(const Polynomial& p);
Polynomial gr_derivative(const Polynomial& p, int times);

/// k(V, deg) = min over generator pairs and n >= 0 of
/// deg a + deg b - deg(a o_n b); empty optional means infinite (abelian)
std::optional<long> k_invariant(Engine& eng, const FiltrationSpec& f,
                                const std::vector<State>& generators);

/// One derivation a(n)_Der on gr(V) for a degree-homogeneous state a of the
/// same filtration. apply() computes through the engine on a lift
/// (phi_{r+d-k} of a o_n lift), and when a closed-form variable table is
/// attached it cross-checks the result and throws on disagreement.
class GrDerOp {
  public:
    using VarTable = std::function<Polynomial(const VarId&)>;

    GrDerOp(Engine& eng, FiltrationSpec filt, State a, int n, VarTable table = nullptr,
            std::string name = "");

    Polynomial apply(const Polynomial& p) const;
    Polynomial apply_var(const VarId& v) const { return apply(Polynomial::var(v)); }
    /// Leibniz extension of the attached table alone (no engine)
    Polynomial table_apply(const Polynomial& p) const;

    int mode() const { return n_; }
    const State& state() const { return a_; }
    const std::string& name() const { return name_; }
    long degree_shift() const { return d_ - filt_.k(); }  // 0 for our operators
    bool has_table() const { return bool(table_); }

  private:
    Engine* eng_;
    FiltrationSpec filt_;
    State a_;
    int n_;
    long d_;
    VarTable table_;
    std::string name_;
};

/// closed-form table action of theta^u(n) on a gr variable:
/// beta^x_k -> c^n_k beta^{rho(u)x}_{k-n}, gamma side through the dual action
GrDerOp::VarTable theta_table(const LieRepSpec& spec, int u, int mode);
/// closed-form table action of v^u(n), valid in an arbitrary basis of V
/// through the invariant form and its inverse; the engine is normative and
/// the gr-compat suite records the derived coefficients
GrDerOp::VarTable v_table(const LieRepSpec& spec, int u, int mode);

/// the sl(2)[t] operator family {v^u(n)} with tables attached
std::vector<GrDerOp> sl2t_operators(Engine& eng, const FiltrationSpec& filt,
                                    const LieRepSpec& spec, int max_mode);
/// the g[t] operator family {theta^u(n)}
std::vector<GrDerOp> gt_operators(Engine& eng, const FiltrationSpec& filt,
                                  const LieRepSpec& spec, int max_mode);

/// labeled text for gr polynomials: "b[x,k]", "g[x',k]" when the spec
/// carries basis names, numeric indices otherwise
std::string gr_poly_str(const Polynomial& p, const LieRepSpec& spec);

// gradings on gr(S(V))
GradingDescriptor gr_degree_grading(int scale = 1);
GradingDescriptor gr_level_grading();
/// deg_{beta^u} / deg_{gamma^{u'}}: count of one family/basis pair
GradingDescriptor gr_family_degree(Family fam, int basis);
GradingDescriptor gr_family_level(Family fam, int basis);
/// W^i-degree for the sl(2)-adjoint case: W^1 = (beta^x, gamma^{y'}),
/// W^2 = (beta^y, gamma^{x'}), W^3 = (beta^h, gamma^{h'}); i in {1,2,3}
GradingDescriptor gr_W_degree(int i);
GradingDescriptor gr_W_level(int i);

}  // namespace vtx
