#pragma once

#include "vertexlab/builders.hpp"
#include "vertexlab/parser.hpp"

namespace vtx {

/// Evaluation context: an algebra, its engine, and the named operators.
/// Ghost contexts ("sl2-adjoint", "sl2-standard", "abelian-<n>") expose
/// b[i,k]/g[i,k] atoms and the built operators; "sl2-current" is
/// O(sl(2), -K) with u[a,k] atoms and the honest Sugawara vector L_O.
class EvalContext {
  public:
    static EvalContext make(const std::string& algebra_name);

    const AlgebraPtr& algebra() const { return algebra_; }
    Engine& engine() { return *engine_; }
    const NamedOperatorSet& named() const { return named_; }
    const std::string& name() const { return name_; }

    State eval(const Expr& e);
    State eval(const std::string& text) { return eval(*parse(text)); }

    /// canonical rendering that re-parses and re-evaluates to the same state
    std::string render(const State& s) const;

  private:
    std::string name_;
    AlgebraPtr algebra_;
    std::shared_ptr<Engine> engine_;
    NamedOperatorSet named_;
};

}  // namespace vtx
