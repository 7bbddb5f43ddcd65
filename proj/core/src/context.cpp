#include "vertexlab/context.hpp"

#include <sstream>

namespace vtx {

EvalContext EvalContext::make(const std::string& algebra_name) {
    EvalContext ctx;
    ctx.name_ = algebra_name;
    if (algebra_name == "sl2-current") {
        LieRepSpec spec = sl2_adjoint();
        ctx.algebra_ = spec.current_algebra(Rational(-1));
        ctx.engine_ = std::make_shared<Engine>(ctx.algebra_);
        ctx.named_.algebra = ctx.algebra_;
        ctx.named_.ops["L_O"] = sugawara(spec, Rational(-1), *ctx.engine_);
        return ctx;
    }
    LieRepSpec spec = lookup_spec(algebra_name);
    ctx.algebra_ = spec.ghost_algebra();
    ctx.engine_ = std::make_shared<Engine>(ctx.algebra_);
    ctx.named_ = named_operator_set(spec, *ctx.engine_);
    return ctx;
}

State EvalContext::eval(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Number: return vacuum(algebra_) * e.number;
        case Expr::Kind::Name: return named_.at(e.name);
        case Expr::Kind::Atom: {
            int i = e.atom_index - 1;
            if (e.atom_family == 'u') return current_state(algebra_, i, e.atom_level);
            if (e.atom_family == 'b') return beta_state(algebra_, i, e.atom_level);
            return gamma_state(algebra_, i, e.atom_level);
        }
        case Expr::Kind::Wick: return engine_->wick(eval(*e.args[0]), eval(*e.args[1]));
        case Expr::Kind::Circle:
            return engine_->apply_mode(eval(*e.args[0]), e.circle_mode, eval(*e.args[1]));
        case Expr::Kind::Derive: return engine_->derivative(eval(*e.args[0]));
        case Expr::Kind::Add: return eval(*e.args[0]) + eval(*e.args[1]);
        case Expr::Kind::Sub: return eval(*e.args[0]) - eval(*e.args[1]);
        case Expr::Kind::Mul: {
            State a = eval(*e.args[0]);
            State b = eval(*e.args[1]);
            if (a.value.is_constant()) return b * a.value.constant_term();
            if (b.value.is_constant()) return a * b.value.constant_term();
            throw value_error("'*' needs a scalar side; use W(a,b) for state products");
        }
    }
    throw value_error("eval: bad expression");
}

std::string EvalContext::render(const State& s) const {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : s.value.terms()) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        std::vector<std::string> atoms;
        for (auto f = m.factors().rbegin(); f != m.factors().rend(); ++f)
            for (uint32_t i = 0; i < f->second; ++i) {
                const VarId& v = f->first;
                char fam = v.family == Family::BetaMode ? 'b'
                           : v.family == Family::GammaMode ? 'g'
                                                           : 'u';
                atoms.push_back(std::string(1, fam) + "[" + std::to_string(v.basis + 1) + "," +
                                std::to_string(v.level) + "]");
            }
        std::string body;
        if (atoms.empty()) {
            body = "1";
        } else {
            body = atoms.back();
            for (auto it = atoms.rbegin() + 1; it != atoms.rend(); ++it)
                body = "W(" + *it + ", " + body + ")";
        }
        if (a == Rational(1))
            os << body;
        else
            os << a.str() << " * " << body;
    }
    return os.str();
}

}  // namespace vtx
