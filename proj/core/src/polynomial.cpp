#include "vertexlab/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace vtx {

std::string var_name(const VarId& v) {
    std::ostringstream os;
    switch (v.family) {
        case Family::BetaMode: os << "b[" << v.basis + 1 << "," << v.level << "]"; break;
        case Family::GammaMode: os << "g[" << v.basis + 1 << "," << v.level << "]"; break;
        case Family::CurrentMode: os << "u[" << v.basis + 1 << "," << v.level << "]"; break;
        case Family::GrBeta: os << "B[" << v.basis + 1 << "," << v.level << "]"; break;
        case Family::GrGamma: os << "G[" << v.basis + 1 << "," << v.level << "]"; break;
        case Family::GrQ:
            os << "Q[" << gr_q_a(v) << "," << gr_q_b(v) << "," << v.level << "," << v.extra << "]";
            break;
        case Family::GrT: {
            static const char* us[] = {"x", "y", "h"};
            os << "T[" << (v.basis >= 0 && v.basis < 3 ? us[v.basis] : "?") << "," << v.level << "]";
            break;
        }
        case Family::Free: os << "t" << v.basis << (v.level ? "_" + std::to_string(v.level) : ""); break;
    }
    return os.str();
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), m,
                               [](const Term& t, const Monomial& x) { return t.first < x; });
    return (it != t_.end() && it->first == m) ? it->second : Rational(0);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    std::vector<Term> out;
    out.reserve(t_.size() + o.t_.size());
    auto a = t_.cbegin(), b = o.t_.cbegin();
    while (a != t_.cend() && b != o.t_.cend()) {
        if (a->first < b->first) out.push_back(*a++);
        else if (b->first < a->first) out.push_back(*b++);
        else {
            Rational c = a->second + b->second;
            if (!c.is_zero()) out.push_back({a->first, std::move(c)});
            ++a; ++b;
        }
    }
    out.insert(out.end(), a, t_.cend());
    out.insert(out.end(), b, o.t_.cend());
    t_ = std::move(out);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += o * Rational(-1); }

Polynomial operator*(Polynomial a, const Rational& c) {
    if (c.is_zero()) return Polynomial();
    for (auto& [m, x] : a.t_) x *= c;
    return a;
}

Polynomial Polynomial::mul_monomial(const Monomial& m, const Rational& c) const {
    Polynomial r;
    if (c.is_zero()) return r;
    r.t_.reserve(t_.size());
    for (auto& [mm, x] : t_) r.t_.push_back({mm.mul(m), x * c});
    std::sort(r.t_.begin(), r.t_.end(),
              [](const Term& s, const Term& t) { return s.first < t.first; });
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::map<Monomial, Rational> acc;
    for (auto& [ma, ca] : a.t_)
        for (auto& [mb, cb] : b.t_) {
            Monomial m = ma.mul(mb);
            auto it = acc.find(m);
            if (it == acc.end()) acc.emplace(std::move(m), ca * cb);
            else it->second += ca * cb;
        }
    Polynomial r;
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.t_.push_back({m, c});
    return r;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(t_.begin(), t_.end(), m,
                               [](const Term& t, const Monomial& x) { return t.first < x; });
    if (it != t_.end() && it->first == m) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    } else {
        t_.insert(it, {m, c});
    }
}

long Polynomial::total_degree() const {
    long d = 0;
    for (auto& [m, c] : t_) d = std::max(d, m.degree());
    return d;
}

std::vector<VarId> Polynomial::variables() const {
    std::set<VarId> s;
    for (auto& [m, c] : t_)
        for (auto& [v, e] : m.factors()) s.insert(v);
    return {s.begin(), s.end()};
}

Rational Polynomial::evaluate(const std::function<Rational(const VarId&)>& point) const {
    Rational acc(0);
    for (auto& [m, c] : t_) {
        Rational t = c;
        for (auto& [v, e] : m.factors()) {
            Rational x = point(v);
            for (uint32_t i = 0; i < e; ++i) t *= x;
        }
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::partial(const VarId& v) const {
    Polynomial r;
    for (auto& [m, c] : t_) {
        uint32_t e = m.exponent(v);
        if (e) r.add_term(m.div_var(v), c * Rational(long(e)));
    }
    return r;
}

std::string Polynomial::str(const std::function<std::string(const VarId&)>& name) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : t_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool unit_coeff = (a == Rational(1));
        if (!unit_coeff || m.is_unit()) os << a.str();
        bool lead = unit_coeff && !m.is_unit();
        for (auto& [v, e] : m.factors()) {
            if (!lead) os << "*";
            lead = false;
            os << name(v);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {
// universe classes: creation modes (ghost), current modes, gr(S(V)), F = Q/T, free
int universe_class(Family f) {
    switch (f) {
        case Family::BetaMode:
        case Family::GammaMode: return 0;
        case Family::CurrentMode: return 1;
        case Family::GrBeta:
        case Family::GrGamma: return 2;
        case Family::GrQ:
        case Family::GrT: return 3;
        case Family::Free: return 4;
    }
    return -1;
}

int poly_universe(const Polynomial& p) {
    int u = -1;
    for (auto& [m, c] : p.terms())
        for (auto& [v, e] : m.factors()) {
            int cu = universe_class(v.family);
            if (u == -1) u = cu;
            else if (u != cu) throw universe_error("polynomial mixes variable universes");
        }
    return u;
}
}  // namespace

void check_same_universe(const Polynomial& a, const Polynomial& b) {
    int ua = poly_universe(a), ub = poly_universe(b);
    if (ua != -1 && ub != -1 && ua != ub)
        throw universe_error("operands live in different variable universes");
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op) {
    check_same_universe(a, b);
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
    }
    throw value_error("poly_arith: bad op");
}

std::map<long, Polynomial> grade_components(const Polynomial& p, const GradingDescriptor& g) {
    std::map<long, Polynomial> out;
    for (auto& [m, c] : p.terms()) out[g.of(m)].add_term(m, c);
    return out;
}

Polynomial apply_derivation(const std::map<VarId, Polynomial>& rules, const Polynomial& p) {
    Polynomial r;
    for (auto& [m, c] : p.terms()) {
        for (auto& [v, e] : m.factors()) {
            auto it = rules.find(v);
            if (it == rules.end() || it->second.is_zero()) continue;
            r += it->second.mul_monomial(m.div_var(v), c * Rational(long(e)));
        }
    }
    return r;
}

}  // namespace vtx
