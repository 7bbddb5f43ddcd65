#include "vertexlab/engine.hpp"

#include <sstream>

namespace vtx {

namespace {

// weight of the raw generator field (beta, gamma or current at level 0)
long gen_weight(Family fam) { return fam == Family::GammaMode ? 0 : 1; }

// expand one unit of the greatest variable: m = var * rest
std::pair<VarId, Monomial> split_top(const Monomial& m) {
    VarId v = m.greatest_var();
    return {v, m.div_var(v)};
}

}  // namespace

Polynomial Engine::poly_gen_mode(Family fam, int basis, int m, const Polynomial& p) {
    Polynomial out;
    for (auto& [mono, c] : p.terms()) out += gen_mode_mono(fam, basis, m, mono) * c;
    return out;
}

Polynomial Engine::poly_insert(const VarId& v, const Polynomial& p) {
    Polynomial out;
    for (auto& [mono, c] : p.terms()) out += insert_creation(v, mono) * c;
    return out;
}

Polynomial Engine::insert_creation(const VarId& v, const Monomial& b) {
    if (alg_->kind() == AlgebraKind::GhostSystem || b.is_unit() || v >= b.greatest_var())
        return Polynomial::monomial(b.mul_var(v));
    // current algebra, v below the top of the word: straighten
    //   u v_top rest = v_top (u rest) + [u, v_top] rest
    auto [top, rest] = split_top(b);
    Polynomial out = poly_insert(top, insert_creation(v, rest));
    const int n = alg_->dimension();
    long p = -v.level - 1, q = -top.level - 1;  // both creation modes, p + q <= -2
    for (int c = 0; c < n; ++c) {
        const Rational& fc = alg_->f(v.basis, top.basis, c);
        if (fc.is_zero()) continue;
        out += insert_creation(current_mode(c, int(-(p + q) - 1)), rest) * fc;
    }
    return out;
}

Polynomial Engine::gen_mode_mono(Family fam, int basis, int m, const Monomial& b) {
    if (m <= -1) return insert_creation({fam, basis, -m - 1, 0}, b);
    // annihilation
    if (alg_->kind() == AlgebraKind::GhostSystem) {
        // beta^{x_i}(m) removes gamma^{x'_i}(-m-1) with +1 per factor;
        // gamma^{x'_i}(m) removes beta^{x_i}(-m-1) with -1 (sign dictated by
        // Eq-28-consistency; see the engine tests)
        VarId target = fam == Family::BetaMode ? gamma_mode(basis, m) : beta_mode(basis, m);
        uint32_t e = b.exponent(target);
        if (e == 0) return {};
        Rational sign(fam == Family::BetaMode ? 1 : -1);
        return Polynomial::monomial(b.div_var(target), sign * Rational(long(e)));
    }
    // current algebra: u_a(m) v_top rest = [u_a(m), v_top] rest + v_top (u_a(m) rest)
    if (b.is_unit()) return {};
    auto [top, rest] = split_top(b);
    Polynomial out = poly_insert(top, gen_mode_mono(fam, basis, m, rest));
    const int n = alg_->dimension();
    long q = -top.level - 1;
    for (int c = 0; c < n; ++c) {
        const Rational& fc = alg_->f(basis, top.basis, c);
        if (fc.is_zero()) continue;
        out += gen_mode_mono(Family::CurrentMode, c, m + int(q), rest) * fc;
    }
    if (m + q == 0 && m != 0) {
        const Rational& Bv = alg_->B(basis, top.basis);
        if (!Bv.is_zero()) out += Polynomial::monomial(rest, Rational(m) * Bv);
    }
    return out;
}

Polynomial Engine::apply_mode_mono(const Monomial& a, int n, const Monomial& b) {
    if (a.is_unit()) return n == -1 ? Polynomial::monomial(b) : Polynomial();
    if (a.weight() + b.weight() - n - 1 < 0) return {};  // non-negative weight grading
    Key key{a, n, b};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    auto [v, mt] = split_top(a);
    const int k = v.level;
    Polynomial out;
    if (mt.is_unit()) {
        // state v(-k-1)1 acts as (1/k!) d^k u, so its n-th mode is
        // (-1)^k binom(n, k) u(n - k)
        Rational c = Rational::binomial(n, unsigned(k));
        if (k % 2) c = -c;
        if (!c.is_zero()) out = gen_mode_mono(v.family, v.basis, n - k, b) * c;
    } else {
        // normal-ordered mode expansion of :(1/k! d^k u)(z) M(z):
        const long wm = mt.weight(), wb = b.weight(), wu = gen_weight(v.family);
        for (long j = 0; wm + wb - (n + j) - 1 >= 0; ++j) {
            Polynomial inner = apply_mode_mono(mt, int(n + j), b);
            if (inner.is_zero()) continue;
            Rational c = Rational::binomial(k + j, unsigned(j));
            out += poly_insert({v.family, v.basis, int(k + j), 0}, inner) * c;
        }
        if (alg_->kind() == AlgebraKind::GhostSystem) {
            // u(j) b is a single contraction: only levels present in b for
            // the paired family contribute
            VarId pair = v.family == Family::BetaMode ? gamma_mode(v.basis, 0)
                                                      : beta_mode(v.basis, 0);
            for (auto& [w, e] : b.factors()) {
                if (w.family != pair.family || w.basis != pair.basis) continue;
                long j = w.level;
                Polynomial inner = gen_mode_mono(v.family, v.basis, int(j), b);
                Rational c = Rational::binomial(k + j, unsigned(j));
                if (k % 2) c = -c;
                Polynomial acc;
                for (auto& [m2, c2] : inner.terms())
                    acc += apply_mode_mono(mt, int(n - k - 1 - j), m2) * c2;
                out += acc * c;
            }
        } else {
            for (long j = 0; wu + wb - j - 1 >= 0; ++j) {
                Polynomial inner = gen_mode_mono(v.family, v.basis, int(j), b);
                if (inner.is_zero()) continue;
                Rational c = Rational::binomial(k + j, unsigned(j));
                if (k % 2) c = -c;
                Polynomial acc;
                for (auto& [m2, c2] : inner.terms())
                    acc += apply_mode_mono(mt, int(n - k - 1 - j), m2) * c2;
                out += acc * c;
            }
        }
    }
    memo_.emplace(std::move(key), out);
    return out;
}

State Engine::apply_mode(const State& a, int n, const State& b) {
    check_same_algebra(a, b);
    if (a.algebra != alg_ || b.algebra != alg_)
        throw algebra_error("apply_mode: state not from this engine's algebra");
    Polynomial out;
    for (auto& [ma, ca] : a.value.terms())
        for (auto& [mb, cb] : b.value.terms()) out += apply_mode_mono(ma, n, mb) * (ca * cb);
    return {alg_, std::move(out)};
}

State Engine::iterated_wick(const std::vector<State>& as) {
    if (as.empty()) return vacuum(alg_);
    State acc = as.back();
    for (auto it = as.rbegin() + 1; it != as.rend(); ++it) acc = wick(*it, acc);
    return acc;
}

State Engine::derivative(const State& a) {
    Polynomial out;
    for (auto& [m, c] : a.value.terms()) {
        if (alg_->kind() == AlgebraKind::GhostSystem) {
            for (auto& [v, e] : m.factors()) {
                VarId v2{v.family, v.basis, v.level + 1, v.extra};
                out.add_term(m.div_var(v).mul_var(v2), c * Rational(long(e)) * Rational(v.level + 1));
            }
        } else {
            // PBW word, descending; raise each position in turn and
            // renormalize the exact word (brackets depend on the position)
            std::vector<VarId> word;
            for (auto f = m.factors().rbegin(); f != m.factors().rend(); ++f)
                for (uint32_t i = 0; i < f->second; ++i) word.push_back(f->first);
            for (size_t pos = 0; pos < word.size(); ++pos) {
                std::vector<VarId> w2 = word;
                w2[pos] = {w2[pos].family, w2[pos].basis, w2[pos].level + 1, w2[pos].extra};
                Polynomial p(Rational(1));
                for (auto it = w2.rbegin(); it != w2.rend(); ++it) p = poly_insert(*it, p);
                out += p * (c * Rational(word[pos].level + 1));
            }
        }
    }
    return {alg_, std::move(out)};
}

State Engine::derivative(const State& a, int times) {
    State r = a;
    for (int i = 0; i < times; ++i) r = derivative(r);
    return r;
}

State Engine::circle_vacuum(const State& c, int n) {
    if (n >= 0) return {alg_, {}};
    if (n == -1) return c;
    int k = -n - 1;
    return derivative(c, k) * (Rational(1) / Rational::factorial(unsigned(k)));
}

OpeTable Engine::ope(const State& a, const State& b) {
    OpeTable t;
    long bound = max_weight(a) + max_weight(b);
    for (int n = 0; n < bound; ++n) {
        State s = apply_mode(a, n, b);
        if (!s.is_zero()) t.entries.push_back({n, std::move(s)});
    }
    return t;
}

std::string OpeTable::str() const {
    if (entries.empty()) return "~ 0";
    std::ostringstream os;
    os << "~";
    bool first = true;
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
        os << (first ? " " : " + ");
        first = false;
        os << "(" << state_str(it->second) << ") (z-w)^" << -(it->first) - 1;
    }
    return os.str();
}

CommutantWitness Engine::is_commutant_member(const std::vector<State>& generators,
                                             const State& b) {
    for (size_t gi = 0; gi < generators.size(); ++gi) {
        const State& a = generators[gi];
        long bound = max_weight(a) + max_weight(b);
        for (int n = 0; n < bound; ++n) {
            State p = apply_mode(a, n, b);
            if (!p.is_zero()) return {false, int(gi), n, std::move(p)};
        }
    }
    return {};
}

bool Engine::check_identity(IdentityKind which, const State& a, const State& b, const State& c,
                            int n) {
    switch (which) {
        case IdentityKind::WickAssociativity: {
            State lhs = wick(wick(a, b), c);
            State rhs = wick(a, wick(b, c));
            long bound = max_weight(b) + max_weight(c);
            long bound2 = max_weight(a) + max_weight(c);
            State da = derivative(a), db = derivative(b);
            for (int m = 0; m < std::max(bound, bound2); ++m) {
                Rational f = Rational(1) / Rational::factorial(unsigned(m + 1));
                State bc = apply_mode(b, m, c);
                if (!bc.is_zero()) rhs = rhs + wick(da, bc) * f;
                State ac = apply_mode(a, m, c);
                if (!ac.is_zero()) rhs = rhs + wick(db, ac) * f;
                da = derivative(da);
                db = derivative(db);
            }
            return lhs == rhs;
        }
        case IdentityKind::ModeDerivation: {
            if (n < 0) throw value_error("Eq27 needs n >= 0");
            State lhs = apply_mode(a, n, wick(b, c)) - wick(apply_mode(a, n, b), c) -
                        wick(b, apply_mode(a, n, c));
            State rhs = vacuum(alg_) * Rational(0);
            for (int i = 1; i <= n; ++i)
                rhs = rhs + apply_mode(apply_mode(a, n - i, b), i - 1, c) *
                                Rational::binomial(n, unsigned(i));
            return lhs == rhs;
        }
        case IdentityKind::SkewSymmetry: {
            State lhs = apply_mode(a, n, b);
            State rhs = vacuum(alg_) * Rational(0);
            long bound = max_weight(a) + max_weight(b);
            for (int p = std::min(n, 0); p < bound; ++p) {
                State ba = apply_mode(b, p, a);
                if (ba.is_zero()) continue;
                Rational sign((p % 2 == 0) ? -1 : 1);  // (-1)^{p+1}
                rhs = rhs + circle_vacuum(ba, n - p - 1) * sign;
            }
            return lhs == rhs;
        }
        case IdentityKind::CommutatorFormula: {
            // [a(m), b(n')] c = sum_p binom(m, p) (a o_p b)(m + n' - p) c,
            // scanned over a window of second modes
            long bound = max_weight(a) + max_weight(b);
            for (int n2 = -2; n2 <= 2; ++n2) {
                State lhs =
                    apply_mode(a, n, apply_mode(b, n2, c)) - apply_mode(b, n2, apply_mode(a, n, c));
                State rhs = vacuum(alg_) * Rational(0);
                for (int p = 0; p < bound; ++p) {
                    State ab = apply_mode(a, p, b);
                    if (ab.is_zero()) continue;
                    rhs = rhs + apply_mode(ab, n + n2 - p, c) * Rational::binomial(n, unsigned(p));
                }
                if (!(lhs == rhs)) return false;
            }
            return true;
        }
    }
    throw value_error("check_identity: bad kind");
}

bool Engine::verify_virasoro(const State& L, const Rational& central_charge) {
    State half_c = vacuum(alg_) * (central_charge / Rational(2));
    return apply_mode(L, 3, L) == half_c && apply_mode(L, 2, L).is_zero() &&
           apply_mode(L, 1, L) == L * Rational(2) && apply_mode(L, 0, L) == derivative(L);
}

bool Engine::check_primary(const State& L, const State& a, const Rational& delta) {
    if (!(apply_mode(L, 1, a) == a * delta)) return false;
    if (!(apply_mode(L, 0, a) == derivative(a))) return false;
    long bound = max_weight(L) + max_weight(a);
    for (int m = 2; m < bound; ++m)
        if (!apply_mode(L, m, a).is_zero()) return false;
    return true;
}

}  // namespace vtx
