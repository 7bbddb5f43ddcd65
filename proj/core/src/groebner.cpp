#include "vertexlab/groebner.hpp"

#include <deque>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vertexlab/invariants.hpp"

namespace vtx {

std::pair<Monomial, Rational> leading_term(const Polynomial& f, const MonomialOrder& ord) {
    if (f.is_zero()) throw value_error("leading_term of zero polynomial");
    const Monomial* best = nullptr;
    const Rational* coef = nullptr;
    for (auto& [m, c] : f.terms())
        if (!best || ord.greater(m, *best)) {
            best = &m;
            coef = &c;
        }
    return {*best, *coef};
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    auto [mf, cf] = leading_term(f, ord);
    auto [mg, cg] = leading_term(g, ord);
    Monomial L = mf.lcm(mg);
    Monomial qf, qg;
    L.try_div(mf, qf);
    L.try_div(mg, qg);
    return f.mul_monomial(qf, Rational(1) / cf) - g.mul_monomial(qg, Rational(1) / cg);
}

NormalForm normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord, bool basis_is_groebner) {
    NormalForm nf;
    nf.canonical = basis_is_groebner;
    nf.quotients.assign(basis.size(), Polynomial());
    std::vector<std::pair<Monomial, Rational>> lts;
    lts.reserve(basis.size());
    for (auto& g : basis) lts.push_back(leading_term(g, ord));

    Polynomial work = f;
    Polynomial rem;
    while (!work.is_zero()) {
        auto [m, c] = leading_term(work, ord);
        bool hit = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            Monomial q;
            if (m.try_div(lts[i].first, q)) {
                Rational factor = c / lts[i].second;
                work -= basis[i].mul_monomial(q, factor);
                nf.quotients[i].add_term(q, factor);
                hit = true;
                break;
            }
        }
        if (!hit) {
            rem.add_term(m, c);
            work.add_term(m, -c);
        }
    }
    nf.remainder = std::move(rem);
    return nf;
}

namespace {

Polynomial monic(const Polynomial& f, const MonomialOrder& ord) {
    if (f.is_zero()) return f;
    auto [m, c] = leading_term(f, ord);
    return f * (Rational(1) / c);
}

}  // namespace

std::vector<Polynomial> buchberger(std::vector<Polynomial> gens, const MonomialOrder& ord,
                                   const BuchbergerOptions& opt) {
    std::vector<Polynomial> G;
    for (auto& g : gens)
        if (!g.is_zero()) G.push_back(monic(g, ord));

    std::deque<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) pairs.push_back({i, j});

    auto lt_of = [&](size_t i) { return leading_term(G[i], ord).first; };

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        Monomial mi = lt_of(i), mj = lt_of(j);
        Monomial L = mi.lcm(mj);
        if (opt.coprime_criterion && L == mi.mul(mj)) continue;  // Buchberger's first criterion
        if (opt.chain_criterion) {
            bool skip = false;
            for (size_t k = 0; k < G.size() && !skip; ++k) {
                if (k == i || k == j) continue;
                Monomial q;
                if (L.try_div(lt_of(k), q)) {
                    // both (i,k) and (j,k) already handled => chain criterion
                    auto done = [&](size_t a, size_t b) {
                        if (a > b) std::swap(a, b);
                        for (auto& p : pairs)
                            if (p.first == a && p.second == b) return false;
                        return true;
                    };
                    skip = done(i, k) && done(j, k);
                }
            }
            if (skip) continue;
        }
        Polynomial r = normal_form(s_polynomial(G[i], G[j], ord), G, ord, false).remainder;
        if (!r.is_zero()) {
            G.push_back(monic(r, ord));
            for (size_t k = 0; k + 1 < G.size(); ++k) pairs.push_back({k, G.size() - 1});
        }
    }

    if (opt.reduce) {
        // inter-reduce to the unique reduced basis
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < G.size(); ++i) {
                std::vector<Polynomial> others;
                for (size_t k = 0; k < G.size(); ++k)
                    if (k != i && !G[k].is_zero()) others.push_back(G[k]);
                Polynomial r = others.empty()
                                   ? G[i]
                                   : normal_form(G[i], others, ord, false).remainder;
                if (!(r == G[i])) changed = true;
                G[i] = r.is_zero() ? r : monic(r, ord);
            }
            std::vector<Polynomial> compact;
            for (auto& g : G)
                if (!g.is_zero()) compact.push_back(g);
            G = std::move(compact);
        }
        std::sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) {
            return ord.less(leading_term(a, ord).first, leading_term(b, ord).first);
        });
    }
    return G;
}

bool is_groebner_basis(const std::vector<Polynomial>& basis, const MonomialOrder& ord) {
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            Polynomial s = s_polynomial(basis[i], basis[j], ord);
            if (!normal_form(s, basis, ord, false).remainder.is_zero()) return false;
        }
    return true;
}

Polynomial eliminated_q(int a, int b, int k) {
    if (a >= b) throw value_error("eliminated_q: need a < b");
    int u = (a == 1 && b == 3) ? 0 : (a == 2 && b == 3) ? 1 : 2;  // x, y, h
    Polynomial p = Polynomial::var(gr_t(u, k));
    for (int n = 1; n <= k; ++n)
        p -= Polynomial::var(gr_q(a, b, n, k - n)) * Rational::binomial(k, unsigned(n));
    return p;
}

Polynomial f_side_q(int a, int b, int i, int j) {
    if (a == b) {
        if (i == j) return {};
        if (i > j) return -f_side_q(a, b, j, i);
        return Polynomial::var(gr_q(a, b, i, j));
    }
    if (a > b) return -f_side_q(b, a, j, i);
    if (i == 0) return eliminated_q(a, b, j);
    return Polynomial::var(gr_q(a, b, i, j));
}

Polynomial relation_q33(int i, int j) {
    // modules (W^1_0, W^2_0, W^3_i, W^3_j): q12_00 q33_ij - q13_0i q23_0j + q13_0j q23_0i
    return f_side_q(1, 2, 0, 0) * f_side_q(3, 3, i, j) -
           f_side_q(1, 3, 0, i) * f_side_q(2, 3, 0, j) +
           f_side_q(1, 3, 0, j) * f_side_q(2, 3, 0, i);
}

Polynomial relation_q23(int i, int j) {
    // modules (W^1_0, W^2_0, W^2_i, W^3_j): q12_00 q23_ij - q12_0i q23_0j + q13_0j q22_0i
    if (i <= 0) throw value_error("relation_q23: need i > 0");
    return f_side_q(1, 2, 0, 0) * f_side_q(2, 3, i, j) -
           f_side_q(1, 2, 0, i) * f_side_q(2, 3, 0, j) +
           f_side_q(1, 3, 0, j) * f_side_q(2, 2, 0, i);
}

Polynomial GrobnerContext::phi(const Polynomial& f) const {
    Polynomial out;
    for (auto& [m, c] : f.terms()) {
        Polynomial t(c);
        for (auto& [v, e] : m.factors()) {
            auto it = phi_map.find(v);
            if (it == phi_map.end()) throw value_error("Phi: variable outside the universe");
            for (uint32_t x = 0; x < e; ++x) t = t * it->second;
        }
        out += t;
    }
    return out;
}

std::vector<VarId> GrobnerContext::universe() const {
    std::vector<VarId> out;
    for (auto& [v, p] : phi_map) out.push_back(v);
    return out;
}

namespace {

// F-side symbol of the pair (M, N) of modules, with mixed level-0 variables
// eliminated; antisymmetric in the pair
Polynomial f_q_of_modules(const WModule& M, const WModule& N) {
    if (M == N) return {};
    if (N < M) return -f_q_of_modules(N, M);
    return f_side_q(M.fam, N.fam, M.lvl, N.lvl);
}

std::string cache_path(const std::string& dir, int N) {
    return dir + "/ideal-N" + std::to_string(N) + "-rev" + std::to_string(kFOrderRevision) +
           ".txt";
}

}  // namespace

GrobnerContext build_truncated_ideal(int N, const std::string& cache_dir) {
    if (N < 0 || N > 3) throw value_error("build_truncated_ideal: desk scale is N <= 3");
    GrobnerContext ctx;
    ctx.N = N;

    std::vector<WModule> mods;
    for (int a = 1; a <= 3; ++a)
        for (int n = 0; n <= N; ++n) mods.push_back({a, n});
    std::sort(mods.begin(), mods.end());
    size_t M = mods.size();
    for (size_t a = 0; a < M; ++a)
        for (size_t b = a + 1; b < M; ++b)
            for (size_t c = b + 1; c < M; ++c)
                for (size_t d = c + 1; d < M; ++d) {
                    Polynomial r = f_q_of_modules(mods[a], mods[b]) *
                                       f_q_of_modules(mods[c], mods[d]) -
                                   f_q_of_modules(mods[a], mods[c]) *
                                       f_q_of_modules(mods[b], mods[d]) +
                                   f_q_of_modules(mods[a], mods[d]) *
                                       f_q_of_modules(mods[b], mods[c]);
                    if (!r.is_zero()) ctx.generators.push_back(std::move(r));
                }

    // Phi: Q -> q, T -> tau
    for (int a = 1; a <= 3; ++a)
        for (int i = 0; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j) ctx.phi_map[gr_q(a, a, i, j)] = q_poly(a, a, i, j);
    for (auto [a, b] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}})
        for (int i = 1; i <= N; ++i)
            for (int j = 0; j <= N; ++j) ctx.phi_map[gr_q(a, b, i, j)] = q_poly(a, b, i, j);
    for (int u = 0; u < 3; ++u)
        for (int m = 0; m <= N; ++m) ctx.phi_map[gr_t(u, m)] = tau_poly(u, m);

    bool loaded = false;
    if (!cache_dir.empty()) {
        std::ifstream in(cache_path(cache_dir, N));
        if (in) {
            std::string line;
            while (std::getline(in, line))
                if (!line.empty() && line[0] != '#') ctx.basis.push_back(parse_f_poly(line));
            loaded = !ctx.basis.empty();
        }
    }
    if (!loaded) {
        ctx.basis = buchberger(ctx.generators, ctx.order);
        if (!cache_dir.empty()) {
            std::filesystem::create_directories(cache_dir);
            std::ofstream out(cache_path(cache_dir, N));
            out << "# truncated ideal basis, N=" << N << " rev=" << kFOrderRevision << "\n";
            for (auto& g : ctx.basis) out << f_poly_str(g) << "\n";
        }
    }
    return ctx;
}

VerificationReport verify_rewrite_leading_terms(int N, const GrobnerContext* ctx_in) {
    VerificationReport rep;
    rep.suite = "rewrite-leading-terms";
    rep.params["N"] = std::to_string(N);
    GrobnerContext local;
    const GrobnerContext* ctx = ctx_in;
    if (!ctx) {
        local = build_truncated_ideal(N);
        ctx = &local;
    }
    auto ord = ctx->order;
    for (int i = 0; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            Polynomial rel = relation_q33(i, j);
            Monomial want = Monomial::var(gr_q(3, 3, i, j)).mul_var(gr_t(2, 0));
            auto lt = leading_term(rel, ord).first;
            rep.add_bool("Q33 relation i=" + std::to_string(i) + " j=" + std::to_string(j) +
                             " leading term Q33*Th0",
                         lt == want);
            rep.add_bool("Q33 relation i=" + std::to_string(i) + " j=" + std::to_string(j) +
                             " normal form 0",
                         normal_form(rel, ctx->basis, ord).remainder.is_zero());
        }
    for (int i = 1; i <= N; ++i)
        for (int j = 0; j <= N; ++j) {
            Polynomial rel = relation_q23(i, j);
            Monomial want = Monomial::var(gr_q(2, 3, i, j)).mul_var(gr_t(2, 0));
            auto lt = leading_term(rel, ord).first;
            rep.add_bool("relation Q23 i=" + std::to_string(i) + " j=" + std::to_string(j) +
                             " leading term Q23*Th0",
                         lt == want);
            rep.add_bool("relation Q23 i=" + std::to_string(i) + " j=" + std::to_string(j) +
                             " normal form 0",
                         normal_form(rel, ctx->basis, ord).remainder.is_zero());
        }
    rep.sort_cases();
    return rep;
}

std::string f_poly_str(const Polynomial& f) { return f.str(); }

namespace {

// tiny parser for the canonical F-polynomial text: terms of the form
// [+-] [coef] [*] Var [^e] [* Var [^e] ...] with Var = Q[a,b,i,j] | T[u,m]
struct FParser {
    const std::string& s;
    size_t pos = 0;
    explicit FParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && isspace(uint8_t(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    long number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && isdigit(uint8_t(s[pos]))) ++pos;
        if (start == pos) throw value_error("f-poly parse: number expected at " +
                                            std::to_string(start));
        return std::stol(s.substr(start, pos - start));
    }
    VarId variable() {
        skip_ws();
        if (pos >= s.size()) throw value_error("f-poly parse: variable expected");
        char kind = s[pos++];
        if (!eat('[')) throw value_error("f-poly parse: '[' expected");
        if (kind == 'Q') {
            long a = number();
            if (!eat(',')) throw value_error("f-poly parse: ',' expected");
            long b = number();
            if (!eat(',')) throw value_error("f-poly parse: ',' expected");
            long i = number();
            if (!eat(',')) throw value_error("f-poly parse: ',' expected");
            long j = number();
            if (!eat(']')) throw value_error("f-poly parse: ']' expected");
            return gr_q(int(a), int(b), int(i), int(j));
        }
        if (kind == 'T') {
            skip_ws();
            char u = s[pos++];
            int ui = u == 'x' ? 0 : u == 'y' ? 1 : u == 'h' ? 2 : -1;
            if (ui < 0) throw value_error("f-poly parse: bad T index");
            if (!eat(',')) throw value_error("f-poly parse: ',' expected");
            long m = number();
            if (!eat(']')) throw value_error("f-poly parse: ']' expected");
            return gr_t(ui, int(m));
        }
        throw value_error("f-poly parse: unknown variable kind");
    }
};

}  // namespace

Polynomial parse_f_poly(const std::string& line) {
    FParser p(line);
    Polynomial out;
    bool first = true;
    while (true) {
        p.skip_ws();
        if (p.pos >= line.size()) break;
        int sign = 1;
        if (p.eat('-')) sign = -1;
        else if (p.eat('+')) sign = 1;
        else if (!first) throw value_error("f-poly parse: sign expected");
        first = false;
        p.skip_ws();
        Rational coef(sign);
        if (p.pos < line.size() && isdigit(uint8_t(line[p.pos]))) {
            long num = p.number();
            long den = 1;
            if (p.eat('/')) den = p.number();
            coef = Rational(sign * num, den);
        }
        Monomial m;
        while (true) {
            p.skip_ws();
            bool star = p.eat('*');
            p.skip_ws();
            if (p.pos >= line.size() || (line[p.pos] != 'Q' && line[p.pos] != 'T')) {
                if (star) throw value_error("f-poly parse: variable expected after '*'");
                break;
            }
            VarId v = p.variable();
            uint32_t e = 1;
            if (p.eat('^')) e = uint32_t(p.number());
            m = m.mul_var(v, e);
        }
        out.add_term(m, coef);
    }
    return out;
}

}  // namespace vtx
