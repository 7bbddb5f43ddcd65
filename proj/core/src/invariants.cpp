#include "vertexlab/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace vtx {

std::vector<Monomial> enumerate_monomials(const ComponentSpec& spec, int rep_dim) {
    if (!spec.degree && !spec.max_degree)
        throw value_error("enumerate_monomials: unbounded selection (need a degree bound)");
    long dmax = spec.degree ? *spec.degree : *spec.max_degree;
    long lmax = spec.level ? *spec.level
                           : spec.max_level.value_or(dmax * long(spec.max_var_level));

    std::vector<VarId> vars;
    for (int i = 0; i < rep_dim; ++i)
        for (int k = 0; k <= spec.max_var_level; ++k) {
            vars.push_back(gr_beta(i, k));
            vars.push_back(gr_gamma(i, k));
        }
    std::sort(vars.begin(), vars.end());

    auto family_ok = [&](const Monomial& m) {
        for (auto& [fam, basis, want] : spec.family_degree) {
            long got = 0;
            for (auto& [v, e] : m.factors())
                if (v.family == fam && v.basis == basis) got += e;
            if (got != want) return false;
        }
        return true;
    };

    std::vector<Monomial> out;
    std::vector<Monomial::Factor> cur;
    std::function<void(size_t, long, long)> rec = [&](size_t pos, long deg, long lev) {
        if (pos == vars.size()) {
            bool deg_ok = spec.degree ? deg == *spec.degree : deg <= *spec.max_degree;
            bool lev_ok = spec.level ? lev == *spec.level
                                     : (!spec.max_level || lev <= *spec.max_level);
            if (deg_ok && lev_ok) {
                Monomial m(cur);
                if (family_ok(m)) out.push_back(std::move(m));
            }
            return;
        }
        const VarId& v = vars[pos];
        for (long e = 0; deg + e <= dmax; ++e) {
            if (e > 0 && lev + e * v.level > lmax) break;
            if (e > 0) cur.push_back({v, uint32_t(e)});
            rec(pos + 1, deg + e, lev + e * v.level);
            if (e > 0) cur.pop_back();
        }
    };
    rec(0, 0, 0);

    // graded-lex deterministic order
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a < b;
    });
    return out;
}

namespace {

RowReducer kernel_constraints(const std::vector<GrDerOp>& ops,
                              const std::vector<Monomial>& basis) {
    // constraint rows keyed by (operator, output monomial)
    std::map<std::pair<size_t, Monomial>, SparseRow> rows;
    for (size_t ci = 0; ci < basis.size(); ++ci)
        for (size_t oi = 0; oi < ops.size(); ++oi) {
            Polynomial img = ops[oi].apply(Polynomial::monomial(basis[ci]));
            for (auto& [om, c] : img.terms()) rows[{oi, om}].push_back({int32_t(ci), c});
        }
    RowReducer rr;
    for (auto& [key, row] : rows) rr.add_row(std::move(row));
    return rr;
}

void check_ops(const std::vector<GrDerOp>& ops) {
    for (auto& op : ops)
        if (op.degree_shift() != 0)
            throw value_error("invariant_kernel: operator not degree-homogeneous of shift 0");
}

}  // namespace

std::vector<Polynomial> invariant_kernel(const std::vector<GrDerOp>& ops,
                                         const ComponentSpec& spec, int rep_dim) {
    check_ops(ops);
    auto basis = enumerate_monomials(spec, rep_dim);
    RowReducer rr = kernel_constraints(ops, basis);
    std::vector<Polynomial> out;
    for (auto& v : rr.kernel(int32_t(basis.size()))) {
        Polynomial p;
        for (auto& [col, c] : v) p.add_term(basis[col], c);
        out.push_back(std::move(p));
    }
    return out;
}

long invariant_kernel_dim(const std::vector<GrDerOp>& ops, const ComponentSpec& spec,
                          int rep_dim) {
    check_ops(ops);
    auto basis = enumerate_monomials(spec, rep_dim);
    RowReducer rr = kernel_constraints(ops, basis);
    return long(basis.size()) - rr.rank();
}

// Module isomorphisms fixing the q normalization:
//   W^1_i: e1 = gamma^{y'}_i,  e2 = -2 beta^x_i
//   W^2_i: e1 = -gamma^{x'}_i, e2 = 2 beta^y_i
//   W^3_i: e1 = gamma^{h'}_i,  e2 = -beta^h_i
namespace {
Polynomial module_e1(const WModule& M) {
    switch (M.fam) {
        case 1: return Polynomial::var(gr_gamma(1, M.lvl));
        case 2: return -Polynomial::var(gr_gamma(0, M.lvl));
        case 3: return Polynomial::var(gr_gamma(2, M.lvl));
    }
    throw value_error("bad module family");
}
Polynomial module_e2(const WModule& M) {
    switch (M.fam) {
        case 1: return Polynomial::var(gr_beta(0, M.lvl)) * Rational(-2);
        case 2: return Polynomial::var(gr_beta(1, M.lvl)) * Rational(2);
        case 3: return -Polynomial::var(gr_beta(2, M.lvl));
    }
    throw value_error("bad module family");
}
}  // namespace

Polynomial q_of_modules(const WModule& M, const WModule& N) {
    if (M == N) return {};
    return module_e1(M) * module_e2(N) - module_e2(M) * module_e1(N);
}

Polynomial q_poly(int a, int b, int i, int j) {
    if (a > b) throw value_error("q_poly: need a <= b");
    if (a == b && i == j) return {};
    return q_of_modules({a, i}, {b, j});
}

std::vector<QGen> weyl_generators(int N) {
    std::vector<QGen> out;
    for (int a = 1; a <= 3; ++a)
        for (int i = 0; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j) out.push_back({a, a, i, j, q_poly(a, a, i, j)});
    for (auto [a, b] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}})
        for (int i = 0; i <= N; ++i)
            for (int j = 0; j <= N; ++j) out.push_back({a, b, i, j, q_poly(a, b, i, j)});
    return out;
}

Polynomial tau_poly(int u, int k) {
    static const LieRepSpec spec = sl2_adjoint();
    FiltrationSpec filt{spec.ghost_algebra(), 1};
    Polynomial t0 = phi(build_theta(spec, u), 2, filt);
    return gr_derivative(t0, k);
}

bool tau_from_q(int k) {
    static const std::pair<int, int> fam[3] = {{1, 3}, {2, 3}, {1, 2}};  // x, y, h
    for (int u = 0; u < 3; ++u) {
        Polynomial rhs;
        for (int i = 0; i <= k; ++i)
            rhs += q_poly(fam[u].first, fam[u].second, i, k - i) *
                   Rational::binomial(k, unsigned(i));
        if (!(tau_poly(u, k) == rhs)) return false;
    }
    return true;
}

Polynomial plucker_of(const WModule& M1, const WModule& M2, const WModule& M3,
                      const WModule& M4) {
    return q_of_modules(M1, M2) * q_of_modules(M3, M4) -
           q_of_modules(M1, M3) * q_of_modules(M2, M4) +
           q_of_modules(M1, M4) * q_of_modules(M2, M3);
}

std::vector<Polynomial> plucker_relations(int N) {
    std::vector<WModule> mods;
    for (int a = 1; a <= 3; ++a)
        for (int n = 0; n <= N; ++n) mods.push_back({a, n});
    std::sort(mods.begin(), mods.end());
    std::vector<Polynomial> out;
    size_t M = mods.size();
    for (size_t a = 0; a < M; ++a)
        for (size_t b = a + 1; b < M; ++b)
            for (size_t c = b + 1; c < M; ++c)
                for (size_t d = c + 1; d < M; ++d)
                    out.push_back(plucker_of(mods[a], mods[b], mods[c], mods[d]));
    return out;
}

long tau_monomial_count(long level, long degree, int N) {
    if (degree < 0 || degree % 2) return 0;
    long m = degree / 2;
    // multisets of size m of pairs (u, k), u < 3, k <= N, levels summing to l
    std::function<long(long, long, long)> rec = [&](long k, long left, long lev) -> long {
        if (left == 0) return lev == 0 ? 1 : 0;
        if (k > N) return 0;
        long total = 0;
        for (long take = 0; take <= left; ++take) {
            long nl = lev - take * k;
            if (nl < 0) break;
            // distribute `take` among the 3 flavors at this level:
            // multiset count C(take + 2, 2)
            total += (take + 1) * (take + 2) / 2 * rec(k + 1, left - take, nl);
        }
        return total;
    };
    return rec(0, m, level);
}

long tau_monomial_count_series(long level, long degree, int N) {
    if (degree < 0 || degree % 2) return 0;
    long m = degree / 2;
    // coefficient of t^m q^level in prod_{k<=N} (1 - t q^k)^{-3}
    std::vector<std::vector<mpz_class>> s(m + 1, std::vector<mpz_class>(level + 1, 0));
    s[0][0] = 1;
    for (int k = 0; k <= N; ++k) {
        std::vector<std::vector<mpz_class>> ns(m + 1, std::vector<mpz_class>(level + 1, 0));
        for (long j = 0; j <= m; ++j) {
            if (long(k) * j > level && k > 0) break;
            mpz_class c = (j + 1) * (j + 2) / 2;  // binom(j + 2, 2)
            for (long a = 0; a + j <= m; ++a)
                for (long b = 0; b + j * k <= level; ++b)
                    if (s[a][b] != 0) ns[a + j][b + j * k] += c * s[a][b];
        }
        s = std::move(ns);
    }
    return long(s[m][level].get_si());
}

long pbw_count(long w) {
    std::vector<mpz_class> s(w + 1, 0);
    s[0] = 1;
    for (long n = 1; n <= w; ++n) {
        std::vector<mpz_class> ns(w + 1, 0);
        for (long j = 0; j * n <= w; ++j) {
            mpz_class c = (j + 1) * (j + 2) / 2;
            for (long b = 0; b + j * n <= w; ++b)
                if (s[b] != 0) ns[b + j * n] += c * s[b];
        }
        s = std::move(ns);
    }
    return long(s[w].get_si());
}

Independence independence_witness(const std::vector<Polynomial>& polys, uint64_t seed,
                                  int* rank_out) {
    std::set<VarId> vars;
    for (auto& p : polys)
        for (auto& v : p.variables()) vars.insert(v);
    std::vector<VarId> vlist(vars.begin(), vars.end());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(1, 5);
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::map<VarId, Rational> point;
        for (auto& v : vlist) point[v] = attempt == 0 ? Rational(1) : Rational(small(rng));
        std::vector<std::vector<Rational>> jac;
        for (auto& p : polys) {
            std::vector<Rational> row;
            row.reserve(vlist.size());
            for (auto& v : vlist)
                row.push_back(p.partial(v).evaluate([&](const VarId& w) { return point.at(w); }));
            jac.push_back(std::move(row));
        }
        int r = matrix_rank(jac);
        if (rank_out) *rank_out = r;
        if (r == int(polys.size())) return Independence::Independent;
    }
    return Independence::Inconclusive;
}

VerificationReport verify_graded_commutant(int N, long maxLevel, long maxDegree) {
    VerificationReport rep;
    rep.suite = "theorem41";
    rep.params["N"] = std::to_string(N);
    rep.params["maxLevel"] = std::to_string(maxLevel);
    rep.params["maxDegree"] = std::to_string(maxDegree);
    const LieRepSpec spec = sl2_adjoint();
    FiltrationSpec filt{spec.ghost_algebra(), 1};
    Engine eng(filt.algebra);
    auto ops = sl2t_operators(eng, filt, spec, N);
    for (long l = 0; l <= maxLevel; ++l)
        for (long d = 0; d <= maxDegree; ++d) {
            ComponentSpec cs;
            cs.max_var_level = N;
            cs.level = l;
            cs.degree = d;
            long kd = invariant_kernel_dim(ops, cs, spec.rep_dim());
            long tc = tau_monomial_count(l, d, N);
            rep.add("component l=" + std::to_string(l) + " d=" + std::to_string(d),
                    std::to_string(tc), std::to_string(kd));
        }
    rep.sort_cases();
    return rep;
}

VerificationReport verify_weyl(int copies, int maxDegree) {
    if (copies > 5 || maxDegree > 6) throw value_error("verify_weyl: desk-scale bounds exceeded");
    VerificationReport rep;
    rep.suite = "weyl";
    rep.params["copies"] = std::to_string(copies);
    rep.params["maxDegree"] = std::to_string(maxDegree);

    auto a1 = [](int n) { return free_var(1, n); };
    auto a2 = [](int n) { return free_var(2, n); };
    // sl(2): x: a2 -> a1, y: a1 -> a2, h: a1 -> a1, a2 -> -a2
    std::map<VarId, Polynomial> rx, ry, rh;
    for (int n = 0; n < copies; ++n) {
        rx[a2(n)] = Polynomial::var(a1(n));
        ry[a1(n)] = Polynomial::var(a2(n));
        rh[a1(n)] = Polynomial::var(a1(n));
        rh[a2(n)] = -Polynomial::var(a2(n));
    }

    std::vector<Polynomial> qs;
    for (int i = 0; i < copies; ++i)
        for (int j = i + 1; j < copies; ++j)
            qs.push_back(Polynomial::var(a1(i)) * Polynomial::var(a2(j)) -
                         Polynomial::var(a1(j)) * Polynomial::var(a2(i)));

    long inv4 = -1;
    for (int deg = 1; deg <= maxDegree; ++deg) {
        std::vector<VarId> vars;
        for (int n = 0; n < copies; ++n) {
            vars.push_back(a1(n));
            vars.push_back(a2(n));
        }
        std::sort(vars.begin(), vars.end());
        std::vector<Monomial> basis;
        std::vector<Monomial::Factor> cur;
        std::function<void(size_t, int)> rec = [&](size_t pos, int left) {
            if (pos == vars.size()) {
                if (left == 0) basis.emplace_back(cur);
                return;
            }
            for (int e = 0; e <= left; ++e) {
                if (e > 0) cur.push_back({vars[pos], uint32_t(e)});
                rec(pos + 1, left - e);
                if (e > 0) cur.pop_back();
            }
        };
        rec(0, deg);
        std::sort(basis.begin(), basis.end());
        std::map<Monomial, int32_t> index;
        for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = int32_t(i);

        std::map<std::pair<int, Monomial>, SparseRow> rows;
        int opi = 0;
        for (auto* rules : {&rx, &ry, &rh}) {
            for (size_t ci = 0; ci < basis.size(); ++ci) {
                Polynomial img = apply_derivation(*rules, Polynomial::monomial(basis[ci]));
                for (auto& [om, c] : img.terms()) rows[{opi, om}].push_back({int32_t(ci), c});
            }
            ++opi;
        }
        RowReducer rr;
        for (auto& [k, row] : rows) rr.add_row(std::move(row));
        long inv_dim = long(basis.size()) - rr.rank();
        if (deg == 4) inv4 = inv_dim;

        if (deg % 2 == 0) {
            RowReducer span;
            std::function<void(size_t, int, Polynomial)> recq = [&](size_t pos, int left,
                                                                    Polynomial acc) {
                if (left == 0) {
                    SparseRow row;
                    for (auto& [m, c] : acc.terms()) row.push_back({index.at(m), c});
                    span.add_row(std::move(row));
                    return;
                }
                if (pos >= qs.size()) return;
                recq(pos + 1, left, acc);
                recq(pos, left - 1, acc * qs[pos]);
            };
            recq(0, deg / 2, Polynomial(Rational(1)));
            rep.add("degree " + std::to_string(deg) + " invariants == q-span",
                    std::to_string(span.rank()), std::to_string(inv_dim));
        } else {
            rep.add("degree " + std::to_string(deg) + " odd invariants", "0",
                    std::to_string(inv_dim));
        }
    }
    if (copies >= 4 && maxDegree >= 4 && inv4 >= 0) {
        // Sym^2 of the q variables exceeds the invariant dimension by the
        // number of independent Plucker relations; with 4 copies at degree 4
        // that count is 1 (the single r_{0123})
        long nq = long(qs.size());
        long sym2 = nq * (nq + 1) / 2;
        rep.add("relation deficit at degree 4", "1", std::to_string(sym2 - inv4));
    }
    rep.sort_cases();
    return rep;
}

namespace {

Monomial epsilon_monomial(const EpsilonData& d) {
    Monomial m;
    for (int i : d.i_list) m = m.mul_var(gr_beta(0, 0)).mul_var(gr_gamma(2, i));
    for (int j : d.j_list) m = m.mul_var(gr_beta(0, 0)).mul_var(gr_gamma(0, j));
    for (int k : d.k_list) m = m.mul_var(gr_beta(1, k)).mul_var(gr_gamma(2, 0));
    return m;
}

// a monomial in the mixed q variables, as an exponent map over (a, b, i, j)
using QMono = std::map<std::array<int, 4>, int>;

std::vector<QMono> enumerate_q_monos(int n12, int n13, int n23, int lev) {
    std::vector<QMono> partial{QMono{}};
    auto extend = [&](int a, int b, int count) {
        std::vector<QMono> next;
        for (auto& base : partial) {
            long used = 0;
            for (auto& [k, e] : base) used += long(k[2] + k[3]) * e;
            std::function<void(int, int, QMono)> go = [&](int left, int min_enc, QMono cur) {
                if (left == 0) {
                    next.push_back(std::move(cur));
                    return;
                }
                long lv_left = lev;
                for (auto& [k, e] : cur) lv_left -= long(k[2] + k[3]) * e;
                for (int i = 0; i <= lv_left; ++i)
                    for (int j = 0; i + j <= lv_left; ++j) {
                        int enc = i * 1000 + j;
                        if (enc < min_enc) continue;
                        QMono c3 = cur;
                        c3[{a, b, i, j}]++;
                        go(left - 1, enc, std::move(c3));
                    }
            };
            go(count, 0, base);
        }
        partial = std::move(next);
    };
    extend(1, 2, n12);
    extend(1, 3, n13);
    extend(2, 3, n23);
    std::vector<QMono> out;
    for (auto& q : partial) {
        long lv = 0;
        for (auto& [k, e] : q) lv += long(k[2] + k[3]) * e;
        if (lv == lev) out.push_back(q);
    }
    return out;
}

Polynomial q_mono_poly(const QMono& q) {
    Polynomial p(Rational(1));
    for (auto& [k, e] : q)
        for (int t = 0; t < e; ++t) p = p * q_poly(k[0], k[1], k[2], k[3]);
    return p;
}

}  // namespace

bool epsilon_support_q(const EpsilonData& d) {
    int r = int(d.i_list.size()), s = int(d.j_list.size()), t = int(d.k_list.size());
    Monomial eps = epsilon_monomial(d);
    int lev = 0;
    for (int i : d.i_list) lev += i;
    for (int j : d.j_list) lev += j;
    for (int k : d.k_list) lev += k;

    // predicted monomials: q13_{0,i'_a} q12_{0,j_b} q23_{k_c,i''_c} with
    // (i', i'') a permutation of (i_list, 0^t)
    std::vector<int> pool = d.i_list;
    for (int c = 0; c < t; ++c) pool.push_back(0);
    std::sort(pool.begin(), pool.end());
    std::set<QMono> predicted;
    do {
        QMono q;
        for (int a = 0; a < r; ++a) q[{1, 3, 0, pool[a]}]++;
        for (int j : d.j_list) q[{1, 2, 0, j}]++;
        for (int c = 0; c < t; ++c) q[{2, 3, d.k_list[c], pool[r + c]}]++;
        predicted.insert(std::move(q));
    } while (std::next_permutation(pool.begin(), pool.end()));

    for (auto& q : enumerate_q_monos(s, r, t, lev)) {
        bool contains = !q_mono_poly(q).coeff(eps).is_zero();
        bool in_predicted = predicted.count(q) != 0;
        if (contains != in_predicted) return false;
    }
    return true;
}

bool epsilon_support_tau(const EpsilonData& d) {
    int r = int(d.i_list.size()), t = int(d.k_list.size());
    Monomial eps = epsilon_monomial(d);
    int lev = 0;
    for (int i : d.i_list) lev += i;
    for (int j : d.j_list) lev += j;
    for (int k : d.k_list) lev += k;

    // predicted tau-monomials: replace some pairs (i_a, k_b) by (0, i_a+k_b);
    // the matching is injective on both sides
    std::set<std::pair<std::multiset<int>, std::multiset<int>>> predicted;
    std::function<void(std::vector<int>, std::vector<int>, int, std::vector<bool>)> gen =
        [&](std::vector<int> I, std::vector<int> K, int a, std::vector<bool> used) {
            if (a == r) {
                predicted.insert({{I.begin(), I.end()}, {K.begin(), K.end()}});
                return;
            }
            gen(I, K, a + 1, used);  // leave i_a unpaired
            if (I[a] == 0) return;
            for (int b = 0; b < t; ++b) {
                if (used[b]) continue;
                auto I2 = I;
                auto K2 = K;
                auto u2 = used;
                K2[b] += I2[a];
                I2[a] = 0;
                u2[b] = true;
                gen(std::move(I2), std::move(K2), a + 1, std::move(u2));
            }
        };
    gen(d.i_list, d.k_list, 0, std::vector<bool>(t, false));

    // candidates: tau-monomials with factor counts (r, s, t) for (x, h, y),
    // the h-indices fixed to j_list, total level lev
    std::vector<std::multiset<int>> xlists, ylists;
    std::function<void(int, int, int, std::multiset<int>&, std::vector<std::multiset<int>>&)>
        lists = [&](int count, int maxlev, int mn, std::multiset<int>& cur,
                    std::vector<std::multiset<int>>& out) {
            if (count == 0) {
                out.push_back(cur);
                return;
            }
            for (int v = mn; v <= maxlev; ++v) {
                cur.insert(v);
                lists(count - 1, maxlev, v, cur, out);
                cur.erase(cur.find(v));
            }
        };
    std::multiset<int> tmp;
    lists(r, lev, 0, tmp, xlists);
    lists(t, lev, 0, tmp, ylists);
    long jlev = 0;
    for (int j : d.j_list) jlev += j;

    for (auto& xl : xlists)
        for (auto& yl : ylists) {
            long lv = jlev;
            for (int v : xl) lv += v;
            for (int v : yl) lv += v;
            if (lv != lev) continue;
            Polynomial p(Rational(1));
            for (int v : xl) p = p * tau_poly(0, v);
            for (int j : d.j_list) p = p * tau_poly(2, j);
            for (int v : yl) p = p * tau_poly(1, v);
            bool contains = !p.coeff(eps).is_zero();
            bool in_predicted = predicted.count({xl, yl}) != 0;
            if (contains != in_predicted) return false;
        }
    return true;
}

}  // namespace vtx
