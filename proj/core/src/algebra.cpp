#include "vertexlab/algebra.hpp"

namespace vtx {

std::shared_ptr<const AlgebraSpec> AlgebraSpec::ghost_system(int n, std::string name) {
    if (n <= 0) throw algebra_error("ghost system needs positive dimension");
    auto a = std::shared_ptr<AlgebraSpec>(new AlgebraSpec());
    a->kind_ = AlgebraKind::GhostSystem;
    a->n_ = n;
    a->name_ = name.empty() ? "S(C^" + std::to_string(n) + ")" : std::move(name);
    return a;
}

std::shared_ptr<const AlgebraSpec> AlgebraSpec::current_algebra(
    int n, std::vector<std::vector<std::vector<Rational>>> f,
    std::vector<std::vector<Rational>> B, std::string name) {
    if (n <= 0) throw algebra_error("current algebra needs positive dimension");
    auto sz_ok = int(f.size()) == n && int(B.size()) == n;
    for (auto& fa : f) {
        sz_ok = sz_ok && int(fa.size()) == n;
        for (auto& fab : fa) sz_ok = sz_ok && int(fab.size()) == n;
    }
    for (auto& Ba : B) sz_ok = sz_ok && int(Ba.size()) == n;
    if (!sz_ok) throw algebra_error("current algebra: dimension mismatch in f or B");

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (B[a][b] != B[b][a]) throw algebra_error("current algebra: B not symmetric");
            for (int c = 0; c < n; ++c)
                if (f[a][b][c] != -f[b][a][c])
                    throw algebra_error("current algebra: f not antisymmetric");
        }
    // Jacobi: [[a,b],c] + [[b,c],a] + [[c,a],b] = 0
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    Rational s(0);
                    for (int e = 0; e < n; ++e)
                        s += f[a][b][e] * f[e][c][d] + f[b][c][e] * f[e][a][d] +
                             f[c][a][e] * f[e][b][d];
                    if (!s.is_zero()) throw algebra_error("current algebra: Jacobi fails");
                }
    // ad-invariance of B: B([a,b],c) + B(b,[a,c]) = 0
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                Rational s(0);
                for (int e = 0; e < n; ++e) s += f[a][b][e] * B[e][c] + f[a][c][e] * B[b][e];
                if (!s.is_zero()) throw algebra_error("current algebra: B not invariant");
            }

    auto al = std::shared_ptr<AlgebraSpec>(new AlgebraSpec());
    al->kind_ = AlgebraKind::CurrentAlgebra;
    al->n_ = n;
    al->name_ = name.empty() ? "O(g_" + std::to_string(n) + ",B)" : std::move(name);
    al->f_ = std::move(f);
    al->B_ = std::move(B);
    return al;
}

}  // namespace vtx
