#include "vertexlab/lie.hpp"

#include <stdexcept>

namespace vtx {

Matrix matmul(const Matrix& a, const Matrix& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Matrix r(n, std::vector<Rational>(m, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

Rational trace(const Matrix& a) {
    Rational t(0);
    for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

Matrix matrix_inverse(const Matrix& a) {
    size_t n = a.size();
    Matrix aug(n, std::vector<Rational>(2 * n, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = Rational(1);
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && aug[piv][col].is_zero()) ++piv;
        if (piv == n) throw value_error("matrix_inverse: singular matrix");
        std::swap(aug[piv], aug[col]);
        Rational d = aug[col][col];
        for (auto& x : aug[col]) x /= d;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || aug[i][col].is_zero()) continue;
            Rational f = aug[i][col];
            for (size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[col][j];
        }
    }
    Matrix inv(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

LieRepSpec::LieRepSpec(std::vector<std::vector<std::vector<Rational>>> f, std::vector<Matrix> rho,
                       std::optional<Matrix> form_on_V, std::string name,
                       std::vector<std::string> basis_names)
    : m_(int(f.size())),
      n_(rho.empty() ? 0 : int(rho[0].size())),
      name_(std::move(name)),
      basis_names_(std::move(basis_names)),
      f_(std::move(f)),
      rho_(std::move(rho)),
      form_(std::move(form_on_V)) {
    if (int(rho_.size()) != m_) throw algebra_error("LieRepSpec: need one rho matrix per basis element");
    for (auto& r : rho_)
        if (int(r.size()) != n_ || (n_ && int(r[0].size()) != n_))
            throw algebra_error("LieRepSpec: rho matrices must be square of equal size");

    // rho is a Lie homomorphism: rho([u_a,u_b]) = [rho a, rho b]
    for (int a = 0; a < m_; ++a)
        for (int b = 0; b < m_; ++b) {
            Matrix lhs(n_, std::vector<Rational>(n_, Rational(0)));
            for (int c = 0; c < m_; ++c)
                if (!f_[a][b][c].is_zero())
                    for (int i = 0; i < n_; ++i)
                        for (int j = 0; j < n_; ++j) lhs[i][j] += f_[a][b][c] * rho_[c][i][j];
            Matrix ab = matmul(rho_[a], rho_[b]), ba = matmul(rho_[b], rho_[a]);
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j)
                    if (lhs[i][j] != ab[i][j] - ba[i][j])
                        throw algebra_error("LieRepSpec: rho is not a Lie homomorphism");
        }

    // B(u,v) = -Tr(rho u rho v); K = trace form of ad
    B_.assign(m_, std::vector<Rational>(m_, Rational(0)));
    K_.assign(m_, std::vector<Rational>(m_, Rational(0)));
    std::vector<Matrix> ad(m_, Matrix(m_, std::vector<Rational>(m_, Rational(0))));
    for (int a = 0; a < m_; ++a)
        for (int b = 0; b < m_; ++b)
            for (int c = 0; c < m_; ++c) ad[a][c][b] = f_[a][b][c];
    for (int a = 0; a < m_; ++a)
        for (int b = 0; b < m_; ++b) {
            B_[a][b] = -trace(matmul(rho_[a], rho_[b]));
            K_[a][b] = trace(matmul(ad[a], ad[b]));
        }

    if (form_) {
        if (int(form_->size()) != n_) throw algebra_error("LieRepSpec: form size mismatch");
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if ((*form_)[i][j] != (*form_)[j][i])
                    throw algebra_error("LieRepSpec: form not symmetric");
        // invariance: form(rho(u) a, b) + form(a, rho(u) b) = 0
        for (int a = 0; a < m_; ++a)
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j) {
                    Rational s(0);
                    for (int k = 0; k < n_; ++k)
                        s += rho_[a][k][i] * (*form_)[k][j] + (*form_)[i][k] * rho_[a][k][j];
                    if (!s.is_zero()) throw algebra_error("LieRepSpec: form not invariant");
                }
    }
}

const Matrix& LieRepSpec::form() const {
    if (!form_) throw algebra_error("LieRepSpec: no symmetric invariant form on V");
    return *form_;
}

bool LieRepSpec::form_orthonormal() const {
    if (!form_) return false;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if ((*form_)[i][j] != Rational(i == j ? 1 : 0)) return false;
    return true;
}

std::optional<Rational> LieRepSpec::lambda() const {
    // find lambda with B = lambda K; requires some K entry nonzero
    for (int a = 0; a < m_; ++a)
        for (int b = 0; b < m_; ++b)
            if (!K_[a][b].is_zero()) {
                Rational l = B_[a][b] / K_[a][b];
                for (int c = 0; c < m_; ++c)
                    for (int d = 0; d < m_; ++d)
                        if (B_[c][d] != l * K_[c][d]) return std::nullopt;
                return l;
            }
    return std::nullopt;
}

AlgebraPtr LieRepSpec::current_algebra_at_B() const {
    if (!current_cache_)
        current_cache_ = AlgebraSpec::current_algebra(m_, f_, B_, "O(" + name_ + ",B)");
    return current_cache_;
}

AlgebraPtr LieRepSpec::current_algebra(const Rational& lambda) const {
    Matrix B(m_, std::vector<Rational>(m_));
    for (int a = 0; a < m_; ++a)
        for (int b = 0; b < m_; ++b) B[a][b] = lambda * K_[a][b];
    return AlgebraSpec::current_algebra(m_, f_, B, "O(" + name_ + ",lK)");
}

AlgebraPtr LieRepSpec::ghost_algebra() const {
    if (!ghost_cache_) ghost_cache_ = AlgebraSpec::ghost_system(n_, "S(" + name_ + ")");
    return ghost_cache_;
}

namespace {
std::vector<std::vector<std::vector<Rational>>> sl2_f() {
    // basis x=0, y=1, h=2: [x,y]=h, [h,x]=2x, [h,y]=-2y
    std::vector<std::vector<std::vector<Rational>>> f(
        3, std::vector<std::vector<Rational>>(3, std::vector<Rational>(3, Rational(0))));
    f[0][1][2] = Rational(1);
    f[1][0][2] = Rational(-1);
    f[2][0][0] = Rational(2);
    f[0][2][0] = Rational(-2);
    f[2][1][1] = Rational(-2);
    f[1][2][1] = Rational(2);
    return f;
}
}  // namespace

LieRepSpec sl2_adjoint() {
    auto f = sl2_f();
    // ad matrices in basis (x, y, h)
    Matrix adx = {{Rational(0), Rational(0), Rational(-2)},
                  {Rational(0), Rational(0), Rational(0)},
                  {Rational(0), Rational(1), Rational(0)}};
    Matrix ady = {{Rational(0), Rational(0), Rational(0)},
                  {Rational(0), Rational(0), Rational(2)},
                  {Rational(-1), Rational(0), Rational(0)}};
    Matrix adh = {{Rational(2), Rational(0), Rational(0)},
                  {Rational(0), Rational(-2), Rational(0)},
                  {Rational(0), Rational(0), Rational(0)}};
    // invariant form K/8 on V = sl(2); this normalization gives the
    // standard rational expressions for v^x, v^y, v^h in this basis
    Matrix form = {{Rational(0), Rational(1, 2), Rational(0)},
                   {Rational(1, 2), Rational(0), Rational(0)},
                   {Rational(0), Rational(0), Rational(1)}};
    return LieRepSpec(f, {adx, ady, adh}, form, "sl2-adjoint", {"x", "y", "h"});
}

LieRepSpec sl2_standard() {
    auto f = sl2_f();
    Matrix x = {{Rational(0), Rational(1)}, {Rational(0), Rational(0)}};
    Matrix y = {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}};
    Matrix h = {{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}};
    // the standard module has no symmetric invariant form (it is symplectic)
    return LieRepSpec(f, {x, y, h}, std::nullopt, "sl2-standard", {"x", "y", "h"});
}

LieRepSpec abelian(int n) {
    if (n <= 0) throw algebra_error("abelian: need n >= 1");
    std::vector<std::vector<std::vector<Rational>>> f(
        n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
    std::vector<Matrix> rho(n, Matrix(n, std::vector<Rational>(n, Rational(0))));
    Matrix id(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) id[i][i] = Rational(1);
    return LieRepSpec(f, rho, id, "abelian-" + std::to_string(n));
}

LieRepSpec lookup_spec(const std::string& name) {
    if (name == "sl2-adjoint") return sl2_adjoint();
    if (name == "sl2-standard") return sl2_standard();
    if (name.rfind("abelian-", 0) == 0) {
        int n = std::stoi(name.substr(8));
        return abelian(n);
    }
    throw value_error("unknown algebra spec: " + name);
}

}  // namespace vtx
