#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "vertexlab/monomial.hpp"
#include "vertexlab/rational.hpp"

namespace vtx {

struct universe_error : value_error {
    using value_error::value_error;
};

/// Sparse multivariate polynomial over Q. Terms kept sorted by the canonical
/// monomial storage order with no zero coefficients; equality is structural.
class Polynomial {
  public:
    using Term = std::pair<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(Rational c) {
        if (!c.is_zero()) t_.push_back({Monomial(), std::move(c)});
    }
    static Polynomial var(const VarId& v, uint32_t exp = 1) { return monomial(Monomial::var(v, exp)); }
    static Polynomial monomial(Monomial m, Rational c = Rational(1)) {
        Polynomial p;
        if (!c.is_zero()) p.t_.push_back({std::move(m), std::move(c)});
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    size_t num_terms() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }
    Rational coeff(const Monomial& m) const;
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_unit()); }
    Rational constant_term() const { return coeff(Monomial()); }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c);
    friend Polynomial operator*(const Rational& c, Polynomial a) { return std::move(a) * c; }
    friend Polynomial operator-(const Polynomial& a) { return a * Rational(-1); }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.t_ == b.t_; }

    Polynomial mul_monomial(const Monomial& m, const Rational& c) const;

    /// add c * m in place
    void add_term(const Monomial& m, const Rational& c);

    long total_degree() const;  // max over monomials; 0 for the zero polynomial
    std::vector<VarId> variables() const;

    /// substitute numeric values for all variables
    Rational evaluate(const std::function<Rational(const VarId&)>& point) const;
    /// formal partial derivative
    Polynomial partial(const VarId& v) const;

    std::string str(const std::function<std::string(const VarId&)>& name = var_name) const;

  private:
    std::vector<Term> t_;  // sorted by monomial, no zero coefficients
};

/// One Z-grading on a variable universe; the grading of a monomial is the sum
/// over its factors. Carries conformal weight, degree, level, the per-family
/// and W^i gradings.
struct GradingDescriptor {
    std::string name;
    std::function<long(const VarId&)> weight_of;

    long of(const Monomial& m) const {
        long g = 0;
        for (auto& [v, e] : m.factors()) g += weight_of(v) * long(e);
        return g;
    }
};

enum class ArithOp { Add, Sub, Mul };

/// spec-facing arithmetic entry point with the universe-mismatch check
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op);

/// split into homogeneous components under a grading; sum of parts == input
std::map<long, Polynomial> grade_components(const Polynomial& p, const GradingDescriptor& g);

/// Leibniz extension of variable rules; variables without a rule map to 0
Polynomial apply_derivation(const std::map<VarId, Polynomial>& rules, const Polynomial& p);

/// throws universe_error if a and b mix incompatible variable families
void check_same_universe(const Polynomial& a, const Polynomial& b);

}  // namespace vtx
