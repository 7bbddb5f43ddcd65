#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "vertexlab/rational.hpp"
#include "vertexlab/varid.hpp"

namespace vtx {

/// Sparse commutative monomial: sorted (VarId, exponent) pairs, exponents
/// positive, variables ascending under the canonical VarId order. For
/// current-algebra states the descending reading of the factors is the PBW
/// word (greatest variable applied last).
class Monomial {
  public:
    using Factor = std::pair<VarId, uint32_t>;
    using FactorVec = boost::container::small_vector<Factor, 6>;

    Monomial() = default;
    explicit Monomial(const std::vector<Factor>& factors) : f_(factors.begin(), factors.end()) {
        normalize();
    }
    explicit Monomial(FactorVec factors) : f_(std::move(factors)) { normalize(); }
    static Monomial var(const VarId& v, uint32_t exp = 1) {
        Monomial m;
        if (exp > 0) m.f_.push_back({v, exp});
        return m;
    }

    bool is_unit() const { return f_.empty(); }
    const FactorVec& factors() const { return f_; }
    size_t num_vars() const { return f_.size(); }

    long degree() const {
        long d = 0;
        for (auto& [v, e] : f_) d += e;
        return d;
    }
    long weight() const {
        long w = 0;
        for (auto& [v, e] : f_) w += var_weight(v) * long(e);
        return w;
    }
    uint32_t exponent(const VarId& v) const {
        auto it = std::lower_bound(f_.begin(), f_.end(), v,
                                   [](const Factor& a, const VarId& x) { return a.first < x; });
        return (it != f_.end() && it->first == v) ? it->second : 0;
    }
    VarId greatest_var() const { return f_.back().first; }

    Monomial mul(const Monomial& o) const {
        Monomial r;
        r.f_.reserve(f_.size() + o.f_.size());
        auto a = f_.begin(), b = o.f_.begin();
        while (a != f_.end() && b != o.f_.end()) {
            if (a->first < b->first) r.f_.push_back(*a++);
            else if (b->first < a->first) r.f_.push_back(*b++);
            else { r.f_.push_back({a->first, a->second + b->second}); ++a; ++b; }
        }
        r.f_.insert(r.f_.end(), a, f_.end());
        r.f_.insert(r.f_.end(), b, o.f_.end());
        return r;
    }
    Monomial mul_var(const VarId& v, uint32_t exp = 1) const {
        return mul(Monomial::var(v, exp));
    }
    /// remove one unit of variable v; v must divide
    Monomial div_var(const VarId& v, uint32_t exp = 1) const {
        Monomial r = *this;
        auto it = std::lower_bound(r.f_.begin(), r.f_.end(), v,
                                   [](const Factor& a, const VarId& x) { return a.first < x; });
        if (it == r.f_.end() || it->first != v || it->second < exp)
            throw value_error("Monomial: not divisible");
        it->second -= exp;
        if (it->second == 0) r.f_.erase(it);
        return r;
    }
    /// exact division by another monomial, or false
    bool try_div(const Monomial& o, Monomial& out) const {
        out.f_.clear();
        auto a = f_.begin();
        for (auto& [v, e] : o.f_) {
            while (a != f_.end() && a->first < v) out.f_.push_back(*a++);
            if (a == f_.end() || a->first != v || a->second < e) return false;
            if (a->second > e) out.f_.push_back({v, a->second - e});
            ++a;
        }
        out.f_.insert(out.f_.end(), a, f_.end());
        return true;
    }
    Monomial lcm(const Monomial& o) const {
        Monomial r;
        auto a = f_.begin(), b = o.f_.begin();
        while (a != f_.end() && b != o.f_.end()) {
            if (a->first < b->first) r.f_.push_back(*a++);
            else if (b->first < a->first) r.f_.push_back(*b++);
            else { r.f_.push_back({a->first, std::max(a->second, b->second)}); ++a; ++b; }
        }
        r.f_.insert(r.f_.end(), a, f_.end());
        r.f_.insert(r.f_.end(), b, o.f_.end());
        return r;
    }

    /// storage order: lexicographic on the factor sequence (not an algebraic
    /// monomial order; those live in forder.hpp)
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.f_.size() == b.f_.size() && std::equal(a.f_.begin(), a.f_.end(), b.f_.begin());
    }
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        return std::lexicographical_compare_three_way(a.f_.begin(), a.f_.end(), b.f_.begin(),
                                                      b.f_.end());
    }

  private:
    void normalize() {
        std::sort(f_.begin(), f_.end(),
                  [](const Factor& a, const Factor& b) { return a.first < b.first; });
        FactorVec out;
        for (auto& [v, e] : f_) {
            if (e == 0) continue;
            if (!out.empty() && out.back().first == v) out.back().second += e;
            else out.push_back({v, e});
        }
        f_ = std::move(out);
    }
    FactorVec f_;
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const {
        size_t h = 0x9e3779b97f4a7c15ULL;
        VarIdHash vh;
        for (auto& [v, e] : m.factors()) {
            h ^= vh(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h ^= size_t(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace vtx
