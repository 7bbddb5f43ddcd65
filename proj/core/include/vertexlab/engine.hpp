#pragma once

#include <unordered_map>
#include <vector>

#include "vertexlab/state.hpp"

namespace vtx {

/// Nonzero singular OPE terms of a pair of states: entries (n, a o_n b) for
/// n >= 0, absent iff zero. a(z)b(w) ~ sum c_n (z-w)^{-n-1}.
struct OpeTable {
    std::vector<std::pair<int, State>> entries;

    const State* at(int n) const {
        for (auto& [m, s] : entries)
            if (m == n) return &s;
        return nullptr;
    }
    bool empty() const { return entries.empty(); }
    std::string str() const;
};

enum class IdentityKind { WickAssociativity, ModeDerivation, SkewSymmetry, CommutatorFormula };

struct CommutantWitness {
    bool member = true;
    // on failure: the offending generator index, mode, and nonzero product
    int generator = -1;
    int mode = 0;
    State product;
};

/// Mode application and circle products over one state space. Results are
/// memoized per (monomial, n, monomial); all operations are pure, so the
/// cache only ever stores idempotent entries. An Engine is a per-task
/// object; independent engines may run concurrently.
class Engine {
  public:
    explicit Engine(AlgebraPtr alg) : alg_(std::move(alg)) {}
    const AlgebraPtr& algebra() const { return alg_; }

    /// a(n) b for states of the same algebra
    State apply_mode(const State& a, int n, const State& b);
    /// circle product a o_n b == a(n) b under the creation correspondence
    State circle(const State& a, int n, const State& b) { return apply_mode(a, n, b); }
    /// Wick (normally ordered) product a o_{-1} b
    State wick(const State& a, const State& b) { return apply_mode(a, -1, b); }
    /// right-nested iterated Wick product :a_1 ... a_k:
    State iterated_wick(const std::vector<State>& as);
    /// formal derivative: v(-k-1) -> (k+1) v(-k-2), extended as a derivation
    /// (current-algebra words are re-normalized to the PBW basis)
    State derivative(const State& a);
    State derivative(const State& a, int times);
    /// c o_n 1: delta_{n,-1} c for n >= -1, (1/(-n-1)!) d^{-n-1} c below
    State circle_vacuum(const State& c, int n);

    /// all nonzero a o_n b, n >= 0 (complete by the weight bound)
    OpeTable ope(const State& a, const State& b);

    /// membership in the commutant of the given generators, with witness
    CommutantWitness is_commutant_member(const std::vector<State>& generators, const State& b);

    /// check one of the structural identities on concrete states:
    ///   WickAssociativity: the correction terms of :(:ab:)c: versus :abc:
    ///   ModeDerivation (n >= 0): the failure of o_n to derive the Wick
    ///       product, against the binomial correction sum
    ///   SkewSymmetry: a o_n b through products of b o_p a with the vacuum
    ///   CommutatorFormula: [a(n), b(m)] c expanded through the circle
    ///       products, scanned over a window of second modes m
    bool check_identity(IdentityKind which, const State& a, const State& b, const State& c, int n);

    /// L o_3 L = c/2, L o_2 L = 0, L o_1 L = 2L, L o_0 L = dL
    bool verify_virasoro(const State& L, const Rational& central_charge);
    /// L o_1 a = delta a, L o_0 a = da, L o_n a = 0 for n >= 2
    bool check_primary(const State& L, const State& a, const Rational& delta);

    size_t cache_size() const { return memo_.size(); }

  private:
    struct Key {
        Monomial a;
        int n;
        Monomial b;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        size_t operator()(const Key& k) const {
            MonomialHash mh;
            size_t h = mh(k.a) * 0x9e3779b97f4a7c15ULL + size_t(uint32_t(k.n));
            return h ^ (mh(k.b) + (h << 6) + (h >> 2));
        }
    };

    Polynomial apply_mode_mono(const Monomial& a, int n, const Monomial& b);
    /// raw generator mode u(m) (family/basis from v, mode m) applied to a
    /// normalized monomial state
    Polynomial gen_mode_mono(Family fam, int basis, int m, const Monomial& b);
    /// insert a creation variable into a PBW word (straightening for
    /// current algebras, plain multiplication for ghosts)
    Polynomial insert_creation(const VarId& v, const Monomial& b);
    Polynomial poly_gen_mode(Family fam, int basis, int m, const Polynomial& p);
    Polynomial poly_insert(const VarId& v, const Polynomial& p);

    AlgebraPtr alg_;
    std::unordered_map<Key, Polynomial, KeyHash> memo_;
};

}  // namespace vtx
