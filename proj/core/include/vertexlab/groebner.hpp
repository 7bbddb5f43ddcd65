#pragma once

#include <map>

#include "vertexlab/forder.hpp"
#include "vertexlab/report.hpp"

namespace vtx {

/// leading term under an order; throws on the zero polynomial
std::pair<Monomial, Rational> leading_term(const Polynomial& f, const MonomialOrder& ord);

/// S(f, g) = (L / lt f) f - (L / lt g) g, L = lcm of the leading monomials
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

struct NormalForm {
    Polynomial remainder;
    /// true when the divisor set was declared a Grobner basis, making the
    /// remainder canonical
    bool canonical = false;
    /// quotient certificate: f = sum quotients[i] * basis[i] + remainder
    std::vector<Polynomial> quotients;
};

NormalForm normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord, bool basis_is_groebner = true);

struct BuchbergerOptions {
    /// apply the lcm == product (coprime) criterion; always sound
    bool coprime_criterion = true;
    /// optional chain criterion
    bool chain_criterion = false;
    /// inter-reduce and normalize the final basis
    bool reduce = true;
};

/// Buchberger's algorithm with first-fit pair selection; deterministic
std::vector<Polynomial> buchberger(std::vector<Polynomial> gens, const MonomialOrder& ord,
                                   const BuchbergerOptions& opt = {});

/// defining property: every S-pair reduces to zero
bool is_groebner_basis(const std::vector<Polynomial>& basis, const MonomialOrder& ord);

/// q^{a,b}_{0,k} (a < b) rewritten through the tau variables:
/// T^u_k - sum_{n>=1} binom(k,n) Q^{a,b}_{n,k-n}
Polynomial eliminated_q(int a, int b, int k);
/// q^{a,b}_{i,j} as an F-polynomial (mixed families with i = 0 eliminated)
Polynomial f_side_q(int a, int b, int i, int j);

/// relation with leading term Q^{3,3}_{i,j} T^h_0 (0 <= i < j)
Polynomial relation_q33(int i, int j);
/// relation with leading term Q^{2,3}_{i,j} T^h_0 (i > 0)
Polynomial relation_q23(int i, int j);

/// The truncated ideal I_N in the F variables with levels <= N: one Plucker
/// relation per 4-subset of the modules {W^a_n : n <= N}, rewritten through
/// the eliminated variables, plus the computed Grobner basis and the
/// substitution map Phi back into P.
struct GrobnerContext {
    int N = 0;
    MonomialOrder order = MonomialOrder::f_order();
    std::vector<Polynomial> generators;
    std::vector<Polynomial> basis;
    std::map<VarId, Polynomial> phi_map;

    /// evaluate an F polynomial in P
    Polynomial phi(const Polynomial& f) const;
    /// all F variables of the truncated universe
    std::vector<VarId> universe() const;
};

/// build generators, run Buchberger, materialize Phi; optional cache
/// directory keyed by (N, order revision)
GrobnerContext build_truncated_ideal(int N, const std::string& cache_dir = "");

/// the distinguished relations lie in the ideal and their leading terms
/// are exactly Q^{3,3}_{i,j} T^h_0 resp. Q^{2,3}_{i,j} T^h_0
VerificationReport verify_rewrite_leading_terms(int N, const GrobnerContext* ctx = nullptr);

/// canonical one-line text form used by the cache and the CLI
std::string f_poly_str(const Polynomial& f);
Polynomial parse_f_poly(const std::string& line);

constexpr int kFOrderRevision = 1;

}  // namespace vtx
