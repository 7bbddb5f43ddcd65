#pragma once

#include "vertexlab/gr.hpp"
#include "vertexlab/linalg.hpp"
#include "vertexlab/report.hpp"

namespace vtx {

/// A finite graded piece of P_N = Sym(+ (V_k + V*_k), k <= N). Constraints
/// may be exact or upper bounds; a degree constraint is mandatory because
/// level-0 variables make level slices infinite-dimensional.
struct ComponentSpec {
    int max_var_level = 0;  // N
    std::optional<long> level;        // exact total level
    std::optional<long> max_level;    // or an upper bound
    std::optional<long> degree;       // exact total degree
    std::optional<long> max_degree;   // or an upper bound
    /// optional exact per-(family, basis) degrees, e.g. deg_{gamma^{x'}} = 2
    std::vector<std::tuple<Family, int, long>> family_degree;
};

/// deterministic basis of a component (canonical VarId order, graded-lex)
std::vector<Monomial> enumerate_monomials(const ComponentSpec& spec, int rep_dim);

/// exact basis of the joint kernel of the given Der operators on the
/// component. Requires the operators to be (level, degree)-homogeneous so
/// the graded restriction is well-posed.
std::vector<Polynomial> invariant_kernel(const std::vector<GrDerOp>& ops,
                                         const ComponentSpec& spec, int rep_dim);
long invariant_kernel_dim(const std::vector<GrDerOp>& ops, const ComponentSpec& spec,
                          int rep_dim);

/// the module W^a at gr-level n of the sl(2)-adjoint decomposition
struct WModule {
    int fam;  // 1, 2, 3
    int lvl;
    friend auto operator<=>(const WModule&, const WModule&) = default;
};

/// Weyl determinant generator of a pair of distinct modules; antisymmetric,
/// normalized so that tau^u_k = sum_i binom(k,i) q^{..}_{i,k-i} holds on the
/// nose (this flips the sign of the printed mixed-family generators)
Polynomial q_of_modules(const WModule& M, const WModule& N);
/// q^{a,b}_{i,j} with a <= b
Polynomial q_poly(int a, int b, int i, int j);

struct QGen {
    int a, b, i, j;
    Polynomial poly;
};
/// all six families with indices <= N (i < j for the symmetric families)
std::vector<QGen> weyl_generators(int N);

/// tau^u_k = d^k phi_2(theta^u), u in {0,1,2} = {x,y,h}
Polynomial tau_poly(int u, int k);

/// the three binomial identities expressing tau^u_k through the q's
bool tau_from_q(int k);

/// Plucker relations r = q12 q34 - q13 q24 + q14 q23 over all 4-subsets of
/// modules with level <= N, ordered by (family, level); all must vanish
std::vector<Polynomial> plucker_relations(int N);
/// the same relation for one ordered 4-subset
Polynomial plucker_of(const WModule& M1, const WModule& M2, const WModule& M3, const WModule& M4);

/// number of tau-monomials of degree 2m and total level l with factor levels
/// <= N (multisets of pairs (u, k))
long tau_monomial_count(long level, long degree, int N);
/// independent oracle: coefficient of t^m q^l in prod_{k<=N} (1 - t q^k)^{-3}
long tau_monomial_count_series(long level, long degree, int N);
/// coefficient of q^w in prod_{n>=1} (1 - q^n)^{-3}: PBW dimension of
/// O(sl(2), B) at weight w
long pbw_count(long w);

enum class Independence { Independent, Inconclusive };
/// Jacobian evaluation witness: rank at the all-ones point, then up to two
/// further seeded small-integer points; full rank certifies independence
Independence independence_witness(const std::vector<Polynomial>& polys, uint64_t seed = 0,
                                  int* rank_out = nullptr);

/// dim of the joint kernel == tau-monomial count on every (level, degree)
/// component, levels <= maxLevel, degrees <= maxDegree
VerificationReport verify_graded_commutant(int N, long maxLevel, long maxDegree);

/// classical Weyl check on Sym of `copies` standard modules: brute-force
/// invariant dimensions against the span of q_{ij}-monomials
VerificationReport verify_weyl(int copies, int maxDegree);

/// index data for the epsilon-support checks: epsilon =
/// prod (beta^x_0 gamma^{h'}_{i_a}) prod (beta^x_0 gamma^{x'}_{j_b})
/// prod (beta^y_{k_c} gamma^{h'}_0)
struct EpsilonData {
    std::vector<int> i_list, j_list, k_list;
};
/// exhaustive check that exactly the predicted q-monomials contain epsilon
bool epsilon_support_q(const EpsilonData& data);
/// exhaustive check for tau-monomials
bool epsilon_support_tau(const EpsilonData& data);

}  // namespace vtx
