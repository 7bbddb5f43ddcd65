#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace vtx {

/// Variable families. State-space variables (creation modes) come first,
/// then associated-graded variables, then the Q/T polynomial algebra of the
/// invariant-theory side, then free variables for generic rings.
enum class Family : uint8_t {
    BetaMode = 0,   // beta^{x_i}(-k-1)
    GammaMode = 1,  // gamma^{x'_i}(-k-1)
    CurrentMode = 2,  // u_a(-k-1); doubles as the gr variable of a current algebra
    GrBeta = 3,     // beta^{x_i}_k in P = gr(S(V))
    GrGamma = 4,    // gamma^{x'_i}_k
    GrQ = 5,        // Q^{a,b}_{i,j}; basis encodes (a,b), level=i, extra=j
    GrT = 6,        // T^u_m; basis = u, level = m
    Free = 7,       // generic variables
};

/// A graded polynomial variable. Total order is lexicographic on
/// (family, basis, level, extra); this fixes every canonical form in the
/// library.
struct VarId {
    Family family = Family::Free;
    int32_t basis = 0;
    int32_t level = 0;
    int32_t extra = 0;

    friend auto operator<=>(const VarId&, const VarId&) = default;
};

inline VarId beta_mode(int32_t i, int32_t k) { return {Family::BetaMode, i, k, 0}; }
inline VarId gamma_mode(int32_t i, int32_t k) { return {Family::GammaMode, i, k, 0}; }
inline VarId current_mode(int32_t a, int32_t k) { return {Family::CurrentMode, a, k, 0}; }
inline VarId gr_beta(int32_t i, int32_t k) { return {Family::GrBeta, i, k, 0}; }
inline VarId gr_gamma(int32_t i, int32_t k) { return {Family::GrGamma, i, k, 0}; }
inline VarId gr_q(int32_t a, int32_t b, int32_t i, int32_t j) {
    return {Family::GrQ, a * 4 + b, i, j};
}
inline VarId gr_t(int32_t u, int32_t m) { return {Family::GrT, u, m, 0}; }
inline VarId free_var(int32_t i, int32_t level = 0) { return {Family::Free, i, level, 0}; }

inline int gr_q_a(const VarId& v) { return v.basis / 4; }
inline int gr_q_b(const VarId& v) { return v.basis % 4; }

/// conformal weight of a creation-mode variable; gr/Q/T/free variables have
/// no conformal weight and report 0
inline long var_weight(const VarId& v) {
    switch (v.family) {
        case Family::BetaMode: return v.level + 1;
        case Family::GammaMode: return v.level;
        case Family::CurrentMode: return v.level + 1;
        default: return 0;
    }
}

inline bool is_state_family(Family f) {
    return f == Family::BetaMode || f == Family::GammaMode || f == Family::CurrentMode;
}

std::string var_name(const VarId& v);

struct VarIdHash {
    size_t operator()(const VarId& v) const {
        uint64_t x = (uint64_t(uint8_t(v.family)) << 56) ^ (uint64_t(uint32_t(v.basis)) << 40) ^
                     (uint64_t(uint32_t(v.level)) << 20) ^ uint64_t(uint32_t(v.extra));
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        return size_t(x);
    }
};

}  // namespace vtx
