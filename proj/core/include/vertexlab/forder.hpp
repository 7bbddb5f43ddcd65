#pragma once

#include <functional>

#include "vertexlab/polynomial.hpp"

namespace vtx {

/// A monomial order built from a total rank on variables: monomials compare
/// lexicographically on their exponent sequences read in descending variable
/// rank, with an optional total-degree-first (graded) refinement.
class MonomialOrder {
  public:
    enum class Kind { Lex, GrLex };
    using RankFn = std::function<uint64_t(const VarId&)>;

    MonomialOrder(Kind kind, RankFn rank, std::string name = "")
        : kind_(kind), rank_(std::move(rank)), name_(std::move(name)) {}

    /// the order of the Q/T polynomial algebra: family chain
    /// Q33 > Q23 > Q22 > Q13 > Q12 > Q11 > Ty > Tx > Th, inside a Q family
    /// by (second index, first index), inside a T family by level, then lex
    static MonomialOrder f_order();
    /// lex with variables ranked by a caller-supplied list (front = lowest)
    static MonomialOrder lex_ranked(std::vector<VarId> ascending);
    static MonomialOrder grlex_ranked(std::vector<VarId> ascending);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    uint64_t rank(const VarId& v) const { return rank_(v); }

    /// -1, 0, +1 for a < b, a == b, a > b
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  private:
    Kind kind_;
    RankFn rank_;
    std::string name_;
};

}  // namespace vtx
