#include "vertexlab/forder.hpp"

#include <algorithm>
#include <map>
#include <memory>

namespace vtx {

namespace {

uint64_t f_rank(const VarId& v) {
    // family chain Q33 > Q23 > Q22 > Q13 > Q12 > Q11 > Ty > Tx > Th,
    // i.e. descending (a, b); Q13 sits between Q22 and Q12
    uint64_t fam;
    if (v.family == Family::GrQ) {
        int a = gr_q_a(v), b = gr_q_b(v);
        if (a == 3 && b == 3) fam = 8;
        else if (a == 2 && b == 3) fam = 7;
        else if (a == 2 && b == 2) fam = 6;
        else if (a == 1 && b == 3) fam = 5;
        else if (a == 1 && b == 2) fam = 4;
        else if (a == 1 && b == 1) fam = 3;
        else throw value_error("f_order: bad Q family");
        // within a family: j first, then i
        return (fam << 48) | (uint64_t(uint32_t(v.extra)) << 24) | uint64_t(uint32_t(v.level));
    }
    if (v.family == Family::GrT) {
        switch (v.basis) {
            case 1: fam = 2; break;  // T^y
            case 0: fam = 1; break;  // T^x
            case 2: fam = 0; break;  // T^h
            default: throw value_error("f_order: bad T index");
        }
        return (fam << 48) | uint64_t(uint32_t(v.level));
    }
    throw value_error("f_order: not an F variable");
}

}  // namespace

MonomialOrder MonomialOrder::f_order() { return MonomialOrder(Kind::Lex, f_rank, "F-lex"); }

static MonomialOrder ranked(MonomialOrder::Kind kind, std::vector<VarId> ascending,
                            const char* name) {
    auto table = std::make_shared<std::map<VarId, uint64_t>>();
    for (size_t i = 0; i < ascending.size(); ++i) (*table)[ascending[i]] = i;
    return MonomialOrder(
        kind,
        [table](const VarId& v) {
            auto it = table->find(v);
            if (it == table->end()) throw value_error("monomial order: unranked variable");
            return it->second;
        },
        name);
}

MonomialOrder MonomialOrder::lex_ranked(std::vector<VarId> ascending) {
    return ranked(Kind::Lex, std::move(ascending), "lex");
}

MonomialOrder MonomialOrder::grlex_ranked(std::vector<VarId> ascending) {
    return ranked(Kind::GrLex, std::move(ascending), "grlex");
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (kind_ == Kind::GrLex) {
        long da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
    }
    // merge exponent sequences in descending rank
    std::vector<std::pair<uint64_t, long>> ea, eb;
    ea.reserve(a.num_vars());
    eb.reserve(b.num_vars());
    for (auto& [v, e] : a.factors()) ea.push_back({rank_(v), long(e)});
    for (auto& [v, e] : b.factors()) eb.push_back({rank_(v), long(e)});
    std::sort(ea.rbegin(), ea.rend());
    std::sort(eb.rbegin(), eb.rend());
    size_t i = 0, j = 0;
    while (i < ea.size() || j < eb.size()) {
        if (i == ea.size()) return -1;  // b has a variable where a has none
        if (j == eb.size()) return 1;
        if (ea[i].first != eb[j].first) return ea[i].first > eb[j].first ? 1 : -1;
        if (ea[i].second != eb[j].second) return ea[i].second > eb[j].second ? 1 : -1;
        ++i, ++j;
    }
    return 0;
}

}  // namespace vtx
