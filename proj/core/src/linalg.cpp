#include "vertexlab/linalg.hpp"

#include <algorithm>

namespace vtx {

namespace {

// clear denominators and divide by integer content; keeps entries small
void normalize_row(SparseRow& r) {
    if (r.empty()) return;
    mpz_class den(1), num(0);
    for (auto& [c, x] : r) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.denominator().get_mpz_t());
    for (auto& [c, x] : r) {
        mpz_class v = x.numerator() * (den / x.denominator());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
    }
    if (num == 0) return;
    Rational scale(mpq_class(den, num));
    for (auto& [c, x] : r) x *= scale;
    if (r[0].second.sign() < 0)
        for (auto& [c, x] : r) x = -x;
}

// row -= f * pivot   (sparse merge)
SparseRow axpy(const SparseRow& row, const Rational& f, const SparseRow& pivot) {
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    auto a = row.begin();
    auto b = pivot.begin();
    while (a != row.end() && b != pivot.end()) {
        if (a->first < b->first) out.push_back(*a++);
        else if (b->first < a->first) { out.push_back({b->first, -f * b->second}); ++b; }
        else {
            Rational c = a->second - f * b->second;
            if (!c.is_zero()) out.push_back({a->first, std::move(c)});
            ++a; ++b;
        }
    }
    out.insert(out.end(), a, row.end());
    for (; b != pivot.end(); ++b) out.push_back({b->first, -f * b->second});
    return out;
}

}  // namespace

SparseRow RowReducer::reduce(SparseRow row) const {
    while (!row.empty()) {
        int32_t lead = row[0].first;
        auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead,
                                   [](const auto& p, int32_t c) { return p.first < c; });
        if (it == pivots_.end() || it->first != lead) break;
        Rational f = row[0].second / it->second[0].second;
        row = axpy(row, f, it->second);
        normalize_row(row);
    }
    return row;
}

bool RowReducer::add_row(SparseRow row) {
    normalize_row(row);
    row = reduce(std::move(row));
    if (row.empty()) return false;
    int32_t lead = row[0].first;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead,
                               [](const auto& p, int32_t c) { return p.first < c; });
    pivots_.insert(it, {lead, std::move(row)});
    return true;
}

std::vector<SparseRow> RowReducer::kernel(int32_t ncols) {
    // back-substitute to full RREF
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        SparseRow& r = it->second;
        for (size_t k = 1; k < r.size();) {
            auto jt = std::lower_bound(pivots_.begin(), pivots_.end(), r[k].first,
                                       [](const auto& p, int32_t c) { return p.first < c; });
            if (jt != pivots_.end() && jt->first == r[k].first && jt->first != it->first) {
                Rational f = r[k].second / jt->second[0].second;
                r = axpy(r, f, jt->second);
                normalize_row(r);
                k = 1;
            } else {
                ++k;
            }
        }
    }
    std::vector<SparseRow> basis;
    size_t pi = 0;
    for (int32_t col = 0; col < ncols; ++col) {
        if (pi < pivots_.size() && pivots_[pi].first == col) { ++pi; continue; }
        SparseRow v;
        for (auto& [pc, row] : pivots_) {
            auto it = std::lower_bound(row.begin(), row.end(), col,
                                       [](const auto& t, int32_t c) { return t.first < c; });
            if (it != row.end() && it->first == col)
                v.push_back({pc, -(it->second / row[0].second)});
        }
        v.push_back({col, Rational(1)});
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Rational>> rational_matrix_kernel(
    const std::vector<std::vector<Rational>>& m) {
    RowReducer rr;
    int32_t ncols = m.empty() ? 0 : int32_t(m[0].size());
    for (auto& row : m) {
        if (int32_t(row.size()) != ncols) throw value_error("kernel: ragged matrix");
        SparseRow sr;
        for (int32_t j = 0; j < ncols; ++j)
            if (!row[j].is_zero()) sr.push_back({j, row[j]});
        rr.add_row(std::move(sr));
    }
    std::vector<std::vector<Rational>> out;
    for (auto& sr : rr.kernel(ncols)) {
        std::vector<Rational> v(ncols, Rational(0));
        for (auto& [c, x] : sr) v[c] = x;
        out.push_back(std::move(v));
    }
    return out;
}

int matrix_rank(const std::vector<std::vector<Rational>>& m) {
    RowReducer rr;
    int32_t ncols = m.empty() ? 0 : int32_t(m[0].size());
    for (auto& row : m) {
        if (int32_t(row.size()) != ncols) throw value_error("rank: ragged matrix");
        SparseRow sr;
        for (int32_t j = 0; j < ncols; ++j)
            if (!row[j].is_zero()) sr.push_back({j, row[j]});
        rr.add_row(std::move(sr));
    }
    return rr.rank();
}

}  // namespace vtx
