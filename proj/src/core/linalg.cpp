#include "gha/core/linalg.hpp"

#include <set>

namespace gha {

void axpy(SVec& y, const Q& a, const SVec& x) {
    if (a == 0) return;
    for (const auto& [k, v] : x) {
        auto it = y.find(k);
        if (it == y.end()) {
            y.emplace(k, a * v);
        } else {
            it->second += a * v;
            if (it->second == 0) y.erase(it);
        }
    }
}

SVec scaled(const SVec& x, const Q& a) {
    SVec r;
    if (a == 0) return r;
    for (const auto& [k, v] : x) r.emplace_hint(r.end(), k, a * v);
    return r;
}

SVec add(const SVec& x, const SVec& y) {
    SVec r = x;
    axpy(r, 1, y);
    return r;
}

SVec sub(const SVec& x, const SVec& y) {
    SVec r = x;
    axpy(r, -1, y);
    return r;
}

void add_entry(SVec& y, int key, const Q& value) {
    if (value == 0) return;
    auto it = y.find(key);
    if (it == y.end()) {
        y.emplace(key, value);
    } else {
        it->second += value;
        if (it->second == 0) y.erase(it);
    }
}

Q entry(const SVec& x, int key) {
    auto it = x.find(key);
    return it == x.end() ? Q(0) : it->second;
}

SVec Echelon::reduce(SVec v) const {
    auto it = v.begin();
    while (it != v.end()) {
        auto p = rows_.find(it->first);
        if (p == rows_.end()) {
            ++it;
            continue;
        }
        int key = it->first;
        Q c = it->second;
        axpy(v, -c, p->second);
        it = v.upper_bound(key);
    }
    return v;
}

bool Echelon::add(SVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Q lead = v.begin()->second;
    if (lead != 1) {
        Q inv = 1 / lead;
        for (auto& kv : v) kv.second *= inv;
    }
    int pivot = v.begin()->first;
    rows_.emplace(pivot, std::move(v));
    return true;
}

void Echelon::back_substitute() {
    for (auto hi = rows_.rbegin(); hi != rows_.rend(); ++hi) {
        int q = hi->first;
        for (auto& [p, row] : rows_) {
            if (p >= q) break;
            auto it = row.find(q);
            if (it == row.end()) continue;
            Q c = it->second;
            axpy(row, -c, hi->second);
        }
    }
}

std::vector<SVec> Echelon::basis() const {
    std::vector<SVec> out;
    out.reserve(rows_.size());
    for (const auto& kv : rows_) out.push_back(kv.second);
    return out;
}

std::vector<SVec> transpose(const std::vector<SVec>& cols, int nrows) {
    std::vector<SVec> rows(nrows);
    for (int j = 0; j < static_cast<int>(cols.size()); ++j)
        for (const auto& [i, v] : cols[j]) rows[i].emplace_hint(rows[i].end(), j, v);
    return rows;
}

std::vector<SVec> nullspace(const std::vector<SVec>& rows, int ncols) {
    Echelon e;
    for (const auto& r : rows)
        if (!r.empty()) e.add(r);
    e.back_substitute();
    // column -> list of (pivot, coefficient) for entries in free columns
    std::map<int, std::vector<std::pair<int, Q>>> by_col;
    for (const auto& [p, row] : e.rows())
        for (const auto& [c, v] : row)
            if (c != p) by_col[c].emplace_back(p, v);
    std::vector<SVec> out;
    for (int f = 0; f < ncols; ++f) {
        if (e.rows().count(f)) continue;
        SVec k;
        k.emplace(f, 1);
        auto it = by_col.find(f);
        if (it != by_col.end())
            for (const auto& [p, v] : it->second) k.emplace(p, -v);
        out.push_back(std::move(k));
    }
    return out;
}

int rank(const std::vector<SVec>& vecs) {
    Echelon e;
    for (const auto& v : vecs)
        if (!v.empty()) e.add(v);
    return e.rank();
}

std::vector<SVec> span_basis(const std::vector<SVec>& vecs) {
    Echelon e;
    for (const auto& v : vecs)
        if (!v.empty()) e.add(v);
    e.back_substitute();
    return e.basis();
}

std::optional<SVec> solve(const std::vector<SVec>& columns, const SVec& b, int nrows) {
    Echelon e;
    for (int j = 0; j < static_cast<int>(columns.size()); ++j) {
        SVec v = columns[j];
        v.emplace(nrows + j, 1);
        SVec r = e.reduce(std::move(v));
        if (!r.empty() && r.begin()->first < nrows) e.add(std::move(r));
    }
    SVec r = e.reduce(b);
    if (!r.empty() && r.begin()->first < nrows) return std::nullopt;
    SVec x;
    for (const auto& [k, v] : r) x.emplace(k - nrows, -v);
    return x;
}

SpanCoordinates::SpanCoordinates(const std::vector<SVec>& basis) {
    for (const auto& b : basis) {
        Row r{b, SVec{{n_, Q(1)}}};
        auto it = r.vec.begin();
        while (it != r.vec.end()) {
            auto p = rows_.find(it->first);
            if (p == rows_.end()) {
                ++it;
                continue;
            }
            int key = it->first;
            Q c = it->second;
            axpy(r.vec, -c, p->second.vec);
            axpy(r.combo, -c, p->second.combo);
            it = r.vec.upper_bound(key);
        }
        if (r.vec.empty()) throw InputError("SpanCoordinates: dependent family");
        Q inv = 1 / r.vec.begin()->second;
        for (auto& kv : r.vec) kv.second *= inv;
        for (auto& kv : r.combo) kv.second *= inv;
        int pivot = r.vec.begin()->first;
        rows_.emplace(pivot, std::move(r));
        ++n_;
    }
}

std::optional<SVec> SpanCoordinates::coords(const SVec& y) const {
    SVec v = y, out;
    auto it = v.begin();
    while (it != v.end()) {
        auto p = rows_.find(it->first);
        if (p == rows_.end()) return std::nullopt;
        int key = it->first;
        Q c = it->second;
        axpy(v, -c, p->second.vec);
        axpy(out, c, p->second.combo);
        it = v.upper_bound(key);
    }
    return out;
}

}  // namespace gha
