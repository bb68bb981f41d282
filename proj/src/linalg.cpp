#include "defkit/linalg.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace defkit {

namespace {

// r -= c * p (sparse merge on sorted columns)
SparseRow axpy(const SparseRow& r, const Rational& c, const SparseRow& p) {
    SparseRow out;
    out.reserve(r.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() && j < p.size()) {
        if (r[i].first < p[j].first) {
            out.push_back(r[i++]);
        } else if (r[i].first > p[j].first) {
            out.emplace_back(p[j].first, -(c * p[j].second));
            ++j;
        } else {
            Rational v = r[i].second - c * p[j].second;
            if (!is_zero(v)) out.emplace_back(r[i].first, std::move(v));
            ++i; ++j;
        }
    }
    while (i < r.size()) out.push_back(r[i++]);
    while (j < p.size()) {
        out.emplace_back(p[j].first, -(c * p[j].second));
        ++j;
    }
    return out;
}

} // namespace

SparseRow SparseRref::reduce(const SparseRow& row) const {
    SparseRow cur = row;
    // pivot rows contain no other pivot columns, so one pass suffices;
    // axpy never reintroduces an eliminated column
    for (std::size_t i = 0; i < cur.size();) {
        std::size_t piv = pivot_of_col_[cur[i].first];
        if (piv == npos) { ++i; continue; }
        Rational c = cur[i].second; // pivot rows are monic
        cur = axpy(cur, c, pivots_[piv]);
        // restart scan at same index: entries before i are pivot-free
    }
    return cur;
}

void SparseRref::insert_pivot(SparseRow reduced) {
    // make monic
    Rational inv = 1 / reduced[0].second;
    for (auto& e : reduced) e.second *= inv;
    std::size_t col = reduced[0].first;
    // eliminate this column from existing pivot rows to keep RREF invariant
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        auto& p = pivots_[k];
        auto it = std::lower_bound(p.begin(), p.end(), col,
                                   [](const auto& e, std::size_t c) { return e.first < c; });
        if (it != p.end() && it->first == col) {
            Rational c = it->second;
            pivots_[k] = axpy(p, c, reduced);
        }
    }
    pivot_of_col_[col] = pivots_.size();
    lead_.push_back(col);
    pivots_.push_back(std::move(reduced));
}

bool SparseRref::add_row(const SparseRow& row) {
    SparseRow r = reduce(row);
    if (r.empty()) return false;
    insert_pivot(std::move(r));
    return true;
}

void SparseRref::add_rows(const std::vector<SparseRow>& rows, bool parallel) {
    if (!parallel) {
        for (const auto& r : rows) add_row(r);
        return;
    }
    const std::size_t batch = 256;
    for (std::size_t start = 0; start < rows.size(); start += batch) {
        std::size_t end = std::min(rows.size(), start + batch);
        std::vector<SparseRow> reduced(end - start);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long k = 0; k < static_cast<long long>(end - start); ++k) {
            reduced[static_cast<std::size_t>(k)] =
                reduce(rows[start + static_cast<std::size_t>(k)]);
        }
        // serial fold in index order: same pivots as the serial reference
        for (auto& r : reduced) {
            if (r.empty()) continue;
            SparseRow rr = reduce(r); // catch pivots added during this fold
            if (!rr.empty()) insert_pivot(std::move(rr));
        }
    }
}

std::vector<std::size_t> SparseRref::free_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < ncols_; ++c)
        if (pivot_of_col_[c] == npos) out.push_back(c);
    return out;
}

std::size_t sparse_rank(const std::vector<SparseRow>& rows, std::size_t ncols, bool parallel) {
    SparseRref r(ncols);
    r.add_rows(rows, parallel);
    return r.rank();
}

std::vector<std::vector<Rational>> dense_kernel(const std::vector<std::vector<Rational>>& a) {
    if (a.empty()) return {};
    std::size_t m = a.size(), n = a[0].size();
    std::vector<std::vector<Rational>> mat = a;
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t sel = row;
        while (sel < m && is_zero(mat[sel][col])) ++sel;
        if (sel == m) continue;
        std::swap(mat[sel], mat[row]);
        Rational inv = 1 / mat[row][col];
        for (std::size_t j = col; j < n; ++j) mat[row][j] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || is_zero(mat[i][col])) continue;
            Rational c = mat[i][col];
            for (std::size_t j = col; j < n; ++j) mat[i][j] -= c * mat[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(n, Rational(0));
        v[free] = 1;
        for (std::size_t k = 0; k < pivot_col.size(); ++k)
            v[pivot_col[k]] = -mat[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t dense_rank(const std::vector<std::vector<Rational>>& a) {
    if (a.empty()) return 0;
    std::size_t n = a[0].size();
    return n - dense_kernel(a).size();
}

Rational dense_det(std::vector<std::vector<Rational>> a) {
    std::size_t n = a.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && is_zero(a[sel][col])) ++sel;
        if (sel == n) return Rational(0);
        if (sel != col) { std::swap(a[sel], a[col]); det = -det; }
        det *= a[col][col];
        Rational inv = 1 / a[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (is_zero(a[i][col])) continue;
            Rational c = a[i][col] * inv;
            for (std::size_t j = col; j < n; ++j) a[i][j] -= c * a[col][j];
        }
    }
    return det;
}

} // namespace defkit
