#include "oremod/linalg.hpp"

#include <algorithm>

namespace oremod {

std::size_t rank_bareiss(std::vector<Row> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    Scalar prev(1);
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        const Scalar p = m[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * p - m[i][col] * m[rank][j]) / prev;
            m[i][col] = Scalar(0);
        }
        prev = p;
        ++rank;
    }
    return rank;
}

void SpanBasis::reduce(Row& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        const Scalar f = c;
        for (std::size_t j = 0; j < cols_; ++j) v[j] -= f * rows_[r][j];
    }
}

bool SpanBasis::insert(Row v) {
    reduce(v);
    std::size_t p = 0;
    while (p < cols_ && v[p].is_zero()) ++p;
    if (p == cols_) return false;
    const Scalar inv = v[p].inv();
    for (std::size_t j = 0; j < cols_; ++j) v[j] *= inv;
    // Eliminate the new pivot column from the existing rows to keep the
    // basis fully reduced.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar f = rows_[r][p];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < cols_; ++j) rows_[r][j] -= f * v[j];
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

bool SpanBasis::contains(Row v) const {
    reduce(v);
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

bool SpanBasis::is_coordinate_subspace() const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j == pivots_[r]) continue;
            if (!rows_[r][j].is_zero()) return false;
        }
    }
    return true;
}

} // namespace oremod
