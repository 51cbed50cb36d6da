#pragma once

#include <cstddef>
#include <vector>

#include "oremod/scalar.hpp"

namespace oremod {

using Row = std::vector<Scalar>;

// Rank via Bareiss fraction-free elimination.  Exact; no thresholds.
std::size_t rank_bareiss(std::vector<Row> m);

// Incrementally maintained row space in reduced echelon form over Q(i).
class SpanBasis {
public:
    explicit SpanBasis(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<Row>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

    // Adds the vector to the span; returns true when the rank grew.
    bool insert(Row v);

    bool contains(Row v) const;

    // True when the span is exactly the set of vectors supported on its
    // pivot columns (every reduced basis row is a unit vector).
    bool is_coordinate_subspace() const;

private:
    void reduce(Row& v) const;

    std::size_t cols_;
    std::vector<Row> rows_;          // reduced echelon rows, pivot value 1
    std::vector<std::size_t> pivots_; // pivot column per row, ascending
};

} // namespace oremod
