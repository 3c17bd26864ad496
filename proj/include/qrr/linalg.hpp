#pragma once

#include <cstddef>
#include <vector>

#include "qrr/qpoly.hpp"

namespace qrr {

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b);

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Integer> data_;
};

struct NullspaceResult {
    std::size_t rank = 0;
    /// One primitive integer vector per free column, ordered by column.
    std::vector<std::vector<Integer>> basis;
};

/// Integer basis of {v : M v = 0} via fraction-free Gauss-Jordan elimination
/// (Bareiss updates). Each intermediate division is exact; a remainder
/// throws std::logic_error.
NullspaceResult integer_nullspace(IntMatrix m);

}  // namespace qrr
