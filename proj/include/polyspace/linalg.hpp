#pragma once

#include <cstddef>
#include <vector>

#include "polyspace/rational.hpp"

namespace polyspace {

/// Dense row-major matrix over Q.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> init);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalMatrix transpose() const;
    std::vector<Rational> multiply(const std::vector<Rational>& x) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RankResult {
    std::size_t rank = 0;
    /// Column indices of the pivots in the echelon form.
    std::vector<std::size_t> pivots;
    /// Basis of {x : M x = 0}, one vector per non-pivot column. Each vector
    /// has a 1 in its free column and 0 in every other free column.
    std::vector<std::vector<Rational>> kernel;
};

/// Exact rank and right kernel. Rows are cleared to integers and reduced by
/// Bareiss fraction-free elimination; the kernel comes from back substitution
/// on the resulting echelon form.
RankResult matrix_rank(const RationalMatrix& m);

/// Growing row space kept in reduced echelon form.
class IncrementalSpan {
public:
    explicit IncrementalSpan(std::size_t width) : width_(width) {}

    /// Adds v; returns true iff it was not already in the span.
    bool add(std::vector<Rational> v);
    bool contains(std::vector<Rational> v) const;
    std::size_t rank() const noexcept { return rows_.size(); }

private:
    void reduce(std::vector<Rational>& v) const;

    std::size_t width_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace polyspace
