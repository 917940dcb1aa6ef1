#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hankelcat/bigint.hpp"

namespace hankelcat {

/// Dense row-major matrix of arbitrary-precision integers.
///
/// The library never mutates a matrix after construction; determinant
/// routines work on private copies.
class ExactMatrix {
public:
    ExactMatrix() = default;

    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) {
            throw std::invalid_argument("entry count does not match rows * cols");
        }
    }

    ExactMatrix(std::initializer_list<std::initializer_list<Int>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) {
                throw std::invalid_argument("ragged initializer for ExactMatrix");
            }
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    template <typename Gen>
    static ExactMatrix from_generator(std::size_t rows, std::size_t cols, Gen&& gen) {
        ExactMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                m.entries_[i * cols + j] = gen(i, j);
            }
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    const Int& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    Int& operator()(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }

    const std::vector<Int>& entries() const { return entries_; }

    ExactMatrix transposed() const {
        return from_generator(cols_, rows_,
                              [this](std::size_t i, std::size_t j) { return (*this)(j, i); });
    }

    bool operator==(const ExactMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

}  // namespace hankelcat
