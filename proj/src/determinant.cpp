#include "hankelcat/determinant.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hankelcat {

namespace {

void require_square(const ExactMatrix& m) {
    if (!m.square()) {
        throw NotSquare("determinant requires a square matrix, got " +
                        std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

Int laplace_recurse(const ExactMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) {
        return 1;
    }
    if (n == 1) {
        return m(0, 0);
    }
    if (n == 2) {
        return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    }
    Int sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) {
            continue;
        }
        ExactMatrix minor = ExactMatrix::from_generator(
            n - 1, n - 1, [&](std::size_t i, std::size_t k) {
                return m(i + 1, k < j ? k : k + 1);
            });
        const Int cofactor = m(0, j) * laplace_recurse(minor);
        if (j % 2 == 0) {
            sum += cofactor;
        } else {
            sum -= cofactor;
        }
    }
    return sum;
}

}  // namespace

Int det_laplace(const ExactMatrix& m) {
    require_square(m);
    if (m.rows() > kLaplaceCap) {
        throw DimensionCapExceeded("Laplace expansion capped at " +
                                   std::to_string(kLaplaceCap) + "x" +
                                   std::to_string(kLaplaceCap) + ", got " +
                                   std::to_string(m.rows()));
    }
    return laplace_recurse(m);
}

Int det_bareiss(const ExactMatrix& m) {
    require_square(m);
    const std::size_t n = m.rows();
    if (n == 0) {
        return 1;
    }
    std::vector<Int> a = m.entries();  // working copy
    auto at = [&](std::size_t i, std::size_t j) -> Int& { return a[i * n + j]; };

    Int previous_pivot = 1;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // First nonzero entry scanning downward: deterministic across platforms.
        std::size_t pivot_row = k;
        while (pivot_row < n && at(pivot_row, k).is_zero()) {
            ++pivot_row;
        }
        if (pivot_row == n) {
            return 0;  // whole pivot column vanished: singular
        }
        if (pivot_row != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(at(k, j), at(pivot_row, j));
            }
            negate = !negate;
        }
        const Int pivot = at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                at(i, j) = exact_div(at(i, j) * pivot - at(i, k) * at(k, j), previous_pivot);
            }
            at(i, k) = 0;
        }
        previous_pivot = pivot;
    }
    Int result = std::move(at(n - 1, n - 1));
    return negate ? Int(-std::move(result)) : result;
}

Int det(const ExactMatrix& m, DetMethod method) {
    require_square(m);
    switch (method) {
        case DetMethod::Laplace:
            return det_laplace(m);
        case DetMethod::Bareiss:
            return det_bareiss(m);
        case DetMethod::Auto:
            break;
    }
    return m.rows() <= 4 ? det_laplace(m) : det_bareiss(m);
}

}  // namespace hankelcat
