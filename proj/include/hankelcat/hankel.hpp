#pragma once

#include <cstddef>
#include <vector>

#include "hankelcat/matrix.hpp"
#include "hankelcat/sequences.hpp"

namespace hankelcat {

/// One Hankel determinant instance: the n x n matrix (a_{i+j+r}) over the
/// given sequence, where r shifts every index.
struct HankelSpec {
    SequenceSource source;
    std::size_t order_n = 0;
    std::size_t shift_r = 0;
};

/// Highest sequence index an n x n, shift-r Hankel matrix reads, i.e.
/// 2n - 2 + r. Meaningful only for n >= 1.
inline std::size_t max_required_index(std::size_t order_n, std::size_t shift_r) {
    return 2 * order_n - 2 + shift_r;
}

/// The n x n matrix with entry (i, j) = a_{i+j+r}; the 0x0 matrix for n = 0.
/// Throws SequenceTooShort if an explicit source lacks a required term.
ExactMatrix hankel_matrix(const HankelSpec& spec);

/// Cigler's reduction: the r x r matrix with entry
/// (i, j) = binom(i+j+n, i-j+n). Its determinant equals the n x n Catalan
/// Hankel determinant with shift r. The zero-binomial convention makes the
/// entries above the antidiagonal of validity vanish; r = 0 yields the 0x0
/// matrix.
ExactMatrix cigler_matrix(std::size_t order_n, std::size_t shift_r);

/// [det H(n, r)] for n = 0 ... max_n, each by fraction-free elimination.
/// Element 0 is always 1. Throws SequenceTooShort if the explicit source is
/// too short for the largest instance.
std::vector<Int> hankel_transform(const SequenceSource& source, std::size_t shift_r,
                                  std::size_t max_n);

/// The three independently computed values for one (n, r) grid point.
/// Disagreement is recorded, not thrown: agree is data.
struct ConsistencyRecord {
    std::size_t order_n = 0;
    std::size_t shift_r = 0;
    Int direct_value;      // fraction-free elimination on the Hankel matrix
    Int cigler_value;      // elimination on the r x r binomial matrix
    Int closed_form_value; // product formula
    bool agree = false;
};

}  // namespace hankelcat
