#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hankelcat/hankel.hpp"

namespace hankelcat {

/// Closed-form value of the n x n Catalan Hankel determinant with shift 4:
///   4 (n+1)(n+2)^2(n+3)(2n+3)(2n+5) / (3! 5!)
Int eval_shift4(std::size_t n);

/// Shift 5: 8 (n+1)(n+2)^2(n+3)^2(n+4)(2n+3)(2n+5)^2(2n+7) / (5! 7!)
Int eval_shift5(std::size_t n);

/// Shift 6: 2^5 (n+1)(n+2)^2(n+3)^3(n+4)^2(n+5)
///              (2n+3)(2n+5)^2(2n+7)^2(2n+9) / (5 * 7! 9!)
Int eval_shift6(std::size_t n);

/// Shift 7: 3*2^10 (n+1)(n+2)^2(n+3)^3(n+4)^3(n+5)^2(n+6)
///               (2n+3)(2n+5)^2(2n+7)^3(2n+9)^2(2n+11) / (7! 9! 11!)
Int eval_shift7(std::size_t n);

/// General closed form of the n x n Catalan Hankel determinant with any
/// shift r >= 0:
///
///   [ prod_{k=1}^{r-1} (n+k)
///     * prod_{j=0}^{r-3} ( (r-2-j)! * prod_{i=0}^{r-3-j} (2n+3+j+2i) ) ]
///   / prod_{k=2}^{r-1} (2k-1)!
///
/// with every empty product equal to 1. The numerator is assembled in full
/// before the single final division, which must be exact; a remainder
/// throws InternalExactDivisionViolation and is never silently rounded.
/// Degenerate shifts collapse to the classical values: r = 0, 1 give 1,
/// r = 2 gives n+1, r = 3 gives (n+1)(n+2)(2n+3)/6.
Int eval_general(std::size_t n, std::size_t r);

/// Perturbs C_{term_index} by delta on the direct elimination path only.
/// Exists to prove the consistency checker actually detects broken inputs.
struct TermFault {
    std::size_t term_index = 0;
    Int delta = 1;
};

/// Computes one grid point three independent ways: direct elimination of
/// the Catalan Hankel matrix, elimination of the Cigler matrix, and the
/// general closed form. Disagreement sets agree = false; it never throws.
ConsistencyRecord check_point(std::size_t n, std::size_t r,
                              const std::optional<TermFault>& fault = std::nullopt);

/// All records for 0 <= n <= max_n, 0 <= r <= max_r, ordered by (r, n).
std::vector<ConsistencyRecord> sweep(std::size_t max_n, std::size_t max_r,
                                     const std::optional<TermFault>& fault = std::nullopt);

/// True iff the specialized shift-r formula agrees with the general form at
/// n = 0 ... 40. Both sides are polynomials in n of degree at most
/// r(r-1)/2 <= 21, so 41 point agreements prove polynomial identity.
/// r must be in {4, 5, 6, 7}; anything else throws std::invalid_argument.
bool polynomial_identity_check(unsigned r);

}  // namespace hankelcat
