#include "hankelcat/closed_form.hpp"

#include <stdexcept>
#include <utility>

#include "hankelcat/determinant.hpp"

namespace hankelcat {

namespace {

void multiply_power(Int& accumulator, const Int& base, int exponent) {
    for (int e = 0; e < exponent; ++e) {
        accumulator *= base;
    }
}

// prefactor * prod (n+k)^e over linear, * prod (2n+k)^e over odd, / divisor
Int eval_product(std::size_t n, const Int& prefactor,
                 std::initializer_list<std::pair<unsigned, int>> linear,
                 std::initializer_list<std::pair<unsigned, int>> odd,
                 const Int& divisor) {
    Int numerator = prefactor;
    for (const auto& [k, e] : linear) {
        multiply_power(numerator, Int(n + k), e);
    }
    for (const auto& [k, e] : odd) {
        multiply_power(numerator, Int(2 * n + k), e);
    }
    return exact_div(numerator, divisor);
}

}  // namespace

Int eval_shift4(std::size_t n) {
    return eval_product(n, 4,
                        {{1, 1}, {2, 2}, {3, 1}},
                        {{3, 1}, {5, 1}},
                        factorial(3) * factorial(5));
}

Int eval_shift5(std::size_t n) {
    return eval_product(n, 8,
                        {{1, 1}, {2, 2}, {3, 2}, {4, 1}},
                        {{3, 1}, {5, 2}, {7, 1}},
                        factorial(5) * factorial(7));
}

Int eval_shift6(std::size_t n) {
    return eval_product(n, 32,
                        {{1, 1}, {2, 2}, {3, 3}, {4, 2}, {5, 1}},
                        {{3, 1}, {5, 2}, {7, 2}, {9, 1}},
                        5 * factorial(7) * factorial(9));
}

Int eval_shift7(std::size_t n) {
    return eval_product(n, 3 * 1024,
                        {{1, 1}, {2, 2}, {3, 3}, {4, 3}, {5, 2}, {6, 1}},
                        {{3, 1}, {5, 2}, {7, 3}, {9, 2}, {11, 1}},
                        factorial(7) * factorial(9) * factorial(11));
}

Int eval_general(std::size_t n, std::size_t r) {
    Int numerator = 1;
    for (std::size_t k = 1; k + 1 <= r; ++k) {
        numerator *= Int(n + k);
    }
    if (r >= 3) {
        // Row j carries the factorial (r-2-j)! and the arithmetic
        // progression (2n+3+j)(2n+5+j)...(2n+2r-3-j), stepping by 2.
        for (std::size_t j = 0; j + 3 <= r; ++j) {
            numerator *= factorial(r - 2 - j);
            for (std::size_t i = 0; i + j + 3 <= r; ++i) {
                numerator *= Int(2 * n + 3 + j + 2 * i);
            }
        }
    }
    Int denominator = 1;
    for (std::size_t k = 2; k + 1 <= r; ++k) {
        denominator *= factorial(2 * k - 1);
    }
    return exact_div(numerator, denominator);
}

ConsistencyRecord check_point(std::size_t n, std::size_t r,
                              const std::optional<TermFault>& fault) {
    SequenceSource direct_source = SequenceSource::builtin_catalan();
    if (fault && n >= 1) {
        const std::size_t highest = max_required_index(n, r);
        if (fault->term_index >= r && fault->term_index <= highest) {
            std::vector<Int> terms = catalan_prefix(highest + 1);
            terms[fault->term_index] += fault->delta;
            direct_source = SequenceSource::explicit_terms(std::move(terms));
        }
    }
    ConsistencyRecord record;
    record.order_n = n;
    record.shift_r = r;
    record.direct_value = det_bareiss(hankel_matrix({direct_source, n, r}));
    record.cigler_value = det_bareiss(cigler_matrix(n, r));
    record.closed_form_value = eval_general(n, r);
    record.agree = record.direct_value == record.cigler_value &&
                   record.cigler_value == record.closed_form_value;
    return record;
}

std::vector<ConsistencyRecord> sweep(std::size_t max_n, std::size_t max_r,
                                     const std::optional<TermFault>& fault) {
    std::vector<ConsistencyRecord> records;
    records.reserve((max_n + 1) * (max_r + 1));
    for (std::size_t r = 0; r <= max_r; ++r) {
        for (std::size_t n = 0; n <= max_n; ++n) {
            records.push_back(check_point(n, r, fault));
        }
    }
    return records;
}

bool polynomial_identity_check(unsigned r) {
    Int (*specialized)(std::size_t) = nullptr;
    switch (r) {
        case 4: specialized = eval_shift4; break;
        case 5: specialized = eval_shift5; break;
        case 6: specialized = eval_shift6; break;
        case 7: specialized = eval_shift7; break;
        default:
            throw std::invalid_argument(
                "polynomial_identity_check requires r in 4..7, got " + std::to_string(r));
    }
    for (std::size_t n = 0; n <= 40; ++n) {
        if (specialized(n) != eval_general(n, r)) {
            return false;
        }
    }
    return true;
}

}  // namespace hankelcat
