#include "hankelcat/hankel.hpp"

#include "hankelcat/determinant.hpp"

namespace hankelcat {

ExactMatrix hankel_matrix(const HankelSpec& spec) {
    const std::size_t n = spec.order_n;
    const std::size_t r = spec.shift_r;
    if (n == 0) {
        return ExactMatrix(0, 0);
    }
    if (spec.source.kind == SequenceKind::Explicit) {
        const std::size_t highest = max_required_index(n, r);
        if (spec.source.terms.size() <= highest) {
            throw SequenceTooShort(highest);
        }
    }
    return ExactMatrix::from_generator(n, n, [&](std::size_t i, std::size_t j) {
        return spec.source.term(i + j + r);
    });
}

ExactMatrix cigler_matrix(std::size_t order_n, std::size_t shift_r) {
    return ExactMatrix::from_generator(
        shift_r, shift_r, [order_n](std::size_t i, std::size_t j) {
            const unsigned long long top = i + j + order_n;
            const long long bottom = static_cast<long long>(i + order_n) -
                                     static_cast<long long>(j);
            return binomial(top, bottom);
        });
}

std::vector<Int> hankel_transform(const SequenceSource& source, std::size_t shift_r,
                                  std::size_t max_n) {
    if (max_n >= 1 && source.kind == SequenceKind::Explicit) {
        const std::size_t highest = max_required_index(max_n, shift_r);
        if (source.terms.size() <= highest) {
            throw SequenceTooShort(highest);
        }
    }
    std::vector<Int> transform;
    transform.reserve(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n) {
        transform.push_back(det_bareiss(hankel_matrix({source, n, shift_r})));
    }
    return transform;
}

}  // namespace hankelcat
