#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "hankelcat/errors.hpp"

namespace hankelcat {

// Arbitrary-precision signed integer. Every operation in this library is
// exact; there is no floating-point or rational arithmetic anywhere.
using Int = boost::multiprecision::cpp_int;

// Quotient num/den when den divides num exactly. A nonzero remainder means
// an algorithmic invariant was broken, so it is surfaced loudly instead of
// being rounded away.
inline Int exact_div(const Int& num, const Int& den) {
    Int quotient, remainder;
    boost::multiprecision::divide_qr(num, den, quotient, remainder);
    if (!remainder.is_zero()) {
        throw InternalExactDivisionViolation(
            "exact division left remainder " + remainder.str() +
            " (divisor " + den.str() + ")");
    }
    return quotient;
}

inline Int factorial(unsigned long long k) {
    Int result = 1;
    for (unsigned long long i = 2; i <= k; ++i) {
        result *= i;
    }
    return result;
}

}  // namespace hankelcat
