#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "hankelcat/closed_form.hpp"
#include "hankelcat/determinant.hpp"
#include "hankelcat/hankel.hpp"
#include "hankelcat/sequences.hpp"

using hankelcat::Int;
using hankelcat::SequenceSource;
using hankelcat::TermFault;

namespace {

// Cofactor-expansion value of the n x n shift-r Catalan Hankel determinant.
// Only valid for n <= 8, which is exactly why the closed forms are checked
// against it at small n and against each other everywhere else.
Int oracle(std::size_t n, std::size_t r) {
    return hankelcat::det_laplace(
        hankelcat::hankel_matrix({SequenceSource::builtin_catalan(), n, r}));
}

}  // namespace

TEST_CASE("eval_shift4..7: frozen values at small n") {
    CHECK(hankelcat::eval_shift4(0) == 1);
    CHECK(hankelcat::eval_shift4(1) == 14);
    CHECK(hankelcat::eval_shift4(2) == 84);
    CHECK(hankelcat::eval_shift4(3) == 330);
    CHECK(hankelcat::eval_shift5(0) == 1);
    CHECK(hankelcat::eval_shift5(1) == 42);
    CHECK(hankelcat::eval_shift6(0) == 1);
    CHECK(hankelcat::eval_shift6(1) == 132);
    CHECK(hankelcat::eval_shift7(0) == 1);
    CHECK(hankelcat::eval_shift7(1) == 429);
}

TEST_CASE("eval_shift4..7: agree with the cofactor oracle") {
    for (std::size_t n = 0; n <= 4; ++n) {
        CHECK(hankelcat::eval_shift4(n) == oracle(n, 4));
        CHECK(hankelcat::eval_shift5(n) == oracle(n, 5));
        CHECK(hankelcat::eval_shift6(n) == oracle(n, 6));
        CHECK(hankelcat::eval_shift7(n) == oracle(n, 7));
    }
}

TEST_CASE("eval_general: spot values") {
    CHECK(hankelcat::eval_general(3, 2) == 4);
    CHECK(hankelcat::eval_general(2, 4) == 84);
    CHECK(hankelcat::eval_general(1, 7) == 429);
    CHECK(hankelcat::eval_general(4, 4) == 1001);
}

TEST_CASE("eval_general: shifts 0 and 1 are identically one") {
    for (std::size_t n = 0; n <= 20; ++n) {
        CHECK(hankelcat::eval_general(n, 0) == 1);
        CHECK(hankelcat::eval_general(n, 1) == 1);
    }
}

TEST_CASE("eval_general: degenerate shifts match elimination") {
    for (std::size_t n = 0; n <= 30; ++n) {
        CHECK(hankelcat::eval_general(n, 2) == n + 1);
        CHECK(hankelcat::eval_general(n, 3) == Int(n + 1) * Int(n + 2) * Int(2 * n + 3) / 6);
    }
    for (std::size_t n = 0; n <= 6; ++n) {
        CHECK(hankelcat::eval_general(n, 2) == oracle(n, 2));
        CHECK(hankelcat::eval_general(n, 3) == oracle(n, 3));
    }
}

TEST_CASE("eval_general: specializes to the shift-4..7 formulas") {
    for (std::size_t n = 0; n <= 40; ++n) {
        CHECK(hankelcat::eval_general(n, 4) == hankelcat::eval_shift4(n));
        CHECK(hankelcat::eval_general(n, 5) == hankelcat::eval_shift5(n));
        CHECK(hankelcat::eval_general(n, 6) == hankelcat::eval_shift6(n));
        CHECK(hankelcat::eval_general(n, 7) == hankelcat::eval_shift7(n));
    }
}

TEST_CASE("eval_general: boundary rows of the (n, r) table") {
    for (std::size_t r = 0; r <= 10; ++r) {
        CHECK(hankelcat::eval_general(0, r) == 1);
        // A 1x1 Hankel matrix with shift r is just (C_r).
        CHECK(hankelcat::eval_general(1, r) == hankelcat::catalan(r));
    }
}

TEST_CASE("eval_general: integral and positive far beyond the test grid") {
    // Every evaluation ends in a checked exact division, so simply running
    // without an exception asserts integrality.
    for (std::size_t r = 0; r <= 10; ++r) {
        for (std::size_t n = 0; n <= 200; n += 7) {
            CHECK(hankelcat::eval_general(n, r) > 0);
        }
    }
}

TEST_CASE("polynomial_identity_check: proves shifts 4..7, rejects the rest") {
    CHECK(hankelcat::polynomial_identity_check(4));
    CHECK(hankelcat::polynomial_identity_check(5));
    CHECK(hankelcat::polynomial_identity_check(6));
    CHECK(hankelcat::polynomial_identity_check(7));
    CHECK_THROWS_AS((void)hankelcat::polynomial_identity_check(3), std::invalid_argument);
    CHECK_THROWS_AS((void)hankelcat::polynomial_identity_check(8), std::invalid_argument);
}

TEST_CASE("check_point: all three paths agree on healthy points") {
    const auto empty = hankelcat::check_point(0, 5);
    CHECK(empty.agree);
    CHECK(empty.direct_value == 1);
    CHECK(empty.cigler_value == 1);
    CHECK(empty.closed_form_value == 1);

    const auto small = hankelcat::check_point(2, 2);
    CHECK(small.agree);
    CHECK(small.direct_value == 3);

    const auto mid = hankelcat::check_point(4, 4);
    CHECK(mid.agree);
    CHECK(mid.direct_value == 1001);
    CHECK(mid.cigler_value == 1001);
    CHECK(mid.closed_form_value == 1001);
    CHECK(oracle(4, 4) == 1001);
}

TEST_CASE("check_point: an injected fault only disturbs the direct path") {
    // C_4 = 14 -> 15 changes det H(3, 0) from 1 to 2 (verified by hand:
    // the faulted matrix is [[1,1,2],[1,2,5],[2,5,15]]).
    const auto hit = hankelcat::check_point(3, 0, TermFault{4, 1});
    CHECK_FALSE(hit.agree);
    CHECK(hit.direct_value == 2);
    CHECK(hit.cigler_value == 1);
    CHECK(hit.closed_form_value == 1);
}

TEST_CASE("check_point: faults outside the read window leave the point alone") {
    // H(2, 0) reads a_0..a_2 only, so corrupting a_10 changes nothing.
    const auto miss = hankelcat::check_point(2, 0, TermFault{10, 1});
    CHECK(miss.agree);
    CHECK(miss.direct_value == 1);
}

TEST_CASE("check_point: fault with a negative delta") {
    const auto hit = hankelcat::check_point(3, 0, TermFault{4, -1});
    CHECK_FALSE(hit.agree);
    CHECK(hit.direct_value == 0);
}

TEST_CASE("sweep: covers the grid in (r, n) order") {
    const auto records = hankelcat::sweep(1, 1);
    REQUIRE(records.size() == 4);
    CHECK(records[0].shift_r == 0);
    CHECK(records[0].order_n == 0);
    CHECK(records[1].shift_r == 0);
    CHECK(records[1].order_n == 1);
    CHECK(records[2].shift_r == 1);
    CHECK(records[2].order_n == 0);
    CHECK(records[3].shift_r == 1);
    CHECK(records[3].order_n == 1);
    for (const auto& record : records) CHECK(record.agree);
}

TEST_CASE("sweep: full supported grid agrees everywhere") {
    const auto records = hankelcat::sweep(12, 8);
    CHECK(records.size() == 117);
    for (const auto& record : records) {
        CHECK_MESSAGE(record.agree, "n=", record.order_n, " r=", record.shift_r);
    }
}

TEST_CASE("sweep: fault injection flips exactly the points that read the term") {
    const auto records = hankelcat::sweep(6, 4, TermFault{4, 1});
    std::size_t disagreements = 0;
    const hankelcat::ConsistencyRecord* first = nullptr;
    for (const auto& record : records) {
        if (!record.agree) {
            ++disagreements;
            if (first == nullptr) first = &record;
        }
        // A point is affected iff its matrix reads a_4: r <= 4 <= 2n-2+r.
        const bool reads_term =
            record.order_n >= 1 && record.shift_r <= 4 &&
            4 <= hankelcat::max_required_index(record.order_n, record.shift_r);
        CHECK(record.agree == !reads_term);
    }
    CHECK(disagreements == 24);
    REQUIRE(first != nullptr);
    CHECK(first->order_n == 3);
    CHECK(first->shift_r == 0);
}
