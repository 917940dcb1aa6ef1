#include "doctest.h"

#include <string>
#include <vector>

#include "hankelcat/determinant.hpp"
#include "hankelcat/errors.hpp"
#include "hankelcat/hankel.hpp"
#include "hankelcat/sequences.hpp"

using hankelcat::det_bareiss;
using hankelcat::det_laplace;
using hankelcat::ExactMatrix;
using hankelcat::HankelSpec;
using hankelcat::Int;
using hankelcat::SequenceSource;

namespace {

HankelSpec catalan_spec(std::size_t n, std::size_t r) {
    return {SequenceSource::builtin_catalan(), n, r};
}

}  // namespace

TEST_CASE("max_required_index: top-right corner of the matrix") {
    CHECK(hankelcat::max_required_index(1, 0) == 0);
    CHECK(hankelcat::max_required_index(2, 1) == 3);
    CHECK(hankelcat::max_required_index(1, 5) == 5);
    CHECK(hankelcat::max_required_index(12, 8) == 30);
}

TEST_CASE("hankel_matrix: catalan entries land on the anti-diagonals") {
    const ExactMatrix m = hankelcat::hankel_matrix(catalan_spec(3, 0));
    CHECK(m == ExactMatrix({{1, 1, 2}, {1, 2, 5}, {2, 5, 14}}));

    const ExactMatrix shifted = hankelcat::hankel_matrix(catalan_spec(2, 3));
    CHECK(shifted == ExactMatrix({{5, 14}, {14, 42}}));
}

TEST_CASE("hankel_matrix: n = 0 yields the empty matrix with determinant 1") {
    const ExactMatrix m = hankelcat::hankel_matrix(catalan_spec(0, 3));
    CHECK(m.rows() == 0);
    CHECK(m.cols() == 0);
    CHECK(det_bareiss(m) == 1);
}

TEST_CASE("hankel_matrix: symmetric for every shift") {
    for (std::size_t r = 0; r <= 4; ++r) {
        for (std::size_t n = 1; n <= 5; ++n) {
            const ExactMatrix m = hankelcat::hankel_matrix(catalan_spec(n, r));
            CHECK(m == m.transposed());
        }
    }
}

TEST_CASE("hankel_matrix: explicit sequences work and length is policed") {
    const auto source = SequenceSource::explicit_terms({Int(1), Int(2), Int(3), Int(4)});
    const ExactMatrix m = hankelcat::hankel_matrix({source, 2, 0});
    CHECK(m == ExactMatrix({{1, 2}, {2, 3}}));
    CHECK(det_bareiss(m) == -1);

    const auto two = SequenceSource::explicit_terms({Int(1), Int(1)});
    try {
        (void)hankelcat::hankel_matrix({two, 2, 1});
        FAIL("expected SequenceTooShort");
    } catch (const hankelcat::SequenceTooShort& e) {
        CHECK(e.missing_index() == 3);
        CHECK(std::string(e.what()).find("a_3") != std::string::npos);
    }
}

TEST_CASE("cigler_matrix: small frozen instances") {
    CHECK(hankelcat::cigler_matrix(2, 2) == ExactMatrix({{1, 3}, {1, 6}}));
    CHECK(hankelcat::cigler_matrix(0, 2) == ExactMatrix({{1, 0}, {1, 1}}));
    CHECK(hankelcat::cigler_matrix(5, 1) == ExactMatrix({{1}}));
    CHECK(hankelcat::cigler_matrix(7, 0).rows() == 0);
}

TEST_CASE("cigler_matrix: r x r determinant equals the n x n Hankel determinant") {
    // The whole point of the reduction: same value from a matrix whose size
    // does not grow with n. Exercised across the full supported grid.
    for (std::size_t r = 0; r <= 8; ++r) {
        for (std::size_t n = 0; n <= 12; ++n) {
            const Int direct = det_bareiss(hankelcat::hankel_matrix(catalan_spec(n, r)));
            const Int reduced = det_bareiss(hankelcat::cigler_matrix(n, r));
            CHECK_MESSAGE(direct == reduced, "n=", n, " r=", r);
        }
    }
}

TEST_CASE("hankel_transform: classical transforms of the catalan sequence") {
    const auto source = SequenceSource::builtin_catalan();
    const auto shift0 = hankelcat::hankel_transform(source, 0, 6);
    const auto shift1 = hankelcat::hankel_transform(source, 1, 6);
    REQUIRE(shift0.size() == 7);
    for (const Int& value : shift0) CHECK(value == 1);
    for (const Int& value : shift1) CHECK(value == 1);

    const auto shift2 = hankelcat::hankel_transform(source, 2, 6);
    for (std::size_t n = 0; n < shift2.size(); ++n) CHECK(shift2[n] == n + 1);
}

TEST_CASE("hankel_transform: explicit sequences, including sign changes") {
    const auto source = SequenceSource::explicit_terms({Int(1), Int(2), Int(3), Int(4)});
    const auto transform = hankelcat::hankel_transform(source, 0, 2);
    REQUIRE(transform.size() == 3);
    CHECK(transform[0] == 1);
    CHECK(transform[1] == 1);
    CHECK(transform[2] == -1);

    const auto ones = SequenceSource::explicit_terms(std::vector<Int>(5, Int(1)));
    const auto flat = hankelcat::hankel_transform(ones, 0, 2);
    CHECK(flat == std::vector<Int>{Int(1), Int(1), Int(0)});
}

TEST_CASE("hankel_transform: element 0 exists even when the sequence is tiny") {
    const auto one = SequenceSource::explicit_terms({Int(9)});
    const auto transform = hankelcat::hankel_transform(one, 4, 0);
    REQUIRE(transform.size() == 1);
    CHECK(transform[0] == 1);
}

TEST_CASE("hankel_transform: length check happens before any work") {
    const auto source = SequenceSource::explicit_terms({Int(1), Int(1)});
    CHECK_THROWS_AS((void)hankelcat::hankel_transform(source, 0, 5),
                    hankelcat::SequenceTooShort);
}

TEST_CASE("hankel_transform: catalan prefix given explicitly matches the builtin") {
    const auto prefix = SequenceSource::explicit_terms(hankelcat::catalan_prefix(20));
    for (std::size_t r = 0; r <= 3; ++r) {
        CHECK(hankelcat::hankel_transform(prefix, r, 9) ==
              hankelcat::hankel_transform(SequenceSource::builtin_catalan(), r, 9));
    }
}

TEST_CASE("hankel determinants: elimination agrees with the cofactor oracle") {
    for (std::size_t r = 0; r <= 6; ++r) {
        for (std::size_t n = 0; n <= 5; ++n) {
            const ExactMatrix m = hankelcat::hankel_matrix(catalan_spec(n, r));
            CHECK(det_laplace(m) == det_bareiss(m));
        }
    }
}
