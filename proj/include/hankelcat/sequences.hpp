#pragma once

#include <cstddef>
#include <filesystem>
#include <mutex>
#include <string>
#include <vector>

#include "hankelcat/bigint.hpp"

namespace hankelcat {

/// Memoized prefix of the Catalan sequence C_0, C_1, C_2, ...
///
/// Terms are produced by the multiplicative recurrence
///   (k+2) * C_{k+1} = 2 * (2k+1) * C_k
/// whose division is exact at every step. The cache only grows; returned
/// values are copies and stay valid forever. Safe for concurrent use.
class CatalanCache {
public:
    Int at(std::size_t k);
    std::vector<Int> prefix(std::size_t count);

private:
    void grow_to(std::size_t count);  // requires mutex_ held

    mutable std::mutex mutex_;
    std::vector<Int> values_;
};

/// C_k from a shared process-wide cache.
Int catalan(std::size_t k);

/// [C_0, ..., C_{count-1}] from the shared cache.
std::vector<Int> catalan_prefix(std::size_t count);

/// Binomial coefficient. Returns 0 when bottom < 0 or bottom > top; that
/// convention is load-bearing for the Cigler matrix, whose entries
/// binom(i+j+n, i-j+n) vanish exactly when the lower index is negative.
Int binomial(unsigned long long top, long long bottom);

enum class SequenceKind { BuiltinCatalan, Explicit };

/// Where Hankel matrix entries come from: the builtin Catalan sequence or a
/// finite user-supplied list of integers.
struct SequenceSource {
    SequenceKind kind = SequenceKind::BuiltinCatalan;
    std::vector<Int> terms;  // populated iff kind == Explicit

    static SequenceSource builtin_catalan();

    /// Throws EmptySequence on an empty list.
    static SequenceSource explicit_terms(std::vector<Int> terms);

    /// a_index. Explicit sources throw SequenceTooShort past their end.
    Int term(std::size_t index) const;

    bool is_catalan() const { return kind == SequenceKind::BuiltinCatalan; }
};

/// Parses a comma-separated list of decimal integers ("1, -2, 3").
/// Throws ParseError (with the 1-based token number) or EmptySequence.
SequenceSource parse_inline_sequence(const std::string& text);

/// Reads a sequence file: one decimal integer per line, optional leading
/// '-', surrounding whitespace ignored, blank lines ignored.
/// Throws IoError, ParseError (with the 1-based line number) or
/// EmptySequence.
SequenceSource load_sequence_file(const std::filesystem::path& path);

///// Dispatches on the descriptor: the token "catalan" selects the builtin
/// sequence; text containing a comma or consisting of a single integer is
/// parsed inline; anything else is treated as a file path.
SequenceSource load_sequence(const std::string& descriptor);

}  // namespace hankelcat
