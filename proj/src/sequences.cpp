#include "hankelcat/sequences.hpp"

#include <cctype>
#include <fstream>
#include <string_view>
#include <utility>

namespace hankelcat {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

bool is_decimal_integer(std::string_view s) {
    if (!s.empty() && s.front() == '-') {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

// where = "token" for inline input, "line" for files; position is 1-based.
Int parse_term(std::string_view token, const char* where, std::size_t position) {
    if (!is_decimal_integer(token)) {
        throw ParseError("invalid integer '" + std::string(token) + "' at " + where + " " +
                             std::to_string(position),
                         position);
    }
    return Int(std::string(token));
}

}  // namespace

Int CatalanCache::at(std::size_t k) {
    std::lock_guard<std::mutex> lock(mutex_);
    grow_to(k + 1);
    return values_[k];
}

std::vector<Int> CatalanCache::prefix(std::size_t count) {
    std::lock_guard<std::mutex> lock(mutex_);
    grow_to(count);
    return std::vector<Int>(values_.begin(), values_.begin() + count);
}

void CatalanCache::grow_to(std::size_t count) {
    if (values_.empty()) {
        values_.emplace_back(1);
    }
    while (values_.size() < count) {
        const std::size_t k = values_.size() - 1;
        // (k+2) C_{k+1} = 2 (2k+1) C_k, division exact at every step
        values_.push_back(exact_div(values_[k] * Int(2 * (2 * k + 1)), Int(k + 2)));
    }
}

namespace {

CatalanCache& shared_catalan_cache() {
    static CatalanCache cache;
    return cache;
}

}  // namespace

Int catalan(std::size_t k) { return shared_catalan_cache().at(k); }

std::vector<Int> catalan_prefix(std::size_t count) {
    return shared_catalan_cache().prefix(count);
}

Int binomial(unsigned long long top, long long bottom) {
    if (bottom < 0 || static_cast<unsigned long long>(bottom) > top) {
        return 0;
    }
    unsigned long long k = static_cast<unsigned long long>(bottom);
    if (k > top - k) {
        k = top - k;
    }
    Int result = 1;
    // Each partial product is itself a binomial coefficient, so the division
    // is exact at every step.
    for (unsigned long long i = 1; i <= k; ++i) {
        result = exact_div(result * Int(top - k + i), Int(i));
    }
    return result;
}

SequenceSource SequenceSource::builtin_catalan() { return SequenceSource{}; }

SequenceSource SequenceSource::explicit_terms(std::vector<Int> terms) {
    if (terms.empty()) {
        throw EmptySequence("explicit sequence has no terms");
    }
    SequenceSource source;
    source.kind = SequenceKind::Explicit;
    source.terms = std::move(terms);
    return source;
}

Int SequenceSource::term(std::size_t index) const {
    if (kind == SequenceKind::BuiltinCatalan) {
        return catalan(index);
    }
    if (index >= terms.size()) {
        throw SequenceTooShort(index);
    }
    return terms[index];
}

SequenceSource parse_inline_sequence(const std::string& text) {
    std::vector<Int> terms;
    std::size_t token_number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string::npos ? text.size() : comma;
        const std::string_view token = trim(std::string_view(text).substr(start, end - start));
        ++token_number;
        if (token.empty()) {
            if (comma == std::string::npos && token_number == 1) {
                break;  // wholly empty input
            }
            throw ParseError("empty token at token " + std::to_string(token_number),
                             token_number);
        }
        terms.push_back(parse_term(token, "token", token_number));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    if (terms.empty()) {
        throw EmptySequence("inline sequence has no terms");
    }
    return SequenceSource::explicit_terms(std::move(terms));
}

SequenceSource load_sequence_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open sequence file: " + path.string());
    }
    std::vector<Int> terms;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const std::string_view token = trim(line);
        if (token.empty()) {
            continue;
        }
        terms.push_back(parse_term(token, "line", line_number));
    }
    if (in.bad()) {
        throw IoError("read failure on sequence file: " + path.string());
    }
    if (terms.empty()) {
        throw EmptySequence("sequence file has no terms: " + path.string());
    }
    return SequenceSource::explicit_terms(std::move(terms));
}

SequenceSource load_sequence(const std::string& descriptor) {
    const std::string_view trimmed = trim(descriptor);
    if (trimmed == "catalan") {
        return SequenceSource::builtin_catalan();
    }
    if (trimmed.find(',') != std::string_view::npos || is_decimal_integer(trimmed)) {
        return parse_inline_sequence(std::string(trimmed));
    }
    return load_sequence_file(std::filesystem::path(std::string(trimmed)));
}

}  // namespace hankelcat
