#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "epicure/subtoken.hpp"

namespace epicure {

/// One pattern position: either a literal subtoken or the wildcard, which
/// matches zero or more arbitrary subtokens.
class PatternElement {
public:
    static PatternElement literal(Subtoken token) { return PatternElement(std::move(token)); }
    static PatternElement wildcard() { return PatternElement(); }

    bool is_wildcard() const { return wildcard_; }
    bool is_literal() const { return !wildcard_; }
    /// Valid only for literals.
    const Subtoken& token() const { return token_; }

    friend bool operator==(const PatternElement& a, const PatternElement& b) {
        if (a.wildcard_ != b.wildcard_)
            return false;
        return a.wildcard_ || a.token_ == b.token_;
    }
    /// Literals order before the wildcard; literals order by text.
    friend std::strong_ordering operator<=>(const PatternElement& a, const PatternElement& b) {
        if (a.wildcard_ != b.wildcard_)
            return a.wildcard_ ? std::strong_ordering::greater : std::strong_ordering::less;
        if (a.wildcard_)
            return std::strong_ordering::equal;
        return a.token_ <=> b.token_;
    }

private:
    PatternElement() : wildcard_(true), token_("-") {}
    explicit PatternElement(Subtoken token) : wildcard_(false), token_(std::move(token)) {}

    bool wildcard_;
    Subtoken token_;
};

/// Sequence of literals and wildcards, kept canonical: never two adjacent
/// wildcards, never empty. Textual form joins elements with '|', writing
/// the wildcard as '*' (e.g. "load|*|messages|*").
class Pattern {
public:
    /// Canonicalizes: collapses runs of adjacent wildcards into one.
    static Pattern from_elements(std::vector<PatternElement> elements);
    /// Wildcard-free pattern matching exactly one sequence.
    static Pattern concrete(const TokenSequence& tokens);
    /// The trivial pattern [*].
    static Pattern wildcard();
    /// Parses the textual form; throws std::invalid_argument on bad input.
    static Pattern parse(std::string_view text);

    const std::vector<PatternElement>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    bool is_concrete() const;
    /// True for [*], the pattern that matches every sequence.
    bool is_trivial() const { return elements_.size() == 1 && elements_[0].is_wildcard(); }

    std::string str() const;

    friend bool operator==(const Pattern& a, const Pattern& b) {
        return a.elements_ == b.elements_;
    }
    friend std::strong_ordering operator<=>(const Pattern& a, const Pattern& b) {
        return a.elements_ <=> b.elements_;
    }

private:
    explicit Pattern(std::vector<PatternElement> elements) : elements_(std::move(elements)) {}

    std::vector<PatternElement> elements_;
};

/// Collapses adjacent wildcards; the identity on canonical sequences.
std::vector<PatternElement> canonicalize(std::vector<PatternElement> elements);

/// True iff the sequence is in the language of the (possibly non-canonical)
/// element sequence. O(|elements| * |tokens|), no backtracking.
bool match_elements(const std::vector<PatternElement>& elements, const TokenSequence& tokens);

/// True iff the pattern matches the token sequence.
bool matches(const Pattern& pattern, const TokenSequence& tokens);

/// True iff every sequence matched by `specific` is matched by `general`
/// (language inclusion; `general` is the more general pattern).
bool subsumes(const Pattern& general, const Pattern& specific);

std::size_t hash_value(const Pattern& pattern);

}  // namespace epicure

template <>
struct std::hash<epicure::Pattern> {
    std::size_t operator()(const epicure::Pattern& p) const noexcept {
        return epicure::hash_value(p);
    }
};
