#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace epicure {

/// Atomic fragment of an identifier: non-empty, lowercase, and free of the
/// characters that carry structure elsewhere ('_' separates subtokens, '|'
/// and '*' belong to the textual pattern syntax).
class Subtoken {
public:
    explicit Subtoken(std::string text);

    const std::string& text() const { return text_; }

    friend bool operator==(const Subtoken& a, const Subtoken& b) { return a.text_ == b.text_; }
    friend std::strong_ordering operator<=>(const Subtoken& a, const Subtoken& b) {
        return a.text_ <=> b.text_;
    }

private:
    std::string text_;
};

/// Non-empty sequence of subtokens; the concrete objects patterns match.
class TokenSequence {
public:
    explicit TokenSequence(std::vector<Subtoken> tokens);

    const std::vector<Subtoken>& tokens() const { return tokens_; }
    std::size_t size() const { return tokens_.size(); }
    const Subtoken& operator[](std::size_t i) const { return tokens_[i]; }

    auto begin() const { return tokens_.begin(); }
    auto end() const { return tokens_.end(); }

    /// Subtokens joined with '_'.
    std::string str() const;

    friend bool operator==(const TokenSequence& a, const TokenSequence& b) {
        return a.tokens_ == b.tokens_;
    }
    friend std::strong_ordering operator<=>(const TokenSequence& a, const TokenSequence& b) {
        return a.tokens_ <=> b.tokens_;
    }

private:
    std::vector<Subtoken> tokens_;
};

struct SubtokenizeOptions {
    /// Treat letter/digit boundaries as split points ("v2" -> [v, 2]).
    bool split_digits = true;
};

/// Splits an identifier on underscores, case transitions, and (optionally)
/// letter/digit boundaries, lowercasing every piece. An uppercase run
/// followed by a lowercase letter splits before its last uppercase
/// ("HTTPServer" -> [http, server]). Throws std::invalid_argument when no
/// piece survives.
TokenSequence subtokenize(std::string_view raw_name, const SubtokenizeOptions& opts = {});

}  // namespace epicure

template <>
struct std::hash<epicure::Subtoken> {
    std::size_t operator()(const epicure::Subtoken& s) const noexcept {
        return std::hash<std::string>{}(s.text());
    }
};
