#include "epicure/pattern.hpp"

#include <stdexcept>

namespace epicure {

std::vector<PatternElement> canonicalize(std::vector<PatternElement> elements) {
    std::vector<PatternElement> out;
    out.reserve(elements.size());
    for (PatternElement& e : elements) {
        if (e.is_wildcard() && !out.empty() && out.back().is_wildcard())
            continue;
        out.push_back(std::move(e));
    }
    return out;
}

Pattern Pattern::from_elements(std::vector<PatternElement> elements) {
    std::vector<PatternElement> canon = canonicalize(std::move(elements));
    if (canon.empty())
        throw std::invalid_argument("pattern must have at least one element");
    return Pattern(std::move(canon));
}

Pattern Pattern::concrete(const TokenSequence& tokens) {
    std::vector<PatternElement> elems;
    elems.reserve(tokens.size());
    for (const Subtoken& t : tokens)
        elems.push_back(PatternElement::literal(t));
    return Pattern(std::move(elems));
}

Pattern Pattern::wildcard() {
    return Pattern({PatternElement::wildcard()});
}

Pattern Pattern::parse(std::string_view text) {
    std::vector<PatternElement> elems;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t bar = text.find('|', start);
        std::string_view piece =
            text.substr(start, bar == std::string_view::npos ? text.size() - start : bar - start);
        if (piece == "*")
            elems.push_back(PatternElement::wildcard());
        else
            elems.push_back(PatternElement::literal(Subtoken(std::string(piece))));
        if (bar == std::string_view::npos)
            break;
        start = bar + 1;
    }
    return from_elements(std::move(elems));
}

bool Pattern::is_concrete() const {
    for (const PatternElement& e : elements_)
        if (e.is_wildcard())
            return false;
    return true;
}

std::string Pattern::str() const {
    std::string out;
    for (const PatternElement& e : elements_) {
        if (!out.empty())
            out += '|';
        out += e.is_wildcard() ? "*" : e.token().text();
    }
    return out;
}

bool match_elements(const std::vector<PatternElement>& elements, const TokenSequence& tokens) {
    const std::size_t m = tokens.size();
    // reach[j]: the element prefix consumed so far can end having matched
    // the first j tokens.
    std::vector<char> reach(m + 1, 0), next(m + 1, 0);
    reach[0] = 1;
    for (const PatternElement& e : elements) {
        if (e.is_wildcard()) {
            next[0] = reach[0];
            for (std::size_t j = 1; j <= m; ++j)
                next[j] = next[j - 1] | reach[j];
        } else {
            next[0] = 0;
            for (std::size_t j = 1; j <= m; ++j)
                next[j] = reach[j - 1] && tokens[j - 1] == e.token();
        }
        std::swap(reach, next);
    }
    return reach[m] != 0;
}

bool matches(const Pattern& pattern, const TokenSequence& tokens) {
    return match_elements(pattern.elements(), tokens);
}

// Structural inclusion: a literal of `general` must consume the equal
// literal of `specific`; a wildcard of `general` may consume any run of
// `specific` elements, wildcards included. A wildcard of `specific` can
// never be consumed by a literal.
bool subsumes(const Pattern& general, const Pattern& specific) {
    const auto& g = general.elements();
    const auto& s = specific.elements();
    const std::size_t m = s.size();
    std::vector<char> reach(m + 1, 0), next(m + 1, 0);
    reach[0] = 1;
    for (const PatternElement& ge : g) {
        if (ge.is_wildcard()) {
            next[0] = reach[0];
            for (std::size_t j = 1; j <= m; ++j)
                next[j] = next[j - 1] | reach[j];
        } else {
            next[0] = 0;
            for (std::size_t j = 1; j <= m; ++j)
                next[j] = reach[j - 1] && s[j - 1].is_literal() && s[j - 1].token() == ge.token();
        }
        std::swap(reach, next);
    }
    return reach[m] != 0;
}

std::size_t hash_value(const Pattern& pattern) {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const PatternElement& e : pattern.elements()) {
        std::size_t eh = e.is_wildcard() ? 0x2545f4914f6cdd1dull
                                         : std::hash<std::string>{}(e.token().text());
        h ^= eh + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace epicure
