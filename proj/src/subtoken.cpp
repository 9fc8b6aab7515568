#include "epicure/subtoken.hpp"

#include <cctype>
#include <stdexcept>

namespace epicure {

namespace {

bool is_upper(unsigned char c) { return std::isupper(c) != 0; }
bool is_digit(unsigned char c) { return std::isdigit(c) != 0; }
bool is_alnum(unsigned char c) { return std::isalnum(c) != 0; }

}  // namespace

Subtoken::Subtoken(std::string text) : text_(std::move(text)) {
    if (text_.empty())
        throw std::invalid_argument("subtoken must be non-empty");
    for (unsigned char c : text_) {
        if (is_upper(c))
            throw std::invalid_argument("subtoken '" + text_ + "' contains an uppercase character");
        if (c == '_' || c == '|' || c == '*')
            throw std::invalid_argument("subtoken '" + text_ + "' contains a reserved character");
        if (c < 0x20 || c == 0x7f)
            throw std::invalid_argument("subtoken contains a control character");
    }
}

TokenSequence::TokenSequence(std::vector<Subtoken> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.empty())
        throw std::invalid_argument("token sequence must be non-empty");
}

std::string TokenSequence::str() const {
    std::string out;
    for (const Subtoken& t : tokens_) {
        if (!out.empty())
            out += '_';
        out += t.text();
    }
    return out;
}

TokenSequence subtokenize(std::string_view raw_name, const SubtokenizeOptions& opts) {
    std::vector<Subtoken> tokens;
    std::string piece;
    auto flush = [&] {
        if (!piece.empty()) {
            tokens.emplace_back(piece);
            piece.clear();
        }
    };

    const std::size_t n = raw_name.size();
    for (std::size_t i = 0; i < n; ++i) {
        unsigned char c = static_cast<unsigned char>(raw_name[i]);
        if (!is_alnum(c) && c < 0x80) {
            // Underscores and any other ASCII punctuation separate pieces.
            flush();
            continue;
        }
        if (!piece.empty()) {
            unsigned char prev = static_cast<unsigned char>(raw_name[i - 1]);
            bool boundary = false;
            if (is_upper(c) && !is_upper(prev)) {
                boundary = true;  // fooBar
            } else if (is_upper(prev) && is_upper(c) && i + 1 < n &&
                       std::islower(static_cast<unsigned char>(raw_name[i + 1]))) {
                boundary = true;  // HTTPServer: split before the S
            } else if (opts.split_digits && is_digit(c) != is_digit(prev)) {
                boundary = true;
            }
            if (boundary)
                flush();
        }
        piece += static_cast<char>(std::tolower(c));
    }
    flush();

    if (tokens.empty())
        throw std::invalid_argument("identifier '" + std::string(raw_name) +
                                    "' contains no subtokens");
    return TokenSequence(std::move(tokens));
}

}  // namespace epicure
