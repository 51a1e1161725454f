#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cee/error.hpp"

namespace cee::minilang {

// Byte range [begin, end) into the original source.
struct Span {
    size_t begin = 0;
    size_t end = 0;

    size_t length() const { return end - begin; }
};

enum class TokenKind {
    Keyword,
    Identifier,
    IntLiteral,
    StringLiteral,  // both "..." and char-style '.' literals
    BoolLiteral,
    Operator,
    Punct,
    EndOfInput,
};

struct Token {
    TokenKind kind = TokenKind::EndOfInput;
    std::string lexeme;
    Span span;
};

class LexError : public Error {
public:
    LexError(size_t offset, const std::string& message)
        : Error("lex", message + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

const std::vector<std::string>& keywords();
bool is_keyword(const std::string& word);

// Lexes `source` into a token stream. The stream does not include an
// end-of-input marker; empty input yields an empty vector. Comments
// (// and /* */) count as whitespace. Throws LexError on illegal
// characters or unterminated literals/comments.
std::vector<Token> tokenize(const std::string& source);

}  // namespace cee::minilang
