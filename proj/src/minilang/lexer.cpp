#include "cee/minilang/token.hpp"

#include <array>
#include <cctype>

namespace cee::minilang {

namespace {

bool is_ident_start(char c) {
    return c == '_' || std::isalpha(static_cast<unsigned char>(c));
}

bool is_ident_part(char c) {
    return c == '_' || std::isalnum(static_cast<unsigned char>(c));
}

// Longest-match first.
constexpr std::array<const char*, 22> kOperators = {
    "==", "!=", "<=", ">=", "&&", "||", "++", "--",
    "+=", "-=", "*=", "/=", "%=",
    "+",  "-",  "*",  "/",  "%",  "=",  "!",  "<", ">",
};

constexpr std::array<char, 9> kPunct = {'(', ')', '{', '}', '[', ']', ',', ';', '.'};

}  // namespace

const std::vector<std::string>& keywords() {
    static const std::vector<std::string> kw = {
        "public", "int", "boolean", "String", "if", "else",
        "for",    "while", "return", "new",
    };
    return kw;
}

bool is_keyword(const std::string& word) {
    for (const auto& k : keywords()) {
        if (k == word) return true;
    }
    return false;
}

std::vector<Token> tokenize(const std::string& source) {
    std::vector<Token> tokens;
    const size_t n = source.size();
    size_t i = 0;

    auto peek = [&](size_t k = 0) -> char {
        return (i + k < n) ? source[i + k] : '\0';
    };

    while (i < n) {
        char c = source[i];

        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }

        if (c == '/' && peek(1) == '/') {
            while (i < n && source[i] != '\n') ++i;
            continue;
        }
        if (c == '/' && peek(1) == '*') {
            size_t start = i;
            i += 2;
            while (i + 1 < n && !(source[i] == '*' && source[i + 1] == '/')) ++i;
            if (i + 1 >= n) throw LexError(start, "unterminated block comment");
            i += 2;
            continue;
        }

        if (c == '"' || c == '\'') {
            const char quote = c;
            size_t start = i;
            ++i;
            while (i < n && source[i] != quote) {
                if (source[i] == '\\') {
                    if (i + 1 >= n) break;
                    ++i;
                }
                if (source[i] == '\n') {
                    throw LexError(start, "unterminated string literal");
                }
                ++i;
            }
            if (i >= n) throw LexError(start, "unterminated string literal");
            ++i;  // closing quote
            tokens.push_back({TokenKind::StringLiteral,
                              source.substr(start, i - start),
                              {start, i}});
            continue;
        }

        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = i;
            while (i < n && std::isdigit(static_cast<unsigned char>(source[i]))) ++i;
            tokens.push_back({TokenKind::IntLiteral,
                              source.substr(start, i - start),
                              {start, i}});
            continue;
        }

        if (is_ident_start(c)) {
            size_t start = i;
            while (i < n && is_ident_part(source[i])) ++i;
            std::string word = source.substr(start, i - start);
            TokenKind kind = TokenKind::Identifier;
            if (word == "true" || word == "false") {
                kind = TokenKind::BoolLiteral;
            } else if (is_keyword(word)) {
                kind = TokenKind::Keyword;
            }
            tokens.push_back({kind, std::move(word), {start, i}});
            continue;
        }

        bool matched = false;
        for (const char* op : kOperators) {
            size_t len = std::char_traits<char>::length(op);
            if (source.compare(i, len, op) == 0) {
                tokens.push_back({TokenKind::Operator, op, {i, i + len}});
                i += len;
                matched = true;
                break;
            }
        }
        if (matched) continue;

        bool punct = false;
        for (char p : kPunct) {
            if (c == p) {
                tokens.push_back({TokenKind::Punct, std::string(1, c), {i, i + 1}});
                ++i;
                punct = true;
                break;
            }
        }
        if (punct) continue;

        throw LexError(i, std::string("illegal character '") + c + "'");
    }

    return tokens;
}

}  // namespace cee::minilang
