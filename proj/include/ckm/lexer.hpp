#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ckm {

enum class TokenKind { Keyword, Identifier, Punctuation, IntegerLiteral, StringLiteral };

struct Token {
    TokenKind kind;
    std::string text;
    int line = 1;   // 1-based
    int column = 1; // 1-based

    bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
    bool operator==(const Token&) const = default;
};

// Lexes the source subset. Comments (// and /* */) and whitespace are
// dropped; string literals survive as single tokens so that nothing inside
// them can ever look like a call or field access downstream.
// Throws LexError on an unterminated string/comment or an illegal character.
std::vector<Token> tokenize(std::string_view text);

// Joins token lexemes with single spaces. tokenize(render(ts)) preserves
// kinds and lexemes; used by the determinism property tests.
std::string render(const std::vector<Token>& tokens);

bool is_keyword(std::string_view word);

} // namespace ckm
