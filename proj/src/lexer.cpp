#include "ckm/lexer.hpp"

#include "ckm/error.hpp"

#include <array>
#include <cctype>

namespace ckm {

namespace {

constexpr std::array<std::string_view, 10> kKeywords = {
    "class", "extends", "implements", "new", "this",
    "return", "if", "else", "while", "for",
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_cont(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

} // namespace

bool is_keyword(std::string_view word) {
    for (std::string_view k : kKeywords)
        if (k == word) return true;
    return false;
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    const size_t n = text.size();

    auto advance = [&](char c) {
        if (c == '\n') { ++line; col = 1; } else { ++col; }
    };

    while (i < n) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(c); ++i;
            continue;
        }
        if (c == '/' && i + 1 < n && text[i + 1] == '/') {
            while (i < n && text[i] != '\n') { advance(text[i]); ++i; }
            continue;
        }
        if (c == '/' && i + 1 < n && text[i + 1] == '*') {
            int start_line = line, start_col = col;
            advance('/'); advance('*'); i += 2;
            bool closed = false;
            while (i < n) {
                if (text[i] == '*' && i + 1 < n && text[i + 1] == '/') {
                    advance('*'); advance('/'); i += 2;
                    closed = true;
                    break;
                }
                advance(text[i]); ++i;
            }
            if (!closed)
                throw LexError("unterminated block comment at " +
                               std::to_string(start_line) + ":" + std::to_string(start_col));
            continue;
        }
        if (c == '"') {
            int start_line = line, start_col = col;
            std::string lit = "\"";
            advance(c); ++i;
            bool closed = false;
            while (i < n) {
                char d = text[i];
                if (d == '\n') break;
                lit += d;
                advance(d); ++i;
                if (d == '\\' && i < n) { lit += text[i]; advance(text[i]); ++i; continue; }
                if (d == '"') { closed = true; break; }
            }
            if (!closed)
                throw LexError("unterminated string at " +
                               std::to_string(start_line) + ":" + std::to_string(start_col));
            out.push_back({TokenKind::StringLiteral, lit, start_line, start_col});
            continue;
        }
        if (ident_start(c)) {
            int start_line = line, start_col = col;
            std::string word;
            while (i < n && ident_cont(text[i])) { word += text[i]; advance(text[i]); ++i; }
            out.push_back({is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier,
                           word, start_line, start_col});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            int start_line = line, start_col = col;
            std::string num;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                num += text[i]; advance(text[i]); ++i;
            }
            out.push_back({TokenKind::IntegerLiteral, num, start_line, start_col});
            continue;
        }
        constexpr std::string_view punct = "{}();,.=+-*/<>!&|[]";
        if (punct.find(c) != std::string_view::npos) {
            out.push_back({TokenKind::Punctuation, std::string(1, c), line, col});
            advance(c); ++i;
            continue;
        }
        throw LexError("illegal character '" + std::string(1, c) + "' at " +
                       std::to_string(line) + ":" + std::to_string(col));
    }
    return out;
}

std::string render(const std::vector<Token>& tokens) {
    std::string out;
    for (const Token& t : tokens) {
        if (!out.empty()) out += ' ';
        out += t.text;
    }
    return out;
}

} // namespace ckm
