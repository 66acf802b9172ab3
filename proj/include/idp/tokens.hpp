#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace idp {

enum class TokenKind {
    Identifier,
    Keyword,
    Punct,
    StringLit,  // string or char literal, quotes included, contents opaque
    Number,
    Comment,    // line or block comment as a single token
    Annotation  // '@' plus the following word, e.g. "@Override"
};

struct Token {
    TokenKind kind;
    std::string text;
    int line = 0;  // 1-based line of the token's first character

    bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
    bool is_punct(std::string_view t) const { return is(TokenKind::Punct, t); }
    bool is_keyword(std::string_view t) const { return is(TokenKind::Keyword, t); }
};

/// Lexes a Java-like source text into tokens.
///
/// String/char literals and comments are single tokens, so their contents
/// never reach construct counting. Punctuation is single-character except
/// for "&&", "||", "!=" and "->", which are lexed whole because splitting
/// them would corrupt the logical-operator and cast counts ("++" and "--"
/// deliberately stay two tokens). Contextual words such as "record" and
/// "var" lex as identifiers.
///
/// Throws ParseError on an unterminated string, char or block comment.
std::vector<Token> tokenize(std::string_view source, const std::string& file_path);

bool is_java_keyword(std::string_view word);

/// Primitive type keywords (int, boolean, ...) usable as cast/declaration types.
bool is_primitive_type(std::string_view word);

}  // namespace idp
