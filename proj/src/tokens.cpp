#include "idp/tokens.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "idp/error.hpp"

namespace idp {

namespace {

// Reserved words plus the reserved literals true/false/null. Contextual
// keywords (record, var, yield, sealed, permits) are intentionally absent:
// they lex as identifiers and are recognized positionally where needed.
constexpr std::array<std::string_view, 53> kKeywords = {
    "abstract", "assert",    "boolean",  "break",      "byte",      "case",
    "catch",    "char",      "class",    "const",      "continue",  "default",
    "do",       "double",    "else",     "enum",       "extends",   "final",
    "finally",  "float",     "for",      "goto",       "if",        "implements",
    "import",   "instanceof","int",      "interface",  "long",      "native",
    "new",      "package",   "private",  "protected",  "public",    "return",
    "short",    "static",    "strictfp", "super",      "switch",    "synchronized",
    "this",     "throw",     "throws",   "transient",  "try",       "void",
    "volatile", "while",     "true",     "false",      "null"};

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

bool is_hex_digit(char c) { return std::isxdigit(static_cast<unsigned char>(c)); }

}  // namespace

bool is_java_keyword(std::string_view word) {
    return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

bool is_primitive_type(std::string_view word) {
    return word == "boolean" || word == "byte" || word == "char" || word == "short" ||
           word == "int" || word == "long" || word == "float" || word == "double";
}

std::vector<Token> tokenize(std::string_view src, const std::string& file_path) {
    std::vector<Token> out;
    const size_t n = src.size();
    size_t i = 0;
    int line = 1;

    auto push = [&](TokenKind kind, size_t begin, size_t end, int tok_line) {
        out.push_back({kind, std::string(src.substr(begin, end - begin)), tok_line});
    };

    while (i < n) {
        char c = src[i];

        if (c == '\n') {
            ++line;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }

        // Comments.
        if (c == '/' && i + 1 < n && src[i + 1] == '/') {
            size_t begin = i;
            while (i < n && src[i] != '\n') ++i;
            push(TokenKind::Comment, begin, i, line);
            continue;
        }
        if (c == '/' && i + 1 < n && src[i + 1] == '*') {
            size_t begin = i;
            int start_line = line;
            i += 2;
            bool closed = false;
            while (i < n) {
                if (src[i] == '\n') ++line;
                if (src[i] == '*' && i + 1 < n && src[i + 1] == '/') {
                    i += 2;
                    closed = true;
                    break;
                }
                ++i;
            }
            if (!closed) throw ParseError(file_path, start_line, "unterminated block comment");
            push(TokenKind::Comment, begin, i, start_line);
            continue;
        }

        // String and char literals. A raw newline inside either is treated
        // as unterminated (text blocks are outside the supported subset).
        if (c == '"' || c == '\'') {
            size_t begin = i;
            int start_line = line;
            char quote = c;
            ++i;
            bool closed = false;
            while (i < n) {
                if (src[i] == '\\' && i + 1 < n) {
                    i += 2;
                    continue;
                }
                if (src[i] == '\n') break;
                if (src[i] == quote) {
                    ++i;
                    closed = true;
                    break;
                }
                ++i;
            }
            if (!closed) {
                throw ParseError(file_path, start_line,
                                 std::string("unterminated ") +
                                     (quote == '"' ? "string" : "char") + " literal");
            }
            push(TokenKind::StringLit, begin, i, start_line);
            continue;
        }

        // Annotations: '@' glued to the next word ("@Override", "@interface").
        if (c == '@' && i + 1 < n &&
            (is_ident_start(src[i + 1]) || src.substr(i + 1, 9) == "interface")) {
            size_t begin = i;
            ++i;
            while (i < n && is_ident_char(src[i])) ++i;
            push(TokenKind::Annotation, begin, i, line);
            continue;
        }

        if (is_ident_start(c)) {
            size_t begin = i;
            while (i < n && is_ident_char(src[i])) ++i;
            std::string_view word = src.substr(begin, i - begin);
            push(is_java_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier,
                 begin, i, line);
            continue;
        }

        if (is_digit(c)) {
            size_t begin = i;
            ++i;
            while (i < n) {
                char d = src[i];
                if (is_hex_digit(d) || d == '_' || d == 'x' || d == 'X' || d == 'l' ||
                    d == 'L' || d == 'p' || d == 'P') {
                    ++i;
                } else if (d == '.' && i + 1 < n && is_digit(src[i + 1])) {
                    ++i;
                } else if ((d == '+' || d == '-') && (src[i - 1] == 'e' || src[i - 1] == 'E') &&
                           i + 1 < n && is_digit(src[i + 1])) {
                    ++i;
                } else {
                    break;
                }
            }
            push(TokenKind::Number, begin, i, line);
            continue;
        }

        // Punctuation. Only the operators that feed metrics are multi-char.
        if (i + 1 < n) {
            std::string_view two = src.substr(i, 2);
            if (two == "&&" || two == "||" || two == "!=" || two == "->") {
                push(TokenKind::Punct, i, i + 2, line);
                i += 2;
                continue;
            }
        }
        push(TokenKind::Punct, i, i + 1, line);
        ++i;
    }

    return out;
}

}  // namespace idp
