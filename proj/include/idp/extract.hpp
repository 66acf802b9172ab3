#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "idp/tokens.hpp"

namespace idp {

/// One method or constructor declaration with its owned tokens.
///
/// Tokens of methods declared inside this method's body (anonymous or local
/// classes) are excluded from `body_tokens`; the surrounding scaffolding
/// (`new Runnable() { ... }` braces, anonymous-class fields) stays with the
/// enclosing method.
struct MethodSpan {
    std::string file_path;
    // Dotted class path + ".name(arity)". Anonymous classes appear as
    // "Outer$1"; same-arity overloads get a "#2", "#3" suffix in source order.
    std::string qualified_name;
    int start_line = 0;  // first signature token (annotations included)
    int end_line = 0;    // closing '}' of the body
    std::vector<Token> signature_tokens;  // declaration start through the token before '{'
    std::vector<Token> body_tokens;       // between the outer braces, exclusive

    // Derived during extraction; consumed by metric computation.
    std::string class_name;   // simple name of the declaring class
    std::string method_name;  // declared name
    int arity = 0;
    bool is_constructor = false;
    bool returns_void = false;
    std::vector<std::string> param_names;
};

/// Extracts every method and constructor declaration, including those in
/// nested, local, inner and anonymous classes and in enum constant bodies.
/// Interface and annotation members without bodies yield no span. Lambda
/// bodies stay part of the enclosing method.
///
/// Throws ParseError on unbalanced braces. A file with no methods returns
/// an empty list.
std::vector<MethodSpan> extract_methods(std::string_view source, const std::string& file_path);
std::vector<MethodSpan> extract_methods(const std::vector<Token>& tokens,
                                        const std::string& file_path);

}  // namespace idp
