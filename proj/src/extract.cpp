#include "idp/extract.hpp"

#include <algorithm>
#include <unordered_map>

#include "idp/error.hpp"

namespace idp {

namespace {

enum class TypeKind { Class, Interface, Enum, Record, AnnotationDecl };

bool is_modifier_word(std::string_view w) {
    return w == "public" || w == "private" || w == "protected" || w == "static" ||
           w == "final" || w == "abstract" || w == "synchronized" || w == "native" ||
           w == "strictfp" || w == "transient" || w == "volatile" || w == "default";
}

std::string simple_name(const std::string& qname) {
    auto dot = qname.rfind('.');
    return dot == std::string::npos ? qname : qname.substr(dot + 1);
}

// Token-stream structure scanner. Tracks class nesting, finds method and
// constructor bodies, and records which significant-token range each method
// owns. Ownership of individual tokens is resolved afterwards by innermost
// containment, which is what excludes anonymous/local class methods from
// their enclosing method's span.
class Scanner {
public:
    Scanner(const std::vector<Token>& toks, std::string file)
        : toks_(toks), file_(std::move(file)) {
        sig_.reserve(toks.size());
        for (size_t i = 0; i < toks.size(); ++i) {
            if (toks[i].kind != TokenKind::Comment) sig_.push_back(i);
        }
    }

    std::vector<MethodSpan> run() {
        check_brace_balance();
        while (!eof()) {
            if (at_type_decl()) {
                scan_type_decl("");
            } else {
                advance();
            }
        }
        return build_spans();
    }

private:
    struct RawMethod {
        std::string class_qname;
        std::string method_name;
        int arity = 0;
        bool ctor = false;
        bool returns_void = false;
        std::vector<std::string> param_names;
        size_t sig_begin = 0;   // first declaration token (annotations included)
        size_t body_open = 0;   // the '{'
        size_t body_close = 0;  // the matching '}'
    };

    const std::vector<Token>& toks_;
    std::string file_;
    std::vector<size_t> sig_;  // indices of non-comment tokens
    size_t pos_ = 0;
    std::vector<RawMethod> methods_;
    std::unordered_map<std::string, int> anon_counter_;

    bool eof() const { return pos_ >= sig_.size(); }
    bool have(size_t k) const { return pos_ + k < sig_.size(); }
    const Token& at(size_t p) const { return toks_[sig_[p]]; }
    const Token& cur() const { return at(pos_); }
    void advance() { ++pos_; }
    int cur_line() const { return eof() ? (toks_.empty() ? 1 : toks_.back().line) : cur().line; }

    void check_brace_balance() {
        std::vector<int> open_lines;
        for (size_t p = 0; p < sig_.size(); ++p) {
            const Token& t = at(p);
            if (t.is_punct("{")) {
                open_lines.push_back(t.line);
            } else if (t.is_punct("}")) {
                if (open_lines.empty()) {
                    throw ParseError(file_, t.line, "unbalanced braces: unexpected '}'");
                }
                open_lines.pop_back();
            }
        }
        if (!open_lines.empty()) {
            throw ParseError(file_, open_lines.back(), "unbalanced braces: '{' never closed");
        }
    }

    bool at_type_decl() const {
        if (eof()) return false;
        const Token& t = cur();
        if (t.kind == TokenKind::Keyword &&
            (t.text == "class" || t.text == "interface" || t.text == "enum")) {
            // Guard against the class literal "Foo.class".
            return pos_ == 0 || !at(pos_ - 1).is_punct(".");
        }
        if (t.kind == TokenKind::Annotation && t.text == "@interface") return true;
        // 'record' is contextual: a declaration only as "record Name (".
        if (t.kind == TokenKind::Identifier && t.text == "record" && have(2) &&
            at(pos_ + 1).kind == TokenKind::Identifier && at(pos_ + 2).is_punct("(")) {
            return true;
        }
        return false;
    }

    void scan_type_decl(const std::string& prefix) {
        const Token& t = cur();
        TypeKind kind = TypeKind::Class;
        if (t.kind == TokenKind::Annotation) {
            kind = TypeKind::AnnotationDecl;
        } else if (t.is_keyword("interface")) {
            kind = TypeKind::Interface;
        } else if (t.is_keyword("enum")) {
            kind = TypeKind::Enum;
        } else if (t.kind == TokenKind::Identifier) {
            kind = TypeKind::Record;
        }
        advance();
        std::string name = "?";
        if (!eof() && cur().kind == TokenKind::Identifier) {
            name = cur().text;
            advance();
        }
        std::string qname = prefix.empty() ? name : prefix + "." + name;

        // Skip type parameters, a record header, extends/implements/permits —
        // everything up to the body brace. Braces inside annotation arguments
        // are shielded by the paren counter.
        int paren = 0;
        while (!eof()) {
            const Token& u = cur();
            if (u.is_punct("(")) {
                ++paren;
            } else if (u.is_punct(")")) {
                --paren;
            } else if (paren == 0 && u.is_punct("{")) {
                break;
            } else if (paren == 0 && u.is_punct(";")) {
                advance();
                return;
            }
            advance();
        }
        if (eof()) return;
        scan_type_body(qname, kind);
    }

    // Cursor at '{' of a type body; consumes through the matching '}'.
    void scan_type_body(const std::string& qname, TypeKind kind) {
        int open_line = cur_line();
        advance();
        if (kind == TypeKind::Enum) scan_enum_constants(qname);
        while (true) {
            if (eof()) throw ParseError(file_, open_line, "unbalanced braces in type body");
            if (cur().is_punct("}")) {
                advance();
                return;
            }
            scan_member(qname, kind);
        }
    }

    void scan_enum_constants(const std::string& qname) {
        while (!eof()) {
            const Token& t = cur();
            if (t.is_punct(";")) {
                advance();
                return;
            }
            if (t.is_punct("}")) return;  // enum without members; caller closes
            if (t.kind == TokenKind::Annotation) {
                advance();
                if (!eof() && cur().is_punct("(")) skip_balanced("(", ")");
                continue;
            }
            if (t.kind == TokenKind::Identifier) {
                std::string constant = t.text;
                advance();
                if (!eof() && cur().is_punct("(")) skip_balanced("(", ")");
                if (!eof() && cur().is_punct("{")) {
                    scan_type_body(qname + "." + constant, TypeKind::Class);
                }
                continue;
            }
            advance();
        }
    }

    void scan_member(const std::string& qname, TypeKind kind) {
        if (cur().is_punct(";")) {
            advance();
            return;
        }
        size_t member_start = pos_;

        // Annotations and modifiers.
        while (!eof()) {
            const Token& t = cur();
            if (t.kind == TokenKind::Annotation && t.text != "@interface") {
                advance();
                if (!eof() && cur().is_punct("(")) skip_balanced("(", ")");
                continue;
            }
            if (t.kind == TokenKind::Keyword && is_modifier_word(t.text)) {
                advance();
                continue;
            }
            if (t.kind == TokenKind::Identifier && t.text == "sealed" && have(1)) {
                advance();
                continue;
            }
            break;
        }
        if (eof()) return;

        if (at_type_decl()) {
            scan_type_decl(qname);
            return;
        }
        if (cur().is_punct("{")) {
            // static or instance initializer block
            scan_code_region(qname, /*block_mode=*/true);
            return;
        }
        scan_field_or_method(qname, kind, member_start);
    }

    void scan_field_or_method(const std::string& qname, TypeKind kind, size_t member_start) {
        // Generic method type parameters precede the return type.
        if (cur().is_punct("<")) skip_angles();
        size_t decl_start = pos_;

        // Find the first structural token of the declaration:
        // '(' → method/constructor, '=' → field with initializer, ';' → field.
        int angle = 0;
        while (!eof()) {
            const Token& t = cur();
            if (t.is_punct("<")) {
                ++angle;
            } else if (t.is_punct(">")) {
                if (angle > 0) --angle;
            } else if (angle == 0 && t.is_punct("(")) {
                break;
            } else if (angle == 0 && t.is_punct("=")) {
                scan_code_region(qname, /*block_mode=*/false);
                return;
            } else if (angle == 0 && t.is_punct(";")) {
                advance();
                return;
            } else if (t.is_punct("{")) {
                // Member shape outside the supported subset (e.g. a compact
                // record constructor). Scan it as opaque code so anonymous
                // classes inside still produce spans.
                scan_code_region(qname, /*block_mode=*/true);
                return;
            } else if (t.is_punct("}")) {
                return;  // let the type-body loop see it
            }
            advance();
        }
        if (eof()) return;

        size_t paren_pos = pos_;
        if (paren_pos == member_start || at(paren_pos - 1).kind != TokenKind::Identifier) {
            skip_balanced("(", ")");
            return;
        }
        std::string method_name = at(paren_pos - 1).text;

        std::vector<std::string> param_names;
        int arity = parse_param_list(param_names);

        // throws clause / annotations / '@interface' default values.
        while (!eof()) {
            const Token& t = cur();
            if (t.is_punct(";")) {
                advance();
                return;  // bodyless: abstract, interface, native
            }
            if (t.is_punct("{")) break;
            if (t.is_punct("(")) {
                skip_balanced("(", ")");
                continue;
            }
            if (t.is_punct("}")) return;
            advance();
        }
        if (eof()) return;

        if (kind == TypeKind::AnnotationDecl) {
            // '@interface' members carry no code; a '{' here is an array default.
            skip_balanced("{", "}");
            if (!eof() && cur().is_punct(";")) advance();
            return;
        }

        RawMethod m;
        m.class_qname = qname;
        m.method_name = method_name;
        m.arity = arity;
        m.param_names = std::move(param_names);
        m.ctor = (method_name == simple_name(qname)) && (paren_pos == decl_start + 1);
        m.returns_void =
            paren_pos >= member_start + 2 && at(paren_pos - 2).is_keyword("void");
        m.sig_begin = member_start;
        m.body_open = pos_;
        size_t mi = methods_.size();
        methods_.push_back(std::move(m));

        scan_code_region(qname, /*block_mode=*/true);
        methods_[mi].body_close = pos_ - 1;
    }

    // Returns the arity; collects parameter names (last identifier of each
    // top-level parameter segment). Cursor at '('; leaves it after ')'.
    int parse_param_list(std::vector<std::string>& names) {
        int open_line = cur_line();
        int paren = 0, angle = 0;
        int commas = 0;
        bool saw_tokens = false;
        std::string last_ident;
        while (!eof()) {
            const Token& t = cur();
            if (t.is_punct("(")) {
                ++paren;
                advance();
                continue;
            }
            if (t.is_punct(")")) {
                --paren;
                advance();
                if (paren == 0) {
                    if (!last_ident.empty()) names.push_back(last_ident);
                    return saw_tokens ? commas + 1 : 0;
                }
                continue;
            }
            if (t.is_punct("<")) {
                ++angle;
            } else if (t.is_punct(">")) {
                if (angle > 0) --angle;
            } else if (paren == 1 && angle == 0 && t.is_punct(",")) {
                if (!last_ident.empty()) names.push_back(last_ident);
                last_ident.clear();
                ++commas;
                advance();
                continue;
            } else if (t.kind == TokenKind::Identifier) {
                last_ident = t.text;
            }
            saw_tokens = true;
            advance();
        }
        throw ParseError(file_, open_line, "unterminated parameter list");
    }

    // Unified scanner for executable regions: method bodies, initializer
    // blocks and field initializers. Detects anonymous class bodies and
    // nested/local type declarations and hands them to scan_type_body; plain
    // braces (blocks, lambdas, array initializers) are just depth-tracked.
    //
    // block_mode: cursor at '{', consumes through its matching '}'.
    // otherwise: field-initializer mode, consumes through the terminating ';'.
    void scan_code_region(const std::string& enclosing_class, bool block_mode) {
        int start_line = cur_line();
        int brace = 0, paren = 0;
        std::vector<size_t> pending_anon;
        if (block_mode) {
            brace = 1;
            advance();
        } else {
            advance();  // the '='
        }
        while (!eof()) {
            const Token& t = cur();
            if (!block_mode && brace == 0 && paren == 0 && t.is_punct(";")) {
                advance();
                return;
            }
            if (t.is_punct("{")) {
                auto it = std::find(pending_anon.begin(), pending_anon.end(), pos_);
                if (it != pending_anon.end()) {
                    pending_anon.erase(it);
                    std::string anon = enclosing_class + "$" +
                                       std::to_string(++anon_counter_[enclosing_class]);
                    scan_type_body(anon, TypeKind::Class);
                } else {
                    ++brace;
                    advance();
                }
                continue;
            }
            if (t.is_punct("}")) {
                --brace;
                advance();
                if (block_mode && brace == 0) return;
                continue;
            }
            if (t.is_punct("(")) {
                ++paren;
                advance();
                continue;
            }
            if (t.is_punct(")")) {
                if (paren > 0) --paren;
                advance();
                continue;
            }
            if (t.is_keyword("new")) {
                size_t anon_pos = 0;
                if (lookahead_anon_body(pos_, anon_pos)) pending_anon.push_back(anon_pos);
                advance();
                continue;
            }
            if (at_type_decl()) {
                scan_type_decl(enclosing_class);
                continue;
            }
            advance();
        }
        throw ParseError(file_, start_line,
                         block_mode ? "unbalanced braces" : "unterminated field initializer");
    }

    // From a 'new' token, decides whether the expression ends in ") {" —
    // an anonymous class body — and reports that brace's position.
    bool lookahead_anon_body(size_t p, size_t& out) const {
        ++p;
        int angle = 0;
        bool saw_type = false;
        while (p < sig_.size()) {
            const Token& t = at(p);
            if (t.is_punct("<")) {
                ++angle;
                ++p;
                continue;
            }
            if (t.is_punct(">")) {
                if (angle == 0) return false;
                --angle;
                ++p;
                continue;
            }
            if (angle > 0) {
                ++p;
                continue;
            }
            if (t.kind == TokenKind::Identifier || t.is_punct(".") ||
                t.kind == TokenKind::Annotation ||
                (t.kind == TokenKind::Keyword && is_primitive_type(t.text))) {
                saw_type = true;
                ++p;
                continue;
            }
            break;
        }
        if (!saw_type || p >= sig_.size()) return false;
        if (!at(p).is_punct("(")) return false;  // '[' means array creation
        int paren = 0;
        for (;;) {
            if (p >= sig_.size()) return false;
            if (at(p).is_punct("(")) {
                ++paren;
            } else if (at(p).is_punct(")")) {
                --paren;
                if (paren == 0) {
                    ++p;
                    break;
                }
            }
            ++p;
        }
        if (p < sig_.size() && at(p).is_punct("{")) {
            out = p;
            return true;
        }
        return false;
    }

    // Cursor at `open`; consumes through the matching `close`.
    void skip_balanced(std::string_view open, std::string_view close) {
        int open_line = cur_line();
        int depth = 0;
        while (!eof()) {
            if (cur().is_punct(open)) {
                ++depth;
            } else if (cur().is_punct(close)) {
                --depth;
                if (depth == 0) {
                    advance();
                    return;
                }
            }
            advance();
        }
        throw ParseError(file_, open_line,
                         "unterminated '" + std::string(open) + "' group");
    }

    void skip_angles() {
        int depth = 0;
        while (!eof()) {
            const Token& t = cur();
            if (t.is_punct("<")) {
                ++depth;
            } else if (t.is_punct(">")) {
                --depth;
                if (depth == 0) {
                    advance();
                    return;
                }
            } else if (t.is_punct("{") || t.is_punct(";")) {
                return;  // malformed; bail out
            }
            advance();
        }
    }

    std::vector<MethodSpan> build_spans() {
        // Innermost containment: later methods start inside earlier ones and
        // repaint their subrange.
        std::vector<int> owner(sig_.size(), -1);
        for (size_t m = 0; m < methods_.size(); ++m) {
            for (size_t i = methods_[m].sig_begin; i <= methods_[m].body_close; ++i) {
                owner[i] = static_cast<int>(m);
            }
        }

        std::unordered_map<std::string, int> name_uses;
        std::vector<MethodSpan> spans;
        spans.reserve(methods_.size());
        for (size_t m = 0; m < methods_.size(); ++m) {
            const RawMethod& r = methods_[m];
            MethodSpan s;
            s.file_path = file_;
            std::string base = r.class_qname + "." + r.method_name + "(" +
                               std::to_string(r.arity) + ")";
            int use = ++name_uses[base];
            s.qualified_name = use == 1 ? base : base + "#" + std::to_string(use);
            s.start_line = at(r.sig_begin).line;
            s.end_line = at(r.body_close).line;
            s.class_name = simple_name(r.class_qname);
            s.method_name = r.method_name;
            s.arity = r.arity;
            s.is_constructor = r.ctor;
            s.returns_void = r.returns_void;
            s.param_names = r.param_names;
            for (size_t i = r.sig_begin; i < r.body_open; ++i) {
                s.signature_tokens.push_back(at(i));
            }
            for (size_t i = r.body_open + 1; i < r.body_close; ++i) {
                if (owner[i] == static_cast<int>(m)) s.body_tokens.push_back(at(i));
            }
            spans.push_back(std::move(s));
        }
        return spans;
    }
};

}  // namespace

std::vector<MethodSpan> extract_methods(const std::vector<Token>& tokens,
                                        const std::string& file_path) {
    return Scanner(tokens, file_path).run();
}

std::vector<MethodSpan> extract_methods(std::string_view source, const std::string& file_path) {
    return extract_methods(tokenize(source, file_path), file_path);
}

}  // namespace idp
