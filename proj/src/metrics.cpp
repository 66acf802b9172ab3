#include "idp/metrics.hpp"

#include <algorithm>

namespace idp {

namespace {

int index_of(const std::vector<std::string>& names, std::string_view name) {
    for (size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return static_cast<int>(i);
    }
    return -1;
}

bool is_control_keyword(const Token& t) {
    return t.kind == TokenKind::Keyword &&
           (t.text == "if" || t.text == "while" || t.text == "for" || t.text == "switch" ||
            t.text == "catch" || t.text == "synchronized");
}

bool is_type_start(const Token& t) {
    return t.kind == TokenKind::Identifier ||
           (t.kind == TokenKind::Keyword && is_primitive_type(t.text));
}

bool is_value_start(const Token& t) {
    return t.kind == TokenKind::Identifier || t.kind == TokenKind::Number ||
           t.kind == TokenKind::StringLit || t.is_punct("(");
}

// Matches a generic argument group starting at tokens[i] == '<'. Only shapes
// that can occur in a type are accepted, which keeps comparisons like
// "a < b" from being mistaken for generics. Returns the index after the
// closing '>' or -1.
int match_generic_group(const std::vector<Token>& b, size_t i) {
    int depth = 0;
    size_t j = i;
    while (j < b.size()) {
        const Token& t = b[j];
        if (t.is_punct("<")) {
            ++depth;
        } else if (t.is_punct(">")) {
            --depth;
            if (depth == 0) return static_cast<int>(j + 1);
        } else if (t.kind == TokenKind::Identifier || t.kind == TokenKind::Annotation ||
                   t.is_punct(".") || t.is_punct(",") || t.is_punct("?") ||
                   t.is_punct("[") || t.is_punct("]") ||
                   t.is_keyword("extends") || t.is_keyword("super") ||
                   (t.kind == TokenKind::Keyword && is_primitive_type(t.text))) {
            // plausible type-argument token
        } else {
            return -1;
        }
        ++j;
    }
    return -1;
}

}  // namespace

int MetricRegistry::numeric_index(std::string_view name) const {
    return index_of(numeric_names, name);
}
int MetricRegistry::count_index(std::string_view name) const {
    return index_of(count_names, name);
}
int MetricRegistry::category_index(std::string_view name) const {
    return index_of(category_names, name);
}

const MetricRegistry& MetricRegistry::standard() {
    static const MetricRegistry reg{
        {"sloc", "cyclomatic", "max_nesting", "num_params", "num_statements"},
        {"cnt_loops", "cnt_conditions", "cnt_switch_cases", "cnt_try", "cnt_returns",
         "cnt_throws", "cnt_casts", "cnt_logical", "cnt_arith", "cnt_locals"},
        {"cat_getter", "cat_setter", "cat_constructor", "cat_empty", "cat_delegation",
         "cat_eqhash"}};
    return reg;
}

MetricVector compute_metrics(const MethodSpan& span) {
    const MetricRegistry& reg = MetricRegistry::standard();
    MetricVector mv;
    mv.numeric.assign(reg.numeric_count(), 0);
    mv.counts.assign(reg.count_count(), 0);
    mv.categories.assign(reg.category_count(), 0);

    // sloc over signature + body tokens; lines arrive in ascending order.
    int sloc = 0;
    int last_line = -1;
    auto count_line = [&](const Token& t) {
        if (t.line != last_line) {
            ++sloc;
            last_line = t.line;
        }
    };
    for (const Token& t : span.signature_tokens) count_line(t);
    for (const Token& t : span.body_tokens) count_line(t);

    const std::vector<Token>& b = span.body_tokens;
    int cyclo = 1;
    int n_for = 0, n_while = 0, n_do = 0;
    int depth = 0, max_depth = 0;
    int paren = 0, statements = 0;

    for (size_t i = 0; i < b.size(); ++i) {
        const Token& t = b[i];
        if (t.kind == TokenKind::Keyword) {
            const std::string& w = t.text;
            if (w == "if") {
                ++cyclo;
                ++mv.counts[metric::kConditions];
            } else if (w == "for") {
                ++cyclo;
                ++n_for;
            } else if (w == "while") {
                ++cyclo;
                ++n_while;
            } else if (w == "do") {
                ++cyclo;
                ++n_do;
            } else if (w == "case") {
                ++cyclo;
                ++mv.counts[metric::kSwitchCases];
            } else if (w == "catch") {
                ++cyclo;
            } else if (w == "try") {
                ++mv.counts[metric::kTryBlocks];
            } else if (w == "return") {
                ++mv.counts[metric::kReturns];
            } else if (w == "throw") {
                ++mv.counts[metric::kThrows];
            }
        } else if (t.kind == TokenKind::Punct) {
            const std::string& p = t.text;
            if (p == "?") {
                ++cyclo;
                ++mv.counts[metric::kConditions];
            } else if (p == "&&" || p == "||") {
                ++cyclo;
                ++mv.counts[metric::kLogicalOps];
            } else if (p == "!") {
                ++mv.counts[metric::kLogicalOps];
            } else if (p == "+" || p == "-" || p == "*" || p == "/" || p == "%") {
                ++mv.counts[metric::kArithmeticOps];
            } else if (p == "{") {
                ++depth;
                max_depth = std::max(max_depth, depth);
            } else if (p == "}") {
                --depth;
            } else if (p == "(") {
                ++paren;
            } else if (p == ")") {
                --paren;
            } else if (p == ";" && paren == 0) {
                ++statements;
            }
        }

        // Cast pattern: "( T ) value" not preceded by a value or control head.
        if (t.is_punct("(") && i + 3 < b.size() &&
            (b[i + 1].kind == TokenKind::Identifier ||
             (b[i + 1].kind == TokenKind::Keyword && is_primitive_type(b[i + 1].text))) &&
            b[i + 2].is_punct(")") && is_value_start(b[i + 3])) {
            bool preceded_by_value =
                i > 0 && (b[i - 1].kind == TokenKind::Identifier ||
                          b[i - 1].kind == TokenKind::Number ||
                          b[i - 1].kind == TokenKind::StringLit || b[i - 1].is_punct(")") ||
                          b[i - 1].is_punct("]") || is_control_keyword(b[i - 1]));
            if (!preceded_by_value) ++mv.counts[metric::kCasts];
        }
    }

    // Local variable declarations: T [<...>] []* name (= | ;)
    for (size_t i = 0; i + 2 < b.size();) {
        if (!is_type_start(b[i]) || (i > 0 && b[i - 1].is_punct("."))) {
            ++i;
            continue;
        }
        size_t j = i + 1;
        if (j < b.size() && b[j].is_punct("<")) {
            int after = match_generic_group(b, j);
            if (after < 0) {
                ++i;
                continue;
            }
            j = static_cast<size_t>(after);
        }
        while (j + 1 < b.size() && b[j].is_punct("[") && b[j + 1].is_punct("]")) j += 2;
        if (j + 1 < b.size() && b[j].kind == TokenKind::Identifier &&
            (b[j + 1].is_punct("=") || b[j + 1].is_punct(";"))) {
            ++mv.counts[metric::kLocalVars];
            i = j + 1;
        } else {
            ++i;
        }
    }

    mv.counts[metric::kLoops] = n_for + n_do + std::max(0, n_while - n_do);

    mv.numeric[metric::kSloc] = sloc;
    mv.numeric[metric::kCyclomatic] = cyclo;
    mv.numeric[metric::kMaxNesting] = max_depth;
    mv.numeric[metric::kNumParams] = span.arity;
    mv.numeric[metric::kNumStatements] = statements;
    return mv;
}

namespace {

bool is_chain_start(const Token& t) {
    return t.kind == TokenKind::Identifier || t.is_keyword("this") || t.is_keyword("super");
}

// ident (. ident | ( ))* — a field access or argument-free call chain.
// Returns the index after the chain, or -1 if tokens[from] doesn't start one.
int match_bare_chain(const std::vector<Token>& b, size_t from) {
    if (from >= b.size() || !is_chain_start(b[from])) return -1;
    size_t j = from + 1;
    while (j + 1 < b.size()) {
        if (b[j].is_punct(".") && b[j + 1].kind == TokenKind::Identifier) {
            j += 2;
        } else if (b[j].is_punct("(") && b[j + 1].is_punct(")")) {
            j += 2;
        } else {
            break;
        }
    }
    return static_cast<int>(j);
}

bool matches_getter(const MethodSpan& span) {
    if (span.arity != 0) return false;
    const std::vector<Token>& b = span.body_tokens;
    if (b.size() < 3 || !b[0].is_keyword("return")) return false;
    int after = match_bare_chain(b, 1);
    return after >= 0 && static_cast<size_t>(after) == b.size() - 1 &&
           b.back().is_punct(";");
}

bool matches_setter(const MethodSpan& span) {
    if (!span.returns_void || span.param_names.empty()) return false;
    const std::vector<Token>& b = span.body_tokens;
    auto is_param = [&](const std::string& name) {
        return std::find(span.param_names.begin(), span.param_names.end(), name) !=
               span.param_names.end();
    };
    // this . field = param ;
    if (b.size() == 6 && b[0].is_keyword("this") && b[1].is_punct(".") &&
        b[2].kind == TokenKind::Identifier && b[3].is_punct("=") &&
        b[4].kind == TokenKind::Identifier && b[5].is_punct(";")) {
        return is_param(b[4].text);
    }
    // field = param ;   (lhs must not itself be a parameter)
    if (b.size() == 4 && b[0].kind == TokenKind::Identifier && b[1].is_punct("=") &&
        b[2].kind == TokenKind::Identifier && b[3].is_punct(";")) {
        return is_param(b[2].text) && !is_param(b[0].text);
    }
    return false;
}

bool matches_delegation(const MethodSpan& span) {
    const std::vector<Token>& b = span.body_tokens;
    if (b.size() < 4) return false;
    size_t j = b[0].is_keyword("return") ? 1 : 0;
    if (j >= b.size() || !is_chain_start(b[j])) return false;
    ++j;
    while (j + 1 < b.size() && b[j].is_punct(".") && b[j + 1].kind == TokenKind::Identifier) {
        j += 2;
    }
    if (j >= b.size() || !b[j].is_punct("(")) return false;
    int depth = 0;
    for (; j < b.size(); ++j) {
        if (b[j].is_punct("(")) {
            ++depth;
        } else if (b[j].is_punct(")")) {
            --depth;
            if (depth == 0) break;
        }
    }
    // The call's ')' must be followed by the final ';' and nothing else.
    return depth == 0 && j == b.size() - 2 && b.back().is_punct(";");
}

}  // namespace

std::vector<uint8_t> categorize(const MethodSpan& span, const MetricVector& metrics) {
    const MetricRegistry& reg = MetricRegistry::standard();
    std::vector<uint8_t> cat(reg.category_count(), 0);

    bool empty = std::all_of(span.body_tokens.begin(), span.body_tokens.end(),
                             [](const Token& t) {
                                 return t.is_punct("{") || t.is_punct("}");
                             });
    cat[metric::kEmpty] = empty ? 1 : 0;
    if (!empty) {
        cat[metric::kGetter] = matches_getter(span) ? 1 : 0;
        cat[metric::kSetter] = matches_setter(span) ? 1 : 0;
        cat[metric::kDelegation] = matches_delegation(span) ? 1 : 0;
    }
    cat[metric::kConstructor] = span.is_constructor ? 1 : 0;
    cat[metric::kEqualsHashCodeToString] =
        (span.method_name == "equals" || span.method_name == "hashCode" ||
         span.method_name == "toString")
            ? 1
            : 0;
    (void)metrics;
    return cat;
}

MetricVector analyze_method(const MethodSpan& span) {
    MetricVector mv = compute_metrics(span);
    mv.categories = categorize(span, mv);
    return mv;
}

}  // namespace idp
