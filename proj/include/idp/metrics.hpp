#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "idp/extract.hpp"

namespace idp {

/// The metric families the pipeline knows about. Numeric metrics are
/// tertile-discretized downstream, count metrics become "has-no" items,
/// category metrics are binary already. Everything downstream of the parser
/// iterates this registry instead of hardcoding the set.
struct MetricRegistry {
    std::vector<std::string> numeric_names;
    std::vector<std::string> count_names;
    std::vector<std::string> category_names;

    size_t numeric_count() const { return numeric_names.size(); }
    size_t count_count() const { return count_names.size(); }
    size_t category_count() const { return category_names.size(); }

    int numeric_index(std::string_view name) const;
    int count_index(std::string_view name) const;
    int category_index(std::string_view name) const;

    bool operator==(const MetricRegistry&) const = default;

    /// The built-in set: 5 numeric, 10 count, 6 category metrics.
    static const MetricRegistry& standard();
};

// Named positions in the standard registry.
namespace metric {
inline constexpr size_t kSloc = 0;
inline constexpr size_t kCyclomatic = 1;
inline constexpr size_t kMaxNesting = 2;
inline constexpr size_t kNumParams = 3;
inline constexpr size_t kNumStatements = 4;

inline constexpr size_t kLoops = 0;
inline constexpr size_t kConditions = 1;
inline constexpr size_t kSwitchCases = 2;
inline constexpr size_t kTryBlocks = 3;
inline constexpr size_t kReturns = 4;
inline constexpr size_t kThrows = 5;
inline constexpr size_t kCasts = 6;
inline constexpr size_t kLogicalOps = 7;
inline constexpr size_t kArithmeticOps = 8;
inline constexpr size_t kLocalVars = 9;

inline constexpr size_t kGetter = 0;
inline constexpr size_t kSetter = 1;
inline constexpr size_t kConstructor = 2;
inline constexpr size_t kEmpty = 3;
inline constexpr size_t kDelegation = 4;
inline constexpr size_t kEqualsHashCodeToString = 5;
}  // namespace metric

/// Raw per-method metric values, indexed per MetricRegistry::standard().
struct MetricVector {
    std::vector<int> numeric;
    std::vector<int> counts;
    std::vector<uint8_t> categories;  // 0/1 flags

    bool operator==(const MetricVector&) const = default;
};

/// Computes the numeric and count metrics of a span from its tokens.
///
/// Definitions (token rules over the span's owned tokens):
///  - sloc: distinct lines carrying at least one non-comment token.
///  - cyclomatic: 1 + occurrences of if/for/while/do/case/catch, '?',
///    "&&", "||" in the body.
///  - max_nesting: maximum brace depth inside the body, body start = 0.
///  - num_statements: ';' tokens at parenthesis depth 0 (for-headers
///    excluded by the depth rule).
///  - cnt_loops: for + do + standalone while (each do consumes one while).
///  - cnt_casts: "( T )" where T is one identifier or primitive type,
///    followed by an identifier, literal or '('; not counted after an
///    identifier, literal, ')', ']' or a control keyword, so calls and
///    if/while headers don't match.
///  - cnt_locals: "T name =", "T name ;" declarations, T optionally
///    carrying generic arguments and [] pairs. Multi-declarators and
///    enhanced-for variables are not matched.
///  - cnt_arith: '+', '-', '*', '/', '%' tokens ("i++" counts twice since
///    '++' lexes as two tokens; '->' never matches, it is one token).
///
/// The category flags are left zeroed; use categorize().
MetricVector compute_metrics(const MethodSpan& span);

/// Category predicates over an already-measured span:
///  - getter: zero parameters, body is exactly one return of a field or an
///    argument-free call chain.
///  - setter: void return, one assignment of a parameter to a field.
///  - constructor: declaration name equals the class name.
///  - empty: nothing in the body except braces.
///  - delegation: body is a single (optionally returned) method call.
///  - eqhash: name is equals, hashCode or toString.
std::vector<uint8_t> categorize(const MethodSpan& span, const MetricVector& metrics);

/// compute_metrics + categorize in one step.
MetricVector analyze_method(const MethodSpan& span);

}  // namespace idp
