#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "resource_table.hpp"

namespace uimigrate {

struct QuotedString {
    std::string value;

    bool operator==(const QuotedString&) const = default;
};

// A verbatim Swift expression, e.g. ".infinity" or ".constant(false)".
struct RawToken {
    std::string token;

    bool operator==(const RawToken&) const = default;
};

using SwiftLiteral = std::variant<double, QuotedString, RawToken, ColorRGBA>;

struct SwiftArg {
    std::string label;  // empty for positional arguments
    SwiftLiteral value;

    bool operator==(const SwiftArg&) const = default;
};

struct Modifier {
    std::string name;
    std::vector<SwiftArg> args;
    int rank = 0;

    bool operator==(const Modifier&) const = default;
};

// Rank is a function of the name only, from the canonical order table.
int modifier_rank(std::string_view name);
Modifier make_modifier(std::string name, std::vector<SwiftArg> args = {});

const std::vector<std::string>& canonical_modifier_order();

bool is_known_target_view(std::string_view name);

struct SwiftView {
    std::string name;
    std::vector<SwiftArg> args;
    std::vector<Modifier> modifiers;
    std::vector<SwiftView> children;
    bool needs_closure = false;   // renders a trailing { } block even when empty
    bool is_placeholder = false;  // substituted for an untranslatable component

    bool operator==(const SwiftView&) const = default;

    int leaf_count() const;
    int placeholder_count() const;
};

} // namespace uimigrate
