#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "android_model.hpp"
#include "swift_view.hpp"

namespace uimigrate {

enum class UnmigratedReason { ThirdParty, UnsupportedAttribute, UnsupportedLayoutPattern };

const char* to_string(UnmigratedReason reason);

struct UnmigratedRecord {
    std::string kind;
    UnmigratedReason reason = UnmigratedReason::ThirdParty;
    SourceLocation location;
    std::string substituted_with;  // placeholder name or simplified standard view
    std::string detail;            // attribute name or "approximate"
};

struct TranslationStats {
    int layouts_total = 0;
    int layouts_migrated = 0;
    int views_total = 0;
    int views_migrated = 0;
};

struct TranslationResult {
    SwiftView view;
    std::vector<UnmigratedRecord> records;
    std::vector<std::string> notes;
    TranslationStats stats;
};

class TranslatorRegistry;

class TranslationContext {
public:
    TranslationContext(const TranslatorRegistry& registry, TranslationResult& result)
        : registry_(registry), result_(result) {}

    const TranslatorRegistry& registry() const { return registry_; }

    // Dispatches one model node through the registry; never fails.
    SwiftView translate_node(const AndroidUIModel& node);

    // Translates children in order, omitting visibility="gone" nodes with a
    // report note.
    std::vector<SwiftView> translate_children(const AndroidUIModel& parent);

    void add_record(UnmigratedRecord record);
    void add_note(std::string note);

    enum class StretchAxis { Horizontal, Vertical };

    // Adjustments a container rule requests for the next translated child;
    // only that child's property translation sees them.
    struct ChildHints {
        // layout_weight > 0 stretches the child along the stack axis
        std::optional<StretchAxis> stretch;
        // the parent derives offset modifiers from the child's margins
        bool margins_consumed = false;
    };
    void set_child_hints(ChildHints hints) { pending_hints_ = hints; }
    ChildHints take_child_hints();

private:
    const TranslatorRegistry& registry_;
    TranslationResult& result_;
    ChildHints pending_hints_;
    ChildHints active_hints_;
};

bool is_visibility_gone(const AndroidUIModel& node);

using TranslateRule = std::function<SwiftView(const AndroidUIModel&, TranslationContext&)>;

// Lookup is by exact kind string; a kind matches at most one rule. Layout
// rules translate their own children; view rules are leaf rules, and any
// stray children under them are preserved in a wrapper stack.
class TranslatorRegistry {
public:
    void register_layout(std::string kind, TranslateRule rule);
    void register_view(std::string kind, TranslateRule rule);

    const TranslateRule* find_layout(std::string_view kind) const;
    const TranslateRule* find_view(std::string_view kind) const;
    bool is_layout_kind(std::string_view kind) const;

    std::vector<std::string> layout_kinds() const;
    std::vector<std::string> view_kinds() const;

    // Registry with all built-in layout and view rules.
    static TranslatorRegistry standard();

private:
    std::map<std::string, TranslateRule, std::less<>> layout_translators_;
    std::map<std::string, TranslateRule, std::less<>> view_translators_;
};

// Depth-first translation; every model node yields exactly one SwiftView
// (possibly a placeholder). Never fails on a well-formed model.
TranslationResult translate(const AndroidUIModel& model, const TranslatorRegistry& registry);

// Rule entry points, also reachable through the standard registry.
SwiftView translate_linear_layout(const AndroidUIModel& node, TranslationContext& ctx);
SwiftView translate_constraint_like_layout(const AndroidUIModel& node, TranslationContext& ctx);
SwiftView translate_view(const AndroidUIModel& node, TranslationContext& ctx);

// Generic property translation: each supported property yields 0 or 1
// modifiers; layout_width/layout_height merge into a single frame modifier;
// unsupported properties produce UnmigratedRecord(UnsupportedAttribute).
// `consumed` names properties already handled by the calling rule;
// `target_view` is recorded on attribute findings.
std::vector<Modifier> translate_properties(const AndroidUIModel& node,
                                           const std::set<std::string>& consumed,
                                           const std::string& target_view,
                                           TranslationContext& ctx);

// Property names handled by translate_properties or by built-in view rules.
const std::vector<std::string>& supported_property_names();

// Relational layout parameters interpreted by constraint-like parents and
// skipped by generic property translation.
const std::set<std::string>& constraint_attribute_names();

// Places the placeholder label text for an unsupported component.
std::string placeholder_label(std::string_view kind);

} // namespace uimigrate
