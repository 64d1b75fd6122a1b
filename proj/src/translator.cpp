#include "translator.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

#include "error.hpp"
#include "swift_codegen.hpp"

namespace uimigrate {

const char* to_string(UnmigratedReason reason) {
    switch (reason) {
        case UnmigratedReason::ThirdParty: return "third_party";
        case UnmigratedReason::UnsupportedAttribute: return "unsupported_attribute";
        case UnmigratedReason::UnsupportedLayoutPattern: return "unsupported_layout_pattern";
    }
    return "?";
}

void TranslatorRegistry::register_layout(std::string kind, TranslateRule rule) {
    layout_translators_[std::move(kind)] = std::move(rule);
}

void TranslatorRegistry::register_view(std::string kind, TranslateRule rule) {
    view_translators_[std::move(kind)] = std::move(rule);
}

const TranslateRule* TranslatorRegistry::find_layout(std::string_view kind) const {
    auto it = layout_translators_.find(kind);
    return it == layout_translators_.end() ? nullptr : &it->second;
}

const TranslateRule* TranslatorRegistry::find_view(std::string_view kind) const {
    auto it = view_translators_.find(kind);
    return it == view_translators_.end() ? nullptr : &it->second;
}

bool TranslatorRegistry::is_layout_kind(std::string_view kind) const {
    return find_layout(kind) != nullptr;
}

std::vector<std::string> TranslatorRegistry::layout_kinds() const {
    std::vector<std::string> kinds;
    for (const auto& [kind, rule] : layout_translators_) kinds.push_back(kind);
    return kinds;
}

std::vector<std::string> TranslatorRegistry::view_kinds() const {
    std::vector<std::string> kinds;
    for (const auto& [kind, rule] : view_translators_) kinds.push_back(kind);
    return kinds;
}

namespace {

// ---- property value coercions ----------------------------------------------

std::optional<std::string> as_text(const PropertyValue& value) {
    if (const auto* text = std::get_if<TextValue>(&value)) return text->value;
    if (const auto* raw = std::get_if<std::string>(&value)) return *raw;
    if (const auto* dimension = std::get_if<Dimension>(&value)) {
        return format_number(dimension->value);
    }
    return std::nullopt;
}

std::optional<Dimension> as_dimension(const PropertyValue& value) {
    if (const auto* dimension = std::get_if<Dimension>(&value)) return *dimension;
    const std::string* raw = std::get_if<std::string>(&value);
    if (raw == nullptr) {
        if (const auto* text = std::get_if<TextValue>(&value)) raw = &text->value;
    }
    if (raw != nullptr) {
        try {
            return adapt_dimension(*raw);
        } catch (const Error&) {
        }
    }
    return std::nullopt;
}

std::optional<ColorRGBA> as_color(const PropertyValue& value) {
    if (const auto* color = std::get_if<ColorRGBA>(&value)) return *color;
    if (const auto* raw = std::get_if<std::string>(&value)) {
        try {
            return adapt_color(*raw);
        } catch (const Error&) {
        }
    }
    return std::nullopt;
}

std::optional<double> as_number(const PropertyValue& value) {
    if (auto dimension = as_dimension(value); dimension && dimension->unit == DimensionUnit::None) {
        return dimension->value;
    }
    return std::nullopt;
}

std::string text_property(const AndroidUIModel& node, std::string_view name) {
    if (const PropertyValue* value = node.property(name)) {
        if (auto text = as_text(*value)) return *text;
    }
    return "";
}

} // namespace

bool is_visibility_gone(const AndroidUIModel& node) {
    if (const PropertyValue* value = node.property("android:visibility")) {
        if (const auto* raw = std::get_if<std::string>(value)) return *raw == "gone";
    }
    return false;
}

namespace {

// ---- gravity ----------------------------------------------------------------

struct GravityParts {
    bool leading = false, trailing = false, center_h = false;
    bool top = false, bottom = false, center_v = false;
};

GravityParts parse_gravity(std::string_view raw) {
    GravityParts parts;
    size_t begin = 0;
    while (begin <= raw.size()) {
        size_t end = raw.find('|', begin);
        std::string_view token = raw.substr(begin, end == std::string_view::npos ? raw.size() - begin
                                                                                 : end - begin);
        if (token == "left" || token == "start") parts.leading = true;
        else if (token == "right" || token == "end") parts.trailing = true;
        else if (token == "top") parts.top = true;
        else if (token == "bottom") parts.bottom = true;
        else if (token == "center") parts.center_h = parts.center_v = true;
        else if (token == "center_horizontal") parts.center_h = true;
        else if (token == "center_vertical") parts.center_v = true;
        if (end == std::string_view::npos) break;
        begin = end + 1;
    }
    return parts;
}

// Alignment argument for a VStack (horizontal axis); default center omitted.
std::optional<std::string> vstack_alignment(const GravityParts& g) {
    if (g.leading) return ".leading";
    if (g.trailing) return ".trailing";
    return std::nullopt;
}

// Alignment argument for an HStack (vertical axis).
std::optional<std::string> hstack_alignment(const GravityParts& g) {
    if (g.top) return ".top";
    if (g.bottom) return ".bottom";
    return std::nullopt;
}

// Two-axis alignment for a ZStack; nearest of the nine positions.
std::optional<std::string> zstack_alignment(const GravityParts& g) {
    std::string vertical = g.top ? "top" : g.bottom ? "bottom" : "";
    std::string horizontal = g.leading ? "Leading" : g.trailing ? "Trailing" : "";
    if (vertical.empty() && horizontal.empty()) return std::nullopt;
    if (vertical.empty()) {
        return horizontal == "Leading" ? ".leading" : ".trailing";
    }
    return "." + vertical + horizontal;
}

std::optional<GravityParts> node_gravity(const AndroidUIModel& node) {
    const PropertyValue* value = node.property("android:gravity");
    if (value == nullptr) return std::nullopt;
    if (const auto* raw = std::get_if<std::string>(value)) return parse_gravity(*raw);
    return std::nullopt;
}

// ---- frame merging ----------------------------------------------------------

enum class SizeSpecKind { None, Fixed, Infinity };

struct SizeSpec {
    SizeSpecKind kind = SizeSpecKind::None;
    double value = 0.0;
};

SizeSpec size_spec(const PropertyValue* value) {
    if (value == nullptr) return {};
    if (const auto* raw = std::get_if<std::string>(value)) {
        if (*raw == "match_parent" || *raw == "fill_parent") return {SizeSpecKind::Infinity, 0.0};
        return {};
    }
    if (const auto* dimension = std::get_if<Dimension>(value)) {
        return {SizeSpecKind::Fixed, dimension->value};
    }
    return {};
}

std::optional<Modifier> frame_modifier(const SizeSpec& width, const SizeSpec& height) {
    if (width.kind == SizeSpecKind::None && height.kind == SizeSpecKind::None) {
        return std::nullopt;
    }
    std::vector<SwiftArg> args;
    const bool long_form =
        width.kind == SizeSpecKind::Infinity || height.kind == SizeSpecKind::Infinity;
    if (long_form) {
        if (width.kind == SizeSpecKind::Fixed) {
            args.push_back({"minWidth", width.value});
            args.push_back({"maxWidth", width.value});
        } else if (width.kind == SizeSpecKind::Infinity) {
            args.push_back({"maxWidth", RawToken{".infinity"}});
        }
        if (height.kind == SizeSpecKind::Fixed) {
            args.push_back({"minHeight", height.value});
            args.push_back({"maxHeight", height.value});
        } else if (height.kind == SizeSpecKind::Infinity) {
            args.push_back({"maxHeight", RawToken{".infinity"}});
        }
    } else {
        if (width.kind == SizeSpecKind::Fixed) args.push_back({"width", width.value});
        if (height.kind == SizeSpecKind::Fixed) args.push_back({"height", height.value});
    }
    return make_modifier("frame", std::move(args));
}

// ---- padding ----------------------------------------------------------------

const std::map<std::string, std::string, std::less<>>& padding_edges() {
    static const std::map<std::string, std::string, std::less<>> edges = {
        {"android:padding", ""},
        {"android:paddingLeft", ".leading"},
        {"android:paddingStart", ".leading"},
        {"android:paddingRight", ".trailing"},
        {"android:paddingEnd", ".trailing"},
        {"android:paddingTop", ".top"},
        {"android:paddingBottom", ".bottom"},
        {"android:paddingHorizontal", ".horizontal"},
        {"android:paddingVertical", ".vertical"},
        {"android:layout_margin", ""},
        {"android:layout_marginLeft", ".leading"},
        {"android:layout_marginStart", ".leading"},
        {"android:layout_marginRight", ".trailing"},
        {"android:layout_marginEnd", ".trailing"},
        {"android:layout_marginTop", ".top"},
        {"android:layout_marginBottom", ".bottom"},
        {"android:layout_marginHorizontal", ".horizontal"},
        {"android:layout_marginVertical", ".vertical"},
    };
    return edges;
}

} // namespace

// ---- context ----------------------------------------------------------------

void TranslationContext::add_record(UnmigratedRecord record) {
    result_.records.push_back(std::move(record));
}

void TranslationContext::add_note(std::string note) {
    result_.notes.push_back(std::move(note));
}

TranslationContext::ChildHints TranslationContext::take_child_hints() {
    auto hints = active_hints_;
    active_hints_ = {};
    return hints;
}

std::vector<SwiftView> TranslationContext::translate_children(const AndroidUIModel& parent) {
    std::vector<SwiftView> views;
    views.reserve(parent.children.size());
    for (const auto& child : parent.children) {
        if (is_visibility_gone(child)) {
            add_note("omitted " + child.kind + " at " + child.location.to_string() +
                     ": visibility=\"gone\"");
            continue;
        }
        views.push_back(translate_node(child));
    }
    return views;
}

SwiftView TranslationContext::translate_node(const AndroidUIModel& node) {
    const bool is_container = registry_.is_layout_kind(node.kind) || !node.children.empty();
    if (is_container) ++result_.stats.layouts_total;
    else ++result_.stats.views_total;

    // Scope the hints to this node's own property translation.
    auto saved_hints = active_hints_;
    active_hints_ = pending_hints_;
    pending_hints_ = {};

    const size_t records_before = result_.records.size();

    SwiftView view;
    if (const TranslateRule* rule = registry_.find_layout(node.kind)) {
        view = (*rule)(node, *this);
    } else {
        view = translate_view(node, *this);
    }
    active_hints_ = saved_hints;

    bool substituted = false;
    for (size_t i = records_before; i < result_.records.size(); ++i) {
        const UnmigratedRecord& record = result_.records[i];
        if (record.location == node.location &&
            (record.reason == UnmigratedReason::ThirdParty ||
             record.reason == UnmigratedReason::UnsupportedLayoutPattern)) {
            substituted = true;
            break;
        }
    }
    if (!substituted) {
        if (is_container) ++result_.stats.layouts_migrated;
        else ++result_.stats.views_migrated;
    }
    return view;
}

// ---- generic property translation --------------------------------------------

std::vector<Modifier> translate_properties(const AndroidUIModel& node,
                                           const std::set<std::string>& consumed,
                                           const std::string& target_view,
                                           TranslationContext& ctx) {
    std::vector<Modifier> modifiers;
    const TranslationContext::ChildHints hints = ctx.take_child_hints();
    bool has_padding = false;
    bool has_margin = false;

    auto record_attribute = [&](const std::string& name) {
        ctx.add_record({node.kind, UnmigratedReason::UnsupportedAttribute, node.location,
                        target_view, name});
    };

    for (const auto& [name, value] : node.properties) {
        if (consumed.count(name) > 0) continue;
        if (name == "android:layout_width" || name == "android:layout_height") continue;
        if (name == "android:layout_weight") continue;  // consumed by the linear parent
        if (name == "android:id") continue;
        // layout params interpreted by constraint-like parents
        if (constraint_attribute_names().count(name) > 0) continue;

        if (name == "android:textSize") {
            if (auto dimension = as_dimension(value)) {
                modifiers.push_back(make_modifier(
                    "font", {{"", RawToken{".system(size: " + format_number(dimension->value) +
                                           ")"}}}));
            } else {
                record_attribute(name);
            }
        } else if (name == "android:textColor") {
            if (auto color = as_color(value)) {
                modifiers.push_back(make_modifier("foregroundColor", {{"", *color}}));
            } else {
                record_attribute(name);
            }
        } else if (name == "android:textStyle") {
            auto text = as_text(value).value_or("");
            if (text.find("bold") != std::string::npos) {
                modifiers.push_back(make_modifier("fontWeight", {{"", RawToken{".bold"}}}));
            } else if (text.find("italic") != std::string::npos) {
                modifiers.push_back(make_modifier("italic"));
            } else if (text != "normal") {
                record_attribute(name);
            }
        } else if (name == "android:maxLines") {
            if (auto number = as_number(value)) {
                modifiers.push_back(make_modifier("lineLimit", {{"", *number}}));
            } else {
                record_attribute(name);
            }
        } else if (name == "android:gravity") {
            if (node.kind == "TextView" || node.kind == "EditText" || node.kind == "Button") {
                GravityParts parts = parse_gravity(as_text(value).value_or(""));
                if (parts.center_h) {
                    modifiers.push_back(
                        make_modifier("multilineTextAlignment", {{"", RawToken{".center"}}}));
                } else if (parts.trailing) {
                    modifiers.push_back(
                        make_modifier("multilineTextAlignment", {{"", RawToken{".trailing"}}}));
                }
            } else {
                record_attribute(name);
            }
        } else if (padding_edges().count(name) > 0) {
            const bool is_margin = name.find("margin") != std::string::npos;
            if (is_margin && hints.margins_consumed) continue;  // parent emits offsets
            auto dimension = as_dimension(value);
            if (!dimension) {
                record_attribute(name);
                continue;
            }
            const std::string& edge = padding_edges().find(name)->second;
            std::vector<SwiftArg> args;
            if (!edge.empty()) args.push_back({"", RawToken{edge}});
            args.push_back({"", dimension->value});
            modifiers.push_back(make_modifier("padding", std::move(args)));
            if (is_margin) has_margin = true;
            else has_padding = true;
        } else if (name == "android:visibility") {
            auto text = as_text(value).value_or("");
            if (text == "invisible" || text == "gone") {
                modifiers.push_back(make_modifier("opacity", {{"", 0.0}}));
            }
        } else if (name == "android:background") {
            if (auto color = as_color(value)) {
                modifiers.push_back(make_modifier("background", {{"", *color}}));
            } else if (const auto* asset = std::get_if<AssetRef>(&value)) {
                modifiers.push_back(make_modifier(
                    "background",
                    {{"", RawToken{"Image(\"" + escape_string_literal(asset->name) + "\")"}}}));
            } else {
                record_attribute(name);
            }
        } else if (name == "android:alpha") {
            if (auto number = as_number(value)) {
                modifiers.push_back(make_modifier("opacity", {{"", *number}}));
            } else {
                record_attribute(name);
            }
        } else if (name == "android:orientation") {
            record_attribute(name);  // meaningful only on LinearLayout, which consumes it
        } else {
            record_attribute(name);
        }
    }

    SizeSpec width = size_spec(node.property("android:layout_width"));
    SizeSpec height = size_spec(node.property("android:layout_height"));
    if (hints.stretch == TranslationContext::StretchAxis::Horizontal) {
        width = {SizeSpecKind::Infinity, 0.0};
    } else if (hints.stretch == TranslationContext::StretchAxis::Vertical) {
        height = {SizeSpecKind::Infinity, 0.0};
    }
    if (auto frame = frame_modifier(width, height)) modifiers.push_back(std::move(*frame));

    if (has_margin && has_padding) {
        ctx.add_note("margins folded into padding on " + node.kind + " at " +
                     node.location.to_string() + "; spacing semantics may differ");
    }
    return modifiers;
}

// ---- layout rules -------------------------------------------------------------

SwiftView translate_linear_layout(const AndroidUIModel& node, TranslationContext& ctx) {
    std::string orientation = text_property(node, "android:orientation");
    const bool vertical = orientation == "vertical";

    SwiftView stack;
    stack.name = vertical ? "VStack" : "HStack";
    stack.needs_closure = true;

    if (auto gravity = node_gravity(node)) {
        auto alignment = vertical ? vstack_alignment(*gravity) : hstack_alignment(*gravity);
        if (alignment) stack.args.push_back({"alignment", RawToken{*alignment}});
    }

    const auto axis = vertical ? TranslationContext::StretchAxis::Vertical
                               : TranslationContext::StretchAxis::Horizontal;
    for (const auto& child : node.children) {
        if (is_visibility_gone(child)) {
            ctx.add_note("omitted " + child.kind + " at " + child.location.to_string() +
                         ": visibility=\"gone\"");
            continue;
        }
        if (const PropertyValue* weight = child.property("android:layout_weight")) {
            if (auto number = as_number(*weight); number && *number > 0.0) {
                ctx.set_child_hints({axis, false});
            }
        }
        stack.children.push_back(ctx.translate_node(child));
    }

    stack.modifiers = translate_properties(
        node, {"android:orientation", "android:gravity"}, stack.name, ctx);
    return stack;
}

namespace {

SwiftView translate_frame_layout(const AndroidUIModel& node, TranslationContext& ctx) {
    SwiftView stack;
    stack.name = "ZStack";
    stack.needs_closure = true;
    if (auto gravity = node_gravity(node)) {
        if (auto alignment = zstack_alignment(*gravity)) {
            stack.args.push_back({"alignment", RawToken{*alignment}});
        }
    }
    stack.children = ctx.translate_children(node);
    stack.modifiers = translate_properties(node, {"android:gravity"}, stack.name, ctx);
    return stack;
}

SwiftView translate_scroll_view(const AndroidUIModel& node, TranslationContext& ctx,
                                bool horizontal) {
    SwiftView scroll;
    scroll.name = "ScrollView";
    scroll.needs_closure = true;
    if (horizontal) scroll.args.push_back({"", RawToken{".horizontal"}});
    scroll.children = ctx.translate_children(node);
    scroll.modifiers = translate_properties(node, {}, scroll.name, ctx);
    return scroll;
}

// ---- view rules ---------------------------------------------------------------

SwiftView translate_text_view(const AndroidUIModel& node, TranslationContext& ctx) {
    SwiftView view;
    view.name = "Text";
    view.args.push_back({"", QuotedString{text_property(node, "android:text")}});
    view.modifiers = translate_properties(node, {"android:text"}, view.name, ctx);
    return view;
}

SwiftView translate_button(const AndroidUIModel& node, TranslationContext& ctx) {
    SwiftView view;
    view.name = "Button";
    view.args.push_back({"", QuotedString{text_property(node, "android:text")}});
    view.needs_closure = true;  // empty action body
    view.modifiers = translate_properties(node, {"android:text"}, view.name, ctx);
    return view;
}

SwiftView translate_image_view(const AndroidUIModel& node, TranslationContext& ctx) {
    SwiftView view;
    view.name = "Image";
    const PropertyValue* src = node.property("android:src");
    if (src == nullptr) src = node.property("app:srcCompat");
    const AssetRef* asset = src == nullptr ? nullptr : std::get_if<AssetRef>(src);
    if (asset != nullptr) {
        view.args.push_back({"", QuotedString{asset->name}});
    } else {
        view.args.push_back({"systemName", QuotedString{"photo"}});
        ctx.add_note("ImageView at " + node.location.to_string() +
                     " has no resolvable source; system placeholder image used");
    }
    view.modifiers =
        translate_properties(node, {"android:src", "app:srcCompat"}, view.name, ctx);
    return view;
}

SwiftView translate_edit_text(const AndroidUIModel& node, TranslationContext& ctx) {
    SwiftView view;
    view.name = "TextField";
    view.args.push_back({"", QuotedString{text_property(node, "android:hint")}});
    view.args.push_back(
        {"text", RawToken{".constant(\"" +
                          escape_string_literal(text_property(node, "android:text")) + "\")"}});
    view.modifiers =
        translate_properties(node, {"android:hint", "android:text"}, view.name, ctx);
    return view;
}

SwiftView translate_toggle(const AndroidUIModel& node, TranslationContext& ctx) {
    SwiftView view;
    view.name = "Toggle";
    view.args.push_back({"", QuotedString{text_property(node, "android:text")}});
    const bool checked = text_property(node, "android:checked") == "true";
    view.args.push_back({"isOn", RawToken{checked ? ".constant(true)" : ".constant(false)"}});
    view.modifiers =
        translate_properties(node, {"android:text", "android:checked"}, view.name, ctx);
    return view;
}

SwiftView translate_progress_bar(const AndroidUIModel& node, TranslationContext& ctx) {
    SwiftView view;
    view.name = "ProgressView";
    view.modifiers = translate_properties(node, {}, view.name, ctx);
    return view;
}

SwiftView translate_seek_bar(const AndroidUIModel& node, TranslationContext& ctx) {
    SwiftView view;
    view.name = "Slider";
    double max = 100.0;
    double progress = 0.0;
    if (const PropertyValue* value = node.property("android:max")) {
        if (auto number = as_number(*value); number && *number > 0.0) max = *number;
    }
    if (const PropertyValue* value = node.property("android:progress")) {
        if (auto number = as_number(*value)) progress = *number;
    }
    double fraction = std::clamp(max > 0.0 ? progress / max : 0.0, 0.0, 1.0);
    view.args.push_back({"value", RawToken{".constant(" + format_number(fraction) + ")"}});
    view.modifiers =
        translate_properties(node, {"android:max", "android:progress"}, view.name, ctx);
    return view;
}

SwiftView translate_plain_view(const AndroidUIModel& node, TranslationContext& ctx) {
    // Thin fixed extent marks divider usage; everything else becomes a
    // Rectangle filled with the background color (or clear).
    auto thin = [&](std::string_view name) {
        if (const PropertyValue* value = node.property(name)) {
            if (const auto* dimension = std::get_if<Dimension>(value)) {
                return dimension->value > 0.0 && dimension->value <= 2.0;
            }
        }
        return false;
    };
    if (thin("android:layout_height") || thin("android:layout_width")) {
        SwiftView divider;
        divider.name = "Divider";
        divider.modifiers = translate_properties(node, {}, divider.name, ctx);
        return divider;
    }
    SwiftView rect;
    rect.name = "Rectangle";
    if (const PropertyValue* background = node.property("android:background")) {
        if (auto color = as_color(*background)) {
            rect.modifiers.push_back(make_modifier("fill", {{"", *color}}));
        }
    }
    if (rect.modifiers.empty()) {
        rect.modifiers.push_back(make_modifier("fill", {{"", RawToken{"Color.clear"}}}));
    }
    auto rest = translate_properties(node, {"android:background"}, rect.name, ctx);
    rect.modifiers.insert(rect.modifiers.end(), rest.begin(), rest.end());
    return rect;
}

SwiftView translate_space(const AndroidUIModel& node, TranslationContext& ctx) {
    SwiftView spacer;
    spacer.name = "Spacer";
    spacer.modifiers = translate_properties(node, {}, spacer.name, ctx);
    return spacer;
}

// ---- placeholder / simplification ------------------------------------------------

std::string class_basename(std::string_view kind) {
    size_t dot = kind.rfind('.');
    return std::string(dot == std::string_view::npos ? kind : kind.substr(dot + 1));
}

SwiftView placeholder_rule(const AndroidUIModel& node, TranslationContext& ctx) {
    const std::string base = class_basename(node.kind);
    const std::string label = placeholder_label(node.kind);

    SwiftView view;
    view.is_placeholder = true;

    if (!node.children.empty()) {
        view.name = "VStack";
        view.needs_closure = true;
        SwiftView caption;
        caption.name = "Text";
        caption.args.push_back({"", QuotedString{label}});
        view.children.push_back(std::move(caption));
        for (auto& child : ctx.translate_children(node)) view.children.push_back(std::move(child));
        view.modifiers.push_back(make_modifier("border", {{"", RawToken{"Color.red"}}}));
    } else if (base.find("AutoComplete") != std::string::npos ||
               base.find("EditText") != std::string::npos) {
        view.name = "TextField";
        view.args.push_back({"", QuotedString{text_property(node, "android:hint")}});
        view.args.push_back({"text", RawToken{".constant(\"\")"}});
    } else if (base.find("Button") != std::string::npos) {
        view.name = "Button";
        std::string title = text_property(node, "android:text");
        view.args.push_back({"", QuotedString{title.empty() ? base : title}});
        view.needs_closure = true;
    } else if (base.ends_with("TextView")) {
        view.name = "Text";
        std::string text = text_property(node, "android:text");
        view.args.push_back({"", QuotedString{text.empty() ? label : text}});
    } else if (base.find("Image") != std::string::npos) {
        view.name = "Image";
        view.args.push_back({"systemName", QuotedString{"photo"}});
    } else {
        view.name = "Text";
        view.args.push_back({"", QuotedString{label}});
        view.modifiers.push_back(make_modifier("border", {{"", RawToken{"Color.red"}}}));
    }

    ctx.add_record({node.kind, UnmigratedReason::ThirdParty, node.location, view.name, ""});
    return view;
}

} // namespace

std::string placeholder_label(std::string_view kind) {
    return "⟨Unsupported: " + std::string(kind) + "⟩";
}

SwiftView translate_view(const AndroidUIModel& node, TranslationContext& ctx) {
    const TranslateRule* rule = ctx.registry().find_view(node.kind);
    if (rule == nullptr) return placeholder_rule(node, ctx);
    SwiftView view = (*rule)(node, ctx);
    if (!node.children.empty()) {
        // Children under a leaf view are not valid Android, but no node may be
        // dropped silently; keep them visible next to the leaf.
        ctx.add_note("unexpected children under " + node.kind + " at " +
                     node.location.to_string() + " kept in a VStack");
        SwiftView wrapper;
        wrapper.name = "VStack";
        wrapper.needs_closure = true;
        wrapper.children.push_back(std::move(view));
        for (auto& child : ctx.translate_children(node)) {
            wrapper.children.push_back(std::move(child));
        }
        return wrapper;
    }
    return view;
}

TranslationResult translate(const AndroidUIModel& model, const TranslatorRegistry& registry) {
    TranslationResult result;
    TranslationContext ctx(registry, result);
    result.view = ctx.translate_node(model);
    return result;
}

TranslatorRegistry TranslatorRegistry::standard() {
    TranslatorRegistry registry;

    registry.register_layout("LinearLayout", translate_linear_layout);
    registry.register_layout("RelativeLayout", translate_constraint_like_layout);
    registry.register_layout("ConstraintLayout", translate_constraint_like_layout);
    registry.register_layout("androidx.constraintlayout.widget.ConstraintLayout",
                             translate_constraint_like_layout);
    registry.register_layout("FrameLayout", translate_frame_layout);
    registry.register_layout("ScrollView", [](const AndroidUIModel& node, TranslationContext& ctx) {
        return translate_scroll_view(node, ctx, false);
    });
    registry.register_layout("HorizontalScrollView",
                             [](const AndroidUIModel& node, TranslationContext& ctx) {
                                 return translate_scroll_view(node, ctx, true);
                             });

    registry.register_view("TextView", translate_text_view);
    registry.register_view("Button", translate_button);
    registry.register_view("ImageView", translate_image_view);
    registry.register_view("EditText", translate_edit_text);
    registry.register_view("CheckBox", translate_toggle);
    registry.register_view("Switch", translate_toggle);
    registry.register_view("ToggleButton", translate_toggle);
    registry.register_view("ProgressBar", translate_progress_bar);
    registry.register_view("SeekBar", translate_seek_bar);
    registry.register_view("View", translate_plain_view);
    registry.register_view("Space", translate_space);

    return registry;
}

const std::vector<std::string>& supported_property_names() {
    static const std::vector<std::string> names = {
        "android:alpha",
        "android:background",
        "android:checked",
        "android:gravity",
        "android:hint",
        "android:id",
        "android:layout_height",
        "android:layout_margin (+ edge variants)",
        "android:layout_weight",
        "android:layout_width",
        "android:max",
        "android:maxLines",
        "android:orientation",
        "android:padding (+ edge variants)",
        "android:progress",
        "android:src / app:srcCompat",
        "android:text",
        "android:textColor",
        "android:textSize",
        "android:textStyle",
        "android:visibility",
        "style",
        "relational constraints (android:layout_below/above/toLeftOf/toRightOf/"
        "toStartOf/toEndOf, android:layout_alignParent*, app:layout_constraint*)",
    };
    return names;
}

} // namespace uimigrate
