#include "swift_view.hpp"

#include <set>

namespace uimigrate {

const std::vector<std::string>& canonical_modifier_order() {
    static const std::vector<std::string> order = {
        "fill",
        "font",
        "fontWeight",
        "italic",
        "foregroundColor",
        "multilineTextAlignment",
        "lineLimit",
        "padding",
        "frame",
        "background",
        "cornerRadius",
        "clipShape",
        "overlay",
        "border",
        "opacity",
        "offset",
    };
    return order;
}

int modifier_rank(std::string_view name) {
    const auto& order = canonical_modifier_order();
    for (size_t i = 0; i < order.size(); ++i) {
        if (order[i] == name) return static_cast<int>(i);
    }
    return static_cast<int>(order.size()) + 1000;
}

Modifier make_modifier(std::string name, std::vector<SwiftArg> args) {
    int rank = modifier_rank(name);
    return Modifier{std::move(name), std::move(args), rank};
}

bool is_known_target_view(std::string_view name) {
    static const std::set<std::string, std::less<>> views = {
        "HStack",     "VStack",     "ZStack",    "ScrollView", "Spacer",
        "Divider",    "Rectangle",  "Text",      "Image",      "Button",
        "TextField",  "SecureField", "Toggle",   "ProgressView", "Slider",
        "Color",
    };
    return views.count(name) > 0;
}

int SwiftView::leaf_count() const {
    if (children.empty()) return 1;
    int n = 0;
    for (const auto& child : children) n += child.leaf_count();
    return n;
}

int SwiftView::placeholder_count() const {
    int n = is_placeholder ? 1 : 0;
    for (const auto& child : children) n += child.placeholder_count();
    return n;
}

} // namespace uimigrate
