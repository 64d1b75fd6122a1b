#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "layout_parser.hpp"
#include "resource_table.hpp"

namespace uimigrate {

// Raw string first: attribute values that are not adaptable stay as written
// so the translator can report them precisely.
using PropertyValue =
    std::variant<std::string, ColorRGBA, TextValue, Dimension, StyleSet, AssetRef>;

struct AndroidUIModel {
    std::string kind;
    std::vector<std::pair<std::string, PropertyValue>> properties;
    std::vector<AndroidUIModel> children;
    std::optional<std::string> node_id;
    SourceLocation location;

    const PropertyValue* property(std::string_view qualified_name) const;
    int node_count() const;
};

struct ModelBuildResult {
    AndroidUIModel model;
    std::vector<std::string> warnings;
};

// Structure-preserving map from skeleton to typed model: @kind/name references
// are replaced from the table (fallbacks with warnings when missing),
// dimension/color literals are adapted in place, style="@style/X" items are
// merged into the property list with node-local attributes overriding.
ModelBuildResult build_android_model(const UISkeletonNode& skeleton, const ResourceTable& table);

nlohmann::ordered_json model_to_json(const AndroidUIModel& model);

} // namespace uimigrate
