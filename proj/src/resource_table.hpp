#pragma once

#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "layout_parser.hpp"

namespace uimigrate {

enum class ResourceKind { Color, String, Dimen, Style, Drawable, Raw };

const char* to_string(ResourceKind kind);
std::optional<ResourceKind> resource_kind_from_string(std::string_view name);

struct ColorRGBA {
    double red = 0.0;
    double green = 0.0;
    double blue = 0.0;
    double alpha = 1.0;

    bool operator==(const ColorRGBA&) const = default;
};

enum class DimensionUnit { Dp, Sp, Px, None };

struct Dimension {
    double value = 0.0;
    DimensionUnit unit = DimensionUnit::None;

    bool operator==(const Dimension&) const = default;
};

struct TextValue {
    std::string value;

    bool operator==(const TextValue&) const = default;
};

struct AssetRef {
    std::string name;         // asset name referenced from generated code
    std::string source_path;  // originating file
    ResourceKind kind = ResourceKind::Drawable;

    bool operator==(const AssetRef&) const = default;
};

using StyleItemValue = std::variant<ColorRGBA, TextValue, Dimension, AssetRef>;

struct StyleSet {
    std::vector<std::pair<std::string, StyleItemValue>> items;

    bool operator==(const StyleSet&) const = default;

    const StyleItemValue* item(std::string_view name) const;
};

using ResolvedValue = std::variant<ColorRGBA, TextValue, Dimension, StyleSet, AssetRef>;

struct RawResourceEntry {
    ResourceKind kind = ResourceKind::String;
    std::string name;
    std::string raw_value;  // literal, "@kind/name" reference, or style parent
    std::vector<std::pair<std::string, std::string>> style_items;  // kind == Style
    std::string source;
};

struct ResourceKey {
    ResourceKind kind;
    std::string name;

    auto operator<=>(const ResourceKey&) const = default;
};

struct ResourceTable {
    std::map<ResourceKey, ResolvedValue> entries;
    std::vector<std::string> warnings;

    const ResolvedValue* find(ResourceKind kind, std::string_view name) const;
};

struct ValuesParseResult {
    std::vector<RawResourceEntry> entries;
    std::vector<std::string> warnings;
};

// Parses <color>, <string>, <dimen>, and <style> elements from values XML
// files; unknown value elements are skipped with a warning. Files are
// processed in lexicographic path order; a malformed file is reported as a
// warning without aborting the rest.
ValuesParseResult parse_values_files(const std::vector<std::filesystem::path>& paths);

// Registers unqualified drawable/raw files as asset entries keyed by stem.
std::vector<RawResourceEntry> index_file_resources(const ResDirectoryIndex& index);

// Follows every reference chain to a concrete value. Missing targets resolve
// to conspicuous fallbacks (colors -> opaque magenta, strings -> the literal
// reference text, dimens -> 0) with a warning; cycles are broken the same way.
ResourceTable resolve_references(const std::vector<RawResourceEntry>& entries);

// "#RGB", "#RRGGBB", or "#AARRGGBB" (case-insensitive) to channels in [0,1].
// Throws Error(InvalidArgument) on malformed input.
ColorRGBA adapt_color(std::string_view hex);

// "<number><unit>" with unit in {dp, dip, sp, px} or a bare number. dp/sp/px
// all map to unit-stripped points 1:1. Throws Error(InvalidArgument).
Dimension adapt_dimension(std::string_view raw);

// Parses "@kind/name" (known kinds only). System references ("@android:...")
// and id references are not table references.
std::optional<ResourceKey> parse_reference(std::string_view raw);

bool is_system_reference(std::string_view raw);

// Android string escapes: \n, \t, \', \", \\, \@.
std::string unescape_android_string(std::string_view raw);

enum class MigrationAction { CopyImage, ConvertVectorToSvg, TranslateLayout, CopyRawMedia, ReportOnly };

const char* to_string(MigrationAction action);

struct FileClassification {
    MigrationAction action = MigrationAction::ReportOnly;
    std::string reason;  // set when action == ReportOnly
};

// Total over indexed paths; never throws. Worst case is ReportOnly with a
// reason.
FileClassification classify_resource_file(const std::filesystem::path& path);

// Converts a <vector> drawable with <path> children to an SVG document.
// Unsupported children (<group>, <clip-path>, gradients) raise
// Error(Unsupported); the caller downgrades the file to ReportOnly.
std::string convert_vector_to_svg(std::string_view vector_xml);

} // namespace uimigrate
