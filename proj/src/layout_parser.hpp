#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace uimigrate {

struct SourceLocation {
    std::string file;
    int line = 0;
    int column = 0;

    bool operator==(const SourceLocation&) const = default;

    std::string to_string() const { return file + ":" + std::to_string(line); }
};

// Raw parsed layout element: tag, namespace-qualified attributes in document
// order, children in document order.
struct UISkeletonNode {
    std::string tag;
    std::vector<std::pair<std::string, std::string>> attributes;
    std::vector<UISkeletonNode> children;
    SourceLocation location;

    bool operator==(const UISkeletonNode&) const = default;

    const std::string* attribute(std::string_view name) const;
    int node_count() const;
};

struct ResDirectoryIndex {
    std::vector<std::filesystem::path> layout_files;
    std::vector<std::filesystem::path> values_files;
    std::vector<std::filesystem::path> drawable_files;
    std::vector<std::filesystem::path> raw_files;
    std::vector<std::filesystem::path> other_files;
};

// Buckets files under res_root by parent directory name prefix
// (layout*, values*, drawable*, raw*; everything else -> other).
// Throws Error(Io) when res_root is missing or not a directory.
ResDirectoryIndex index_res_directory(const std::filesystem::path& res_root);

// Reads a whole file as bytes. Throws Error(Io) on failure.
std::string read_text_file(const std::filesystem::path& path);

// True for resource directories carrying a configuration qualifier,
// e.g. "layout-land" or "values-night".
bool has_resource_qualifier(std::string_view dir_name);

// Parses one layout document into a skeleton tree. Comments and processing
// instructions are dropped; android:/app:/tools: prefixes stay part of the
// attribute names. Throws ParseError on malformed input.
UISkeletonNode parse_layout_xml(std::string_view content, const std::string& path);

struct SkeletonBuildResult {
    UISkeletonNode root;
    std::vector<std::string> warnings;
};

// Stem -> path map of the unqualified layout files in an index, used to
// resolve <include layout="@layout/x"/> references.
std::map<std::string, std::filesystem::path>
layouts_by_name(const ResDirectoryIndex& index);

// Parses `path` and expands <include layout="@layout/x"/> elements inline by
// substituting the referenced layout's root. A <merge> root is spliced into
// the parent. Expansion depth is limited to 16; deeper nesting is an error.
// Unresolvable includes are kept as-is and reported as warnings.
SkeletonBuildResult build_skeleton(const std::filesystem::path& path,
                                   const std::map<std::string, std::filesystem::path>& layouts);

} // namespace uimigrate
