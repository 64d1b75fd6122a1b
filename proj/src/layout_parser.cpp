#include "layout_parser.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "error.hpp"
#include "logging.hpp"
#include "xml_parser.hpp"

namespace fs = std::filesystem;

namespace uimigrate {

const std::string* UISkeletonNode::attribute(std::string_view name) const {
    for (const auto& [attr_name, value] : attributes) {
        if (attr_name == name) return &value;
    }
    return nullptr;
}

int UISkeletonNode::node_count() const {
    int n = 1;
    for (const auto& child : children) n += child.node_count();
    return n;
}

std::string read_text_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot read file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

ResDirectoryIndex index_res_directory(const fs::path& res_root) {
    std::error_code ec;
    if (!fs::is_directory(res_root, ec)) {
        throw Error(ErrorKind::Io, "res directory not found or unreadable: " + res_root.string());
    }

    ResDirectoryIndex index;
    for (const auto& entry : fs::directory_iterator(res_root)) {
        if (!entry.is_directory()) {
            if (entry.is_regular_file()) index.other_files.push_back(entry.path());
            continue;
        }
        const std::string dir = entry.path().filename().string();
        std::vector<fs::path>* bucket = &index.other_files;
        if (dir.starts_with("layout")) {
            bucket = &index.layout_files;
        } else if (dir.starts_with("values")) {
            bucket = &index.values_files;
        } else if (dir.starts_with("drawable")) {
            bucket = &index.drawable_files;
        } else if (dir.starts_with("raw")) {
            bucket = &index.raw_files;
        }
        for (const auto& file : fs::recursive_directory_iterator(entry.path())) {
            if (file.is_regular_file()) bucket->push_back(file.path());
        }
    }

    auto by_string = [](const fs::path& a, const fs::path& b) {
        return a.generic_string() < b.generic_string();
    };
    std::sort(index.layout_files.begin(), index.layout_files.end(), by_string);
    std::sort(index.values_files.begin(), index.values_files.end(), by_string);
    std::sort(index.drawable_files.begin(), index.drawable_files.end(), by_string);
    std::sort(index.raw_files.begin(), index.raw_files.end(), by_string);
    std::sort(index.other_files.begin(), index.other_files.end(), by_string);
    return index;
}

bool has_resource_qualifier(std::string_view dir_name) {
    return dir_name.find('-') != std::string_view::npos;
}

namespace {

UISkeletonNode to_skeleton(const XmlElement& element, const std::string& path) {
    UISkeletonNode node;
    node.tag = element.tag;
    node.location = {path, element.line, element.column};
    node.attributes.reserve(element.attributes.size());
    for (const auto& attr : element.attributes) {
        node.attributes.emplace_back(attr.name, attr.value);
    }
    node.children.reserve(element.children.size());
    for (const auto& child : element.children) {
        node.children.push_back(to_skeleton(child, path));
    }
    return node;
}

constexpr int kMaxIncludeDepth = 16;

class IncludeExpander {
public:
    IncludeExpander(const std::map<std::string, fs::path>& layouts,
                    std::vector<std::string>& warnings)
        : layouts_(layouts), warnings_(warnings) {}

    UISkeletonNode load(const fs::path& path, int depth) {
        if (depth > kMaxIncludeDepth) {
            throw Error(ErrorKind::Parse,
                        "include nesting deeper than " + std::to_string(kMaxIncludeDepth) +
                            " at " + path.string());
        }
        UISkeletonNode root =
            parse_layout_xml(read_text_file(path), path.generic_string());
        expand(root, depth);
        return root;
    }

private:
    const std::map<std::string, fs::path>& layouts_;
    std::vector<std::string>& warnings_;

    void expand(UISkeletonNode& node, int depth) {
        std::vector<UISkeletonNode> expanded;
        expanded.reserve(node.children.size());
        for (auto& child : node.children) {
            if (child.tag == "include") {
                auto replacement = resolve_include(child, depth);
                if (replacement.empty()) {
                    expanded.push_back(std::move(child));
                } else {
                    for (auto& sub : replacement) expanded.push_back(std::move(sub));
                }
            } else {
                expand(child, depth);
                expanded.push_back(std::move(child));
            }
        }
        node.children = std::move(expanded);
    }

    // Returns the nodes replacing an <include>; empty when unresolvable.
    std::vector<UISkeletonNode> resolve_include(const UISkeletonNode& include_node, int depth) {
        const std::string* ref = include_node.attribute("layout");
        if (ref == nullptr) ref = include_node.attribute("android:layout");
        if (ref == nullptr || !ref->starts_with("@layout/")) {
            warnings_.push_back("unresolvable <include> at " + include_node.location.to_string() +
                                ": missing or non-@layout reference");
            return {};
        }
        const std::string name = ref->substr(std::string("@layout/").size());
        auto it = layouts_.find(name);
        if (it == layouts_.end()) {
            warnings_.push_back("unresolvable <include> at " + include_node.location.to_string() +
                                ": no layout named '" + name + "'");
            return {};
        }
        UISkeletonNode included = load(it->second, depth + 1);
        if (included.tag == "merge") {
            return std::move(included.children);
        }
        std::vector<UISkeletonNode> one;
        one.push_back(std::move(included));
        return one;
    }
};

} // namespace

UISkeletonNode parse_layout_xml(std::string_view content, const std::string& path) {
    XmlElement root = parse_xml(content, path);
    return to_skeleton(root, path);
}

std::map<std::string, fs::path> layouts_by_name(const ResDirectoryIndex& index) {
    std::map<std::string, fs::path> result;
    for (const auto& path : index.layout_files) {
        if (path.parent_path().filename() != "layout") continue;
        if (path.extension() != ".xml") continue;
        result[path.stem().string()] = path;
    }
    return result;
}

SkeletonBuildResult build_skeleton(const fs::path& path,
                                   const std::map<std::string, fs::path>& layouts) {
    SkeletonBuildResult result;
    IncludeExpander expander(layouts, result.warnings);
    result.root = expander.load(path, 0);
    return result;
}

} // namespace uimigrate
