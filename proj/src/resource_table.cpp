#include "resource_table.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "error.hpp"
#include "logging.hpp"
#include "xml_parser.hpp"

namespace fs = std::filesystem;

namespace uimigrate {

const char* to_string(ResourceKind kind) {
    switch (kind) {
        case ResourceKind::Color: return "color";
        case ResourceKind::String: return "string";
        case ResourceKind::Dimen: return "dimen";
        case ResourceKind::Style: return "style";
        case ResourceKind::Drawable: return "drawable";
        case ResourceKind::Raw: return "raw";
    }
    return "?";
}

std::optional<ResourceKind> resource_kind_from_string(std::string_view name) {
    if (name == "color") return ResourceKind::Color;
    if (name == "string") return ResourceKind::String;
    if (name == "dimen") return ResourceKind::Dimen;
    if (name == "style") return ResourceKind::Style;
    if (name == "drawable") return ResourceKind::Drawable;
    if (name == "raw") return ResourceKind::Raw;
    return std::nullopt;
}

const StyleItemValue* StyleSet::item(std::string_view name) const {
    for (const auto& [item_name, value] : items) {
        if (item_name == name) return &value;
    }
    return nullptr;
}

const ResolvedValue* ResourceTable::find(ResourceKind kind, std::string_view name) const {
    auto it = entries.find(ResourceKey{kind, std::string(name)});
    return it == entries.end() ? nullptr : &it->second;
}

namespace {

std::string trim(std::string_view s) {
    size_t begin = 0, end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return std::string(s.substr(begin, end - begin));
}

} // namespace

std::optional<ResourceKey> parse_reference(std::string_view raw) {
    if (raw.size() < 3 || raw[0] != '@') return std::nullopt;
    std::string_view body = raw.substr(1);
    size_t slash = body.find('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 >= body.size()) {
        return std::nullopt;
    }
    auto kind = resource_kind_from_string(body.substr(0, slash));
    if (!kind) return std::nullopt;
    return ResourceKey{*kind, std::string(body.substr(slash + 1))};
}

bool is_system_reference(std::string_view raw) {
    return raw.starts_with("@android:");
}

std::string unescape_android_string(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
        char c = raw[i];
        if (c == '\\' && i + 1 < raw.size()) {
            char next = raw[++i];
            switch (next) {
                case 'n': out += '\n'; break;
                case 't': out += '\t'; break;
                case '\'': out += '\''; break;
                case '"': out += '"'; break;
                case '\\': out += '\\'; break;
                case '@': out += '@'; break;
                default:
                    out += '\\';
                    out += next;
            }
        } else {
            out += c;
        }
    }
    return out;
}

ColorRGBA adapt_color(std::string_view hex) {
    auto bad = [&] {
        return Error(ErrorKind::InvalidArgument,
                     "invalid color value '" + std::string(hex) + "'");
    };
    if (hex.empty() || hex[0] != '#') throw bad();
    std::string_view digits = hex.substr(1);
    if (digits.size() != 3 && digits.size() != 6 && digits.size() != 8) throw bad();

    auto nibble = [&](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw bad();
    };

    int a = 255, r = 0, g = 0, b = 0;
    if (digits.size() == 3) {
        r = nibble(digits[0]) * 17;
        g = nibble(digits[1]) * 17;
        b = nibble(digits[2]) * 17;
    } else {
        size_t i = 0;
        if (digits.size() == 8) {
            a = nibble(digits[0]) * 16 + nibble(digits[1]);
            i = 2;
        }
        r = nibble(digits[i]) * 16 + nibble(digits[i + 1]);
        g = nibble(digits[i + 2]) * 16 + nibble(digits[i + 3]);
        b = nibble(digits[i + 4]) * 16 + nibble(digits[i + 5]);
    }
    return ColorRGBA{r / 255.0, g / 255.0, b / 255.0, a / 255.0};
}

Dimension adapt_dimension(std::string_view raw) {
    std::string value = trim(raw);
    auto bad = [&] {
        return Error(ErrorKind::InvalidArgument,
                     "invalid dimension value '" + std::string(raw) + "'");
    };
    if (value.empty()) throw bad();

    DimensionUnit unit = DimensionUnit::None;
    std::string number = value;
    auto strip_suffix = [&](std::string_view suffix, DimensionUnit u) {
        if (number.size() > suffix.size() && number.ends_with(suffix)) {
            number.resize(number.size() - suffix.size());
            unit = u;
            return true;
        }
        return false;
    };
    strip_suffix("dip", DimensionUnit::Dp) || strip_suffix("dp", DimensionUnit::Dp) ||
        strip_suffix("sp", DimensionUnit::Sp) || strip_suffix("px", DimensionUnit::Px);

    double parsed = 0.0;
    const char* begin = number.data();
    const char* end = number.data() + number.size();
    auto [ptr, ec] = std::from_chars(begin, end, parsed);
    if (ec != std::errc() || ptr != end || !std::isfinite(parsed)) throw bad();
    return Dimension{parsed, unit};
}

ValuesParseResult parse_values_files(const std::vector<fs::path>& paths) {
    ValuesParseResult result;
    std::vector<fs::path> sorted = paths;
    std::sort(sorted.begin(), sorted.end(), [](const fs::path& a, const fs::path& b) {
        return a.generic_string() < b.generic_string();
    });

    for (const auto& path : sorted) {
        XmlElement root;
        try {
            root = parse_xml(read_text_file(path), path.generic_string());
        } catch (const Error& e) {
            result.warnings.push_back(std::string("values file skipped: ") + e.what());
            continue;
        }
        if (root.tag != "resources") {
            result.warnings.push_back("values file skipped: root element <" + root.tag +
                                      "> is not <resources> in " + path.generic_string());
            continue;
        }
        for (const auto& element : root.children) {
            const std::string* name = element.attribute("name");
            if (name == nullptr) {
                result.warnings.push_back("skipping <" + element.tag + "> without name in " +
                                          path.generic_string());
                continue;
            }
            RawResourceEntry entry;
            entry.name = *name;
            entry.source = path.generic_string();
            if (element.tag == "color") {
                entry.kind = ResourceKind::Color;
                entry.raw_value = trim(element.flattened_text());
            } else if (element.tag == "string") {
                entry.kind = ResourceKind::String;
                entry.raw_value = element.flattened_text();
            } else if (element.tag == "dimen") {
                entry.kind = ResourceKind::Dimen;
                entry.raw_value = trim(element.flattened_text());
            } else if (element.tag == "style") {
                entry.kind = ResourceKind::Style;
                if (const std::string* parent = element.attribute("parent")) {
                    entry.raw_value = *parent;
                } else if (size_t dot = name->rfind('.'); dot != std::string::npos) {
                    // implicit parent from a dotted style name
                    entry.raw_value = name->substr(0, dot);
                }
                for (const auto& item : element.children) {
                    if (item.tag != "item") continue;
                    const std::string* item_name = item.attribute("name");
                    if (item_name == nullptr) continue;
                    entry.style_items.emplace_back(*item_name, trim(item.flattened_text()));
                }
            } else {
                result.warnings.push_back("skipping unsupported values element <" + element.tag +
                                          " name=\"" + *name + "\"> in " + path.generic_string());
                continue;
            }
            result.entries.push_back(std::move(entry));
        }
    }
    return result;
}

std::vector<RawResourceEntry> index_file_resources(const ResDirectoryIndex& index) {
    std::vector<RawResourceEntry> entries;
    for (const auto& path : index.drawable_files) {
        if (path.parent_path().filename() != "drawable") continue;
        entries.push_back(RawResourceEntry{ResourceKind::Drawable, path.stem().string(),
                                           path.generic_string(), {}, path.generic_string()});
    }
    for (const auto& path : index.raw_files) {
        if (path.parent_path().filename() != "raw") continue;
        entries.push_back(RawResourceEntry{ResourceKind::Raw, path.stem().string(),
                                           path.generic_string(), {}, path.generic_string()});
    }
    return entries;
}

namespace {

constexpr int kMaxStyleDepth = 16;

class Resolver {
public:
    explicit Resolver(const std::vector<RawResourceEntry>& entries) {
        for (const auto& entry : entries) {
            ResourceKey key{entry.kind, entry.name};
            auto [it, inserted] = raw_.emplace(key, &entry);
            if (!inserted) {
                table_.warnings.push_back("duplicate resource " + describe(key) + ": " +
                                          entry.source + " overrides " + it->second->source);
                it->second = &entry;
            }
        }
    }

    ResourceTable run() {
        for (const auto& [key, entry] : raw_) {
            resolve(key);
        }
        return std::move(table_);
    }

private:
    enum class State { Unvisited, InProgress, Done };

    std::map<ResourceKey, const RawResourceEntry*> raw_;
    std::map<ResourceKey, State> state_;
    std::vector<ResourceKey> stack_;
    ResourceTable table_;

    static std::string describe(const ResourceKey& key) {
        return std::string(to_string(key.kind)) + "/" + key.name;
    }

    ResolvedValue fallback_for(ResourceKind kind, const std::string& literal) {
        switch (kind) {
            case ResourceKind::Color: return ColorRGBA{1.0, 0.0, 1.0, 1.0};
            case ResourceKind::String: return TextValue{literal};
            case ResourceKind::Dimen: return Dimension{0.0, DimensionUnit::None};
            case ResourceKind::Style: return StyleSet{};
            case ResourceKind::Drawable:
            case ResourceKind::Raw: return TextValue{literal};
        }
        return TextValue{literal};
    }

    const ResolvedValue& resolve(const ResourceKey& key) {
        auto done = table_.entries.find(key);
        if (done != table_.entries.end() && state_[key] == State::Done) return done->second;

        if (state_[key] == State::InProgress) {
            // Cycle: fall back every entry on it.
            auto cycle_start = std::find(stack_.begin(), stack_.end(), key);
            std::string names;
            for (auto it = cycle_start; it != stack_.end(); ++it) {
                if (!names.empty()) names += " -> ";
                names += describe(*it);
            }
            for (auto it = cycle_start; it != stack_.end(); ++it) {
                table_.entries[*it] = fallback_for(it->kind, "@" + describe(*it));
                state_[*it] = State::Done;
                table_.warnings.push_back("resource cycle broken at " + describe(*it) + " (" +
                                          names + "); fallback substituted");
            }
            return table_.entries[key];
        }

        state_[key] = State::InProgress;
        stack_.push_back(key);
        ResolvedValue value = resolve_entry(key);
        stack_.pop_back();
        // A cycle may already have assigned this key a fallback.
        if (state_[key] != State::Done) {
            table_.entries[key] = std::move(value);
            state_[key] = State::Done;
        }
        return table_.entries[key];
    }

    ResolvedValue resolve_entry(const ResourceKey& key) {
        auto it = raw_.find(key);
        if (it == raw_.end()) {
            table_.warnings.push_back("missing resource " + describe(key) +
                                      "; fallback substituted");
            return fallback_for(key.kind, "@" + describe(key));
        }
        const RawResourceEntry& entry = *it->second;

        if (entry.kind == ResourceKind::Style) return resolve_style(entry);
        if (entry.kind == ResourceKind::Drawable || entry.kind == ResourceKind::Raw) {
            if (!entry.raw_value.starts_with("@")) {
                fs::path p(entry.raw_value);
                return AssetRef{p.stem().string(), entry.raw_value, entry.kind};
            }
        }

        const std::string raw = trim(entry.raw_value);
        if (is_system_reference(raw)) {
            table_.warnings.push_back("system reference " + raw + " in " + describe(key) +
                                      " is not resolvable; fallback substituted");
            return fallback_for(key.kind, raw);
        }
        if (auto ref = parse_reference(raw)) {
            if (state_[*ref] == State::InProgress) {
                return resolve(*ref);  // reports the cycle
            }
            if (raw_.find(*ref) == raw_.end()) {
                table_.warnings.push_back("missing resource " + describe(*ref) +
                                          " referenced from " + describe(key) +
                                          "; fallback substituted");
                return fallback_for(ref->kind, raw);
            }
            return resolve(*ref);
        }
        return adapt_literal(key.kind, entry.raw_value, describe(key));
    }

    ResolvedValue adapt_literal(ResourceKind kind, const std::string& raw,
                                const std::string& context) {
        switch (kind) {
            case ResourceKind::Color:
                try {
                    return adapt_color(trim(raw));
                } catch (const Error& e) {
                    table_.warnings.push_back(std::string(e.what()) + " in " + context +
                                              "; fallback substituted");
                    return fallback_for(kind, raw);
                }
            case ResourceKind::Dimen:
                try {
                    return adapt_dimension(raw);
                } catch (const Error& e) {
                    table_.warnings.push_back(std::string(e.what()) + " in " + context +
                                              "; fallback substituted");
                    return fallback_for(kind, raw);
                }
            case ResourceKind::String:
                return TextValue{unescape_android_string(raw)};
            default:
                return TextValue{raw};
        }
    }

    ResolvedValue resolve_style(const RawResourceEntry& entry) {
        // Flatten the parent chain; child items override parent items.
        std::vector<const RawResourceEntry*> chain;
        const RawResourceEntry* current = &entry;
        std::set<std::string> seen;
        while (current != nullptr) {
            if (!seen.insert(current->name).second) {
                table_.warnings.push_back("style parent cycle at style/" + current->name +
                                          "; chain truncated");
                break;
            }
            if (static_cast<int>(chain.size()) >= kMaxStyleDepth) {
                table_.warnings.push_back("style parent chain deeper than " +
                                          std::to_string(kMaxStyleDepth) + " at style/" +
                                          entry.name + "; chain truncated");
                break;
            }
            chain.push_back(current);
            current = lookup_style_parent(*current);
        }

        StyleSet style;
        // Parents first so children override.
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            for (const auto& [item_name, item_raw] : (*it)->style_items) {
                StyleItemValue value = adapt_style_item(item_raw, (*it)->name);
                bool replaced = false;
                for (auto& [existing_name, existing_value] : style.items) {
                    if (existing_name == item_name) {
                        existing_value = value;
                        replaced = true;
                        break;
                    }
                }
                if (!replaced) style.items.emplace_back(item_name, std::move(value));
            }
        }
        return style;
    }

    const RawResourceEntry* lookup_style_parent(const RawResourceEntry& entry) {
        std::string parent = trim(entry.raw_value);
        if (parent.empty()) return nullptr;
        if (auto ref = parse_reference(parent)) {
            parent = ref->name;
        } else if (is_system_reference(parent) || parent.starts_with("@")) {
            return nullptr;  // platform parent; nothing to flatten
        }
        auto it = raw_.find(ResourceKey{ResourceKind::Style, parent});
        if (it == raw_.end()) {
            table_.warnings.push_back("missing parent style '" + parent + "' of style/" +
                                      entry.name);
            return nullptr;
        }
        return it->second;
    }

    StyleItemValue adapt_style_item(const std::string& raw, const std::string& style_name) {
        std::string value = trim(raw);
        if (is_system_reference(value)) {
            table_.warnings.push_back("system reference " + value + " in style/" + style_name +
                                      " kept as text");
            return TextValue{value};
        }
        if (auto ref = parse_reference(value)) {
            const ResolvedValue& resolved = resolve(*ref);
            if (const auto* color = std::get_if<ColorRGBA>(&resolved)) return *color;
            if (const auto* text = std::get_if<TextValue>(&resolved)) return *text;
            if (const auto* dimension = std::get_if<Dimension>(&resolved)) return *dimension;
            if (const auto* asset = std::get_if<AssetRef>(&resolved)) return *asset;
            table_.warnings.push_back("style item reference " + value + " in style/" +
                                      style_name + " resolves to a style; kept as text");
            return TextValue{value};
        }
        if (value.starts_with("#")) {
            try {
                return adapt_color(value);
            } catch (const Error&) {
                return TextValue{raw};
            }
        }
        try {
            Dimension d = adapt_dimension(value);
            if (d.unit != DimensionUnit::None) return d;
        } catch (const Error&) {
        }
        return TextValue{raw};
    }
};

} // namespace

ResourceTable resolve_references(const std::vector<RawResourceEntry>& entries) {
    return Resolver(entries).run();
}

const char* to_string(MigrationAction action) {
    switch (action) {
        case MigrationAction::CopyImage: return "copy_image";
        case MigrationAction::ConvertVectorToSvg: return "convert_vector_to_svg";
        case MigrationAction::TranslateLayout: return "translate_layout";
        case MigrationAction::CopyRawMedia: return "copy_raw_media";
        case MigrationAction::ReportOnly: return "report_only";
    }
    return "?";
}

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

const std::set<std::string>& media_extensions() {
    static const std::set<std::string> exts = {".mp3", ".wav",  ".ogg", ".mp4", ".m4a", ".aac",
                                               ".flac", ".webm", ".mkv", ".3gp", ".mid", ".amr"};
    return exts;
}

} // namespace

FileClassification classify_resource_file(const fs::path& path) {
    try {
        const std::string ext = lower(path.extension().string());
        const std::string dir = path.parent_path().filename().string();

        if (ext == ".png" || ext == ".jpg" || ext == ".jpeg" || ext == ".webp") {
            return {MigrationAction::CopyImage, ""};
        }
        if (dir.starts_with("layout") && ext == ".xml") {
            return {MigrationAction::TranslateLayout, ""};
        }
        if (ext == ".xml" && dir.starts_with("drawable")) {
            XmlElement root = parse_xml(read_text_file(path), path.generic_string());
            if (root.tag == "vector") return {MigrationAction::ConvertVectorToSvg, ""};
            return {MigrationAction::ReportOnly,
                    "unsupported drawable root <" + root.tag + ">"};
        }
        if (media_extensions().count(ext) > 0) {
            return {MigrationAction::CopyRawMedia, ""};
        }
        return {MigrationAction::ReportOnly, "no migration rule for this file type"};
    } catch (const std::exception& e) {
        return {MigrationAction::ReportOnly, e.what()};
    }
}

namespace {

std::string format_viewport_number(const std::string& raw) {
    try {
        Dimension d = adapt_dimension(raw);
        double v = d.value;
        if (v == std::floor(v) && std::abs(v) < 1e15) {
            return std::to_string(static_cast<long long>(v));
        }
        std::ostringstream out;
        out << v;
        return out.str();
    } catch (const Error&) {
        return raw;
    }
}

std::string escape_xml_attr(std::string_view value) {
    std::string out;
    for (char c : value) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

} // namespace

std::string convert_vector_to_svg(std::string_view vector_xml) {
    XmlElement root = parse_xml(vector_xml, "<vector>");
    if (root.tag != "vector") {
        throw Error(ErrorKind::Unsupported,
                    "vector conversion requires a <vector> root, got <" + root.tag + ">");
    }
    const std::string* width = root.attribute("android:viewportWidth");
    const std::string* height = root.attribute("android:viewportHeight");
    if (width == nullptr || height == nullptr) {
        throw Error(ErrorKind::Unsupported, "vector drawable without viewport dimensions");
    }

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 "
        << format_viewport_number(*width) << " " << format_viewport_number(*height) << "\">\n";
    for (const auto& child : root.children) {
        if (child.tag != "path") {
            throw Error(ErrorKind::Unsupported,
                        "unsupported vector child <" + child.tag + ">");
        }
        const std::string* data = child.attribute("android:pathData");
        if (data == nullptr) {
            throw Error(ErrorKind::Unsupported, "<path> without android:pathData");
        }
        svg << "  <path d=\"" << escape_xml_attr(*data) << "\"";
        if (const std::string* fill = child.attribute("android:fillColor")) {
            std::string color = trim(*fill);
            if (color.size() == 9 && color[0] == '#') {
                // #AARRGGBB -> fill + fill-opacity
                ColorRGBA rgba = adapt_color(color);
                std::ostringstream opacity;
                opacity << rgba.alpha;
                svg << " fill=\"#" << color.substr(3) << "\" fill-opacity=\"" << opacity.str()
                    << "\"";
            } else {
                svg << " fill=\"" << escape_xml_attr(color) << "\"";
            }
        }
        svg << "/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace uimigrate
