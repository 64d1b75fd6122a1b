#include "android_model.hpp"

#include <cctype>

#include "error.hpp"

namespace uimigrate {

const PropertyValue* AndroidUIModel::property(std::string_view qualified_name) const {
    for (const auto& [name, value] : properties) {
        if (name == qualified_name) return &value;
    }
    return nullptr;
}

int AndroidUIModel::node_count() const {
    int n = 1;
    for (const auto& child : children) n += child.node_count();
    return n;
}

namespace {

bool looks_like_dimension(std::string_view value) {
    if (value.empty()) return false;
    size_t i = 0;
    if (value[i] == '-' || value[i] == '+') ++i;
    size_t digits = 0, dots = 0;
    while (i < value.size() &&
           (std::isdigit(static_cast<unsigned char>(value[i])) || value[i] == '.')) {
        if (value[i] == '.') ++dots;
        else ++digits;
        ++i;
    }
    if (digits == 0 || dots > 1) return false;
    std::string_view unit = value.substr(i);
    return unit == "dp" || unit == "dip" || unit == "sp" || unit == "px";
}

bool looks_like_color(std::string_view value) {
    if (value.size() != 4 && value.size() != 7 && value.size() != 9) return false;
    if (value[0] != '#') return false;
    for (char c : value.substr(1)) {
        if (!std::isxdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string strip_id_reference(const std::string& value) {
    if (value.starts_with("@+id/")) return value.substr(5);
    if (value.starts_with("@id/")) return value.substr(4);
    return value;
}

PropertyValue from_resolved(const ResolvedValue& value) {
    return std::visit([](const auto& v) -> PropertyValue { return v; }, value);
}

PropertyValue from_style_item(const StyleItemValue& value) {
    return std::visit([](const auto& v) -> PropertyValue { return v; }, value);
}

class ModelBuilder {
public:
    ModelBuilder(const ResourceTable& table, std::vector<std::string>& warnings)
        : table_(table), warnings_(warnings) {}

    AndroidUIModel build(const UISkeletonNode& node) {
        AndroidUIModel model;
        model.kind = node.tag;
        model.location = node.location;

        const StyleSet* style = nullptr;
        std::vector<std::pair<std::string, PropertyValue>> own;
        for (const auto& [name, raw] : node.attributes) {
            if (name.starts_with("xmlns")) continue;
            if (name.starts_with("tools:")) continue;
            if (name == "android:id") {
                model.node_id = strip_id_reference(raw);
                continue;
            }
            if (name == "style") {
                style = lookup_style(raw, node);
                continue;
            }
            own.emplace_back(name, adapt_attribute(raw, node));
        }

        if (style != nullptr) {
            for (const auto& [item_name, item_value] : style->items) {
                bool overridden = false;
                for (const auto& [own_name, own_value] : own) {
                    if (own_name == item_name) {
                        overridden = true;
                        break;
                    }
                }
                if (!overridden) {
                    model.properties.emplace_back(item_name, from_style_item(item_value));
                }
            }
        }
        for (auto& prop : own) model.properties.push_back(std::move(prop));

        model.children.reserve(node.children.size());
        for (const auto& child : node.children) model.children.push_back(build(child));
        return model;
    }

private:
    const ResourceTable& table_;
    std::vector<std::string>& warnings_;

    const StyleSet* lookup_style(const std::string& raw, const UISkeletonNode& node) {
        auto ref = parse_reference(raw);
        if (!ref || ref->kind != ResourceKind::Style) {
            warnings_.push_back("unresolvable style reference '" + raw + "' at " +
                                node.location.to_string());
            return nullptr;
        }
        const ResolvedValue* value = table_.find(ResourceKind::Style, ref->name);
        if (value == nullptr) {
            warnings_.push_back("missing style '" + raw + "' at " + node.location.to_string());
            return nullptr;
        }
        return std::get_if<StyleSet>(value);
    }

    PropertyValue fallback_for(const ResourceKey& key, const std::string& raw) {
        switch (key.kind) {
            case ResourceKind::Color: return ColorRGBA{1.0, 0.0, 1.0, 1.0};
            case ResourceKind::String: return TextValue{raw};
            case ResourceKind::Dimen: return Dimension{0.0, DimensionUnit::None};
            default: return raw;
        }
    }

    PropertyValue adapt_attribute(const std::string& raw, const UISkeletonNode& node) {
        if (raw.starts_with("@+id/") || raw.starts_with("@id/")) return raw;
        if (raw.starts_with("?")) return raw;  // theme attributes are out of scope
        if (is_system_reference(raw)) {
            warnings_.push_back("system reference '" + raw + "' at " +
                                node.location.to_string() + " kept as raw value");
            return raw;
        }
        if (auto ref = parse_reference(raw)) {
            const ResolvedValue* value = table_.find(ref->kind, ref->name);
            if (value == nullptr) {
                warnings_.push_back("unresolved reference '" + raw + "' at " +
                                    node.location.to_string() + "; fallback substituted");
                return fallback_for(*ref, raw);
            }
            return from_resolved(*value);
        }
        if (raw.starts_with("@")) return raw;
        if (looks_like_dimension(raw)) {
            Dimension d = adapt_dimension(raw);
            if (d.unit == DimensionUnit::Px) {
                warnings_.push_back("px dimension '" + raw + "' at " +
                                    node.location.to_string() + " treated as points 1:1");
            }
            return d;
        }
        if (looks_like_color(raw)) {
            try {
                return adapt_color(raw);
            } catch (const Error&) {
                return raw;
            }
        }
        return raw;
    }
};

} // namespace

ModelBuildResult build_android_model(const UISkeletonNode& skeleton, const ResourceTable& table) {
    ModelBuildResult result;
    ModelBuilder builder(table, result.warnings);
    result.model = builder.build(skeleton);
    return result;
}

namespace {

nlohmann::ordered_json value_to_json(const PropertyValue& value) {
    nlohmann::ordered_json j;
    if (const auto* raw = std::get_if<std::string>(&value)) {
        j["type"] = "raw";
        j["value"] = *raw;
    } else if (const auto* color = std::get_if<ColorRGBA>(&value)) {
        j["type"] = "color";
        j["red"] = color->red;
        j["green"] = color->green;
        j["blue"] = color->blue;
        j["alpha"] = color->alpha;
    } else if (const auto* text = std::get_if<TextValue>(&value)) {
        j["type"] = "text";
        j["value"] = text->value;
    } else if (const auto* dimension = std::get_if<Dimension>(&value)) {
        j["type"] = "dimension";
        j["value"] = dimension->value;
        switch (dimension->unit) {
            case DimensionUnit::Dp: j["unit"] = "dp"; break;
            case DimensionUnit::Sp: j["unit"] = "sp"; break;
            case DimensionUnit::Px: j["unit"] = "px"; break;
            case DimensionUnit::None: j["unit"] = "none"; break;
        }
    } else if (const auto* style = std::get_if<StyleSet>(&value)) {
        j["type"] = "style";
        auto items = nlohmann::ordered_json::array();
        for (const auto& [name, item] : style->items) {
            nlohmann::ordered_json entry = value_to_json(from_style_item(item));
            entry["name"] = name;
            items.push_back(std::move(entry));
        }
        j["items"] = std::move(items);
    } else if (const auto* asset = std::get_if<AssetRef>(&value)) {
        j["type"] = "asset";
        j["name"] = asset->name;
        j["source"] = asset->source_path;
    }
    return j;
}

} // namespace

nlohmann::ordered_json model_to_json(const AndroidUIModel& model) {
    nlohmann::ordered_json j;
    j["kind"] = model.kind;
    if (model.node_id) j["id"] = *model.node_id;
    j["location"] = model.location.to_string();
    auto properties = nlohmann::ordered_json::array();
    for (const auto& [name, value] : model.properties) {
        nlohmann::ordered_json entry = value_to_json(value);
        entry["name"] = name;
        properties.push_back(std::move(entry));
    }
    j["properties"] = std::move(properties);
    auto children = nlohmann::ordered_json::array();
    for (const auto& child : model.children) children.push_back(model_to_json(child));
    j["children"] = std::move(children);
    return j;
}

} // namespace uimigrate
