#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace uimigrate {

struct XmlAttribute {
    std::string name;   // as written, prefix included (e.g. "android:text")
    std::string value;  // entity-expanded, attribute-whitespace normalized

    bool operator==(const XmlAttribute&) const = default;
};

struct XmlElement {
    std::string tag;
    std::vector<XmlAttribute> attributes;
    std::vector<XmlElement> children;
    std::string text;  // direct character data, entity-expanded
    int line = 0;
    int column = 0;

    bool operator==(const XmlElement&) const = default;

    const std::string* attribute(std::string_view name) const;

    // Direct text plus descendant text in document order.
    std::string flattened_text() const;

    int element_count() const;
};

// Parses a complete UTF-8 document with a single root element. Comments,
// processing instructions, and DOCTYPE declarations are dropped. Throws
// ParseError with line/column on malformed input.
XmlElement parse_xml(std::string_view content, const std::string& source_name);

} // namespace uimigrate
