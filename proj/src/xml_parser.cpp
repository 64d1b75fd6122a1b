#include "xml_parser.hpp"

#include <cctype>

#include "error.hpp"

namespace uimigrate {

const std::string* XmlElement::attribute(std::string_view name) const {
    for (const auto& attr : attributes) {
        if (attr.name == name) return &attr.value;
    }
    return nullptr;
}

std::string XmlElement::flattened_text() const {
    std::string out = text;
    for (const auto& child : children) out += child.flattened_text();
    return out;
}

int XmlElement::element_count() const {
    int n = 1;
    for (const auto& child : children) n += child.element_count();
    return n;
}

namespace {

bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':';
}

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' || c == '-' ||
           c == '.';
}

class Parser {
public:
    Parser(std::string_view text, const std::string& source) : text_(text), source_(source) {
        // UTF-8 BOM
        if (text_.size() >= 3 && text_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
    }

    XmlElement parse_document() {
        skip_misc();
        if (at_end()) fail("empty document");
        if (peek() != '<') fail("expected '<' at document root");
        XmlElement root = parse_element();
        skip_misc();
        if (!at_end()) fail("content after document root element");
        return root;
    }

private:
    std::string_view text_;
    const std::string& source_;
    size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char peek_at(size_t off) const {
        return pos_ + off < text_.size() ? text_[pos_ + off] : '\0';
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(source_, line_, column_, message);
    }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    bool consume(std::string_view expected) {
        if (text_.substr(pos_).substr(0, expected.size()) != expected) return false;
        for (size_t i = 0; i < expected.size(); ++i) advance();
        return true;
    }

    void expect(std::string_view expected, const std::string& what) {
        if (!consume(expected)) fail("expected " + what);
    }

    void skip_whitespace() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    void skip_until(std::string_view terminator, const std::string& what) {
        while (!at_end()) {
            if (text_.substr(pos_).substr(0, terminator.size()) == terminator) {
                for (size_t i = 0; i < terminator.size(); ++i) advance();
                return;
            }
            advance();
        }
        fail("unterminated " + what);
    }

    // Prolog/epilog content: whitespace, comments, PIs, DOCTYPE.
    void skip_misc() {
        for (;;) {
            skip_whitespace();
            if (at_end() || peek() != '<') return;
            if (peek_at(1) == '?') {
                advance();
                advance();
                skip_until("?>", "processing instruction");
            } else if (peek_at(1) == '!' && peek_at(2) == '-' && peek_at(3) == '-') {
                for (int i = 0; i < 4; ++i) advance();
                skip_until("-->", "comment");
            } else if (peek_at(1) == '!') {
                // DOCTYPE without internal subset support
                advance();
                skip_until(">", "declaration");
            } else {
                return;
            }
        }
    }

    std::string parse_name() {
        if (at_end() || !is_name_start(peek())) fail("expected a name");
        std::string name;
        name += advance();
        while (!at_end() && is_name_char(peek())) name += advance();
        return name;
    }

    // Decodes one entity reference; pos_ is on '&'.
    void append_entity(std::string& out) {
        int start_line = line_, start_col = column_;
        advance();  // '&'
        std::string entity;
        while (!at_end() && peek() != ';') {
            entity += advance();
            if (entity.size() > 10) break;
        }
        if (at_end() || peek() != ';') {
            throw ParseError(source_, start_line, start_col, "unterminated entity reference");
        }
        advance();  // ';'
        if (entity == "lt") {
            out += '<';
        } else if (entity == "gt") {
            out += '>';
        } else if (entity == "amp") {
            out += '&';
        } else if (entity == "apos") {
            out += '\'';
        } else if (entity == "quot") {
            out += '"';
        } else if (!entity.empty() && entity[0] == '#') {
            bool hex = entity.size() > 1 && (entity[1] == 'x' || entity[1] == 'X');
            long code = 0;
            try {
                code = std::stol(entity.substr(hex ? 2 : 1), nullptr, hex ? 16 : 10);
            } catch (const std::exception&) {
                throw ParseError(source_, start_line, start_col,
                                 "invalid character reference '&" + entity + ";'");
            }
            append_utf8(out, code);
        } else {
            throw ParseError(source_, start_line, start_col,
                             "unknown entity '&" + entity + ";'");
        }
    }

    void append_utf8(std::string& out, long code) {
        if (code < 0 || code > 0x10FFFF) fail("character reference out of range");
        if (code < 0x80) {
            out += static_cast<char>(code);
        } else if (code < 0x800) {
            out += static_cast<char>(0xC0 | (code >> 6));
            out += static_cast<char>(0x80 | (code & 0x3F));
        } else if (code < 0x10000) {
            out += static_cast<char>(0xE0 | (code >> 12));
            out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (code & 0x3F));
        } else {
            out += static_cast<char>(0xF0 | (code >> 18));
            out += static_cast<char>(0x80 | ((code >> 12) & 0x3F));
            out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (code & 0x3F));
        }
    }

    std::string parse_attribute_value() {
        if (at_end() || (peek() != '"' && peek() != '\'')) fail("expected quoted attribute value");
        char quote = advance();
        std::string value;
        for (;;) {
            if (at_end()) fail("unterminated attribute value");
            char c = peek();
            if (c == quote) {
                advance();
                return value;
            }
            if (c == '<') fail("'<' not allowed in attribute value");
            if (c == '&') {
                append_entity(value);
            } else if (c == '\t' || c == '\n' || c == '\r') {
                // XML attribute-value normalization
                advance();
                value += ' ';
            } else {
                value += advance();
            }
        }
    }

    XmlElement parse_element() {
        XmlElement element;
        element.line = line_;
        element.column = column_;
        expect("<", "'<'");
        element.tag = parse_name();

        for (;;) {
            skip_whitespace();
            if (at_end()) fail("unterminated element '" + element.tag + "'");
            if (consume("/>")) return element;
            if (consume(">")) break;
            int attr_line = line_, attr_col = column_;
            XmlAttribute attr;
            attr.name = parse_name();
            skip_whitespace();
            expect("=", "'=' after attribute name");
            skip_whitespace();
            attr.value = parse_attribute_value();
            if (element.attribute(attr.name) != nullptr) {
                throw ParseError(source_, attr_line, attr_col,
                                 "duplicate attribute '" + attr.name + "'");
            }
            element.attributes.push_back(std::move(attr));
        }

        // Content until matching close tag.
        for (;;) {
            if (at_end()) fail("missing close tag for '" + element.tag + "'");
            char c = peek();
            if (c == '<') {
                if (peek_at(1) == '/') {
                    advance();
                    advance();
                    std::string close = parse_name();
                    if (close != element.tag) {
                        fail("mismatched close tag '</" + close + ">' for '<" + element.tag + ">'");
                    }
                    skip_whitespace();
                    expect(">", "'>' after close tag");
                    return element;
                }
                if (peek_at(1) == '!' && peek_at(2) == '-' && peek_at(3) == '-') {
                    for (int i = 0; i < 4; ++i) advance();
                    skip_until("-->", "comment");
                } else if (consume("<![CDATA[")) {
                    std::string raw;
                    while (!at_end()) {
                        if (text_.substr(pos_).substr(0, 3) == "]]>") break;
                        raw += advance();
                    }
                    expect("]]>", "']]>' for CDATA section");
                    element.text += raw;
                } else if (peek_at(1) == '?') {
                    advance();
                    advance();
                    skip_until("?>", "processing instruction");
                } else {
                    element.children.push_back(parse_element());
                }
            } else if (c == '&') {
                append_entity(element.text);
            } else {
                element.text += advance();
            }
        }
    }
};

} // namespace

XmlElement parse_xml(std::string_view content, const std::string& source_name) {
    Parser parser(content, source_name);
    return parser.parse_document();
}

} // namespace uimigrate
