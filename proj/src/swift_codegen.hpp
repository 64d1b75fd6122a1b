#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "swift_view.hpp"

namespace uimigrate {

// Stable sort by canonical rank; within a frame modifier, width arguments
// precede height arguments. Idempotent; output is a permutation of the input.
std::vector<Modifier> order_modifiers(std::vector<Modifier> modifiers);

// Applies order_modifiers to a whole view tree in place.
void order_modifiers_recursive(SwiftView& view);

// Renders `Name(args) { children }` with 4-space indentation and one
// modifier per line. Expects modifiers already ordered.
std::string render_view(const SwiftView& view, int indent_level);

enum class PreviewDialect { Macro, Provider };

// File skeleton fragments; {name} and {body} are substituted when rendering.
struct CodeTemplate {
    std::string import_section;
    std::string struct_header;    // takes {name}
    std::string body_wrapper;     // takes {body}
    std::string struct_footer;
    std::string preview_section;  // takes {name}

    static CodeTemplate standard(PreviewDialect dialect = PreviewDialect::Macro);
};

struct GeneratedFile {
    std::string file_name;    // "<stem>.swift"
    std::string content;
    std::string struct_name;
    std::string source_xml;
};

GeneratedFile generate_file(const SwiftView& view, const std::string& source_xml_path,
                            PreviewDialect dialect = PreviewDialect::Macro);

GeneratedFile generate_file(const SwiftView& view, const std::string& source_xml_path,
                            const CodeTemplate& code_template);

struct LintFinding {
    int line = 0;
    std::string message;
};

// Checks balanced delimiters, known view and modifier names, canonical
// modifier order, and a non-empty body.
std::vector<LintFinding> lint_generated(const std::string& content);

// Literal formatting helpers shared with the translator.
std::string format_number(double value);
std::string format_color(const ColorRGBA& color);
std::string escape_string_literal(std::string_view text);
std::string format_literal(const SwiftLiteral& literal);
std::string pascal_case(std::string_view stem);

} // namespace uimigrate
