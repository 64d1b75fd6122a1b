#include "swift_codegen.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <set>
#include <sstream>

namespace uimigrate {

namespace {

// 0 = width group, 1 = height group, 2 = anything else (alignment).
int frame_arg_group(const SwiftArg& arg) {
    std::string lowered;
    for (char c : arg.label) lowered += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lowered.find("width") != std::string::npos) return 0;
    if (lowered.find("height") != std::string::npos) return 1;
    return 2;
}

} // namespace

std::vector<Modifier> order_modifiers(std::vector<Modifier> modifiers) {
    std::stable_sort(modifiers.begin(), modifiers.end(),
                     [](const Modifier& a, const Modifier& b) { return a.rank < b.rank; });
    for (auto& modifier : modifiers) {
        if (modifier.name == "frame") {
            std::stable_sort(modifier.args.begin(), modifier.args.end(),
                             [](const SwiftArg& a, const SwiftArg& b) {
                                 return frame_arg_group(a) < frame_arg_group(b);
                             });
        }
    }
    return modifiers;
}

void order_modifiers_recursive(SwiftView& view) {
    view.modifiers = order_modifiers(std::move(view.modifiers));
    for (auto& child : view.children) order_modifiers_recursive(child);
}

std::string format_number(double value) {
    if (std::isfinite(value) && value == std::floor(value) && std::abs(value) < 1e15) {
        char buffer[32];
        std::snprintf(buffer, sizeof(buffer), "%lld", static_cast<long long>(value));
        return buffer;
    }
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6f", value);
    std::string text = buffer;
    while (text.size() > 1 && text.back() == '0' && text[text.size() - 2] != '.') text.pop_back();
    return text;
}

namespace {

std::string format_channel(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.5f", value);
    std::string text = buffer;
    while (text.size() > 1 && text.back() == '0' && text[text.size() - 2] != '.') text.pop_back();
    return text;
}

} // namespace

std::string format_color(const ColorRGBA& color) {
    std::string out = "Color(red: " + format_channel(color.red) +
                      ", green: " + format_channel(color.green) +
                      ", blue: " + format_channel(color.blue) + ")";
    if (color.alpha < 1.0) {
        out += ".opacity(" + format_channel(color.alpha) + ")";
    }
    return out;
}

std::string escape_string_literal(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out += c;
        }
    }
    return out;
}

std::string format_literal(const SwiftLiteral& literal) {
    if (const auto* number = std::get_if<double>(&literal)) return format_number(*number);
    if (const auto* quoted = std::get_if<QuotedString>(&literal)) {
        return "\"" + escape_string_literal(quoted->value) + "\"";
    }
    if (const auto* token = std::get_if<RawToken>(&literal)) return token->token;
    if (const auto* color = std::get_if<ColorRGBA>(&literal)) return format_color(*color);
    return "";
}

namespace {

std::string format_args(const std::vector<SwiftArg>& args) {
    std::string out;
    for (size_t i = 0; i < args.size(); ++i) {
        if (i > 0) out += ", ";
        if (!args[i].label.empty()) out += args[i].label + ": ";
        out += format_literal(args[i].value);
    }
    return out;
}

void render_into(const SwiftView& view, int level, std::string& out) {
    const std::string indent(static_cast<size_t>(level) * 4, ' ');
    const bool block = view.needs_closure || !view.children.empty();

    out += indent + view.name;
    if (!view.args.empty() || !block) {
        out += "(" + format_args(view.args) + ")";
    }
    if (block) {
        out += " {\n";
        for (const auto& child : view.children) render_into(child, level + 1, out);
        out += indent + "}";
    }
    out += "\n";

    const std::string modifier_indent =
        block ? indent : std::string(static_cast<size_t>(level + 1) * 4, ' ');
    for (const auto& modifier : view.modifiers) {
        out += modifier_indent + "." + modifier.name + "(" + format_args(modifier.args) + ")\n";
    }
}

} // namespace

std::string render_view(const SwiftView& view, int indent_level) {
    std::string out;
    render_into(view, indent_level, out);
    return out;
}

std::string pascal_case(std::string_view stem) {
    std::string out;
    bool upper_next = true;
    for (char c : stem) {
        if (c == '_' || c == '-' || c == '.' || c == ' ') {
            upper_next = true;
            continue;
        }
        if (upper_next) {
            out += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            upper_next = false;
        } else {
            out += c;
        }
    }
    if (out.empty()) out = "View";
    if (std::isdigit(static_cast<unsigned char>(out[0]))) out = "View" + out;
    return out;
}

CodeTemplate CodeTemplate::standard(PreviewDialect dialect) {
    CodeTemplate t;
    t.import_section = "import SwiftUI\n\n";
    t.struct_header = "struct {name}: View {\n";
    t.body_wrapper = "    var body: some View {\n{body}    }\n";
    t.struct_footer = "}\n";
    if (dialect == PreviewDialect::Macro) {
        t.preview_section = "\n#Preview {\n    {name}()\n}\n";
    } else {
        t.preview_section =
            "\nstruct {name}_Previews: PreviewProvider {\n"
            "    static var previews: some View {\n"
            "        {name}()\n"
            "    }\n"
            "}\n";
    }
    return t;
}

namespace {

std::string substitute(std::string fragment, std::string_view placeholder,
                       std::string_view value) {
    size_t pos = 0;
    while ((pos = fragment.find(placeholder, pos)) != std::string::npos) {
        fragment.replace(pos, placeholder.size(), value);
        pos += value.size();
    }
    return fragment;
}

} // namespace

GeneratedFile generate_file(const SwiftView& view, const std::string& source_xml_path,
                            const CodeTemplate& code_template) {
    const std::string stem = std::filesystem::path(source_xml_path).stem().string();
    GeneratedFile file;
    file.source_xml = source_xml_path;
    file.struct_name = pascal_case(stem);
    file.file_name = stem + ".swift";

    std::string content = code_template.import_section;
    content += substitute(code_template.struct_header, "{name}", file.struct_name);
    content += substitute(code_template.body_wrapper, "{body}", render_view(view, 2));
    content += code_template.struct_footer;
    content += substitute(code_template.preview_section, "{name}", file.struct_name);
    file.content = std::move(content);
    return file;
}

GeneratedFile generate_file(const SwiftView& view, const std::string& source_xml_path,
                            PreviewDialect dialect) {
    return generate_file(view, source_xml_path, CodeTemplate::standard(dialect));
}

namespace {

std::string trim_view(std::string_view s) {
    size_t begin = 0, end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return std::string(s.substr(begin, end - begin));
}

bool is_identifier(const std::string& token) {
    if (token.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(token[0])) && token[0] != '_') return false;
    for (char c : token) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

} // namespace

std::vector<LintFinding> lint_generated(const std::string& content) {
    std::vector<LintFinding> findings;

    // Delimiter balance, string-aware.
    long braces = 0, parens = 0;
    {
        bool in_string = false;
        int line = 1;
        for (size_t i = 0; i < content.size(); ++i) {
            char c = content[i];
            if (c == '\n') {
                if (in_string) {
                    findings.push_back({line, "unterminated string literal"});
                    in_string = false;
                }
                ++line;
                continue;
            }
            if (in_string) {
                if (c == '\\') ++i;
                else if (c == '"') in_string = false;
                continue;
            }
            switch (c) {
                case '"': in_string = true; break;
                case '{': ++braces; break;
                case '}': --braces; break;
                case '(': ++parens; break;
                case ')': --parens; break;
                default: break;
            }
            if (braces < 0 || parens < 0) {
                findings.push_back({line, "unbalanced closing delimiter"});
                braces = std::max(braces, 0L);
                parens = std::max(parens, 0L);
            }
        }
        if (braces != 0) findings.push_back({line, "unbalanced '{'"});
        if (parens != 0) findings.push_back({line, "unbalanced '('"});
    }

    // Struct name is allowed as a constructor inside the preview section.
    std::string struct_name;
    {
        size_t pos = content.find("struct ");
        if (pos != std::string::npos) {
            size_t name_begin = pos + 7;
            size_t name_end = name_begin;
            while (name_end < content.size() &&
                   (std::isalnum(static_cast<unsigned char>(content[name_end])) ||
                    content[name_end] == '_')) {
                ++name_end;
            }
            struct_name = content.substr(name_begin, name_end - name_begin);
        } else {
            findings.push_back({1, "missing struct declaration"});
        }
    }
    if (content.find("var body: some View {") == std::string::npos) {
        findings.push_back({1, "missing body declaration"});
    }

    std::istringstream stream(content);
    std::string raw_line;
    int line_number = 0;
    int previous_modifier_rank = -1;
    bool in_modifier_run = false;
    bool saw_view = false;
    static const std::set<std::string> structural_heads = {"import", "struct", "var", "static",
                                                           "#Preview"};

    while (std::getline(stream, raw_line)) {
        ++line_number;
        std::string line = trim_view(raw_line);
        if (line.empty() || line == "}") {
            in_modifier_run = false;
            previous_modifier_rank = -1;
            continue;
        }

        if (line[0] == '.') {
            // Modifier line: .name(...)
            size_t paren = line.find('(');
            std::string name = paren == std::string::npos ? line.substr(1)
                                                          : line.substr(1, paren - 1);
            if (!is_identifier(name)) {
                findings.push_back({line_number, "malformed modifier line"});
                continue;
            }
            int rank = modifier_rank(name);
            if (rank >= static_cast<int>(canonical_modifier_order().size())) {
                findings.push_back({line_number, "unknown modifier '." + name + "'"});
            } else if (in_modifier_run && rank < previous_modifier_rank) {
                findings.push_back({line_number, "modifier '." + name +
                                                     "' out of canonical order"});
            }
            in_modifier_run = true;
            previous_modifier_rank = std::max(previous_modifier_rank, rank);
            continue;
        }

        in_modifier_run = false;
        previous_modifier_rank = -1;

        size_t head_end = 0;
        while (head_end < line.size() &&
               (std::isalnum(static_cast<unsigned char>(line[head_end])) || line[head_end] == '_' ||
                line[head_end] == '#')) {
            ++head_end;
        }
        std::string head = line.substr(0, head_end);
        if (head.empty() || structural_heads.count(head) > 0) continue;
        if (head_end < line.size() && (line[head_end] == '(' || line.substr(head_end, 2) == " {")) {
            if (head == struct_name || head == struct_name + "_Previews") continue;
            saw_view = true;
            if (!is_known_target_view(head)) {
                findings.push_back({line_number, "unknown view '" + head + "'"});
            }
        }
    }

    if (!saw_view) findings.push_back({1, "empty view body"});
    return findings;
}

} // namespace uimigrate
