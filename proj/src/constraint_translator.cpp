#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "swift_codegen.hpp"
#include "translator.hpp"

namespace uimigrate {

namespace {

// Relational attributes of one child, with references reduced to sibling ids.
struct ConstraintInfo {
    std::vector<std::string> below;     // this node sits below the referenced id
    std::vector<std::string> above;     // this node sits above the referenced id
    std::vector<std::string> right_of;  // this node sits right of the referenced id
    std::vector<std::string> left_of;   // this node sits left of the referenced id
    bool anchor_top = false;
    bool anchor_bottom = false;
    bool anchor_leading = false;
    bool anchor_trailing = false;
    bool participates = false;
};

std::string strip_id(const std::string& value) {
    if (value.starts_with("@+id/")) return value.substr(5);
    if (value.starts_with("@id/")) return value.substr(4);
    return value;
}

} // namespace

const std::set<std::string>& constraint_attribute_names() {
    static const std::set<std::string> names = {
        "android:layout_below",
        "android:layout_above",
        "android:layout_toRightOf",
        "android:layout_toEndOf",
        "android:layout_toLeftOf",
        "android:layout_toStartOf",
        "android:layout_alignParentTop",
        "android:layout_alignParentBottom",
        "android:layout_alignParentLeft",
        "android:layout_alignParentStart",
        "android:layout_alignParentRight",
        "android:layout_alignParentEnd",
        "android:layout_centerInParent",
        "android:layout_centerHorizontal",
        "android:layout_centerVertical",
        "app:layout_constraintTop_toTopOf",
        "app:layout_constraintTop_toBottomOf",
        "app:layout_constraintBottom_toTopOf",
        "app:layout_constraintBottom_toBottomOf",
        "app:layout_constraintStart_toStartOf",
        "app:layout_constraintStart_toEndOf",
        "app:layout_constraintEnd_toStartOf",
        "app:layout_constraintEnd_toEndOf",
        "app:layout_constraintLeft_toLeftOf",
        "app:layout_constraintLeft_toRightOf",
        "app:layout_constraintRight_toLeftOf",
        "app:layout_constraintRight_toRightOf",
    };
    return names;
}

namespace {

ConstraintInfo parse_constraints(const AndroidUIModel& node) {
    ConstraintInfo info;
    auto raw_of = [&](std::string_view name) -> std::optional<std::string> {
        if (const PropertyValue* value = node.property(name)) {
            if (const auto* raw = std::get_if<std::string>(value)) return *raw;
            if (const auto* text = std::get_if<TextValue>(value)) return text->value;
        }
        return std::nullopt;
    };
    auto sibling = [&](std::string_view name, std::vector<std::string>& out) {
        if (auto raw = raw_of(name)) {
            if (*raw == "parent") return;  // parent edges become anchors below
            out.push_back(strip_id(*raw));
            info.participates = true;
        }
    };
    auto flag = [&](std::string_view name, bool& out) {
        if (auto raw = raw_of(name)) {
            if (*raw == "true" || *raw == "parent") {
                out = true;
                info.participates = true;
            }
        }
    };

    sibling("android:layout_below", info.below);
    sibling("app:layout_constraintTop_toBottomOf", info.below);
    sibling("android:layout_above", info.above);
    sibling("app:layout_constraintBottom_toTopOf", info.above);
    sibling("android:layout_toRightOf", info.right_of);
    sibling("android:layout_toEndOf", info.right_of);
    sibling("app:layout_constraintStart_toEndOf", info.right_of);
    sibling("app:layout_constraintLeft_toRightOf", info.right_of);
    sibling("android:layout_toLeftOf", info.left_of);
    sibling("android:layout_toStartOf", info.left_of);
    sibling("app:layout_constraintEnd_toStartOf", info.left_of);
    sibling("app:layout_constraintRight_toLeftOf", info.left_of);

    flag("android:layout_alignParentTop", info.anchor_top);
    flag("app:layout_constraintTop_toTopOf", info.anchor_top);
    flag("android:layout_alignParentBottom", info.anchor_bottom);
    flag("app:layout_constraintBottom_toBottomOf", info.anchor_bottom);
    flag("android:layout_alignParentLeft", info.anchor_leading);
    flag("android:layout_alignParentStart", info.anchor_leading);
    flag("app:layout_constraintStart_toStartOf", info.anchor_leading);
    flag("app:layout_constraintLeft_toLeftOf", info.anchor_leading);
    flag("android:layout_alignParentRight", info.anchor_trailing);
    flag("android:layout_alignParentEnd", info.anchor_trailing);
    flag("app:layout_constraintEnd_toEndOf", info.anchor_trailing);
    flag("app:layout_constraintRight_toRightOf", info.anchor_trailing);

    return info;
}

// Longest-path levels over a sparse edge list; returns nothing on a cycle.
std::optional<std::vector<int>> topological_levels(int count,
                                                   const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> successors(count);
    std::vector<int> indegree(count, 0);
    for (const auto& [from, to] : edges) {
        successors[from].push_back(to);
        ++indegree[to];
    }
    std::vector<int> level(count, 0);
    std::vector<int> queue;
    for (int i = 0; i < count; ++i) {
        if (indegree[i] == 0) queue.push_back(i);
    }
    int visited = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int node = queue[qi];
        ++visited;
        for (int next : successors[node]) {
            level[next] = std::max(level[next], level[node] + 1);
            if (--indegree[next] == 0) queue.push_back(next);
        }
    }
    if (visited != count) return std::nullopt;
    return level;
}

std::optional<Dimension> margin_dimension(const AndroidUIModel& node, std::string_view name) {
    if (const PropertyValue* value = node.property(name)) {
        if (const auto* dimension = std::get_if<Dimension>(value)) return *dimension;
    }
    return std::nullopt;
}

// Fallback for graphs that do not decompose: overlay with margin offsets.
SwiftView approximate_overlay(const AndroidUIModel& node, TranslationContext& ctx) {
    SwiftView stack;
    stack.name = "ZStack";
    stack.needs_closure = true;
    stack.args.push_back({"alignment", RawToken{".topLeading"}});

    for (const auto& child : node.children) {
        if (is_visibility_gone(child)) {
            ctx.add_note("omitted " + child.kind + " at " + child.location.to_string() +
                         ": visibility=\"gone\"");
            continue;
        }
        ctx.set_child_hints({std::nullopt, true});
        SwiftView translated = ctx.translate_node(child);
        double x = 0.0, y = 0.0;
        if (auto m = margin_dimension(child, "android:layout_marginLeft")) x = m->value;
        else if (auto ms = margin_dimension(child, "android:layout_marginStart")) x = ms->value;
        if (auto m = margin_dimension(child, "android:layout_marginTop")) y = m->value;
        if (x != 0.0 || y != 0.0) {
            translated.modifiers.push_back(
                make_modifier("offset", {{"x", x}, {"y", y}}));
        }
        stack.children.push_back(std::move(translated));
    }

    ctx.add_record({node.kind, UnmigratedReason::UnsupportedLayoutPattern, node.location,
                    "ZStack", "approximate"});
    std::set<std::string> consumed = constraint_attribute_names();
    stack.modifiers = translate_properties(node, consumed, stack.name, ctx);
    return stack;
}

} // namespace

SwiftView translate_constraint_like_layout(const AndroidUIModel& node, TranslationContext& ctx) {
    std::vector<const AndroidUIModel*> children;
    for (const auto& child : node.children) {
        if (child.kind == "androidx.constraintlayout.widget.Guideline" ||
            child.kind == "Guideline") {
            ctx.add_note("guideline at " + child.location.to_string() + " ignored");
            continue;
        }
        children.push_back(&child);
    }

    std::vector<ConstraintInfo> constraints;
    std::map<std::string, int> by_id;
    for (size_t i = 0; i < children.size(); ++i) {
        constraints.push_back(parse_constraints(*children[i]));
        if (children[i]->node_id) by_id[*children[i]->node_id] = static_cast<int>(i);
    }

    const int count = static_cast<int>(children.size());
    std::vector<std::pair<int, int>> vertical_edges;   // from is above to
    std::vector<std::pair<int, int>> horizontal_edges; // from is left of to
    std::set<int> referenced;

    auto resolve_edges = [&](int child_index, const std::vector<std::string>& refs,
                             std::vector<std::pair<int, int>>& edges, bool child_is_second) {
        for (const auto& ref : refs) {
            auto it = by_id.find(ref);
            if (it == by_id.end()) {
                ctx.add_note("constraint reference to unknown id '" + ref + "' at " +
                             children[child_index]->location.to_string());
                continue;
            }
            referenced.insert(it->second);
            if (child_is_second) edges.emplace_back(it->second, child_index);
            else edges.emplace_back(child_index, it->second);
        }
    };
    for (int i = 0; i < count; ++i) {
        resolve_edges(i, constraints[i].below, vertical_edges, true);
        resolve_edges(i, constraints[i].above, vertical_edges, false);
        resolve_edges(i, constraints[i].right_of, horizontal_edges, true);
        resolve_edges(i, constraints[i].left_of, horizontal_edges, false);
    }

    std::set<std::string> consumed = constraint_attribute_names();

    // No relational constraints at all: plain overlay, exact.
    if (vertical_edges.empty() && horizontal_edges.empty() &&
        std::none_of(constraints.begin(), constraints.end(),
                     [](const ConstraintInfo& c) { return c.participates; })) {
        SwiftView stack;
        stack.name = "ZStack";
        stack.needs_closure = true;
        if (count > 1) stack.args.push_back({"alignment", RawToken{".topLeading"}});
        stack.children = ctx.translate_children(node);
        stack.modifiers = translate_properties(node, consumed, stack.name, ctx);
        return stack;
    }

    auto levels = topological_levels(count, vertical_edges);
    if (!levels) return approximate_overlay(node, ctx);

    // Group the connected children into rows by vertical level.
    std::vector<int> members;  // indices of chain participants, document order
    std::vector<int> extras;   // unconstrained children, overlaid afterwards
    for (int i = 0; i < count; ++i) {
        if (constraints[i].participates || referenced.count(i) > 0) members.push_back(i);
        else extras.push_back(i);
    }

    // Bottom-only anchored members sink into a synthetic trailing row.
    int max_level = 0;
    for (int member : members) max_level = std::max(max_level, (*levels)[member]);
    for (int member : members) {
        if (constraints[member].anchor_bottom && !constraints[member].anchor_top &&
            constraints[member].below.empty() && referenced.count(member) == 0) {
            (*levels)[member] = max_level + 1;
        }
    }

    std::map<int, std::vector<int>> rows;  // level -> member indices
    for (int member : members) rows[(*levels)[member]].push_back(member);

    // Order each row horizontally; cycles inside a row abort to the fallback.
    for (auto& [level, row] : rows) {
        std::map<int, int> position;
        for (size_t i = 0; i < row.size(); ++i) position[row[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> row_edges;
        for (const auto& [from, to] : horizontal_edges) {
            if (position.count(from) > 0 && position.count(to) > 0) {
                row_edges.emplace_back(position[from], position[to]);
            }
        }
        auto row_levels = topological_levels(static_cast<int>(row.size()), row_edges);
        if (!row_levels) return approximate_overlay(node, ctx);
        std::vector<int> ordered = row;
        std::stable_sort(ordered.begin(), ordered.end(), [&](int a, int b) {
            return (*row_levels)[position[a]] < (*row_levels)[position[b]];
        });
        row = std::move(ordered);
    }

    // A member pinned to the trailing edge, or placed right of something in an
    // earlier row, is preceded by a spacer that shifts it right.
    auto member_shifts_right = [&](int member, const std::set<int>& in_row) {
        if (constraints[member].anchor_trailing && !constraints[member].anchor_leading) {
            return true;
        }
        for (const auto& ref : constraints[member].right_of) {
            auto it = by_id.find(ref);
            if (it != by_id.end() && in_row.count(it->second) == 0) return true;
        }
        return false;
    };

    auto build_row = [&](const std::vector<int>& row) {
        std::set<int> in_row(row.begin(), row.end());
        std::vector<SwiftView> translated;
        bool spacer_placed = false;
        for (int member : row) {
            if (is_visibility_gone(*children[member])) {
                ctx.add_note("omitted " + children[member]->kind + " at " +
                             children[member]->location.to_string() + ": visibility=\"gone\"");
                continue;
            }
            if (!spacer_placed && member_shifts_right(member, in_row)) {
                SwiftView spacer;
                spacer.name = "Spacer";
                translated.push_back(std::move(spacer));
                spacer_placed = true;
            }
            translated.push_back(ctx.translate_node(*children[member]));
        }
        if (translated.size() == 1 && translated[0].name != "Spacer") {
            return std::move(translated[0]);
        }
        SwiftView hstack;
        hstack.name = "HStack";
        hstack.needs_closure = true;
        hstack.children = std::move(translated);
        return hstack;
    };

    std::vector<SwiftView> row_views;
    bool previous_bottom_anchored = false;
    for (const auto& [level, row] : rows) {
        bool bottom_anchored = std::all_of(row.begin(), row.end(), [&](int member) {
            return constraints[member].anchor_bottom && constraints[member].below.empty();
        });
        if (bottom_anchored && !previous_bottom_anchored && !row_views.empty()) {
            SwiftView spacer;
            spacer.name = "Spacer";
            row_views.push_back(std::move(spacer));
        }
        previous_bottom_anchored = bottom_anchored;
        row_views.push_back(build_row(row));
    }

    SwiftView body;
    if (row_views.size() == 1) {
        body = std::move(row_views[0]);
    } else {
        body.name = "VStack";
        body.needs_closure = true;
        body.args.push_back({"alignment", RawToken{".leading"}});
        body.children = std::move(row_views);
    }

    SwiftView stack;
    stack.name = "ZStack";
    stack.needs_closure = true;
    stack.children.push_back(std::move(body));
    for (int extra : extras) {
        if (is_visibility_gone(*children[extra])) {
            ctx.add_note("omitted " + children[extra]->kind + " at " +
                         children[extra]->location.to_string() + ": visibility=\"gone\"");
            continue;
        }
        stack.children.push_back(ctx.translate_node(*children[extra]));
    }
    stack.modifiers = translate_properties(node, consumed, stack.name, ctx);
    return stack;
}

} // namespace uimigrate
