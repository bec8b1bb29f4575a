#include "trendreason/render.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace trendreason {

namespace {

std::string right_pad(const std::string& s, size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string left_pad(const std::string& s, size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

nlohmann::json scenarios_json(const ScenarioSet& set) {
    nlohmann::json rows = nlohmann::json::array();
    for (const Scenario& s : set.scenarios) {
        nlohmann::json row = nlohmann::json::array();
        for (const Triplet& t : s) row.push_back(t.to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::string render_table(const ScenarioSet& set) {
    std::ostringstream out;
    const size_t idx_width = std::max<size_t>(3, std::to_string(set.scenarios.size()).size());

    out << left_pad("No.", idx_width);
    for (const auto& v : set.variables) out << "  " << right_pad(v, 3);
    out << '\n';

    for (size_t i = 0; i < set.scenarios.size(); ++i) {
        out << left_pad(std::to_string(i + 1), idx_width);
        for (size_t v = 0; v < set.variables.size(); ++v)
            out << "  " << right_pad(set.scenarios[i][v].to_string(), std::max<size_t>(set.variables[v].size(), 3));
        if (is_steady(set.scenarios[i])) out << "  steady";
        out << '\n';
    }
    return out.str();
}

std::string render_csv(const ScenarioSet& set) {
    std::ostringstream out;
    for (size_t v = 0; v < set.variables.size(); ++v) {
        if (v) out << ',';
        out << set.variables[v];
    }
    out << '\n';
    for (const Scenario& s : set.scenarios) {
        for (size_t v = 0; v < s.size(); ++v) {
            if (v) out << ',';
            out << s[v].to_string();
        }
        out << '\n';
    }
    return out.str();
}

std::string render_json(const ScenarioSet& set) {
    nlohmann::json doc;
    doc["model"] = set.label;
    doc["variables"] = set.variables;
    doc["scenarios"] = scenarios_json(set);
    return doc.dump(2) + "\n";
}

std::string render_graph_json(const ScenarioGraph& graph) {
    nlohmann::json doc;
    doc["model"] = graph.nodes.label;
    doc["variables"] = graph.nodes.variables;
    doc["nodes"] = scenarios_json(graph.nodes);
    nlohmann::json arcs = nlohmann::json::array();
    for (auto [from, to] : graph.arcs) arcs.push_back({from + 1, to + 1});
    doc["arcs"] = std::move(arcs);
    return doc.dump(2) + "\n";
}

std::string render_graph_dot(const ScenarioGraph& graph) {
    const auto groups = variable_groups(graph.nodes);
    std::ostringstream out;
    out << "digraph scenarios {\n";
    for (size_t i = 0; i < graph.nodes.scenarios.size(); ++i) {
        out << "  S" << i + 1 << " [label=\"S" << i + 1 << "\\n";
        for (size_t g = 0; g < groups.size(); ++g) {
            if (g) out << ' ';
            out << graph.nodes.scenarios[i][size_t(groups[g][0])].to_string();
        }
        out << '"';
        if (is_steady(graph.nodes.scenarios[i])) out << " shape=doublecircle";
        out << "];\n";
    }
    for (auto [from, to] : graph.arcs) out << "  S" << from + 1 << " -> S" << to + 1 << ";\n";
    out << "}\n";
    return out.str();
}

std::string render_trace_json(const RemovalTrace& trace) {
    nlohmann::json doc;
    nlohmann::json removals = nlohmann::json::array();
    for (const Removal& r : trace.removals)
        removals.push_back({{"i", r.i + 1}, {"j", r.j + 1}, {"value", r.value}});
    doc["removals"] = std::move(removals);
    doc["finalModel"] = serialize_model(trace.final_model);
    doc["exhausted"] = trace.exhausted;
    return doc.dump(2) + "\n";
}

std::string render_selection_table(const ScenarioSet& set, const std::vector<int>& rows) {
    std::ostringstream out;
    const size_t idx_width = std::max<size_t>(3, std::to_string(set.scenarios.size()).size());
    out << left_pad("No.", idx_width);
    for (const auto& v : set.variables) out << "  " << right_pad(v, 3);
    out << '\n';
    for (int idx : rows) {
        const Scenario& s = set.scenarios[size_t(idx)];
        out << left_pad(std::to_string(idx + 1), idx_width);
        for (size_t v = 0; v < set.variables.size(); ++v)
            out << "  " << right_pad(s[v].to_string(), std::max<size_t>(set.variables[v].size(), 3));
        if (is_steady(s)) out << "  steady";
        out << '\n';
    }
    return out.str();
}

std::string render_selection_csv(const ScenarioSet& set, const std::vector<int>& rows) {
    std::ostringstream out;
    out << "no";
    for (const auto& v : set.variables) out << ',' << v;
    out << '\n';
    for (int idx : rows) {
        out << idx + 1;
        for (const Triplet& t : set.scenarios[size_t(idx)]) out << ',' << t.to_string();
        out << '\n';
    }
    return out.str();
}

std::string render_selection_json(const ScenarioSet& set, const std::vector<int>& rows) {
    nlohmann::json doc;
    doc["model"] = set.label;
    doc["variables"] = set.variables;
    nlohmann::json indices = nlohmann::json::array();
    nlohmann::json scenarios = nlohmann::json::array();
    for (int idx : rows) {
        indices.push_back(idx + 1);
        nlohmann::json row = nlohmann::json::array();
        for (const Triplet& t : set.scenarios[size_t(idx)]) row.push_back(t.to_string());
        scenarios.push_back(std::move(row));
    }
    doc["indices"] = std::move(indices);
    doc["scenarios"] = std::move(scenarios);
    return doc.dump(2) + "\n";
}

std::string render_path_table(const ScenarioGraph& graph, const PathResult& path) {
    std::ostringstream out;
    if (path.empty()) {
        out << "no path\n";
        return out.str();
    }
    out << "path:";
    for (size_t i = 0; i < path.size(); ++i) out << (i ? " -> " : " ") << path[i] + 1;
    out << '\n';
    out << render_selection_table(graph.nodes, path);
    return out.str();
}

std::string render_path_json(const ScenarioGraph& graph, const PathResult& path) {
    nlohmann::json doc;
    nlohmann::json indices = nlohmann::json::array();
    for (int idx : path) indices.push_back(idx + 1);
    doc["path"] = std::move(indices);
    nlohmann::json nodes = nlohmann::json::array();
    for (int idx : path) {
        nlohmann::json row = nlohmann::json::array();
        for (const Triplet& t : graph.nodes.scenarios[size_t(idx)]) row.push_back(t.to_string());
        nodes.push_back(std::move(row));
    }
    doc["nodes"] = std::move(nodes);
    doc["variables"] = graph.nodes.variables;
    return doc.dump(2) + "\n";
}

} // namespace trendreason
