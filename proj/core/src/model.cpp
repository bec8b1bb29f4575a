#include "trendreason/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace trendreason {

std::string_view relation_kind_name(RelationKind kind) {
    switch (kind) {
    case RelationKind::DP: return "DP";
    case RelationKind::IP: return "IP";
    case RelationKind::CXI: return "CXI";
    case RelationKind::LNI: return "LNI";
    case RelationKind::CVI: return "CVI";
    case RelationKind::CXD: return "CXD";
    case RelationKind::LND: return "LND";
    case RelationKind::CVD: return "CVD";
    }
    return "?";
}

std::optional<RelationKind> relation_kind_from_name(std::string_view name) {
    for (RelationKind kind : kAllRelationKinds)
        if (relation_kind_name(kind) == name) return kind;
    return std::nullopt;
}

RelationShape relation_shape(RelationKind kind) {
    using S = Sign;
    switch (kind) {
    case RelationKind::CXI: return {S::Plus, S::Plus, S::Plus};
    case RelationKind::LNI: return {S::Plus, S::Plus, S::Zero};
    case RelationKind::CVI: return {S::Plus, S::Plus, S::Minus};
    case RelationKind::CXD: return {S::Plus, S::Minus, S::Plus};
    case RelationKind::LND: return {S::Plus, S::Minus, S::Zero};
    case RelationKind::CVD: return {S::Plus, S::Minus, S::Minus};
    case RelationKind::DP: return {S::Plus, S::Plus, S::Zero};
    case RelationKind::IP: return {S::Plus, S::Minus, S::Zero};
    }
    return {S::Zero, S::Zero, S::Zero};
}

std::optional<int> TrendModel::variable_index(std::string_view name) const {
    for (int i = 0; i < int(variables.size()); ++i)
        if (variables[i] == name) return i;
    return std::nullopt;
}

std::vector<Violation> validate(const TrendModel& model) {
    std::vector<Violation> out;
    if (model.variables.empty())
        out.push_back({Violation::Kind::NoVariables, "model declares no variables"});

    std::set<std::string_view> seen;
    for (const auto& v : model.variables) {
        if (!seen.insert(v).second)
            out.push_back({Violation::Kind::DuplicateName, "duplicate variable name: " + v});
    }

    const int n = int(model.variables.size());
    std::set<std::tuple<RelationKind, int, int>> rels;
    for (const Relation& r : model.relations) {
        const bool x_ok = r.x >= 0 && r.x < n;
        const bool y_ok = r.y >= 0 && r.y < n;
        if (!x_ok || !y_ok) {
            out.push_back({Violation::Kind::UnknownVariable,
                           std::string("relation ") + std::string(relation_kind_name(r.kind)) +
                               " references an undeclared variable"});
            continue;
        }
        if (r.x == r.y) {
            out.push_back({Violation::Kind::SelfRelation,
                           std::string(relation_kind_name(r.kind)) + " " + model.variables[r.x] + " " +
                               model.variables[r.y] + ": variable related to itself"});
        }
        if (!rels.insert({r.kind, r.x, r.y}).second) {
            out.push_back({Violation::Kind::DuplicateRelation,
                           std::string("duplicate relation: ") + std::string(relation_kind_name(r.kind)) +
                               " " + model.variables[r.x] + " " + model.variables[r.y]});
        }
    }
    return out;
}

ParseError::ParseError(std::string message, int line, int column)
    : std::runtime_error(std::move(message)), line_(line), column_(column) {}

namespace {

struct Token {
    std::string_view text;
    int column; // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size()) break;
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        tokens.push_back({line.substr(start, i - start), int(start) + 1});
    }
    return tokens;
}

} // namespace

TrendModel parse_model(std::string_view text, std::string_view name) {
    TrendModel model;
    model.name = std::string(name);

    bool vars_seen = false;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        auto tokens = tokenize(line);
        if (tokens.empty() || tokens[0].text.starts_with('#')) continue;

        if (!vars_seen) {
            if (tokens[0].text != "VARS")
                throw ParseError("expected VARS line", line_no, tokens[0].column);
            if (tokens.size() < 2)
                throw ParseError("VARS line declares no variables", line_no, tokens[0].column);
            for (size_t i = 1; i < tokens.size(); ++i)
                model.variables.emplace_back(tokens[i].text);
            vars_seen = true;
            continue;
        }

        auto kind = relation_kind_from_name(tokens[0].text);
        if (!kind)
            throw ParseError("unknown relation keyword: " + std::string(tokens[0].text), line_no,
                             tokens[0].column);
        if (tokens.size() != 3)
            throw ParseError(std::string(tokens[0].text) + " expects two variable names", line_no,
                             tokens[0].column);

        Relation r;
        r.kind = *kind;
        for (int side = 0; side < 2; ++side) {
            const Token& tok = tokens[size_t(side) + 1];
            auto idx = model.variable_index(tok.text);
            if (!idx)
                throw ParseError("unknown variable: " + std::string(tok.text), line_no, tok.column);
            (side == 0 ? r.x : r.y) = *idx;
        }
        model.relations.push_back(r);
    }

    if (!vars_seen) throw ParseError("empty model: no VARS line", line_no, 1);

    auto violations = validate(model);
    if (!violations.empty()) {
        std::string msg = "invalid model";
        for (const auto& v : violations) msg += "\n  " + v.message;
        throw ParseError(msg, 0, 0);
    }
    return model;
}

std::string serialize_model(const TrendModel& model) {
    std::ostringstream out;
    out << "VARS";
    for (const auto& v : model.variables) out << ' ' << v;
    out << '\n';
    for (const Relation& r : model.relations)
        out << relation_kind_name(r.kind) << ' ' << model.variables[size_t(r.x)] << ' '
            << model.variables[size_t(r.y)] << '\n';
    return out.str();
}

} // namespace trendreason
