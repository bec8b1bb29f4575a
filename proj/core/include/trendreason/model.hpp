#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trendreason/sign.hpp"

namespace trendreason {

// Pairwise relation kinds. DP/IP are the first-derivative proportionalities;
// the other six describe the qualitative shape of Y as a function of X
// (convex/linear/concave, increasing/decreasing).
enum class RelationKind : std::uint8_t { DP, IP, CXI, LNI, CVI, CXD, LND, CVD };

inline constexpr RelationKind kAllRelationKinds[] = {
    RelationKind::DP,  RelationKind::IP,  RelationKind::CXI, RelationKind::LNI,
    RelationKind::CVI, RelationKind::CXD, RelationKind::LND, RelationKind::CVD,
};

std::string_view relation_kind_name(RelationKind kind);
std::optional<RelationKind> relation_kind_from_name(std::string_view name);

// Qualitative shape of Y(X): sign of the function value, of dY/dX, and of
// d2Y/dX2. DP and IP act like the linear shapes: they tie both derivative
// signs of Y to X, not just the first.
struct RelationShape {
    Sign value;
    Sign slope;
    Sign curvature;
};

RelationShape relation_shape(RelationKind kind);

// Directed pairwise relation: y is constrained as a function of x.
// Endpoints are indices into the owning model's variable list.
struct Relation {
    RelationKind kind;
    int x = -1;
    int y = -1;

    friend bool operator==(const Relation&, const Relation&) = default;
};

// A trend model: declared variables plus pairwise relations between them.
// Immutable after construction; `name` is a presentation label and takes no
// part in structural equality.
struct TrendModel {
    std::vector<std::string> variables;
    std::vector<Relation> relations;
    std::string name;

    std::optional<int> variable_index(std::string_view name) const;

    friend bool operator==(const TrendModel& a, const TrendModel& b) {
        return a.variables == b.variables && a.relations == b.relations;
    }
};

struct Violation {
    enum class Kind { DuplicateName, UnknownVariable, SelfRelation, DuplicateRelation, NoVariables };
    Kind kind;
    std::string message;
};

// Every violated model invariant, in encounter order. Empty means valid.
std::vector<Violation> validate(const TrendModel& model);

// Syntax or validation failure while reading a model, filter, or matrix.
// Line/column are 1-based; 0 means not applicable.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line = 0, int column = 0);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Model DSL, line oriented:
//   # comment
//   VARS GEN AGE ...
//   CVI GEN AGI
//   DP GEN EXP
// One VARS line, then one relation per line. LF or CRLF.
TrendModel parse_model(std::string_view text, std::string_view name = "");

// Inverse of parse_model up to comments: parse(serialize(m)) == m.
std::string serialize_model(const TrendModel& model);

} // namespace trendreason
