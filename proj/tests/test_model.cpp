#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <utility>

#include "trendreason/model.hpp"
#include "test_util.hpp"

using namespace trendreason;

TEST_CASE("relation_shape covers all eight kinds") {
    auto shape_is = [](RelationKind k, char v, char s, char c) {
        const RelationShape sh = relation_shape(k);
        return sh.value == sign_from_char(v) && sh.slope == sign_from_char(s) &&
               sh.curvature == sign_from_char(c);
    };
    CHECK(shape_is(RelationKind::CXI, '+', '+', '+'));
    CHECK(shape_is(RelationKind::LNI, '+', '+', '0'));
    CHECK(shape_is(RelationKind::CVI, '+', '+', '-'));
    CHECK(shape_is(RelationKind::CXD, '+', '-', '+'));
    CHECK(shape_is(RelationKind::LND, '+', '-', '0'));
    CHECK(shape_is(RelationKind::CVD, '+', '-', '-'));
    CHECK(shape_is(RelationKind::DP, '+', '+', '0'));
    CHECK(shape_is(RelationKind::IP, '+', '-', '0'));
}

TEST_CASE("the six shape kinds cover exactly the +/- slope, +/0/- curvature grid") {
    const RelationKind shapes[] = {RelationKind::CXI, RelationKind::LNI, RelationKind::CVI,
                                   RelationKind::CXD, RelationKind::LND, RelationKind::CVD};
    std::set<std::pair<Sign, Sign>> seen;
    for (RelationKind k : shapes) {
        const RelationShape sh = relation_shape(k);
        CHECK(sh.value == Sign::Plus);
        CHECK(sh.slope != Sign::Zero);
        seen.insert({sh.slope, sh.curvature});
    }
    CHECK(seen.size() == 6);
}

TEST_CASE("relation kind names round-trip") {
    for (RelationKind k : kAllRelationKinds)
        CHECK(relation_kind_from_name(relation_kind_name(k)) == k);
    CHECK(relation_kind_from_name("CVJ") == std::nullopt);
}

TEST_CASE("parse_model: minimal model") {
    const auto m = parse_model("VARS GEN AGI\nCVI GEN AGI\n");
    CHECK(m.variables == std::vector<std::string>{"GEN", "AGI"});
    REQUIRE(m.relations.size() == 1);
    CHECK(m.relations[0] == Relation{RelationKind::CVI, 0, 1});
}

TEST_CASE("parse_model: case-study fixtures") {
    const auto m1 = testutil::load_model_fixture("model1.qtm");
    CHECK(m1.variables.size() == 10);
    CHECK(m1.relations.size() == 9);
    CHECK(validate(m1).empty());

    const auto m2 = testutil::load_model_fixture("model2.qtm");
    CHECK(m2.variables.size() == 10);
    CHECK(m2.relations.size() == 9);
    CHECK(validate(m2).empty());

    // the two case-study models differ only in the AGE->PRI / AGE->PRO rows
    int differing = 0;
    for (size_t i = 0; i < m1.relations.size(); ++i)
        if (m1.relations[i] != m2.relations[i]) ++differing;
    CHECK(differing == 2);

    const auto variant = testutil::load_model_fixture("model1_ini.qtm");
    CHECK(variant.variables.size() == 11);
    CHECK(variant.relations.size() == 10);
}

TEST_CASE("parse_model: errors carry position") {
    CHECK_THROWS_AS(parse_model("VARS A B\nCVJ A B\n"), ParseError);
    try {
        parse_model("VARS A B\nCVJ A B\n");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 1);
        CHECK(std::string(e.what()).find("unknown relation keyword") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_model(""), ParseError);
    CHECK_THROWS_AS(parse_model("DP A B\n"), ParseError);          // no VARS line
    CHECK_THROWS_AS(parse_model("VARS A B\nDP A\n"), ParseError);  // arity
    CHECK_THROWS_AS(parse_model("VARS A B\nDP A XXX\n"), ParseError);
}

TEST_CASE("parse_model: CRLF and comments accepted") {
    const auto m = parse_model("# comment\r\nVARS A B\r\n# another\r\nDP A B\r\n");
    CHECK(m.variables.size() == 2);
    CHECK(m.relations.size() == 1);
}

TEST_CASE("validate: violations are data") {
    TrendModel m;
    m.variables = {"GEN", "GEN"};
    m.relations = {{RelationKind::DP, 0, 0}, {RelationKind::DP, 0, 1}, {RelationKind::DP, 0, 1}};
    const auto violations = validate(m);
    REQUIRE(violations.size() == 3);
    CHECK(violations[0].kind == Violation::Kind::DuplicateName);
    CHECK(violations[1].kind == Violation::Kind::SelfRelation);
    CHECK(violations[2].kind == Violation::Kind::DuplicateRelation);

    TrendModel bad_ref;
    bad_ref.variables = {"GEN"};
    bad_ref.relations = {{RelationKind::DP, 0, 3}};
    REQUIRE(validate(bad_ref).size() == 1);
    CHECK(validate(bad_ref)[0].kind == Violation::Kind::UnknownVariable);
}

TEST_CASE("validate rejects single-character mutations of a name reference") {
    const std::string good = testutil::read_file(testutil::data_path("model2.qtm"));
    // mutate the X endpoint of the first relation line: "CVI GEN AGI" -> "CVI GEX AGI"
    std::string mutated = good;
    const size_t pos = mutated.find("CVI GEN AGI");
    REQUIRE(pos != std::string::npos);
    mutated[pos + 6] = 'X';
    CHECK_THROWS_AS(parse_model(mutated), ParseError);
}

TEST_CASE("serialize/parse round-trip") {
    const auto m2 = testutil::load_model_fixture("model2.qtm");
    CHECK(parse_model(serialize_model(m2)) == m2);

    TrendModel no_relations;
    no_relations.variables = {"A", "B"};
    CHECK(serialize_model(no_relations) == "VARS A B\n");
    CHECK(parse_model(serialize_model(no_relations)) == no_relations);
}

TEST_CASE("round-trip holds for random models") {
    std::mt19937 rng(7101);
    for (int i = 0; i < 200; ++i) {
        const auto m = testutil::random_model(rng);
        CHECK(parse_model(serialize_model(m)) == m);
    }
}

TEST_CASE("serialized expert model matches the frozen golden") {
    const auto m2 = testutil::load_model_fixture("model2.qtm");
    CHECK(serialize_model(m2) == testutil::read_file(testutil::golden_path("model2_serialized.qtm")));
}
