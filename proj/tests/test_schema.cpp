#include <catch2/catch.hpp>

#include <fstream>

#include "kzl/json_io.hpp"
#include "schema_check.hpp"

using namespace kzl;
using namespace kzltest;

namespace {

json loadSchema(const std::string& name) {
    std::ifstream f(std::string(KZL_SCHEMA_DIR) + "/" + name);
    REQUIRE(f.good());
    return json::parse(f);
}

json withConfig(const Params& P, const char* command, json body) {
    body["config"] = configJson(P, command, true, 0);
    return body;
}

} // namespace

TEST_CASE("artifacts validate against the shipped schemas") {
    Params P = Params::make(2, 2, 3, 8);

    {
        json body = withConfig(P, "homology", toJson(homologyTable(P)));
        auto err = validateSchema(loadSchema("homology.schema.json"), body);
        INFO(err.value_or(""));
        CHECK_FALSE(err.has_value());
    }
    {
        json body = withConfig(P, "verify-presentation", toJson(verifyPresentation(P)));
        auto err = validateSchema(loadSchema("verify-presentation.schema.json"), body);
        INFO(err.value_or(""));
        CHECK_FALSE(err.has_value());
    }
    {
        Params P4 = Params::make(2, 4, 3, 82);
        BracketReport R = bracketVerify(subsetOf({1, 2}), subsetOf({3, 4}), P4);
        json body = withConfig(P4, "massey", toJson(R, P4));
        auto err = validateSchema(loadSchema("massey.schema.json"), body);
        INFO(err.value_or(""));
        CHECK_FALSE(err.has_value());
    }
    {
        json body = withConfig(P, "e2", toJson(e2Table(P)));
        auto err = validateSchema(loadSchema("e2.schema.json"), body);
        INFO(err.value_or(""));
        CHECK_FALSE(err.has_value());
    }
    {
        json body = withConfig(P, "collapse", toJson(collapseReport(P)));
        auto err = validateSchema(loadSchema("collapse.schema.json"), body);
        INFO(err.value_or(""));
        CHECK_FALSE(err.has_value());
    }
    {
        Params P4 = Params::make(2, 4, 3, 82);
        json body = withConfig(P4, "extensions",
                               json{{"degree", 44},
                                    {"below", 4},
                                    {"candidates", toJson(extensionSearch(P4, 44, 4))}});
        auto err = validateSchema(loadSchema("extensions.schema.json"), body);
        INFO(err.value_or(""));
        CHECK_FALSE(err.has_value());
    }
    {
        json body = withConfig(P, "splitting", toJson(splittingConsistency(P, 40)));
        auto err = validateSchema(loadSchema("splitting.schema.json"), body);
        INFO(err.value_or(""));
        CHECK_FALSE(err.has_value());
    }
}

TEST_CASE("the validator itself rejects shape violations") {
    json schema = json::parse(R"({"type":"object","required":["x"],
                                  "properties":{"x":{"type":"integer"}}})");
    CHECK_FALSE(validateSchema(schema, json{{"x", 3}}).has_value());
    CHECK(validateSchema(schema, json{{"y", 3}}).has_value());
    CHECK(validateSchema(schema, json{{"x", "three"}}).has_value());
}

TEST_CASE("element serialization is canonically ordered") {
    Params P = Params::make(3, 2, 3, 8);
    RingElement x;
    x.addTerm(Monomial{0, {2, 0, 0, 0}}, 1, P);
    x.addTerm(Monomial{3, {0, 0, 0, 0}}, 2, P);
    x.addTerm(Monomial{1, {1, 0, 0, 0}}, 1, P);
    json j = toJson(x, P);
    REQUIRE(j.size() == 3);
    // leading term first under graded reverse lexicographic order
    CHECK(j[0][1] == 3);
    CHECK(j[0][0] == 2);
}
