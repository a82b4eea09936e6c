#include <gtest/gtest.h>

#include "bq/builders.hpp"
#include "bq/io.hpp"
#include "bq/sweedler.hpp"

using namespace bq;
using json = nlohmann::json;

namespace {

std::string where(const json& j) {
  try {
    (void)io::definition_from(j);
  } catch (const io::schema_error& e) {
    return e.where();
  }
  return "<none>";
}

}  // namespace

TEST(IO, HopfRoundTrip) {
  for (const char* name : {"H4", "E2", "kZ2", "H4dual", "DH4"}) {
    const HopfPtr h = io::named_hopf(name);
    const json j = io::hopf_json(*h);
    const HopfAlgebra back = io::hopf_from(j);
    EXPECT_EQ(io::hopf_json(back), j) << name;
    EXPECT_TRUE(check_hopf_axioms(back).ok()) << name;
  }
}

TEST(IO, YDRoundTrip) {
  const YDAlgebra C = build_C(h4_hopf(), {Rational(-1, 2), 3, 4});
  const json j = io::yd_json(C, "H4");
  const YDAlgebra back = io::yd_from(j);
  EXPECT_EQ(back.action, C.action);
  EXPECT_EQ(back.coaction, C.coaction);
  EXPECT_EQ(io::yd_json(back, "H4"), j);
}

TEST(IO, RationalsAcceptIntegersAndStrings) {
  const json j = json::parse(R"({"kind":"algebra","dim":1,"basis":["1"],"unit":[1],"mult":[[["1"]]]})");
  EXPECT_TRUE(std::holds_alternative<StructureAlgebra>(io::definition_from(j)));
}

TEST(IO, SchemaErrorsCarryPaths) {
  json c = io::yd_json(build_C(h4_hopf(), {1, 2, 3}), "H4");
  json missing = c;
  missing.erase("coaction");
  EXPECT_EQ(where(missing), "/coaction");
  json badhopf = c;
  badhopf["hopf"] = "H5";
  EXPECT_EQ(where(badhopf), "/hopf");
  json badq = c;
  badq["unit"][1] = "1/0";
  EXPECT_EQ(where(badq), "/unit/1");
  json short_action = c;
  short_action["action"].erase(0);
  EXPECT_EQ(where(short_action), "/action");
  EXPECT_EQ(where(json::array()), "");
  EXPECT_EQ(where(json{{"kind", "ring"}}), "/kind");
  EXPECT_EQ(where(json::object()), "/kind");
}

TEST(IO, MalformedTextIsSchemaError) { EXPECT_THROW(io::parse_text("{\"kind\": "), io::schema_error); }
