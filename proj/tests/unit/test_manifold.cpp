#include "supersdet/manifold.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <fstream>

using namespace supersdet;
using json = nlohmann::json;

namespace {

CohomologyModel ring(const std::string& name) { return std::get<CohomologyModel>(builtin_manifold(name)); }

ManifoldError load_error(const std::string& text) {
  try {
    load_manifold(json::parse(text));
  } catch (const ManifoldError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for " << text;
  return ManifoldError(ManifoldError::Kind::Parse, "", "");
}

const char* kCp2Numbers = R"({"name": "cp2", "dimension": 4, "kind": "pontryagin_numbers", "signature": 1, "pontryagin_numbers": {"p1": 3}})";

}  // namespace

TEST(Manifold, LGenusExamples) {
  auto cp2 = std::get<PontryaginData>(load_manifold(json::parse(kCp2Numbers)));
  EXPECT_EQ(l_genus(cp2), Rational(1));
  PontryaginData k3{"k3", 4, {{{1}, Rational(-48)}}, -16};
  EXPECT_EQ(l_genus(k3), Rational(-16));
  PontryaginData hp2{"hp2", 8, {{{2, 0}, Rational(4)}, {{0, 1}, Rational(7)}}, 1};
  EXPECT_EQ(l_genus(hp2), Rational(1));
}

TEST(Manifold, MissingNumbersWarn) {
  PontryaginData partial{"partial", 8, {{{0, 1}, Rational(45)}}, 7};
  std::vector<std::string> warnings;
  EXPECT_EQ(l_genus(partial, &warnings), Rational(7));
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("p1^2"), std::string::npos);
}

TEST(Manifold, BuiltinsSatisfyTheSignatureTheorem) {
  std::map<std::string, int> signature{{"cp2", 1}, {"cp4", 1}, {"hp2", 1}, {"k3", -16}, {"cp2xcp2", 1}, {"k3xcp2", -16}};
  for (const auto& name : builtin_manifold_names()) {
    auto M = builtin_manifold(name);
    auto P = pontryagin_data(M);
    EXPECT_EQ(P.signature, signature.at(name)) << name;
    EXPECT_EQ(l_genus(P), Rational(P.signature)) << name;
    if (const auto* C = std::get_if<CohomologyModel>(&M)) EXPECT_EQ(pushforward(C->unit(), *C), l_genus(P)) << name;
    EXPECT_FALSE(builtin_provenance(name).empty());
  }
  EXPECT_THROW(builtin_manifold("s4"), std::invalid_argument);
}

TEST(Manifold, Cp2Ring) {
  auto cp2 = ring("cp2");
  EXPECT_EQ(cp2.basis.size(), 3u);
  EXPECT_EQ(cp2.integrate(parse_class(cp2, "h^2")), Rational(1));
  EXPECT_EQ(cp2.pontryagin.at(1), parse_class(cp2, "3*h2"));
  EXPECT_EQ(pushforward(parse_class(cp2, "1"), cp2), Rational(1));
  EXPECT_EQ(pushforward(parse_class(cp2, "h^2"), cp2), Rational(1));
  EXPECT_EQ(pushforward(parse_class(cp2, "0"), cp2), Rational(0));
  // 2h + h^2 - 1/3: only h^2 and -1/3 * L_1 reach the top degree.
  EXPECT_EQ(pushforward(parse_class(cp2, "2*h + h^2 - 1/3"), cp2), Rational(2, 3));
  EXPECT_TRUE(parse_class(cp2, "h^3") == cp2.zero());
  EXPECT_THROW(parse_class(cp2, "g"), std::invalid_argument);
  EXPECT_THROW(parse_class(cp2, "2*+h"), std::invalid_argument);
}

TEST(Manifold, PushforwardLowersDegreeByDimension) {
  auto cp4 = ring("cp4");
  EXPECT_EQ(pushforward_degree(8, cp4), 0);
  // Classes whose degree differs from 8 mod 4 pair to zero.
  EXPECT_EQ(pushforward(parse_class(cp4, "h"), cp4), Rational(0));
  EXPECT_EQ(pushforward(parse_class(cp4, "h^3"), cp4), Rational(0));
  // h^2 L_1 = h^2 * 5/3 h^2.
  EXPECT_EQ(pushforward(parse_class(cp4, "h^2"), cp4), Rational(5, 3));
}

TEST(Manifold, WhitneyProducts) {
  auto cp2 = pontryagin_data(builtin_manifold("cp2"));
  auto k3 = pontryagin_data(builtin_manifold("k3"));
  auto cc = product_manifold(cp2, cp2);
  // p1 = 3a^2 + 3b^2, p2 = 9 a^2 b^2.
  EXPECT_EQ(cc.numbers.at({2, 0}), Rational(18));
  EXPECT_EQ(cc.numbers.at({0, 1}), Rational(9));
  auto kc = product_manifold(k3, cp2);
  EXPECT_EQ(kc.numbers.at({2, 0}), Rational(-288));
  EXPECT_EQ(kc.numbers.at({0, 1}), Rational(-144));
  EXPECT_EQ(l_genus(kc), l_genus(k3) * l_genus(cp2));
  auto same = product_manifold(cp2, PontryaginData::point());
  EXPECT_EQ(same.numbers, cp2.numbers);
  EXPECT_EQ(same.dimension, 4);
  EXPECT_EQ(pontryagin_data(builtin_manifold("cp2xcp2")).numbers, cc.numbers);
}

TEST(Manifold, ProductRings) {
  auto cc = ring("cp2xcp2");
  EXPECT_EQ(cc.basis.size(), 9u);
  EXPECT_EQ(pushforward(parse_class(cc, "h_1^2*h_2^2"), cc), Rational(1));
  EXPECT_EQ(cc.multiply(parse_class(cc, "h_1"), parse_class(cc, "h_2")), parse_class(cc, "h_1*h_2"));
  EXPECT_NO_THROW(cc.validate());
}

TEST(Manifold, ParseErrorsCarryPaths) {
  auto e = load_error(R"({"name": "x", "dimension": 4, "kind": "cohomology_model", "signature": 1,
                          "basis": [{"name": "1", "degree": 0}, {"name": "h", "degree": "two"}], "fundamental": "h"})");
  EXPECT_EQ(e.kind(), ManifoldError::Kind::Parse);
  EXPECT_EQ(e.path(), "/basis/1/degree");
  EXPECT_EQ(load_error(R"({"name": "x", "dimension": 4, "signature": 1})").path(), "/kind");
  EXPECT_EQ(load_error(R"({"name": "x", "dimension": 4, "kind": "pontryagin_numbers", "signature": 1,
                           "pontryagin_numbers": {"q1": 3}})").path(), "/pontryagin_numbers/q1");
  EXPECT_EQ(load_error(R"([1, 2])").kind(), ManifoldError::Kind::Parse);
}

TEST(Manifold, ValidationErrorsNameTheTriple) {
  std::ifstream in(std::string(SUPERSDET_DATA_DIR) + "/../tests/data/nonassociative.json");
  ASSERT_TRUE(in.good());
  try {
    load_manifold(json::parse(in));
    FAIL() << "expected a validation error";
  } catch (const ManifoldError& e) {
    EXPECT_EQ(e.kind(), ManifoldError::Kind::Validation);
    EXPECT_NE(std::string(e.what()).find("associativity fails on (a, a, b)"), std::string::npos) << e.what();
  }
  auto wrong_weight = load_error(R"({"name": "x", "dimension": 8, "kind": "pontryagin_numbers", "signature": 1,
                                     "pontryagin_numbers": {"p1": 3}})");
  EXPECT_EQ(wrong_weight.kind(), ManifoldError::Kind::Validation);
  auto odd_square = load_error(R"({"name": "x", "dimension": 2, "kind": "cohomology_model", "signature": 0,
      "basis": [{"name": "1", "degree": 0}, {"name": "a", "degree": 1}, {"name": "b", "degree": 1}, {"name": "v", "degree": 2}],
      "products": [{"left": "a", "right": "b", "result": [{"basis": "v", "coeff": 1}]},
                   {"left": "b", "right": "a", "result": [{"basis": "v", "coeff": 1}]}],
      "fundamental": "v"})");
  EXPECT_EQ(odd_square.kind(), ManifoldError::Kind::Validation);
  EXPECT_NE(std::string(odd_square.what()).find("graded commutativity"), std::string::npos);
}

TEST(Manifold, JsonRoundTrip) {
  for (const auto& name : builtin_manifold_names()) {
    auto M = builtin_manifold(name);
    json j = manifold_to_json(M);
    EXPECT_EQ(manifold_to_json(load_manifold(j)), j) << name;
  }
}

TEST(Manifold, ShippedExamplesMatchBuiltins) {
  for (const char* name : {"cp2", "cp4", "hp2", "k3"}) {
    auto M = load_manifold_source(std::string(SUPERSDET_DATA_DIR) + "/manifolds/" + name + ".json");
    EXPECT_EQ(manifold_to_json(M), manifold_to_json(builtin_manifold(name))) << name;
  }
}
