#include "runyon/errors.hpp"
#include "runyon/serialize.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace testing_support;

TEST(Serialize, RationalForms) {
  EXPECT_EQ(runyon::to_json(Rational(3)), "3");
  EXPECT_EQ(runyon::to_json(Rational(-3, 6)), "-1/2");
}

TEST(Serialize, PolyShape) {
  const auto j = runyon::to_json(2 * A * B - B);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2U);
  EXPECT_EQ(j[0]["coefficient"], "2");
  EXPECT_EQ(j[0]["exponents"]["alpha"], 1);
  EXPECT_EQ(runyon::to_json(MultiPoly()), runyon::Json::array());
}

TEST(Serialize, PolyRoundTripProperty) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const MultiPoly p = random_poly(rng);
    const auto text = runyon::to_json(p).dump();
    EXPECT_EQ(runyon::multipoly_from_json(runyon::Json::parse(text)), p);
  }
}

TEST(Serialize, RatFuncRoundTrip) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const RatFunc r(random_poly(rng), random_nonzero_poly(rng));
    const auto back = runyon::ratfunc_from_json(runyon::Json::parse(runyon::to_json(r).dump()));
    EXPECT_TRUE(runyon::alg::ratfunc_eq(back, r));
  }
}

TEST(Serialize, GPolyShape) {
  const auto j = runyon::to_json(runyon::g_recurrence(2));
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["A"].size(), 2U);
  EXPECT_TRUE(j.contains("ratfunc"));
}

TEST(Serialize, SeriesShape) {
  runyon::series::TruncSeries<Rational> s("t", 2);
  s.set(1, Rational(1, 2));
  EXPECT_EQ(runyon::to_json(s).dump(), R"({"variable":"t","order":2,"coeffs":["0","1/2","0"]})");
}

TEST(Serialize, ParseErrors) {
  using runyon::Json;
  EXPECT_THROW(runyon::multipoly_from_json(Json::object()), runyon::ParseError);
  EXPECT_THROW(runyon::multipoly_from_json(Json::parse(R"([{"coefficient":"1/0","exponents":{}}])")), runyon::ParseError);
  EXPECT_THROW(runyon::multipoly_from_json(Json::parse(R"([{"coefficient":"1","exponents":{"z":1}}])")), runyon::ParseError);
  EXPECT_THROW(runyon::multipoly_from_json(Json::parse(R"([{"coefficient":"1","exponents":{"x":-1}}])")), runyon::ParseError);
  EXPECT_THROW(runyon::ratfunc_from_json(Json::parse(R"({"num":[]})")), runyon::ParseError);
  EXPECT_THROW(runyon::ratfunc_from_json(Json::parse(R"({"num":[],"den":[]})")), runyon::ParseError);
}
