#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "rext/corpus.hpp"
#include "rext/io.hpp"
#include "rext/verify.hpp"

using namespace rext;

namespace {

std::size_t error_position(const std::string& text) {
  try {
    parse_diagram_spec(text);
  } catch (const parse_error& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST(Spec, Parse) {
  EXPECT_EQ(parse_diagram_spec("K:{}"), MayaDiagram());
  EXPECT_EQ(parse_diagram_spec("B:(2,3,5,7,10)"), MayaDiagram::from_index_set({0, 1, 3, 4, 7, 8, 9}));
  EXPECT_EQ(parse_diagram_spec("K:{-2,0}"), MayaDiagram::from_index_set({-2, 0}));
  EXPECT_EQ(parse_diagram_spec(" K : { 0 , -2 } "), MayaDiagram::from_index_set({-2, 0}));
  EXPECT_EQ(parse_diagram_spec("B:(0)"), MayaDiagram());
  EXPECT_EQ(parse_diagram_spec("B:(-2,-1,0)"), MayaDiagram::from_index_set({-2}));
}

TEST(Spec, ErrorsCarryPositions) {
  EXPECT_EQ(error_position(""), 0u);
  EXPECT_EQ(error_position("X:{1}"), 0u);
  EXPECT_EQ(error_position("K{1}"), 1u);
  EXPECT_EQ(error_position("K:{1,,2}"), 5u);
  EXPECT_EQ(error_position("K:{1,2"), 6u);
  EXPECT_EQ(error_position("K:{1,1}"), 5u);
  EXPECT_EQ(error_position("K:{1} x"), 6u);
  EXPECT_EQ(error_position("B:(1,2)"), 2u);
  EXPECT_EQ(error_position("B:(1,3,2)"), 2u);
  EXPECT_EQ(error_position("K:{99999999999}"), 3u);
}

TEST(Spec, FormatRoundTrips) {
  for (const auto& m : diagram_family(-4, 4, 3)) {
    ASSERT_EQ(parse_diagram_spec(format_diagram_spec(m)), m);
    ASSERT_EQ(parse_diagram_spec(format_block_spec(m)), m);
  }
  EXPECT_EQ(format_block_spec(MayaDiagram::from_index_set({0, 1, 3, 4, 7, 8, 9})), "B:(2,3,5,7,10)");
}

TEST(Spec, IntList) {
  EXPECT_EQ(parse_int_list("-2, 1,1"), (std::vector<int>{-2, 1, 1}));
  EXPECT_TRUE(parse_int_list("").empty());
  EXPECT_THROW(parse_int_list("1,x"), parse_error);
  EXPECT_THROW(parse_int_list("1.5"), parse_error);
}

TEST(Json, DiagramAndPolynomial) {
  const auto m = MayaDiagram::from_index_set({-2, 0});
  EXPECT_EQ(to_json(m).dump(), R"({"indexSet":[-2,0]})");
  EXPECT_EQ(diagram_from_json(to_json(m)), m);
  const Polynomial p{BigRational(1, 2), 0, -3};
  EXPECT_EQ(to_json(p).dump(), R"(["1/2","0","-3"])");
  EXPECT_EQ(polynomial_from_json(to_json(p)), p);
  EXPECT_THROW(polynomial_from_json(json::parse(R"(["1/0"])")), std::invalid_argument);
}

TEST(Json, RoundTrips) {
  for (const auto& m : diagram_family(-2, 2, 2)) {
    for (int k = -2; k <= 2; ++k) {
      const auto st = eigenfunction(m, k);
      ASSERT_EQ(gauged_from_json(json::parse(to_json(st.function).dump())), st.function);
      const auto a = intertwiner(m, {k, k + 3});
      ASSERT_EQ(operator_from_json(json::parse(to_json(a).dump())), a);
      ASSERT_EQ(rational_function_from_json(to_json(potential(m))), potential(m));
    }
  }
  const Arrow arrow{MayaDiagram::from_index_set({1, 2}), IntegerMultiset{0, 0, 3}};
  EXPECT_EQ(to_json(arrow).dump(), R"({"source":{"indexSet":[1,2]},"flips":[[0,2],[3,1]]})");
  EXPECT_EQ(arrow_from_json(json::parse(to_json(arrow).dump())), arrow);
  EXPECT_THROW(multiset_from_json(json::parse("[[1,0]]")), std::invalid_argument);
}

TEST(Corpus, FixturesAreDeterministic) {
  const auto a = golden_corpus();
  const auto b = golden_corpus();
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].first, b[i].first);
    EXPECT_EQ(dump_fixture(a[i].second), dump_fixture(b[i].second));
  }
}

TEST(Corpus, SingleFlipFixtureContents) {
  const auto j = single_flip_family_fixture(2);
  EXPECT_EQ(j.at("diagram").at("indexSet"), json::array({-2}));
  EXPECT_EQ(j.at("genus"), 1);
  EXPECT_EQ(j.at("ladder1").at("order"), 3);
  EXPECT_EQ(j.at("ladderN").at("order"), 2);
  EXPECT_EQ(j.at("syzygy").at("identityHolds"), true);
  EXPECT_EQ(j.at("syzygy").at("multiset"), json::parse("[[-2,1],[-1,2],[0,2],[1,1]]"));
}
