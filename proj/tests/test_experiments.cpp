#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "krc/errors.hpp"
#include "krc/experiments.hpp"
#include "krc/io.hpp"

using namespace krc;

TEST_CASE("factor levels and maximal weights") {
  auto c2 = CartanData::parse("C2");
  CHECK(factor_level(*c2, 1, 1) == 1);
  CHECK(factor_level(*c2, 1, 2) == 1);
  CHECK(factor_level(*c2, 1, 3) == 2);
  CHECK(factor_level(*c2, 2, 2) == 2);
  auto a2 = CartanData::parse("A2");
  CHECK(factor_level(*a2, 2, 3) == 3);
  CHECK(maximal_weight(*a2, {{1, 2}, {2, 1}}) == Weight({2, 1}));
  CHECK(maximal_weight(*a2, {}) == Weight({0, 0}));
}

TEST_CASE("build specs") {
  auto c2 = CartanData::parse("C2");
  auto b12 = build_spec(c2, {{1, 2}});
  CHECK(b12.prefiltered_level == 1);
  CHECK(filtered(b12, 1, FilterMode::Head).size() == 11);
  CHECK_THROWS_AS(filtered(b12, 1, FilterMode::Tail), Unsupported);
  CHECK_THROWS_AS(filtered(b12, 2, FilterMode::Head), Unsupported);
  CHECK_THROWS_AS(build_spec(c2, {{2, 1}}), Unsupported);
  CHECK_THROWS_AS(build_spec(c2, {{3, 1}}), InvalidArgument);
  auto left = filtered(build_spec(c2, {{1, 1}, {1, 1}}), 1, FilterMode::Head);
  CHECK(left.size() == 16);
  CHECK(left.edge_count() == 15);
  CHECK(build_spec(CartanData::parse("A2"), {}).graph.size() == 1);
}

TEST_CASE("reduction is reflexive") {
  auto a2 = CartanData::parse("A2");
  for (Factors f : {Factors{{1, 1}, {2, 1}}, Factors{{1, 2}}, Factors{{2, 1}, {2, 1}}})
    for (auto mode : {FilterMode::Head, FilterMode::Tail}) {
      auto r = check_reduction(a2, f, f, 2, mode);
      CHECK(r.pass);
      CHECK(r.witnesses.contains("isomorphism"));
    }
}

TEST_CASE("reduction in C2 at level 1") {
  auto r = check_reduction(CartanData::parse("C2"), {{1, 1}, {1, 1}}, {{1, 2}}, 1, FilterMode::Head);
  CHECK(r.pass);
  CHECK(r.witnesses["sizes"] == nlohmann::json::array({11, 11}));
}

TEST_CASE("reduction preconditions") {
  auto a2 = CartanData::parse("A2");
  CHECK_THROWS_AS(check_reduction(a2, {{1, 1}}, {{2, 1}}, 1, FilterMode::Head), PreconditionError);
  CHECK_THROWS_AS(check_reduction(a2, {{1, 2}}, {{1, 1}, {1, 1}}, 1, FilterMode::Head), PreconditionError);
}

TEST_CASE("b_min checks inside the hypothesis") {
  auto a2 = CartanData::parse("A2");
  CHECK(check_bmin(a2, {{1, 1}, {2, 1}}, 1).pass);
  CHECK(check_bmin(a2, {{1, 1}, {2, 1}}, 2).pass);
  CHECK(check_bmin(a2, {{1, 2}, {1, 1}}, 2).pass);
  CHECK(check_bmin(a2, {{2, 2}}, 2).pass);
  auto c2 = CartanData::parse("C2");
  CHECK(check_bmin(c2, {{1, 1}, {1, 1}}, 1).pass);
  CHECK(check_bmin(c2, {{1, 2}}, 1).pass);
  auto r = check_bmin(a2, {{1, 1}, {2, 1}}, 1);
  CHECK(r.witnesses["max_factor_level"] == 1);
}

TEST_CASE("Q-system crystal identities") {
  auto r = check_qsystem_typeA(2, 1, 2, 2);
  CHECK(r.pass);
  CHECK(r.witnesses["sizes"]["lhs"] == 9);
  CHECK(r.witnesses["sizes"]["rhs_first"] == 6);
  CHECK(r.witnesses["sizes"]["rhs_second"] == 3);
  CHECK(check_qsystem_typeA(2, 1, 1, 1).pass);
  CHECK_THROWS_AS(check_qsystem_typeA(2, 3, 2, 2), InvalidArgument);
  CHECK_THROWS_AS(check_qsystem_typeA(2, 1, 3, 2), PreconditionError);
}

TEST_CASE("Q-system character identities") {
  for (int n : {1, 2, 3})
    for (int a = 1; a <= n; ++a)
      for (int m = 1; m <= 3; ++m) CHECK(check_character_qsystem(n, a, m).pass);
}

TEST_CASE("component matching") {
  auto a2 = CartanData::parse("A2");
  auto g = demazure_filter(kr_tensor(a2, {{1, 1}, {1, 1}}), 1, FilterMode::Head);
  auto comps = components(g);
  auto match = match_components(comps, comps);
  REQUIRE(match.has_value());
  for (std::size_t k = 0; k < comps.size(); ++k) CHECK(comps[k].size() == comps[(*match)[k]].size());
  std::vector<CrystalGraph> fewer(comps.begin(), comps.end() - 1);
  CHECK_FALSE(match_components(comps, fewer).has_value());
}

TEST_CASE("alcove correspondence") {
  auto a2 = CartanData::parse("A2");
  auto r = check_alcove_correspondence(a2, Weight({1, 1}), 1);
  CHECK(r.pass);
  CHECK(r.witnesses["sizes"] == nlohmann::json::array({9, 9}));
  CHECK_THROWS_AS(check_alcove_correspondence(CartanData::parse("C2"), Weight({1, 0}), 1), Unsupported);
}

TEST_CASE("figure") {
  auto r = check_figure();
  CHECK(r.pass);
  CHECK(r.witnesses["left"]["nodes"] == 16);
  CHECK(r.witnesses["left"]["edges"] == 15);
  CHECK(r.witnesses["right"]["nodes"] == 11);
  CHECK(r.witnesses["right"]["edges"] == 11);
}

TEST_CASE("reports serialize") {
  Report r;
  r.name = "x";
  r.params = {{"a", 1}};
  r.pass = false;
  r.witnesses = {{"counterexample", "a<b & \"c\""}};
  auto j = r.to_json();
  CHECK(j["status"] == "fail");
  const auto xml = junit_xml({r});
  CHECK(xml.find("failures=\"1\"") != std::string::npos);
  CHECK(xml.find("&lt;") != std::string::npos);
  CHECK(xml.find("&quot;") != std::string::npos);
}

TEST_CASE("graph export is deterministic") {
  auto a2 = CartanData::parse("A2");
  auto g1 = kr_tensor(a2, {{1, 1}, {2, 1}});
  auto g2 = kr_tensor(a2, {{1, 1}, {2, 1}});
  CHECK(graph_to_dot(g1) == graph_to_dot(g2));
  CHECK(graph_to_json(g1).dump() == graph_to_json(g2).dump());
  auto j = graph_to_json(kr_tensor(a2, {{1, 1}}));
  CHECK(j["nodes"].size() == 3);
  CHECK(j["edges"].size() == 3);
  CHECK(graph_to_dot(fixture_C2("B12")).find("color=black") != std::string::npos);
}
