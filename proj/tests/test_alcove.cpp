#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "krc/alcove.hpp"
#include "krc/errors.hpp"
#include "krc/kr.hpp"

using namespace krc;

namespace {

struct Case {
  const char* type;
  std::vector<int> lambda;
};

const std::vector<Case> kCases{{"A1", {1}},       {"A1", {2}},          {"A2", {1, 0}},    {"A2", {0, 1}},
                               {"A2", {1, 1}},    {"A2", {2, 0}},       {"A2", {1, 2}},    {"A3", {0, 1, 0}},
                               {"A3", {1, 0, 1}}, {"C2", {1, 0}},       {"C2", {0, 1}},    {"C2", {2, 0}},
                               {"C2", {1, 1}},    {"B3", {1, 0, 0}},    {"C3", {0, 1, 0}}, {"D4", {1, 0, 0, 0}},
                               {"B3", {0, 0, 1}}, {"D4", {0, 0, 0, 1}}};

std::map<Weight, int> weight_multiset(const CrystalGraph& g) {
  std::map<Weight, int> m;
  for (int b = 0; b < g.size(); ++b) ++m[g.weight(b)];
  return m;
}

}  // namespace

TEST_CASE("lambda-chain lengths") {
  auto a1 = CartanData::parse("A1");
  CHECK(build_lambda_chain(a1, Weight({2})).size() == 2);
  auto a2 = CartanData::parse("A2");
  CHECK(build_lambda_chain(a2, Weight({1, 0})).size() == 2);
  CHECK(build_lambda_chain(a2, Weight({1, 1})).size() == 4);
  // C2 with 2 varpi_1 = 2e_1: the coroots of a1, a2, a1+a2, 2a1+a2 are e1-e2, e2, e1+e2, e1.
  CHECK(build_lambda_chain(CartanData::parse("C2"), Weight({2, 0})).size() == 6);
}

TEST_CASE("lambda-chains satisfy the multiplicity and walk invariants") {
  for (const auto& c : kCases)
    for (auto order : {ChainOrder::Lex, ChainOrder::ReverseLex}) {
      CAPTURE(c.type);
      auto cartan = CartanData::parse(c.type);
      const Weight lam(c.lambda);
      const auto chain = build_lambda_chain(cartan, lam, order);
      const auto violation = chain_violation(chain);
      CHECK_MESSAGE(!violation.has_value(), violation.value_or(""));
      const auto& roots = cartan->positive_roots();
      std::vector<int> count(roots.size(), 0);
      for (int k = 0; k < chain.size(); ++k) ++count[chain.roots[k]];
      for (std::size_t b = 0; b < roots.size(); ++b) CHECK(count[b] == cartan->pairing(roots[b], lam));
      for (int k = 0; k < chain.size(); ++k) {
        CHECK(chain.l[k] + chain.l_tilde[k] == cartan->pairing(chain.root(k), lam));
        CHECK(chain.l[k] >= 0);
      }
    }
}

TEST_CASE("admissible subset counts") {
  auto a2 = CartanData::parse("A2");
  auto qbg = qbg_for(a2);
  CHECK(enumerate_admissible(build_lambda_chain(a2, Weight({1, 0})), *qbg).size() == 3);
  CHECK(enumerate_admissible(build_lambda_chain(a2, Weight({1, 1})), *qbg).size() == 9);
  CHECK(enumerate_admissible(build_lambda_chain(a2, Weight({2, 0})), *qbg).size() == 9);
  // Every enumerated subset is admissible, and every admissible subset is enumerated.
  const auto chain = build_lambda_chain(a2, Weight({1, 1}));
  const auto subs = enumerate_admissible(chain, *qbg);
  int total = 0;
  for (int mask = 0; mask < (1 << chain.size()); ++mask) {
    Subset j;
    for (int k = 0; k < chain.size(); ++k)
      if (mask >> k & 1) j.push_back(k);
    if (is_admissible(chain, *qbg, j)) {
      ++total;
      CHECK(std::find(subs.begin(), subs.end(), j) != subs.end());
    }
  }
  CHECK(total == static_cast<int>(subs.size()));
  CHECK_THROWS_AS(enumerate_admissible(chain, *qbg, 3), ResourceLimit);
}

TEST_CASE("folding of the empty subset and of a single fold") {
  auto a2 = CartanData::parse("A2");
  const auto chain = build_lambda_chain(a2, Weight({1, 0}));
  const WeylGroup& w = qbg_for(a2)->weyl();
  const auto f0 = fold(chain, w, {});
  CHECK(f0.weight == Weight({1, 0}));
  CHECK(f0.final_direction == w.identity());
  CHECK(f0.gamma_inf == a2->rho());
  for (int k = 0; k < chain.size(); ++k) {
    CHECK(f0.gamma[k] == chain.root(k));
    CHECK(f0.level[k] == chain.l[k]);
  }
  // B(varpi_1) of A2 has weights varpi_1, varpi_2 - varpi_1, -varpi_2.
  std::map<Weight, int> expected{{Weight({1, 0}), 1}, {Weight({-1, 1}), 1}, {Weight({0, -1}), 1}};
  std::map<Weight, int> got;
  for (const auto& j : enumerate_admissible(chain, *qbg_for(a2))) ++got[fold(chain, w, j).weight];
  CHECK(got == expected);
  const auto f1 = fold(chain, w, {0});
  CHECK(f1.final_direction == w.reflection(chain.root(0)));
  CHECK(f1.gamma[0] == chain.root(0));
  CHECK(f1.positive_fold == std::vector<char>{1});
}

TEST_CASE("alcove operators") {
  for (const auto& c : kCases) {
    CAPTURE(c.type);
    auto cartan = CartanData::parse(c.type);
    for (int level = 1; level <= 2; ++level) {
      const auto a = alcove_crystal(cartan, Weight(c.lambda), level);
      const WeylGroup& w = qbg_for(cartan)->weyl();
      const auto qbg = qbg_for(cartan);
      const Weight theta = cartan->root_weight(cartan->highest_root());
      for (int k = 0; k < static_cast<int>(a.subsets.size()); ++k) {
        const auto& j = a.subsets[k];
        for (int p = 0; p <= cartan->rank(); ++p) {
          const Weight alpha = p == 0 ? -theta : cartan->simple_root_weight(p);
          if (auto y = alcove_f(a.chain, w, j, p, level)) {
            CHECK(is_admissible(a.chain, *qbg, *y));
            CHECK(alcove_e(a.chain, w, *y, p, level) == j);
            CHECK(fold(a.chain, w, *y).weight == fold(a.chain, w, j).weight - alpha);
          }
          if (auto y = alcove_e(a.chain, w, j, p, level)) {
            CHECK(is_admissible(a.chain, *qbg, *y));
            CHECK(alcove_f(a.chain, w, *y, p, level) == j);
          }
        }
      }
      const auto v = seminormal_violation(a.graph, classical_colors(*cartan));
      CHECK_MESSAGE(!v.has_value(), v.value_or(""));
      const auto e = edge_axiom_violation(a.graph, all_colors(*cartan));
      CHECK_MESSAGE(!e.has_value(), e.value_or(""));
    }
  }
}

TEST_CASE("phi_0 formula counts the 0-string") {
  auto a2 = CartanData::parse("A2");
  const WeylGroup& w = qbg_for(a2)->weyl();
  for (auto lam : {Weight({1, 1}), Weight({2, 0})}) {
    const auto a = alcove_crystal(a2, lam, 1);
    for (int k = 0; k < a.graph.size(); ++k) CHECK(phi0(a.chain, w, a.subsets[k]) == a.graph.phi(k, 0));
  }
}

TEST_CASE("alcove crystal character equals the product of column characters") {
  for (const auto& c : std::vector<Case>{{"A2", {1, 1}}, {"A2", {2, 0}}, {"A3", {1, 0, 1}}, {"A2", {1, 2}}}) {
    auto cartan = CartanData::parse(c.type);
    std::vector<std::pair<int, int>> f;
    for (int p = 1; p <= cartan->rank(); ++p)
      for (int k = 0; k < c.lambda[p - 1]; ++k) f.emplace_back(p, 1);
    CHECK(weight_multiset(alcove_crystal(cartan, Weight(c.lambda), 1).graph) ==
          weight_multiset(kr_tensor(cartan, f)));
  }
}

TEST_CASE("the reverse lexicographic chain gives an isomorphic crystal") {
  for (const auto& c : std::vector<Case>{{"A2", {1, 1}}, {"A2", {2, 0}}, {"C2", {1, 1}}, {"A3", {1, 0, 1}}}) {
    CAPTURE(c.type);
    auto cartan = CartanData::parse(c.type);
    const auto lex = alcove_crystal(cartan, Weight(c.lambda), 1, 1, ChainOrder::Lex);
    const auto rev = alcove_crystal(cartan, Weight(c.lambda), 1, 1, ChainOrder::ReverseLex);
    auto map = find_isomorphism_any(lex.graph, rev.graph);
    REQUIRE(map.has_value());
    CHECK(verify_isomorphism(lex.graph, rev.graph, *map));
  }
}

TEST_CASE("higher levels remove the tails of 0-strings") {
  for (const auto& c : std::vector<Case>{{"A2", {2, 0}}, {"A2", {1, 1}}, {"A2", {1, 2}}, {"C2", {2, 0}}}) {
    auto cartan = CartanData::parse(c.type);
    const auto one = alcove_crystal(cartan, Weight(c.lambda), 1);
    for (int level = 2; level <= 3; ++level) {
      CAPTURE(level);
      const auto big = alcove_crystal(cartan, Weight(c.lambda), level);
      REQUIRE(big.subsets == one.subsets);
      const auto audit = demazure_filter(one.graph, level - 1, FilterMode::Tail);
      for (int b = 0; b < big.graph.size(); ++b)
        for (int p = 0; p <= cartan->rank(); ++p) CHECK(big.graph.f(b, p) == audit.f(b, p));
    }
  }
}

TEST_CASE("threads do not change the crystal") {
  auto a3 = CartanData::parse("A3");
  const auto one = alcove_crystal(a3, Weight({1, 1, 1}), 1, 1);
  const auto four = alcove_crystal(a3, Weight({1, 1, 1}), 1, 4);
  REQUIRE(one.graph.size() == four.graph.size());
  for (int b = 0; b < one.graph.size(); ++b) {
    CHECK(one.graph.repr(b) == four.graph.repr(b));
    for (int p = 0; p <= 3; ++p) CHECK(one.graph.f(b, p) == four.graph.f(b, p));
  }
}

TEST_CASE("subset formatting and errors") {
  CHECK(subset_str({0, 2}) == "{1,3}");
  CHECK(subset_str({}) == "{}");
  CHECK_THROWS_AS(alcove_crystal(CartanData::parse("A2"), Weight({1, 0}), 0), InvalidArgument);
  CHECK_THROWS_AS(build_lambda_chain(CartanData::parse("A2"), Weight({-1, 0})), InvalidArgument);
}
