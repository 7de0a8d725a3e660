#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "krc/alcove.hpp"
#include "krc/crystal.hpp"
#include "krc/kr.hpp"

namespace krc {

struct Report {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  bool pass = false;
  nlohmann::json witnesses = nlohmann::json::object();
  double elapsed_ms = 0;

  nlohmann::json to_json() const;
};

std::string junit_xml(const std::vector<Report>& reports, const std::string& suite = "krc");

using Factors = std::vector<std::pair<int, int>>;

/// A tensor product as built from a spec. The C_2 B^{1,2} graph exists only
/// as the level-1 Demazure fixture, which is flagged as already filtered.
struct BuiltCrystal {
  CrystalGraph graph;
  std::optional<int> prefiltered_level;
};

BuiltCrystal build_spec(const CartanPtr& cartan, const Factors& factors, std::size_t cap = kDefaultNodeCap);
CrystalGraph filtered(const BuiltCrystal& b, int level, FilterMode mode);

/// ceil(s / c_r).
int factor_level(const CartanData& cartan, int r, int s);
Weight maximal_weight(const CartanData& cartan, const Factors& factors);

/// Pairs up the components of two graphs by isomorphism: greedy by (size,
/// anchor weight), then bipartite matching. Returns match[i] = partner of a[i].
std::optional<std::vector<int>> match_components(const std::vector<CrystalGraph>& a,
                                                 const std::vector<CrystalGraph>& b);

/// Compares the components of the extremal element (min for Head, max for
/// Tail) of the level-`level` filtrations of B and B'.
Report check_reduction(const CartanPtr& cartan, const Factors& b, const Factors& b2, int level, FilterMode mode,
                       bool verify_connected = false, std::size_t cap = kDefaultNodeCap);

Report check_bmin(const CartanPtr& cartan, const Factors& b, int level, std::size_t cap = kDefaultNodeCap);

Report check_qsystem_typeA(int n, int a, int m, int level, std::size_t cap = kDefaultNodeCap);

Report check_character_qsystem(int n, int a, int m);

Report check_alcove_correspondence(const CartanPtr& cartan, const Weight& lambda, int level, int threads = 1,
                                   std::size_t cap = kDefaultNodeCap);

/// Rebuilds the two crystals of the C_2 example figure and compares them with
/// the transcribed fixtures node for node.
Report check_figure();

}  // namespace krc
