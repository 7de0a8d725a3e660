#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "krc/cartan.hpp"
#include "krc/weyl.hpp"

namespace krc {

inline constexpr std::size_t kDefaultNodeCap = 1000000;

/// Canonical payload of a crystal element (tableau entries, factor indices,
/// folding positions, ...). Ordered and hashable.
struct Element {
  std::vector<int> data;
  auto operator<=>(const Element&) const = default;
  bool operator==(const Element&) const = default;
};

struct ElementHash {
  std::size_t operator()(const Element& b) const noexcept;
};

/// Abstract crystal given by its operators. Colors are the affine nodes 0..n.
class Crystal {
 public:
  virtual ~Crystal() = default;
  virtual const CartanPtr& cartan() const = 0;
  virtual std::optional<Element> f(const Element& b, int i) const = 0;
  virtual std::optional<Element> e(const Element& b, int i) const = 0;
  virtual Weight weight(const Element& b) const = 0;
  virtual std::string repr(const Element& b) const = 0;
};

std::vector<int> all_colors(const CartanData& cartan);
std::vector<int> classical_colors(const CartanData& cartan);

struct CrystalNode {
  Element payload;
  Weight wt;
  std::string repr;
};

/// Explicit crystal graph: f-edges per color, with string statistics derived
/// from the edges actually present.
class CrystalGraph {
 public:
  explicit CrystalGraph(CartanPtr cartan);

  const CartanPtr& cartan_ptr() const { return cartan_; }
  const CartanData& cartan() const { return *cartan_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  int num_colors() const { return cartan_->rank() + 1; }

  int add_node(Element payload, Weight wt, std::string repr);
  /// Records f_color(src) = dst.
  void set_edge(int color, int src, int dst);
  void remove_edge(int color, int src);

  const CrystalNode& node(int b) const { return nodes_[b]; }
  const Weight& weight(int b) const { return nodes_[b].wt; }
  const std::string& repr(int b) const { return nodes_[b].repr; }
  std::optional<int> find(const Element& payload) const;
  /// -1 when the operator annihilates b.
  int f(int b, int i) const { return f_[i][b]; }
  int e(int b, int i) const { return e_[i][b]; }
  int epsilon(int b, int i) const;
  int phi(int b, int i) const;
  std::size_t edge_count() const;
  std::size_t edge_count(int color) const;

  std::optional<int> anchor_max;
  std::optional<int> anchor_min;
  /// For induced subgraphs: node index in the parent graph.
  std::vector<int> origin;

 private:
  CartanPtr cartan_;
  std::vector<CrystalNode> nodes_;
  std::vector<std::vector<int>> f_;
  std::vector<std::vector<int>> e_;
  std::unordered_map<Element, int, ElementHash> index_;
};

/// Crystal view of an explicit graph; payload is {node index}.
class GraphCrystal : public Crystal {
 public:
  explicit GraphCrystal(std::shared_ptr<const CrystalGraph> graph) : graph_(std::move(graph)) {}
  const CartanPtr& cartan() const override { return graph_->cartan_ptr(); }
  std::optional<Element> f(const Element& b, int i) const override;
  std::optional<Element> e(const Element& b, int i) const override;
  Weight weight(const Element& b) const override { return graph_->weight(b.data[0]); }
  std::string repr(const Element& b) const override { return graph_->repr(b.data[0]); }

 private:
  std::shared_ptr<const CrystalGraph> graph_;
};

/// Position of the factor acted on by f_i / e_i under the signature rule.
/// Input lists (phi_i, epsilon_i) of the factors from left to right.
struct SignatureResult {
  int f_factor = -1;  // contributes the rightmost surviving '-'
  int e_factor = -1;  // contributes the leftmost surviving '+'
  int phi = 0;
  int epsilon = 0;
};
SignatureResult signature_rule(const std::vector<std::pair<int, int>>& phi_eps);

/// B_L (x) ... (x) B_1, factors listed left to right; payload holds one node
/// index per factor.
class TensorCrystal : public Crystal {
 public:
  explicit TensorCrystal(std::vector<std::shared_ptr<const CrystalGraph>> factors);

  const CartanPtr& cartan() const override { return cartan_; }
  std::optional<Element> f(const Element& b, int i) const override;
  std::optional<Element> e(const Element& b, int i) const override;
  Weight weight(const Element& b) const override;
  std::string repr(const Element& b) const override;

  /// Two-factor closed form (case split on epsilon(b_2) vs phi(b_1)).
  std::optional<Element> f_pairwise(const Element& b, int i) const;
  std::optional<Element> e_pairwise(const Element& b, int i) const;

  std::size_t cardinality() const;
  /// All elements in lexicographic order of factor indices.
  std::vector<Element> elements() const;
  const std::vector<std::shared_ptr<const CrystalGraph>>& factors() const { return factors_; }

 private:
  CartanPtr cartan_;
  std::vector<std::shared_ptr<const CrystalGraph>> factors_;
};

/// Closure of the seeds under f_i and e_i for the given colors, numbered in
/// breadth-first order (colors ascending, f before e).
CrystalGraph explore(const Crystal& crystal, const std::vector<Element>& seeds, const std::vector<int>& colors,
                     std::size_t node_cap = kDefaultNodeCap);

/// Graph on exactly the given elements, numbered in the given order; the set
/// must be closed under the operators for the given colors.
CrystalGraph materialize(const Crystal& crystal, const std::vector<Element>& elements,
                         const std::vector<int>& colors);

/// Full tensor product graph, nodes in lexicographic order, anchors detected.
CrystalGraph tensor_graph(const std::vector<std::shared_ptr<const CrystalGraph>>& factors,
                          std::size_t node_cap = kDefaultNodeCap);

/// One-element crystal of weight 0 with all statistics zero.
CrystalGraph trivial_crystal(CartanPtr cartan);

enum class FilterMode { Head, Tail };

/// Head: keep a 0-edge b' -> b iff epsilon_0(b) > level (level-l Demazure
/// edges). Tail: keep iff phi_0(b) >= level (level-l dual Demazure edges).
CrystalGraph demazure_filter(const CrystalGraph& g, int level, FilterMode mode);

CrystalGraph induced_subgraph(const CrystalGraph& g, const std::vector<int>& nodes);

/// Weakly connected components sorted by (size, sorted weight multiset).
std::vector<CrystalGraph> components(const CrystalGraph& g);
bool is_connected(const CrystalGraph& g);

enum class AnchorMode { Min, Max };

/// Unique node whose weight is dominance-minimal (Min) or maximal (Max)
/// among all nodes; throws AmbiguousAnchor otherwise.
int find_anchor(const CrystalGraph& g, AnchorMode mode);
std::optional<int> try_find_anchor(const CrystalGraph& g, AnchorMode mode);
/// Fills anchor_min / anchor_max where they exist.
void detect_anchors(CrystalGraph& g);

using NodeMap = std::vector<int>;

/// Extends a -> a2 edge by edge; returns the bijection if it is total, weight
/// preserving and edge preserving in both directions.
std::optional<NodeMap> iso_from(const CrystalGraph& c, int a, const CrystalGraph& c2, int a2);
/// Isomorphism of connected graphs anchored at their extremal elements.
std::optional<NodeMap> iso_check(const CrystalGraph& c, const CrystalGraph& c2, AnchorMode mode);
/// Complete test for connected graphs: tries every candidate image of one node.
std::optional<NodeMap> find_isomorphism(const CrystalGraph& c, const CrystalGraph& c2);
/// Isomorphism of possibly disconnected graphs: components are paired up
/// (bipartite matching over isomorphic pairs) and the maps glued together.
std::optional<NodeMap> find_isomorphism_any(const CrystalGraph& c, const CrystalGraph& c2);
/// Independent re-validation of a claimed isomorphism.
bool verify_isomorphism(const CrystalGraph& c, const CrystalGraph& c2, const NodeMap& map);

/// Nodes b with e_{i_1}^max ... e_{i_k}^max b = hw (finite-type Demazure crystal).
std::vector<int> demazure_subset(const CrystalGraph& g, int hw, const std::vector<int>& word,
                                 const WeylGroup& weyl);

/// Kashiwara's action of s_i.
int weyl_action(const CrystalGraph& g, int b, int i);

/// Checks the similarity conditions for sigma: B -> B' with factor m.
bool similarity_check(const NodeMap& sigma, int m, const CrystalGraph& b, const CrystalGraph& b2,
                      const std::vector<int>& colors);

/// Weights of the nodes annihilated by every e_i, i in colors; sorted.
std::vector<Weight> hw_census(const CrystalGraph& g, const std::vector<int>& colors);

/// First violation of the crystal axioms for the given colors, if any.
/// Checks phi = epsilon + <alpha_i^vee, wt>, e/f inverse pairing and the
/// weight change along edges.
std::optional<std::string> seminormal_violation(const CrystalGraph& g, const std::vector<int>& colors);
/// Edge/weight axioms only (no string-length identity); for filtered graphs.
std::optional<std::string> edge_axiom_violation(const CrystalGraph& g, const std::vector<int>& colors);

}  // namespace krc
