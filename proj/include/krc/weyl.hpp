#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "krc/cartan.hpp"

namespace krc {

inline constexpr std::size_t kDefaultWeylCap = 100000;

/// Element of the finite Weyl group W0, stored by its action on the
/// fundamental weights: column j of `matrix` is w(varpi_{j+1}).
struct WeylElement {
  std::vector<int> matrix;  // row-major rank x rank
  Weight rho_image;         // w(rho); determines w since rho is regular
  int length = 0;
};

/// Enumerated finite Weyl group. Elements are numbered in breadth-first order
/// from the identity (so by nondecreasing length); index 0 is the identity.
class WeylGroup {
 public:
  static std::shared_ptr<const WeylGroup> build(CartanPtr cartan, std::size_t cap = kDefaultWeylCap);

  const CartanData& cartan() const { return *cartan_; }
  const CartanPtr& cartan_ptr() const { return cartan_; }
  std::size_t size() const { return elements_.size(); }
  const WeylElement& element(int w) const { return elements_[w]; }
  int identity() const { return 0; }
  int longest() const { return longest_; }
  int length(int w) const { return elements_[w].length; }

  /// Index of the element with the given action matrix, or -1.
  int find(const std::vector<int>& matrix) const;
  int times_simple(int w, int i) const { return right_simple_[w][i - 1]; }
  int multiply(int a, int b) const;
  int inverse(int w) const;
  /// s_beta for a (positive or negative) root beta.
  int reflection(const Root& beta) const;
  /// w * s_beta for the positive root with the given index.
  int times_reflection(int w, int positive_index) const { return right_reflection_[w][positive_index]; }
  int from_word(const std::vector<int>& word) const;
  /// Reduced word (i_1, ..., i_k) with w = s_{i_1} ... s_{i_k}.
  std::vector<int> reduced_word(int w) const;
  bool is_reduced(const std::vector<int>& word) const;

  Weight act(int w, const Weight& mu) const;
  Root act(int w, const Root& beta) const;

  /// Strong Bruhat order via the subword criterion on a reduced word of w.
  bool bruhat_leq(int v, int w) const;

 private:
  WeylGroup() = default;
  std::vector<int> multiply_matrices(const std::vector<int>& a, const std::vector<int>& b) const;
  std::vector<int> reflection_matrix(const Root& beta) const;

  CartanPtr cartan_;
  std::vector<WeylElement> elements_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> right_simple_;
  std::vector<std::vector<int>> right_reflection_;
  int longest_ = 0;
};

using WeylPtr = std::shared_ptr<const WeylGroup>;

struct QbgEdge {
  int source = 0;
  int target = 0;
  int root = 0;  // index into CartanData::positive_roots()
  bool up = true;
};

/// The quantum Bruhat graph on W0.
class QuantumBruhatGraph {
 public:
  static std::shared_ptr<const QuantumBruhatGraph> build(WeylPtr weyl);

  const WeylGroup& weyl() const { return *weyl_; }
  const WeylPtr& weyl_ptr() const { return weyl_; }
  /// Ordered by (length of source, source, root coordinates).
  const std::vector<QbgEdge>& edges() const { return edges_; }
  /// Target of the edge w --beta--> w s_beta, or -1 if there is none.
  int target(int w, int positive_index) const { return target_[w][positive_index]; }
  bool is_up(int w, int positive_index) const { return up_[w][positive_index] != 0; }
  bool strongly_connected() const;
  std::string to_dot() const;

 private:
  QuantumBruhatGraph() = default;

  WeylPtr weyl_;
  std::vector<QbgEdge> edges_;
  std::vector<std::vector<int>> target_;
  std::vector<std::vector<char>> up_;
};

using QbgPtr = std::shared_ptr<const QuantumBruhatGraph>;

/// Memoised quantum Bruhat graph for a Cartan type.
QbgPtr qbg_for(const CartanPtr& cartan, std::size_t cap = kDefaultWeylCap);

/// Dominant representative of mu + level*Lambda_0 under the level-`level`
/// affine Weyl action, with a reduced word of the minimal w mapping it back.
struct Dominantization {
  Weight dominant;       // classical part of Lambda
  int level = 0;
  std::vector<int> word; // w = s_{word[0]} ... s_{word.back()}, w(Lambda) = mu + level*Lambda_0
};

/// s_i acting on the classical part of a level-`level` weight.
Weight affine_reflect(const CartanData& cartan, int i, const Weight& mu, int level);
Dominantization dominantize(const CartanData& cartan, const Weight& mu, int level);
/// Applies s_{word[0]} ... s_{word.back()} (rightmost first).
Weight apply_affine_word(const CartanData& cartan, const std::vector<int>& word, const Weight& mu, int level);

}  // namespace krc
