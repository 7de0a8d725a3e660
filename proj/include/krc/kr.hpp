#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "krc/crystal.hpp"

namespace krc {

/// Rectangular semistandard tableau, entries stored row-major.
struct RectTableau {
  int rows = 0;
  int cols = 0;
  std::vector<int> entries;

  int at(int r, int c) const { return entries[r * cols + c]; }
  int& at(int r, int c) { return entries[r * cols + c]; }
  bool semistandard(int max_entry) const;
  /// Column reading word: columns left to right, each read bottom to top.
  std::vector<int> reading_word() const;
  /// "[[1,1],[2,3]]"
  std::string str() const;

  auto operator<=>(const RectTableau&) const = default;
  bool operator==(const RectTableau&) const = default;
};

/// All r x s semistandard tableaux over 1..max_entry, in lexicographic order
/// of their row-major entries.
std::vector<RectTableau> rect_tableaux(int r, int s, int max_entry, std::size_t cap = kDefaultNodeCap);

/// Schützenberger promotion on entries 1..n+1.
RectTableau promotion(const RectTableau& t, int n);

/// Type A_n^{(1)} KR crystal B^{r,s}; payload is the row-major tableau.
CrystalGraph kr_typeA(int n, int r, int s, std::size_t cap = kDefaultNodeCap);

/// Orientation self-check result for the type A 0-arrows: true when
/// pr^{-1} f_1 pr raises weights by theta on every tested rectangle.
bool typeA_promotion_orientation_ok(int n, int r, int s);

/// Type C_n^{(1)} B^{1,1} on the letters 1 < ... < n < -n < ... < -1.
CrystalGraph kr_C_onebox(int n);

/// Graphs transcribed from the C_2 example figure: "tensor11" is the level-1
/// Demazure filtration of B^{1,1} (x) B^{1,1}, "B12" that of B^{1,2}.
CrystalGraph fixture_C2(std::string_view which);

/// Column-replication map B^{r,s} -> B^{r,ms} in type A.
NodeMap column_replication(const CrystalGraph& small, const CrystalGraph& big, int rows, int m);

/// Finite-type highest weight crystal B(lambda) (types A and C), realised as
/// the component of a tensor power of the vector representation.
CrystalGraph highest_weight_crystal(const CartanPtr& cartan, const Weight& lambda);

/// Parses "r,s:r,s:..." into (r, s) pairs, listed left to right.
std::vector<std::pair<int, int>> parse_factors(std::string_view spec);

/// B^{r,s} for the given type where a model exists: any rectangle in type A,
/// B^{1,1} in type C. s = 0 gives the trivial crystal.
std::shared_ptr<const CrystalGraph> kr_crystal(const CartanPtr& cartan, int r, int s,
                                               std::size_t cap = kDefaultNodeCap);

/// Tensor product of KR crystals; an empty factor list gives the trivial crystal.
CrystalGraph kr_tensor(const CartanPtr& cartan, const std::vector<std::pair<int, int>>& factors,
                       std::size_t cap = kDefaultNodeCap);

}  // namespace krc
