#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace krc {

enum class Family { A, B, C, D };

char family_letter(Family f);

/// Classical weight in the fundamental-weight basis: coords()[i-1] is the
/// coefficient of the i-th fundamental weight, so it is also the pairing with
/// the i-th simple coroot.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> coords) : coords_(std::move(coords)) {}
  static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0)); }

  int size() const { return static_cast<int>(coords_.size()); }
  int operator[](int k) const { return coords_[k]; }
  int& operator[](int k) { return coords_[k]; }
  const std::vector<int>& coords() const { return coords_; }
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a);
  Weight operator-() const { return -1 * *this; }

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;

  std::string str() const;

 private:
  std::vector<int> coords_;
};

/// Element of the finite root system, in the simple-root basis.
struct Root {
  std::vector<int> coords;

  bool positive() const;
  Root operator-() const;
  int height() const;
  std::string str() const;

  auto operator<=>(const Root&) const = default;
  bool operator==(const Root&) const = default;
};

/// Untwisted affine Cartan data of type A/B/C/D together with the finite root
/// system of the classical part. Immutable after construction.
class CartanData {
 public:
  static std::shared_ptr<const CartanData> build(Family family, int rank);
  /// Accepts "C2", "C2~", "A3~", ... (case-insensitive family letter).
  static std::shared_ptr<const CartanData> parse(std::string_view name);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  /// Affine Cartan matrix entry A_{ij} = <alpha_i^vee, alpha_j>, i, j in 0..n.
  int entry(int i, int j) const { return affine_[i][j]; }
  const std::vector<std::vector<int>>& affine_matrix() const { return affine_; }
  int kac_label(int i) const { return kac_[i]; }
  int dual_kac_label(int i) const { return dual_kac_[i]; }
  const std::vector<int>& kac_labels() const { return kac_; }
  const std::vector<int>& dual_kac_labels() const { return dual_kac_; }
  /// max(a_r / a_r^vee, 1).
  int c_value(int r) const;
  /// Neighbours of a in the classical Dynkin diagram.
  std::vector<int> neighbours(int a) const;

  const std::vector<Root>& positive_roots() const { return positive_; }
  /// Index into positive_roots(), or -1.
  int positive_index(const Root& beta) const;
  bool is_root(const Root& beta) const;
  const Root& highest_root() const { return positive_[highest_]; }
  Root simple_root(int i) const;

  /// Coefficients of beta^vee in the simple-coroot basis.
  const std::vector<int>& coroot(int positive_index) const { return coroots_[positive_index]; }
  std::vector<int> coroot(const Root& beta) const;

  /// <beta^vee, mu>.
  int pairing(const Root& beta, const Weight& mu) const;
  /// <alpha_i^vee, mu> for i in I; i = 0 uses the classical part -<theta^vee, mu>.
  int simple_pairing(int i, const Weight& mu) const;

  Weight root_weight(const Root& beta) const;
  /// cl(alpha_i) in the fundamental-weight basis; cl(alpha_0) = -theta.
  Weight simple_root_weight(int i) const;
  Weight fundamental(int i) const;
  Weight rho() const;

  /// Simple-root coordinates of mu if mu lies in the root lattice.
  std::optional<std::vector<int>> root_coords(const Weight& mu) const;
  /// a - b in Q0^+.
  bool dominates(const Weight& a, const Weight& b) const;
  bool is_dominant(const Weight& mu) const;

 private:
  CartanData() = default;

  Family family_{};
  int rank_ = 0;
  std::vector<std::vector<int>> affine_;
  std::vector<int> kac_;
  std::vector<int> dual_kac_;
  std::vector<int> half_norm_;  // (alpha_i, alpha_i) / 2, short roots = 1
  std::vector<Root> positive_;
  std::vector<std::vector<int>> coroots_;
  std::size_t highest_ = 0;
  // det(A) * A^{-1} for the finite matrix, and det(A).
  std::vector<std::vector<long long>> adjugate_;
  long long det_ = 1;
};

using CartanPtr = std::shared_ptr<const CartanData>;

}  // namespace krc
