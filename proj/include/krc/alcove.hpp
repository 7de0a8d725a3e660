#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "krc/cartan.hpp"
#include "krc/crystal.hpp"
#include "krc/weyl.hpp"

namespace krc {

enum class ChainOrder { Lex, ReverseLex };

/// A lambda-chain (beta_1, ..., beta_m) of positive roots; positions are
/// 0-based internally and printed 1-based.
struct LambdaChain {
  CartanPtr cartan;
  Weight lambda;
  std::vector<int> roots;  // indices into positive_roots()
  std::vector<int> l;
  std::vector<int> l_tilde;

  int size() const { return static_cast<int>(roots.size()); }
  const Root& root(int k) const { return cartan->positive_roots()[roots[k]]; }
};

/// Lenart-Postnikov chain: pairs (beta, k), 0 <= k < <lambda, beta^vee>, sorted
/// by (k, c_1, ..., c_n) / <lambda, beta^vee> with beta^vee = sum c_i alpha_i^vee
/// (coordinates reversed for ReverseLex).
LambdaChain build_lambda_chain(const CartanPtr& cartan, const Weight& lambda, ChainOrder order = ChainOrder::Lex);

/// Multiplicity invariant and the alcove walk A_o -> A_{-lambda}: every step
/// crosses exactly the wall H_{beta_i, -l_i}. Returns the first failure.
std::optional<std::string> chain_violation(const LambdaChain& chain);

/// Positions sorted ascending (0-based).
using Subset = std::vector<int>;

bool is_admissible(const LambdaChain& chain, const QuantumBruhatGraph& qbg, const Subset& j);
/// Depth-first, positions ascending; the empty set comes first.
std::vector<Subset> enumerate_admissible(const LambdaChain& chain, const QuantumBruhatGraph& qbg,
                                         std::size_t cap = kDefaultNodeCap);

struct Folding {
  std::vector<Root> gamma;
  std::vector<int> level;  // l_k^J
  std::vector<char> in_j;
  Weight gamma_inf;
  Weight weight;
  int final_direction = 0;  // phi(J) in the Weyl group
  std::vector<char> positive_fold;  // per position in J order: gamma > 0
};

Folding fold(const LambdaChain& chain, const WeylGroup& weyl, const Subset& j);

/// Doubled piecewise linear graph g_alpha for alpha = alpha_p.
struct GGraph {
  int p = 0;
  Root alpha;
  std::vector<int> positions;  // I_alpha ascending; infinity is implicit
  std::vector<int> doubled;    // 2 g(x) at x = 0, 1/2, 1, ..., n + 1/2
  int max_value = 0;           // M
  /// g at the point of the k-th element of I_alpha-hat (k = n is infinity).
  int height(int k) const { return doubled[2 * k + 1] / 2; }
  int n() const { return static_cast<int>(positions.size()); }
};

GGraph g_graph(const LambdaChain& chain, const Folding& folding, int p);

/// Level-`level` operators on admissible subsets (level 1 is the plain model).
std::optional<Subset> alcove_f(const LambdaChain& chain, const WeylGroup& weyl, const Subset& j, int p, int level);
std::optional<Subset> alcove_e(const LambdaChain& chain, const WeylGroup& weyl, const Subset& j, int p, int level);
int phi0(const LambdaChain& chain, const WeylGroup& weyl, const Subset& j);

std::string subset_str(const Subset& j);

/// The crystal A_level(Gamma) on all admissible subsets.
struct AlcoveCrystal {
  LambdaChain chain;
  std::vector<Subset> subsets;
  CrystalGraph graph;
};

AlcoveCrystal alcove_crystal(const CartanPtr& cartan, const Weight& lambda, int level, int threads = 1,
                             ChainOrder order = ChainOrder::Lex, std::size_t cap = kDefaultNodeCap);

}  // namespace krc
