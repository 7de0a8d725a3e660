#include "krc/alcove.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

#include "krc/errors.hpp"

namespace krc {

namespace {

int sgn(int x) { return (x > 0) - (x < 0); }

void check(bool cond, const std::string& what) {
  if (!cond) throw Error("alcove model invariant violated: " + what);
}

// floor(a / b) for b > 0.
long long floor_div(long long a, long long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

LambdaChain build_lambda_chain(const CartanPtr& cartan, const Weight& lambda, ChainOrder order) {
  if (!cartan->is_dominant(lambda)) throw InvalidArgument("lambda-chain needs a dominant weight, got " + lambda.str());
  const auto& roots = cartan->positive_roots();
  struct Item {
    int root;
    int k;
    int mult;
    std::vector<int> key;
  };
  std::vector<Item> items;
  for (int b = 0; b < static_cast<int>(roots.size()); ++b) {
    const int mult = cartan->pairing(roots[b], lambda);
    std::vector<int> key{0};
    const auto& co = cartan->coroot(b);
    if (order == ChainOrder::Lex)
      key.insert(key.end(), co.begin(), co.end());
    else
      key.insert(key.end(), co.rbegin(), co.rend());
    for (int k = 0; k < mult; ++k) {
      key[0] = k;
      items.push_back({b, k, mult, key});
    }
  }
  // Compare key_a / mult_a with key_b / mult_b lexicographically.
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    for (std::size_t t = 0; t < a.key.size(); ++t) {
      const long long x = static_cast<long long>(a.key[t]) * b.mult;
      const long long y = static_cast<long long>(b.key[t]) * a.mult;
      if (x != y) return x < y;
    }
    return a.root < b.root;
  });
  LambdaChain chain{cartan, lambda, {}, {}, {}};
  for (const auto& it : items) {
    chain.roots.push_back(it.root);
    chain.l.push_back(it.k);
    chain.l_tilde.push_back(it.mult - it.k);
  }
  if (auto v = chain_violation(chain)) throw Error("constructed lambda-chain is invalid: " + *v);
  return chain;
}

std::optional<std::string> chain_violation(const LambdaChain& chain) {
  const CartanData& cd = *chain.cartan;
  const auto& roots = cd.positive_roots();
  std::vector<int> count(roots.size(), 0);
  for (int k = 0; k < chain.size(); ++k) {
    if (chain.l[k] != count[chain.roots[k]]) return "l_" + std::to_string(k + 1) + " is not the earlier multiplicity";
    if (chain.l_tilde[k] != cd.pairing(chain.root(k), chain.lambda) - chain.l[k])
      return "l~_" + std::to_string(k + 1) + " is wrong";
    ++count[chain.roots[k]];
  }
  for (std::size_t b = 0; b < roots.size(); ++b)
    if (count[b] != cd.pairing(roots[b], chain.lambda))
      return "root " + roots[b].str() + " occurs " + std::to_string(count[b]) + " times";

  // Walk a generic point of the fundamental alcove; points are scaled by d.
  int d = 1;
  const Weight rho = cd.rho();
  for (const auto& r : roots) d = std::max(d, cd.pairing(r, rho) + 1);
  Weight x = rho;
  auto cell = [&](const Weight& y, std::size_t b) { return floor_div(cd.pairing(roots[b], y), d); };
  for (int k = 0; k < chain.size(); ++k) {
    const Root& beta = chain.root(k);
    const Weight bw = cd.root_weight(beta);
    Weight y = x - cd.pairing(beta, x) * bw - (chain.l[k] * d) * bw;
    for (std::size_t b = 0; b < roots.size(); ++b) {
      const long long before = cell(x, b), after = cell(y, b);
      if (static_cast<int>(b) == chain.roots[k]) {
        if (before != -chain.l[k] || after != -chain.l[k] - 1)
          return "step " + std::to_string(k + 1) + " does not cross H_{beta,-l} in the negative direction";
      } else if (before != after) {
        return "step " + std::to_string(k + 1) + " crosses more than one wall";
      }
    }
    x = y;
  }
  const Weight shifted = x + d * chain.lambda;
  for (std::size_t b = 0; b < roots.size(); ++b)
    if (cell(shifted, b) != 0) return "the walk does not end in A_{-lambda}";
  return std::nullopt;
}

bool is_admissible(const LambdaChain& chain, const QuantumBruhatGraph& qbg, const Subset& j) {
  int w = qbg.weyl().identity();
  int prev = -1;
  for (int pos : j) {
    if (pos <= prev || pos >= chain.size()) return false;
    prev = pos;
    w = qbg.target(w, chain.roots[pos]);
    if (w < 0) return false;
  }
  return true;
}

std::vector<Subset> enumerate_admissible(const LambdaChain& chain, const QuantumBruhatGraph& qbg, std::size_t cap) {
  std::vector<Subset> out;
  Subset cur;
  auto dfs = [&](auto&& self, int start, int w) -> void {
    if (out.size() >= cap) throw ResourceLimit("admissible subsets exceed the node cap");
    out.push_back(cur);
    for (int pos = start; pos < chain.size(); ++pos) {
      const int t = qbg.target(w, chain.roots[pos]);
      if (t < 0) continue;
      cur.push_back(pos);
      self(self, pos + 1, t);
      cur.pop_back();
    }
  };
  dfs(dfs, 0, qbg.weyl().identity());
  return out;
}

Folding fold(const LambdaChain& chain, const WeylGroup& weyl, const Subset& j) {
  const CartanData& cd = *chain.cartan;
  Folding out;
  out.in_j.assign(chain.size(), 0);
  for (int pos : j) out.in_j[pos] = 1;
  int w = weyl.identity();
  Weight t = Weight::zero(cd.rank());
  for (int k = 0; k < chain.size(); ++k) {
    const Root gamma = weyl.act(w, chain.root(k));
    const Root abs_gamma = gamma.positive() ? gamma : -gamma;
    out.level.push_back((gamma.positive() ? 1 : -1) * chain.l[k] - cd.pairing(abs_gamma, t));
    out.gamma.push_back(gamma);
    if (out.in_j[k]) {
      out.positive_fold.push_back(gamma.positive() ? 1 : 0);
      t = t - chain.l[k] * cd.root_weight(gamma);
      w = weyl.times_reflection(w, chain.roots[k]);
    }
  }
  out.final_direction = w;
  out.gamma_inf = weyl.act(w, cd.rho());
  out.weight = weyl.act(w, chain.lambda) - t;
  return out;
}

GGraph g_graph(const LambdaChain& chain, const Folding& folding, int p) {
  const CartanData& cd = *chain.cartan;
  GGraph g;
  g.p = p;
  g.alpha = cd.simple_root(p);
  const Root pos_alpha = g.alpha.positive() ? g.alpha : -g.alpha;
  const Root neg_alpha = -pos_alpha;
  for (int k = 0; k < chain.size(); ++k)
    if (folding.gamma[k] == pos_alpha || folding.gamma[k] == neg_alpha) g.positions.push_back(k);

  // Build g for the positive root, then reflect if alpha < 0.
  int v = -1;
  g.doubled.push_back(v);
  for (int k : g.positions) {
    const int s = folding.gamma[k].positive() ? 1 : -1;
    v += s;
    g.doubled.push_back(v);
    v += (folding.in_j[k] ? -1 : 1) * s;
    g.doubled.push_back(v);
  }
  v += sgn(cd.pairing(pos_alpha, folding.gamma_inf));
  g.doubled.push_back(v);
  const int sign = g.alpha.positive() ? 1 : -1;
  if (sign < 0)
    for (int& x : g.doubled) x = -x;

  g.max_value = g.height(0);
  for (int k = 0; k <= g.n(); ++k) g.max_value = std::max(g.max_value, g.height(k));
  for (int k = 0; k <= g.n(); ++k) check(g.doubled[2 * k + 1] % 2 == 0, "g is not integral at a half-integer point");
  for (int k = 0; k < g.n(); ++k)
    check(g.height(k) == sign * folding.level[g.positions[k]], "height of g differs from the folded level");
  check(g.height(g.n()) == cd.simple_pairing(p, folding.weight), "final height of g differs from <wt(J), alpha^vee>");
  check(g.max_value >= 0, "maximum of g is negative");
  for (std::size_t x = 1; x < g.doubled.size(); ++x)
    check(g.doubled[x] <= 2 * g.max_value, "g exceeds M at an integer point");
  return g;
}

namespace {

Subset replace(const Subset& j, int remove, int add) {
  Subset out;
  for (int x : j)
    if (x != remove) out.push_back(x);
  if (add >= 0) out.push_back(add);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<Subset> alcove_f(const LambdaChain& chain, const WeylGroup& weyl, const Subset& j, int p, int level) {
  const Folding fo = fold(chain, weyl, j);
  const GGraph g = g_graph(chain, fo, p);
  const int delta = p == 0 ? level : 0;
  if (g.max_value <= delta) return std::nullopt;
  int mi = 0;
  while (g.height(mi) != g.max_value) ++mi;
  const bool m_inf = mi == g.n();
  check(m_inf || fo.in_j[g.positions[mi]], "f: m is neither in J nor infinity");
  check(mi > 0, "f: m has no predecessor");
  const int k = g.positions[mi - 1];
  check(!fo.in_j[k], "f: predecessor k lies in J");
  Subset out = replace(j, m_inf ? -1 : g.positions[mi], k);
  check(is_admissible(chain, *qbg_for(chain.cartan), out), "f produced a non-admissible subset");
  return out;
}

std::optional<Subset> alcove_e(const LambdaChain& chain, const WeylGroup& weyl, const Subset& j, int p, int level) {
  const Folding fo = fold(chain, weyl, j);
  const GGraph g = g_graph(chain, fo, p);
  const int delta = p == 0 ? level : 0;
  const int final_height = chain.cartan->simple_pairing(p, fo.weight);
  if (!(g.max_value > final_height && g.max_value >= delta)) return std::nullopt;
  int ki = g.n() - 1;
  while (ki >= 0 && g.height(ki) != g.max_value) --ki;
  check(ki >= 0, "e: no position of I_alpha attains the maximum");
  const int k = g.positions[ki];
  check(fo.in_j[k], "e: k is not in J");
  const bool m_inf = ki + 1 == g.n();
  check(m_inf || !fo.in_j[g.positions[ki + 1]], "e: successor m lies in J");
  Subset out = replace(j, k, m_inf ? -1 : g.positions[ki + 1]);
  check(is_admissible(chain, *qbg_for(chain.cartan), out), "e produced a non-admissible subset");
  return out;
}

int phi0(const LambdaChain& chain, const WeylGroup& weyl, const Subset& j) {
  const Folding fo = fold(chain, weyl, j);
  return std::max(g_graph(chain, fo, 0).max_value - 1, 0);
}

std::string subset_str(const Subset& j) {
  std::string s = "{";
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(j[k] + 1);
  }
  return s + "}";
}

AlcoveCrystal alcove_crystal(const CartanPtr& cartan, const Weight& lambda, int level, int threads,
                             ChainOrder order, std::size_t cap) {
  if (level < 1) throw InvalidArgument("alcove crystal level must be positive");
  AlcoveCrystal out{build_lambda_chain(cartan, lambda, order), {}, CrystalGraph(cartan)};
  const auto qbg = qbg_for(cartan);
  const WeylGroup& weyl = qbg->weyl();
  out.subsets = enumerate_admissible(out.chain, *qbg, cap);
  const int count = static_cast<int>(out.subsets.size());
  const int colors = cartan->rank() + 1;

  std::map<Subset, int> index;
  for (int k = 0; k < count; ++k) index.emplace(out.subsets[k], k);

  std::vector<Weight> weights(count);
  std::vector<int> targets(static_cast<std::size_t>(count) * colors, -1);
  std::vector<int> sources(static_cast<std::size_t>(count) * colors, -1);
  auto work = [&](int begin, int end) {
    for (int k = begin; k < end; ++k) {
      const Subset& j = out.subsets[k];
      weights[k] = fold(out.chain, weyl, j).weight;
      for (int p = 0; p < colors; ++p) {
        if (auto y = alcove_f(out.chain, weyl, j, p, level)) targets[k * colors + p] = index.at(*y);
        if (auto y = alcove_e(out.chain, weyl, j, p, level)) sources[k * colors + p] = index.at(*y);
      }
    }
  };
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    work(0, count);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const int begin = t * chunk, end = std::min(count, begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  for (int k = 0; k < count; ++k) {
    Element payload{out.subsets[k]};
    out.graph.add_node(std::move(payload), weights[k], subset_str(out.subsets[k]));
  }
  for (int k = 0; k < count; ++k)
    for (int p = 0; p < colors; ++p) {
      const int t = targets[k * colors + p];
      if (t >= 0) {
        check(sources[t * colors + p] == k, "e_p does not invert f_p");
        out.graph.set_edge(p, k, t);
      }
    }
  for (int k = 0; k < count; ++k)
    for (int p = 0; p < colors; ++p) {
      const int s = sources[k * colors + p];
      if (s >= 0) check(targets[s * colors + p] == k, "f_p does not invert e_p");
    }
  detect_anchors(out.graph);
  return out;
}

}  // namespace krc
