#include "krc/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <sstream>

#include "krc/errors.hpp"

namespace krc {

namespace {

std::string key_of(const std::vector<int>& v) {
  std::string s;
  s.reserve(v.size() * 4);
  for (int x : v) {
    s += std::to_string(x);
    s += ',';
  }
  return s;
}

}  // namespace

std::vector<int> WeylGroup::multiply_matrices(const std::vector<int>& a, const std::vector<int>& b) const {
  const int n = cartan_->rank();
  std::vector<int> c(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int aik = a[i * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

std::vector<int> WeylGroup::reflection_matrix(const Root& beta) const {
  const int n = cartan_->rank();
  const auto co = cartan_->coroot(beta);
  const Weight bw = cartan_->root_weight(beta);
  std::vector<int> m(n * n, 0);
  for (int j = 0; j < n; ++j) {
    m[j * n + j] = 1;
    for (int i = 0; i < n; ++i) m[i * n + j] -= co[j] * bw[i];
  }
  return m;
}

std::shared_ptr<const WeylGroup> WeylGroup::build(CartanPtr cartan, std::size_t cap) {
  std::shared_ptr<WeylGroup> g(new WeylGroup());
  g->cartan_ = std::move(cartan);
  const CartanData& cd = *g->cartan_;
  const int n = cd.rank();

  std::vector<std::vector<int>> simple;
  for (int i = 1; i <= n; ++i) simple.push_back(g->reflection_matrix(cd.simple_root(i)));

  auto make = [&](std::vector<int> m) {
    WeylElement e;
    e.matrix = std::move(m);
    std::vector<int> r(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r[i] += e.matrix[i * n + j];
    e.rho_image = Weight(std::move(r));
    int len = 0;
    for (std::size_t k = 0; k < cd.positive_roots().size(); ++k)
      if (cd.pairing(cd.positive_roots()[k], e.rho_image) < 0) ++len;
    e.length = len;
    return e;
  };

  std::vector<int> id(n * n, 0);
  for (int i = 0; i < n; ++i) id[i * n + i] = 1;
  g->elements_.push_back(make(id));
  g->index_.emplace(key_of(id), 0);
  for (std::size_t head = 0; head < g->elements_.size(); ++head) {
    std::vector<int> row(n, -1);
    for (int i = 0; i < n; ++i) {
      auto m = g->multiply_matrices(g->elements_[head].matrix, simple[i]);
      const auto key = key_of(m);
      auto it = g->index_.find(key);
      if (it == g->index_.end()) {
        if (g->elements_.size() >= cap)
          throw ResourceLimit("Weyl group of " + cd.name() + " exceeds the enumeration cap of " +
                              std::to_string(cap));
        const int idx = static_cast<int>(g->elements_.size());
        g->elements_.push_back(make(std::move(m)));
        it = g->index_.emplace(key, idx).first;
      }
      row[i] = it->second;
    }
    g->right_simple_.push_back(std::move(row));
  }
  g->longest_ = 0;
  for (std::size_t w = 0; w < g->elements_.size(); ++w)
    if (g->elements_[w].length > g->elements_[g->longest_].length) g->longest_ = static_cast<int>(w);

  g->right_reflection_.assign(g->elements_.size(), std::vector<int>(cd.positive_roots().size(), -1));
  for (std::size_t k = 0; k < cd.positive_roots().size(); ++k) {
    const auto s = g->reflection_matrix(cd.positive_roots()[k]);
    for (std::size_t w = 0; w < g->elements_.size(); ++w)
      g->right_reflection_[w][k] = g->find(g->multiply_matrices(g->elements_[w].matrix, s));
  }
  return g;
}

int WeylGroup::find(const std::vector<int>& matrix) const {
  auto it = index_.find(key_of(matrix));
  return it == index_.end() ? -1 : it->second;
}

int WeylGroup::multiply(int a, int b) const { return find(multiply_matrices(elements_[a].matrix, elements_[b].matrix)); }

int WeylGroup::inverse(int w) const {
  int v = identity();
  const auto word = reduced_word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = times_simple(v, *it);
  return v;
}

int WeylGroup::reflection(const Root& beta) const { return find(reflection_matrix(beta)); }

int WeylGroup::from_word(const std::vector<int>& word) const {
  int w = identity();
  for (int i : word) {
    if (i < 1 || i > cartan_->rank()) throw InvalidArgument("word letter outside I0");
    w = times_simple(w, i);
  }
  return w;
}

std::vector<int> WeylGroup::reduced_word(int w) const {
  // Left descents: s_i w < w iff <alpha_i^vee, w(rho)> < 0.
  std::vector<int> word;
  Weight mu = elements_[w].rho_image;
  const CartanData& cd = *cartan_;
  while (true) {
    int i = 1;
    while (i <= cd.rank() && mu[i - 1] >= 0) ++i;
    if (i > cd.rank()) break;
    word.push_back(i);
    mu = mu - mu[i - 1] * cd.simple_root_weight(i);
  }
  return word;
}

bool WeylGroup::is_reduced(const std::vector<int>& word) const {
  return length(from_word(word)) == static_cast<int>(word.size());
}

Weight WeylGroup::act(int w, const Weight& mu) const {
  const int n = cartan_->rank();
  const auto& m = elements_[w].matrix;
  Weight out = Weight::zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += m[i * n + j] * mu[j];
  return out;
}

Root WeylGroup::act(int w, const Root& beta) const {
  const auto c = cartan_->root_coords(act(w, cartan_->root_weight(beta)));
  if (!c) throw Error("internal: Weyl image of a root left the root lattice");
  return Root{*c};
}

bool WeylGroup::bruhat_leq(int v, int w) const {
  std::vector<char> reach(size(), 0);
  std::vector<int> current{identity()};
  reach[identity()] = 1;
  for (int i : reduced_word(w)) {
    const std::size_t count = current.size();
    for (std::size_t k = 0; k < count; ++k) {
      const int x = times_simple(current[k], i);
      if (!reach[x]) {
        reach[x] = 1;
        current.push_back(x);
      }
    }
  }
  return reach[v] != 0;
}

std::shared_ptr<const QuantumBruhatGraph> QuantumBruhatGraph::build(WeylPtr weyl) {
  std::shared_ptr<QuantumBruhatGraph> q(new QuantumBruhatGraph());
  q->weyl_ = std::move(weyl);
  const WeylGroup& W = *q->weyl_;
  const CartanData& cd = W.cartan();
  const auto& roots = cd.positive_roots();
  const Weight rho = cd.rho();
  q->target_.assign(W.size(), std::vector<int>(roots.size(), -1));
  q->up_.assign(W.size(), std::vector<char>(roots.size(), 0));
  for (std::size_t w = 0; w < W.size(); ++w) {
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const int t = W.times_reflection(static_cast<int>(w), static_cast<int>(k));
      const int lw = W.length(static_cast<int>(w));
      const int lt = W.length(t);
      const bool up = lt == lw + 1;
      const bool down = lt == lw - 2 * cd.pairing(roots[k], rho) + 1;
      if (!up && !down) continue;
      q->target_[w][k] = t;
      q->up_[w][k] = up ? 1 : 0;
      q->edges_.push_back({static_cast<int>(w), t, static_cast<int>(k), up});
    }
  }
  std::stable_sort(q->edges_.begin(), q->edges_.end(), [&](const QbgEdge& a, const QbgEdge& b) {
    if (W.length(a.source) != W.length(b.source)) return W.length(a.source) < W.length(b.source);
    if (a.source != b.source) return a.source < b.source;
    return roots[a.root].coords < roots[b.root].coords;
  });
  return q;
}

bool QuantumBruhatGraph::strongly_connected() const {
  const std::size_t n = weyl_->size();
  auto sweep = [&](bool forward) {
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : edges_) {
      if (forward)
        adj[e.source].push_back(e.target);
      else
        adj[e.target].push_back(e.source);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u : adj[v])
        if (!seen[u]) {
          seen[u] = 1;
          ++count;
          stack.push_back(u);
        }
    }
    return count == n;
  };
  return sweep(true) && sweep(false);
}

std::string QuantumBruhatGraph::to_dot() const {
  const WeylGroup& W = *weyl_;
  const auto& roots = W.cartan().positive_roots();
  std::ostringstream os;
  os << "digraph QBG {\n";
  for (std::size_t w = 0; w < W.size(); ++w) {
    const auto word = W.reduced_word(static_cast<int>(w));
    std::string label;
    for (int i : word) label += "s" + std::to_string(i);
    if (label.empty()) label = "1";
    os << "  " << w << " [label=\"" << label << "\"];\n";
  }
  for (const auto& e : edges_) {
    os << "  " << e.source << " -> " << e.target << " [label=\"" << roots[e.root].str() << "\"";
    if (!e.up) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

QbgPtr qbg_for(const CartanPtr& cartan, std::size_t cap) {
  static std::mutex mutex;
  static std::map<std::string, QbgPtr> cache;
  std::lock_guard<std::mutex> lock(mutex);
  const auto key = cartan->name();
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto q = QuantumBruhatGraph::build(WeylGroup::build(cartan, cap));
  cache.emplace(key, q);
  return q;
}

Weight affine_reflect(const CartanData& cartan, int i, const Weight& mu, int level) {
  const int p = cartan.simple_pairing(i, mu) + (i == 0 ? level : 0);
  return mu - p * cartan.simple_root_weight(i);
}

Dominantization dominantize(const CartanData& cartan, const Weight& mu, int level) {
  if (level < 1) throw InvalidArgument("dominantize: level must be positive");
  Dominantization out;
  out.level = level;
  Weight cur = mu;
  while (true) {
    int pick = -1;
    for (int i = 0; i <= cartan.rank(); ++i) {
      const int p = cartan.simple_pairing(i, cur) + (i == 0 ? level : 0);
      if (p < 0) {
        pick = i;
        break;
      }
    }
    if (pick < 0) break;
    cur = affine_reflect(cartan, pick, cur, level);
    out.word.push_back(pick);
  }
  out.dominant = cur;
  return out;
}

Weight apply_affine_word(const CartanData& cartan, const std::vector<int>& word, const Weight& mu, int level) {
  Weight cur = mu;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = affine_reflect(cartan, *it, cur, level);
  return cur;
}

}  // namespace krc
