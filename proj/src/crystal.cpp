#include "krc/crystal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "krc/errors.hpp"

namespace krc {

std::size_t ElementHash::operator()(const Element& b) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : b.data) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(x)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<int> all_colors(const CartanData& cartan) {
  std::vector<int> c(cartan.rank() + 1);
  std::iota(c.begin(), c.end(), 0);
  return c;
}

std::vector<int> classical_colors(const CartanData& cartan) {
  std::vector<int> c(cartan.rank());
  std::iota(c.begin(), c.end(), 1);
  return c;
}

CrystalGraph::CrystalGraph(CartanPtr cartan) : cartan_(std::move(cartan)) {
  f_.resize(cartan_->rank() + 1);
  e_.resize(cartan_->rank() + 1);
}

int CrystalGraph::add_node(Element payload, Weight wt, std::string repr) {
  const int id = size();
  if (!index_.emplace(payload, id).second) throw Error("duplicate crystal element " + repr);
  nodes_.push_back({std::move(payload), std::move(wt), std::move(repr)});
  for (auto& v : f_) v.push_back(-1);
  for (auto& v : e_) v.push_back(-1);
  return id;
}

void CrystalGraph::set_edge(int color, int src, int dst) {
  int& fs = f_[color][src];
  int& ed = e_[color][dst];
  if ((fs != -1 && fs != dst) || (ed != -1 && ed != src))
    throw Error("inconsistent " + std::to_string(color) + "-edge at " + repr(src));
  fs = dst;
  ed = src;
}

void CrystalGraph::remove_edge(int color, int src) {
  const int dst = f_[color][src];
  if (dst < 0) return;
  f_[color][src] = -1;
  e_[color][dst] = -1;
}

std::optional<int> CrystalGraph::find(const Element& payload) const {
  auto it = index_.find(payload);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int CrystalGraph::epsilon(int b, int i) const {
  int k = 0;
  for (int x = e_[i][b]; x >= 0; x = e_[i][x]) {
    if (++k > size()) throw Error("cyclic string in crystal graph");
  }
  return k;
}

int CrystalGraph::phi(int b, int i) const {
  int k = 0;
  for (int x = f_[i][b]; x >= 0; x = f_[i][x]) {
    if (++k > size()) throw Error("cyclic string in crystal graph");
  }
  return k;
}

std::size_t CrystalGraph::edge_count(int color) const {
  return static_cast<std::size_t>(std::count_if(f_[color].begin(), f_[color].end(), [](int t) { return t >= 0; }));
}

std::size_t CrystalGraph::edge_count() const {
  std::size_t n = 0;
  for (int c = 0; c < num_colors(); ++c) n += edge_count(c);
  return n;
}

std::optional<Element> GraphCrystal::f(const Element& b, int i) const {
  const int t = graph_->f(b.data[0], i);
  if (t < 0) return std::nullopt;
  return Element{{t}};
}

std::optional<Element> GraphCrystal::e(const Element& b, int i) const {
  const int t = graph_->e(b.data[0], i);
  if (t < 0) return std::nullopt;
  return Element{{t}};
}

SignatureResult signature_rule(const std::vector<std::pair<int, int>>& phi_eps) {
  SignatureResult r;
  std::vector<std::pair<int, int>> pending;  // (factor, unmatched '+' count), innermost last
  for (int k = 0; k < static_cast<int>(phi_eps.size()); ++k) {
    int minus = phi_eps[k].first;
    while (minus > 0 && !pending.empty()) {
      const int take = std::min(minus, pending.back().second);
      minus -= take;
      pending.back().second -= take;
      if (pending.back().second == 0) pending.pop_back();
    }
    if (minus > 0) {
      r.phi += minus;
      r.f_factor = k;
    }
    if (phi_eps[k].second > 0) pending.emplace_back(k, phi_eps[k].second);
  }
  for (const auto& [k, c] : pending) r.epsilon += c;
  if (!pending.empty()) r.e_factor = pending.front().first;
  return r;
}

TensorCrystal::TensorCrystal(std::vector<std::shared_ptr<const CrystalGraph>> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw InvalidArgument("tensor product needs at least one factor");
  cartan_ = factors_.front()->cartan_ptr();
  for (const auto& g : factors_)
    if (g->cartan().name() != cartan_->name()) throw InvalidArgument("tensor factors of different types");
}

std::optional<Element> TensorCrystal::f(const Element& b, int i) const {
  std::vector<std::pair<int, int>> pe;
  pe.reserve(factors_.size());
  for (std::size_t k = 0; k < factors_.size(); ++k)
    pe.emplace_back(factors_[k]->phi(b.data[k], i), factors_[k]->epsilon(b.data[k], i));
  const auto r = signature_rule(pe);
  if (r.f_factor < 0) return std::nullopt;
  Element out = b;
  out.data[r.f_factor] = factors_[r.f_factor]->f(b.data[r.f_factor], i);
  return out;
}

std::optional<Element> TensorCrystal::e(const Element& b, int i) const {
  std::vector<std::pair<int, int>> pe;
  pe.reserve(factors_.size());
  for (std::size_t k = 0; k < factors_.size(); ++k)
    pe.emplace_back(factors_[k]->phi(b.data[k], i), factors_[k]->epsilon(b.data[k], i));
  const auto r = signature_rule(pe);
  if (r.e_factor < 0) return std::nullopt;
  Element out = b;
  out.data[r.e_factor] = factors_[r.e_factor]->e(b.data[r.e_factor], i);
  return out;
}

std::optional<Element> TensorCrystal::f_pairwise(const Element& b, int i) const {
  if (factors_.size() != 2) throw InvalidArgument("pairwise rule needs two factors");
  const auto& left = *factors_[0];
  const auto& right = *factors_[1];
  Element out = b;
  if (left.epsilon(b.data[0], i) >= right.phi(b.data[1], i)) {
    out.data[0] = left.f(b.data[0], i);
    if (out.data[0] < 0) return std::nullopt;
  } else {
    out.data[1] = right.f(b.data[1], i);
  }
  return out;
}

std::optional<Element> TensorCrystal::e_pairwise(const Element& b, int i) const {
  if (factors_.size() != 2) throw InvalidArgument("pairwise rule needs two factors");
  const auto& left = *factors_[0];
  const auto& right = *factors_[1];
  Element out = b;
  if (left.epsilon(b.data[0], i) > right.phi(b.data[1], i)) {
    out.data[0] = left.e(b.data[0], i);
  } else {
    out.data[1] = right.e(b.data[1], i);
    if (out.data[1] < 0) return std::nullopt;
  }
  return out;
}

Weight TensorCrystal::weight(const Element& b) const {
  Weight w = Weight::zero(cartan_->rank());
  for (std::size_t k = 0; k < factors_.size(); ++k) w += factors_[k]->weight(b.data[k]);
  return w;
}

std::string TensorCrystal::repr(const Element& b) const {
  std::string s;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k) s += "⊗";
    s += factors_[k]->repr(b.data[k]);
  }
  return s;
}

std::size_t TensorCrystal::cardinality() const {
  std::size_t n = 1;
  for (const auto& g : factors_) {
    const auto s = static_cast<std::size_t>(g->size());
    if (s != 0 && n > static_cast<std::size_t>(-1) / s) return static_cast<std::size_t>(-1);
    n *= s;
  }
  return n;
}

std::vector<Element> TensorCrystal::elements() const {
  std::vector<Element> out;
  out.reserve(cardinality());
  Element cur{std::vector<int>(factors_.size(), 0)};
  for (const auto& g : factors_)
    if (g->size() == 0) return out;
  while (true) {
    out.push_back(cur);
    int k = static_cast<int>(factors_.size()) - 1;
    while (k >= 0 && ++cur.data[k] == factors_[k]->size()) {
      cur.data[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

CrystalGraph explore(const Crystal& crystal, const std::vector<Element>& seeds, const std::vector<int>& colors,
                     std::size_t node_cap) {
  CrystalGraph g(crystal.cartan());
  auto intern = [&](const Element& x) {
    if (auto id = g.find(x)) return *id;
    if (static_cast<std::size_t>(g.size()) >= node_cap)
      throw ResourceLimit("crystal exploration exceeds the node cap of " + std::to_string(node_cap));
    return g.add_node(x, crystal.weight(x), crystal.repr(x));
  };
  for (const auto& s : seeds) intern(s);
  for (int head = 0; head < g.size(); ++head) {
    const Element cur = g.node(head).payload;
    for (int i : colors)
      if (auto y = crystal.f(cur, i)) g.set_edge(i, head, intern(*y));
    for (int i : colors)
      if (auto y = crystal.e(cur, i)) g.set_edge(i, intern(*y), head);
  }
  return g;
}

CrystalGraph materialize(const Crystal& crystal, const std::vector<Element>& elements, const std::vector<int>& colors) {
  CrystalGraph g(crystal.cartan());
  for (const auto& x : elements) g.add_node(x, crystal.weight(x), crystal.repr(x));
  for (int b = 0; b < g.size(); ++b) {
    for (int i : colors) {
      if (auto y = crystal.f(g.node(b).payload, i)) {
        auto t = g.find(*y);
        if (!t) throw Error("element set not closed under f_" + std::to_string(i));
        g.set_edge(i, b, *t);
      }
    }
  }
  return g;
}

CrystalGraph tensor_graph(const std::vector<std::shared_ptr<const CrystalGraph>>& factors, std::size_t node_cap) {
  TensorCrystal t(factors);
  if (t.cardinality() > node_cap)
    throw ResourceLimit("tensor product has " + std::to_string(t.cardinality()) + " elements, above the node cap");
  CrystalGraph g = materialize(t, t.elements(), all_colors(*t.cartan()));
  detect_anchors(g);
  return g;
}

CrystalGraph trivial_crystal(CartanPtr cartan) {
  CrystalGraph g(cartan);
  g.add_node(Element{}, Weight::zero(cartan->rank()), "∅");
  g.anchor_max = 0;
  g.anchor_min = 0;
  return g;
}

CrystalGraph demazure_filter(const CrystalGraph& g, int level, FilterMode mode) {
  if (level < 0) throw InvalidArgument("filter level must be nonnegative");
  CrystalGraph out = g;
  for (int src = 0; src < g.size(); ++src) {
    const int dst = g.f(src, 0);
    if (dst < 0) continue;
    const bool keep = mode == FilterMode::Head ? g.epsilon(dst, 0) > level : g.phi(dst, 0) >= level;
    if (!keep) out.remove_edge(0, src);
  }
  return out;
}

CrystalGraph induced_subgraph(const CrystalGraph& g, const std::vector<int>& nodes) {
  CrystalGraph out(g.cartan_ptr());
  std::vector<int> local(g.size(), -1);
  for (int b : nodes) {
    local[b] = out.add_node(g.node(b).payload, g.weight(b), g.repr(b));
    out.origin.push_back(b);
  }
  for (int b : nodes)
    for (int c = 0; c < g.num_colors(); ++c) {
      const int t = g.f(b, c);
      if (t >= 0 && local[t] >= 0) out.set_edge(c, local[b], local[t]);
    }
  if (g.anchor_max && local[*g.anchor_max] >= 0) out.anchor_max = local[*g.anchor_max];
  if (g.anchor_min && local[*g.anchor_min] >= 0) out.anchor_min = local[*g.anchor_min];
  return out;
}

namespace {

std::vector<std::vector<int>> component_sets(const CrystalGraph& g) {
  std::vector<int> comp(g.size(), -1);
  std::vector<std::vector<int>> sets;
  for (int s = 0; s < g.size(); ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(sets.size());
    sets.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      sets[id].push_back(v);
      for (int c = 0; c < g.num_colors(); ++c)
        for (int u : {g.f(v, c), g.e(v, c)})
          if (u >= 0 && comp[u] < 0) {
            comp[u] = id;
            stack.push_back(u);
          }
    }
    std::sort(sets[id].begin(), sets[id].end());
  }
  return sets;
}

}  // namespace

std::vector<CrystalGraph> components(const CrystalGraph& g) {
  auto sets = component_sets(g);
  struct Keyed {
    std::vector<int> nodes;
    std::vector<Weight> weights;
  };
  std::vector<Keyed> keyed;
  for (auto& s : sets) {
    Keyed k{std::move(s), {}};
    for (int b : k.nodes) k.weights.push_back(g.weight(b));
    std::sort(k.weights.begin(), k.weights.end());
    keyed.push_back(std::move(k));
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.nodes.size() != b.nodes.size()) return a.nodes.size() < b.nodes.size();
    return a.weights < b.weights;
  });
  std::vector<CrystalGraph> out;
  for (const auto& k : keyed) out.push_back(induced_subgraph(g, k.nodes));
  return out;
}

bool is_connected(const CrystalGraph& g) { return component_sets(g).size() <= 1; }

std::optional<int> try_find_anchor(const CrystalGraph& g, AnchorMode mode) {
  if (g.size() == 0) return std::nullopt;
  const CartanData& cd = g.cartan();
  const Weight base = g.weight(0);
  std::vector<std::vector<int>> rel(g.size());
  for (int b = 0; b < g.size(); ++b) {
    auto c = cd.root_coords(g.weight(b) - base);
    if (!c) return std::nullopt;
    rel[b] = std::move(*c);
  }
  std::vector<int> ext = rel[0];
  for (int b = 1; b < g.size(); ++b)
    for (std::size_t k = 0; k < ext.size(); ++k)
      ext[k] = mode == AnchorMode::Min ? std::min(ext[k], rel[b][k]) : std::max(ext[k], rel[b][k]);
  std::optional<int> found;
  for (int b = 0; b < g.size(); ++b) {
    if (rel[b] != ext) continue;
    if (found) return std::nullopt;
    found = b;
  }
  return found;
}

int find_anchor(const CrystalGraph& g, AnchorMode mode) {
  auto a = try_find_anchor(g, mode);
  if (!a)
    throw AmbiguousAnchor(std::string("no unique ") + (mode == AnchorMode::Min ? "minimal" : "maximal") +
                          " weight element among " + std::to_string(g.size()) + " nodes");
  return *a;
}

void detect_anchors(CrystalGraph& g) {
  g.anchor_min = try_find_anchor(g, AnchorMode::Min);
  g.anchor_max = try_find_anchor(g, AnchorMode::Max);
}

std::optional<NodeMap> iso_from(const CrystalGraph& c, int a, const CrystalGraph& c2, int a2) {
  if (c.size() != c2.size() || c.num_colors() != c2.num_colors()) return std::nullopt;
  NodeMap map(c.size(), -1);
  std::vector<int> rev(c2.size(), -1);
  std::deque<int> queue;
  auto bind = [&](int x, int y) {
    if (map[x] == -1 && rev[y] == -1) {
      if (c.weight(x) != c2.weight(y)) return false;
      map[x] = y;
      rev[y] = x;
      queue.push_back(x);
      return true;
    }
    return map[x] == y && rev[y] == x;
  };
  if (!bind(a, a2)) return std::nullopt;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    const int y = map[x];
    for (int i = 0; i < c.num_colors(); ++i) {
      const int fx = c.f(x, i), fy = c2.f(y, i);
      if ((fx < 0) != (fy < 0)) return std::nullopt;
      if (fx >= 0 && !bind(fx, fy)) return std::nullopt;
      const int ex = c.e(x, i), ey = c2.e(y, i);
      if ((ex < 0) != (ey < 0)) return std::nullopt;
      if (ex >= 0 && !bind(ex, ey)) return std::nullopt;
    }
  }
  if (std::find(map.begin(), map.end(), -1) != map.end()) return std::nullopt;
  return map;
}

std::optional<NodeMap> iso_check(const CrystalGraph& c, const CrystalGraph& c2, AnchorMode mode) {
  const int a = find_anchor(c, mode);
  const int a2 = find_anchor(c2, mode);
  auto map = iso_from(c, a, c2, a2);
  if (map && !verify_isomorphism(c, c2, *map)) throw Error("internal: isomorphism failed re-verification");
  return map;
}

std::optional<NodeMap> find_isomorphism(const CrystalGraph& c, const CrystalGraph& c2) {
  if (c.size() != c2.size()) return std::nullopt;
  if (c.size() == 0) return NodeMap{};
  const auto a = try_find_anchor(c, AnchorMode::Max);
  const auto a2 = try_find_anchor(c2, AnchorMode::Max);
  if (a && a2) {
    auto map = iso_from(c, *a, c2, *a2);
    if (map && verify_isomorphism(c, c2, *map)) return map;
    return std::nullopt;
  }
  for (int y = 0; y < c2.size(); ++y) {
    if (c2.weight(y) != c.weight(0)) continue;
    auto map = iso_from(c, 0, c2, y);
    if (map && verify_isomorphism(c, c2, *map)) return map;
  }
  return std::nullopt;
}

std::optional<NodeMap> find_isomorphism_any(const CrystalGraph& c, const CrystalGraph& c2) {
  if (c.size() != c2.size()) return std::nullopt;
  const auto a = components(c);
  const auto b = components(c2);
  if (a.size() != b.size()) return std::nullopt;
  const std::size_t n = a.size();
  std::vector<std::vector<std::optional<NodeMap>>> maps(n, std::vector<std::optional<NodeMap>>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (a[x].size() == b[y].size()) maps[x][y] = find_isomorphism(a[x], b[y]);
  // Kuhn's augmenting paths.
  std::vector<int> owner(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<char> seen(n, 0);
    auto augment = [&](auto&& self, std::size_t u) -> bool {
      for (std::size_t y = 0; y < n; ++y) {
        if (!maps[u][y] || seen[y]) continue;
        seen[y] = 1;
        if (owner[y] < 0 || self(self, static_cast<std::size_t>(owner[y]))) {
          owner[y] = static_cast<int>(u);
          return true;
        }
      }
      return false;
    };
    if (!augment(augment, x)) return std::nullopt;
  }
  NodeMap map(c.size(), -1);
  for (std::size_t y = 0; y < n; ++y) {
    const auto& part = *maps[owner[y]][y];
    const auto& src = a[owner[y]];
    for (int k = 0; k < src.size(); ++k) map[src.origin[k]] = b[y].origin[part[k]];
  }
  if (!verify_isomorphism(c, c2, map)) return std::nullopt;
  return map;
}

bool verify_isomorphism(const CrystalGraph& c, const CrystalGraph& c2, const NodeMap& map) {
  if (c.size() != c2.size() || static_cast<int>(map.size()) != c.size()) return false;
  if (c.num_colors() != c2.num_colors()) return false;
  std::vector<char> hit(c2.size(), 0);
  for (int y : map) {
    if (y < 0 || y >= c2.size() || hit[y]) return false;
    hit[y] = 1;
  }
  for (int x = 0; x < c.size(); ++x) {
    if (c.weight(x) != c2.weight(map[x])) return false;
    for (int i = 0; i < c.num_colors(); ++i) {
      const int fx = c.f(x, i), fy = c2.f(map[x], i);
      if (fx < 0 ? fy >= 0 : fy != map[fx]) return false;
      const int ex = c.e(x, i), ey = c2.e(map[x], i);
      if (ex < 0 ? ey >= 0 : ey != map[ex]) return false;
    }
  }
  return c.edge_count() == c2.edge_count();
}

std::vector<int> demazure_subset(const CrystalGraph& g, int hw, const std::vector<int>& word, const WeylGroup& weyl) {
  if (!weyl.is_reduced(word)) throw InvalidArgument("demazure_subset: word is not reduced");
  std::vector<int> out;
  for (int b = 0; b < g.size(); ++b) {
    int x = b;
    for (int i : word)
      while (g.e(x, i) >= 0) x = g.e(x, i);
    if (x == hw) out.push_back(b);
  }
  return out;
}

int weyl_action(const CrystalGraph& g, int b, int i) {
  const int k = g.cartan().simple_pairing(i, g.weight(b));
  int x = b;
  for (int step = 0; step < std::abs(k); ++step) {
    x = k > 0 ? g.f(x, i) : g.e(x, i);
    if (x < 0) throw Error("weyl_action: string too short at " + g.repr(b));
  }
  return x;
}

bool similarity_check(const NodeMap& sigma, int m, const CrystalGraph& b, const CrystalGraph& b2,
                      const std::vector<int>& colors) {
  if (static_cast<int>(sigma.size()) != b.size()) return false;
  auto power = [&](int x, int i, bool up) {
    for (int k = 0; k < m && x >= 0; ++k) x = up ? b2.f(x, i) : b2.e(x, i);
    return x;
  };
  for (int x = 0; x < b.size(); ++x) {
    const int y = sigma[x];
    if (y < 0 || y >= b2.size()) return false;
    if (b2.weight(y) != m * b.weight(x)) return false;
    for (int i : colors) {
      if (b2.epsilon(y, i) != m * b.epsilon(x, i) || b2.phi(y, i) != m * b.phi(x, i)) return false;
      const int fx = b.f(x, i), ex = b.e(x, i);
      const int fy = power(y, i, true), ey = power(y, i, false);
      if (fx < 0 ? fy >= 0 : fy != sigma[fx]) return false;
      if (ex < 0 ? ey >= 0 : ey != sigma[ex]) return false;
    }
  }
  return true;
}

std::vector<Weight> hw_census(const CrystalGraph& g, const std::vector<int>& colors) {
  std::vector<Weight> out;
  for (int b = 0; b < g.size(); ++b) {
    bool hw = true;
    for (int i : colors) hw = hw && g.e(b, i) < 0;
    if (hw) out.push_back(g.weight(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> edge_axiom_violation(const CrystalGraph& g, const std::vector<int>& colors) {
  const CartanData& cd = g.cartan();
  for (int b = 0; b < g.size(); ++b)
    for (int i : colors) {
      const int t = g.f(b, i);
      if (t >= 0) {
        if (g.e(t, i) != b) return "e_" + std::to_string(i) + " f_" + std::to_string(i) + " != id at " + g.repr(b);
        if (g.weight(t) != g.weight(b) - cd.simple_root_weight(i))
          return "weight of f_" + std::to_string(i) + " " + g.repr(b) + " is wrong";
      }
      const int s = g.e(b, i);
      if (s >= 0 && g.f(s, i) != b) return "f_" + std::to_string(i) + " e_" + std::to_string(i) + " != id at " + g.repr(b);
    }
  return std::nullopt;
}

std::optional<std::string> seminormal_violation(const CrystalGraph& g, const std::vector<int>& colors) {
  if (auto v = edge_axiom_violation(g, colors)) return v;
  const CartanData& cd = g.cartan();
  for (int b = 0; b < g.size(); ++b)
    for (int i : colors) {
      const int lhs = g.phi(b, i) - g.epsilon(b, i);
      if (lhs != cd.simple_pairing(i, g.weight(b))) {
        std::ostringstream os;
        os << "phi_" << i << " - epsilon_" << i << " = " << lhs << " but <alpha_" << i
           << "^vee, wt> = " << cd.simple_pairing(i, g.weight(b)) << " at " << g.repr(b);
        return os.str();
      }
    }
  return std::nullopt;
}

}  // namespace krc
