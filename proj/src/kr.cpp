#include "krc/kr.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "krc/errors.hpp"

namespace krc {

bool RectTableau::semistandard(int max_entry) const {
  if (static_cast<int>(entries.size()) != rows * cols) return false;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const int x = at(r, c);
      if (x < 1 || x > max_entry) return false;
      if (c > 0 && at(r, c - 1) > x) return false;
      if (r > 0 && at(r - 1, c) >= x) return false;
    }
  return true;
}

std::vector<int> RectTableau::reading_word() const {
  std::vector<int> w;
  w.reserve(entries.size());
  for (int c = 0; c < cols; ++c)
    for (int r = rows - 1; r >= 0; --r) w.push_back(at(r, c));
  return w;
}

std::string RectTableau::str() const {
  std::ostringstream os;
  os << '[';
  for (int r = 0; r < rows; ++r) {
    if (r) os << ',';
    os << '[';
    for (int c = 0; c < cols; ++c) os << (c ? "," : "") << at(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

std::vector<RectTableau> rect_tableaux(int r, int s, int max_entry, std::size_t cap) {
  if (r < 1 || s < 1) throw InvalidArgument("tableau shape must be positive");
  std::vector<RectTableau> out;
  RectTableau t{r, s, std::vector<int>(r * s, 0)};
  auto fill = [&](auto&& self, int pos) -> void {
    if (pos == r * s) {
      if (out.size() >= cap) throw ResourceLimit("tableau enumeration exceeds the node cap");
      out.push_back(t);
      return;
    }
    const int row = pos / s, col = pos % s;
    int lo = 1;
    if (col > 0) lo = std::max(lo, t.at(row, col - 1));
    if (row > 0) lo = std::max(lo, t.at(row - 1, col) + 1);
    const int hi = max_entry - (r - 1 - row);
    for (int x = lo; x <= hi; ++x) {
      t.at(row, col) = x;
      self(self, pos + 1);
    }
  };
  fill(fill, 0);
  return out;
}

RectTableau promotion(const RectTableau& t, int n) {
  RectTableau out = t;
  constexpr int kHole = 0;
  // Entries n+1 can only sit in the last row; vacate them left to right.
  const int last = out.rows - 1;
  std::vector<int> holes;
  for (int c = 0; c < out.cols; ++c)
    if (out.at(last, c) == n + 1) {
      out.at(last, c) = kHole;
      holes.push_back(c);
    }
  for (int c0 : holes) {
    int r = last, c = c0;
    while (true) {
      const int up = r > 0 ? out.at(r - 1, c) : kHole;
      const int left = c > 0 ? out.at(r, c - 1) : kHole;
      if (up == kHole && left == kHole) break;
      if (up >= left) {
        out.at(r, c) = up;
        out.at(r - 1, c) = kHole;
        --r;
      } else {
        out.at(r, c) = left;
        out.at(r, c - 1) = kHole;
        --c;
      }
    }
  }
  for (int& x : out.entries) x = x == kHole ? 1 : x + 1;
  return out;
}

namespace {

Weight epsilon_weight(int n, int k) {
  Weight w = Weight::zero(n);
  if (k <= n) w[k - 1] += 1;
  if (k >= 2) w[k - 2] -= 1;
  return w;
}

class TypeAKR : public Crystal {
 public:
  TypeAKR(int n, int r, int s, std::size_t cap, bool inverse_first)
      : cartan_(CartanData::build(Family::A, n)), n_(n), inverse_first_(inverse_first) {
    tableaux_ = rect_tableaux(r, s, n + 1, cap);
    for (std::size_t k = 0; k < tableaux_.size(); ++k) index_.emplace(tableaux_[k].entries, static_cast<int>(k));
    pr_.resize(tableaux_.size());
    pr_inv_.resize(tableaux_.size());
    for (std::size_t k = 0; k < tableaux_.size(); ++k) {
      const int j = index_.at(promotion(tableaux_[k], n).entries);
      pr_[k] = j;
      pr_inv_[j] = static_cast<int>(k);
    }
  }

  const CartanPtr& cartan() const override { return cartan_; }
  const std::vector<RectTableau>& tableaux() const { return tableaux_; }

  std::optional<Element> f(const Element& b, int i) const override { return apply(b, i, true); }
  std::optional<Element> e(const Element& b, int i) const override { return apply(b, i, false); }

  Weight weight(const Element& b) const override {
    Weight w = Weight::zero(n_);
    for (int x : b.data) w += epsilon_weight(n_, x);
    return w;
  }

  std::string repr(const Element& b) const override { return tableaux_[index_.at(b.data)].str(); }

 private:
  std::optional<Element> classical(const RectTableau& t, int i, bool lower) const {
    const auto word = t.reading_word();
    std::vector<std::pair<int, int>> pe;
    pe.reserve(word.size());
    for (int x : word) pe.emplace_back(x == i ? 1 : 0, x == i + 1 ? 1 : 0);
    const auto sig = signature_rule(pe);
    const int pos = lower ? sig.f_factor : sig.e_factor;
    if (pos < 0) return std::nullopt;
    const int c = pos / t.rows;
    const int r = t.rows - 1 - pos % t.rows;
    RectTableau out = t;
    out.at(r, c) += lower ? 1 : -1;
    return Element{out.entries};
  }

  std::optional<Element> apply(const Element& b, int i, bool lower) const {
    const int k = index_.at(b.data);
    if (i != 0) return classical(tableaux_[k], i, lower);
    const auto& to = inverse_first_ ? pr_inv_ : pr_;
    const auto& back = inverse_first_ ? pr_ : pr_inv_;
    auto y = classical(tableaux_[to[k]], 1, lower);
    if (!y) return std::nullopt;
    return Element{tableaux_[back[index_.at(y->data)]].entries};
  }

  CartanPtr cartan_;
  int n_;
  bool inverse_first_;
  std::vector<RectTableau> tableaux_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> pr_;
  std::vector<int> pr_inv_;
};

bool raises_by_theta(const TypeAKR& kr) {
  const CartanData& cd = *kr.cartan();
  const Weight theta = cd.root_weight(cd.highest_root());
  for (const auto& t : kr.tableaux()) {
    const Element b{t.entries};
    if (auto y = kr.f(b, 0))
      if (kr.weight(*y) != kr.weight(b) + theta) return false;
  }
  return true;
}

}  // namespace

bool typeA_promotion_orientation_ok(int n, int r, int s) { return raises_by_theta(TypeAKR(n, r, s, kDefaultNodeCap, false)); }

CrystalGraph kr_typeA(int n, int r, int s, std::size_t cap) {
  if (n < 1 || r < 1 || r > n || s < 1) throw InvalidArgument("kr_typeA needs 1 <= r <= n and s >= 1");
  auto kr = std::make_unique<TypeAKR>(n, r, s, cap, false);
  if (!raises_by_theta(*kr)) kr = std::make_unique<TypeAKR>(n, r, s, cap, true);
  std::vector<Element> elements;
  for (const auto& t : kr->tableaux()) elements.push_back(Element{t.entries});
  CrystalGraph g = materialize(*kr, elements, all_colors(*kr->cartan()));
  detect_anchors(g);
  return g;
}

namespace {

std::string kn_str(int x) { return std::to_string(x); }

Weight kn_weight(int n, int x) {
  const int k = std::abs(x);
  Weight w = Weight::zero(n);
  w[k - 1] += 1;
  if (k >= 2) w[k - 2] -= 1;
  return x > 0 ? w : -w;
}

std::vector<int> kn_letters(int n) {
  std::vector<int> v;
  for (int i = 1; i <= n; ++i) v.push_back(i);
  for (int i = n; i >= 1; --i) v.push_back(-i);
  return v;
}

}  // namespace

CrystalGraph kr_C_onebox(int n) {
  CrystalGraph g(CartanData::build(Family::C, n));
  std::map<int, int> id;
  for (int x : kn_letters(n)) id[x] = g.add_node(Element{{x}}, kn_weight(n, x), kn_str(x));
  for (int i = 1; i < n; ++i) {
    g.set_edge(i, id[i], id[i + 1]);
    g.set_edge(i, id[-(i + 1)], id[-i]);
  }
  g.set_edge(n, id[n], id[-n]);
  g.set_edge(0, id[-1], id[1]);
  detect_anchors(g);
  return g;
}

CrystalGraph fixture_C2(std::string_view which) {
  auto cartan = CartanData::build(Family::C, 2);
  CrystalGraph g(cartan);
  struct Edge {
    int src, dst, color;
  };
  std::vector<std::vector<int>> nodes;
  std::vector<Edge> edges;
  if (which == "tensor11") {
    for (int x : {1, 2, -2, -1})
      for (int y : {1, 2, -2, -1}) nodes.push_back({x, y});
    edges = {{0, 1, 1}, {1, 5, 1}, {2, 3, 1},  {3, 7, 1},  {8, 9, 1},  {9, 13, 1},  {10, 11, 1}, {11, 15, 1},
             {1, 2, 2}, {4, 8, 2}, {5, 6, 2},  {6, 10, 2}, {7, 11, 2}, {13, 14, 2}, {12, 0, 0}};
    for (const auto& v : nodes)
      g.add_node(Element{v}, kn_weight(2, v[0]) + kn_weight(2, v[1]), kn_str(v[0]) + "⊗" + kn_str(v[1]));
  } else if (which == "B12") {
    nodes = {{}, {1, 1}, {1, 2}, {1, -2}, {1, -1}, {2, 2}, {2, -2}, {2, -1}, {-2, -2}, {-2, -1}, {-1, -1}};
    edges = {{1, 2, 1}, {2, 5, 1}, {3, 4, 1}, {4, 7, 1}, {8, 9, 1}, {9, 10, 1},
             {2, 3, 2}, {5, 6, 2}, {6, 8, 2}, {7, 9, 2}, {0, 1, 0}};
    for (const auto& v : nodes) {
      if (v.empty()) {
        g.add_node(Element{}, Weight::zero(2), "∅");
        continue;
      }
      g.add_node(Element{v}, kn_weight(2, v[0]) + kn_weight(2, v[1]),
                 "[[" + kn_str(v[0]) + "," + kn_str(v[1]) + "]]");
    }
  } else {
    throw InvalidArgument("unknown fixture '" + std::string(which) + "' (expected tensor11 or B12)");
  }
  for (const auto& e : edges) g.set_edge(e.color, e.src, e.dst);
  detect_anchors(g);
  return g;
}

NodeMap column_replication(const CrystalGraph& small, const CrystalGraph& big, int rows, int m) {
  NodeMap map(small.size(), -1);
  for (int b = 0; b < small.size(); ++b) {
    const auto& src = small.node(b).payload.data;
    const int cols = static_cast<int>(src.size()) / rows;
    std::vector<int> wide;
    wide.reserve(src.size() * m);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        for (int k = 0; k < m; ++k) wide.push_back(src[r * cols + c]);
    if (auto t = big.find(Element{wide})) map[b] = *t;
  }
  return map;
}

CrystalGraph highest_weight_crystal(const CartanPtr& cartan, const Weight& lambda) {
  if (!cartan->is_dominant(lambda)) throw InvalidArgument("highest weight must be dominant");
  const int n = cartan->rank();
  std::shared_ptr<const CrystalGraph> vec;
  if (cartan->family() == Family::A)
    vec = std::make_shared<CrystalGraph>(kr_typeA(n, 1, 1));
  else if (cartan->family() == Family::C)
    vec = std::make_shared<CrystalGraph>(kr_C_onebox(n));
  else
    throw Unsupported("highest_weight_crystal is available in types A and C");
  const auto colors = classical_colors(*cartan);

  // Highest weight element of weight varpi_i inside the i-th tensor power.
  auto fundamental_hw = [&](int i) {
    TensorCrystal t(std::vector<std::shared_ptr<const CrystalGraph>>(i, vec));
    for (const auto& b : t.elements()) {
      if (t.weight(b) != cartan->fundamental(i)) continue;
      bool hw = true;
      for (int c : colors) hw = hw && !t.e(b, c);
      if (hw) return b.data;
    }
    throw Error("no highest weight element for a fundamental weight");
  };

  std::vector<int> seed;
  for (int i = 1; i <= n; ++i)
    for (int k = 0; k < lambda[i - 1]; ++k) {
      const auto part = fundamental_hw(i);
      seed.insert(seed.end(), part.begin(), part.end());
    }
  if (seed.empty()) {
    CrystalGraph g = trivial_crystal(cartan);
    return g;
  }
  TensorCrystal t(std::vector<std::shared_ptr<const CrystalGraph>>(seed.size(), vec));
  CrystalGraph g = explore(t, {Element{seed}}, colors);
  detect_anchors(g);
  return g;
}

std::vector<std::pair<int, int>> parse_factors(std::string_view spec) {
  std::vector<std::pair<int, int>> out;
  if (spec.empty()) return out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t end = std::min(spec.find(':', start), spec.size());
    const auto item = spec.substr(start, end - start);
    const auto comma = item.find(',');
    if (comma == std::string_view::npos) throw InvalidArgument("factor '" + std::string(item) + "' is not r,s");
    int r = 0, s = 0;
    const auto a = item.substr(0, comma), b = item.substr(comma + 1);
    auto ra = std::from_chars(a.data(), a.data() + a.size(), r);
    auto rb = std::from_chars(b.data(), b.data() + b.size(), s);
    if (ra.ec != std::errc{} || ra.ptr != a.data() + a.size() || rb.ec != std::errc{} || rb.ptr != b.data() + b.size())
      throw InvalidArgument("factor '" + std::string(item) + "' is not r,s");
    out.emplace_back(r, s);
    start = end + 1;
  }
  return out;
}

std::shared_ptr<const CrystalGraph> kr_crystal(const CartanPtr& cartan, int r, int s, std::size_t cap) {
  if (s == 0) return std::make_shared<CrystalGraph>(trivial_crystal(cartan));
  if (r < 1 || r > cartan->rank() || s < 0) throw InvalidArgument("KR crystal index out of range");
  if (cartan->family() == Family::A) return std::make_shared<CrystalGraph>(kr_typeA(cartan->rank(), r, s, cap));
  if (cartan->family() == Family::C && r == 1 && s == 1) return std::make_shared<CrystalGraph>(kr_C_onebox(cartan->rank()));
  throw Unsupported("no model for B^{" + std::to_string(r) + "," + std::to_string(s) + "} in type " + cartan->name());
}

CrystalGraph kr_tensor(const CartanPtr& cartan, const std::vector<std::pair<int, int>>& factors, std::size_t cap) {
  if (factors.empty()) return trivial_crystal(cartan);
  std::vector<std::shared_ptr<const CrystalGraph>> graphs;
  for (const auto& [r, s] : factors) graphs.push_back(kr_crystal(cartan, r, s, cap));
  return tensor_graph(graphs, cap);
}

}  // namespace krc
