#include "krc/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "krc/errors.hpp"

namespace krc {

using nlohmann::json;

namespace {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

json factors_json(const Factors& f) {
  json out = json::array();
  for (const auto& [r, s] : f) out.push_back({r, s});
  return out;
}

json weights_json(const std::vector<Weight>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(w.coords());
  return out;
}

std::vector<Weight> sorted_weights(const CrystalGraph& g) {
  std::vector<Weight> ws;
  for (int b = 0; b < g.size(); ++b) ws.push_back(g.weight(b));
  std::sort(ws.begin(), ws.end());
  return ws;
}

json edges_json(const CrystalGraph& g) {
  json out = json::array();
  for (int c = 0; c < g.num_colors(); ++c)
    for (int b = 0; b < g.size(); ++b)
      if (g.f(b, c) >= 0) out.push_back({g.repr(b), g.repr(g.f(b, c)), c});
  return out;
}

json nodes_json(const CrystalGraph& g) {
  json out = json::array();
  for (int b = 0; b < g.size(); ++b) out.push_back(g.repr(b));
  return out;
}

json map_json(const CrystalGraph& a, const CrystalGraph& b, const NodeMap& map) {
  json out = json::array();
  for (int x = 0; x < a.size(); ++x) out.push_back({a.repr(x), b.repr(map[x])});
  return out;
}

// First place where the forced map from a -> a2 breaks down.
std::string iso_failure(const CrystalGraph& c, int a, const CrystalGraph& c2, int a2) {
  if (c.size() != c2.size())
    return "sizes differ: " + std::to_string(c.size()) + " vs " + std::to_string(c2.size());
  if (sorted_weights(c) != sorted_weights(c2)) return "weight multisets differ";
  NodeMap map(c.size(), -1);
  std::vector<int> queue{a};
  map[a] = a2;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int x = queue[h], y = map[x];
    if (c.weight(x) != c2.weight(y)) return "weight mismatch at " + c.repr(x) + " / " + c2.repr(y);
    for (int i = 0; i < c.num_colors(); ++i)
      for (bool up : {true, false}) {
        const int tx = up ? c.f(x, i) : c.e(x, i);
        const int ty = up ? c2.f(y, i) : c2.e(y, i);
        const std::string op = std::string(up ? "f_" : "e_") + std::to_string(i);
        if ((tx < 0) != (ty < 0)) return op + " defined on only one side at " + c.repr(x) + " / " + c2.repr(y);
        if (tx < 0) continue;
        if (map[tx] < 0) {
          map[tx] = ty;
          queue.push_back(tx);
        } else if (map[tx] != ty) {
          return op + " images disagree at " + c.repr(x);
        }
      }
  }
  return "forced map is not a bijection";
}

int containing(const std::vector<CrystalGraph>& comps, int node) {
  for (std::size_t k = 0; k < comps.size(); ++k)
    if (std::find(comps[k].origin.begin(), comps[k].origin.end(), node) != comps[k].origin.end())
      return static_cast<int>(k);
  return -1;
}

std::string level_name(FilterMode mode) { return mode == FilterMode::Head ? "head" : "tail"; }

}  // namespace

json Report::to_json() const {
  return json{{"name", name}, {"params", params}, {"status", pass ? "pass" : "fail"}, {"witnesses", witnesses},
              {"elapsed_ms", elapsed_ms}};
}

std::string junit_xml(const std::vector<Report>& reports, const std::string& suite) {
  auto escape = [](const std::string& s) {
    std::string out;
    for (char ch : s) {
      switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
      }
    }
    return out;
  };
  int failures = 0;
  double total = 0;
  for (const auto& r : reports) {
    failures += r.pass ? 0 : 1;
    total += r.elapsed_ms;
  }
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<testsuite name=\"" << escape(suite) << "\" tests=\"" << reports.size() << "\" failures=\"" << failures
     << "\" time=\"" << total / 1000.0 << "\">\n";
  for (const auto& r : reports) {
    os << "  <testcase name=\"" << escape(r.name + " " + r.params.dump()) << "\" time=\"" << r.elapsed_ms / 1000.0
       << "\"";
    if (r.pass) {
      os << "/>\n";
    } else {
      os << ">\n    <failure message=\"" << escape(r.witnesses.dump()) << "\"/>\n  </testcase>\n";
    }
  }
  os << "</testsuite>\n";
  return os.str();
}

BuiltCrystal build_spec(const CartanPtr& cartan, const Factors& factors, std::size_t cap) {
  if (cartan->family() == Family::C && cartan->rank() == 2 && factors == Factors{{1, 2}})
    return {fixture_C2("B12"), 1};
  for (const auto& [r, s] : factors) {
    if (r < 1 || r > cartan->rank()) throw InvalidArgument("factor B^{" + std::to_string(r) + "," + std::to_string(s) +
                                                           "}: r outside 1.." + std::to_string(cartan->rank()));
    if (s < 0) throw InvalidArgument("factor B^{" + std::to_string(r) + "," + std::to_string(s) + "}: s < 0");
  }
  return {kr_tensor(cartan, factors, cap), std::nullopt};
}

CrystalGraph filtered(const BuiltCrystal& b, int level, FilterMode mode) {
  if (!b.prefiltered_level) return demazure_filter(b.graph, level, mode);
  if (mode != FilterMode::Head || level != *b.prefiltered_level)
    throw Unsupported("the C2 B^{1,2} graph is only available as its level-" + std::to_string(*b.prefiltered_level) +
                      " Demazure filtration");
  return b.graph;
}

int factor_level(const CartanData& cartan, int r, int s) {
  const int c = cartan.c_value(r);
  return (s + c - 1) / c;
}

Weight maximal_weight(const CartanData& cartan, const Factors& factors) {
  Weight w = Weight::zero(cartan.rank());
  for (const auto& [r, s] : factors) w += s * cartan.fundamental(r);
  return w;
}

std::optional<std::vector<int>> match_components(const std::vector<CrystalGraph>& a,
                                                 const std::vector<CrystalGraph>& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  std::vector<std::vector<signed char>> known(n, std::vector<signed char>(n, -1));
  auto iso = [&](std::size_t x, std::size_t y) {
    if (known[x][y] < 0) known[x][y] = (a[x].size() == b[y].size() && find_isomorphism(a[x], b[y])) ? 1 : 0;
    return known[x][y] == 1;
  };
  auto anchor_weight = [](const CrystalGraph& g) {
    auto k = try_find_anchor(g, AnchorMode::Max);
    return k ? std::optional<Weight>(g.weight(*k)) : std::nullopt;
  };

  std::vector<int> match(n, -1), owner(n, -1);
  bool complete = true;
  for (std::size_t x = 0; x < n; ++x) {
    const auto wx = anchor_weight(a[x]);
    for (std::size_t y = 0; y < n && match[x] < 0; ++y) {
      if (owner[y] >= 0 || a[x].size() != b[y].size() || anchor_weight(b[y]) != wx) continue;
      if (iso(x, y)) {
        match[x] = static_cast<int>(y);
        owner[y] = static_cast<int>(x);
      }
    }
    complete = complete && match[x] >= 0;
  }
  if (complete) return match;

  std::fill(match.begin(), match.end(), -1);
  std::fill(owner.begin(), owner.end(), -1);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<char> seen(n, 0);
    auto augment = [&](auto&& self, std::size_t u) -> bool {
      for (std::size_t y = 0; y < n; ++y) {
        if (seen[y] || !iso(u, y)) continue;
        seen[y] = 1;
        if (owner[y] < 0 || self(self, static_cast<std::size_t>(owner[y]))) {
          owner[y] = static_cast<int>(u);
          match[u] = static_cast<int>(y);
          return true;
        }
      }
      return false;
    };
    if (!augment(augment, x)) return std::nullopt;
  }
  return match;
}

Report check_reduction(const CartanPtr& cartan, const Factors& b, const Factors& b2, int level, FilterMode mode,
                       bool verify_connected, std::size_t cap) {
  Timer timer;
  Report rep;
  rep.name = "reduction";
  rep.params = {{"type", cartan->name()}, {"B", factors_json(b)}, {"B_prime", factors_json(b2)}, {"level", level},
                {"mode", level_name(mode)}};
  if (maximal_weight(*cartan, b) != maximal_weight(*cartan, b2))
    throw PreconditionError("maximal weights differ: " + maximal_weight(*cartan, b).str() + " vs " +
                            maximal_weight(*cartan, b2).str());
  for (const auto* side : {&b, &b2})
    for (const auto& [r, s] : *side)
      if (factor_level(*cartan, r, s) > level)
        throw PreconditionError("factor B^{" + std::to_string(r) + "," + std::to_string(s) + "} has level " +
                                std::to_string(factor_level(*cartan, r, s)) + " > " + std::to_string(level));

  const auto left = filtered(build_spec(cartan, b, cap), level, mode);
  const auto right = filtered(build_spec(cartan, b2, cap), level, mode);
  const AnchorMode am = mode == FilterMode::Head ? AnchorMode::Min : AnchorMode::Max;
  const auto lc = components(left);
  const auto rc = components(right);
  rep.witnesses["components_B"] = lc.size();
  rep.witnesses["components_B_prime"] = rc.size();
  if (verify_connected) {
    rep.witnesses["B_connected"] = lc.size() == 1;
    if (lc.size() != 1) {
      rep.witnesses["counterexample"] = "filtration of B is not connected";
      rep.elapsed_ms = timer.ms();
      return rep;
    }
  }
  const CrystalGraph& x = lc[containing(lc, find_anchor(left, am))];
  const CrystalGraph& y = rc[containing(rc, find_anchor(right, am))];
  rep.witnesses["sizes"] = {x.size(), y.size()};
  auto map = iso_check(x, y, am);
  rep.pass = map.has_value();
  if (map)
    rep.witnesses["isomorphism"] = map_json(x, y, *map);
  else
    rep.witnesses["counterexample"] = iso_failure(x, find_anchor(x, am), y, find_anchor(y, am));
  rep.elapsed_ms = timer.ms();
  return rep;
}

Report check_bmin(const CartanPtr& cartan, const Factors& b, int level, std::size_t cap) {
  Timer timer;
  Report rep;
  rep.name = "bmin";
  rep.params = {{"type", cartan->name()}, {"B", factors_json(b)}, {"level", level}};
  int max_level = 0;
  for (const auto& [r, s] : b) max_level = std::max(max_level, factor_level(*cartan, r, s));
  rep.witnesses["max_factor_level"] = max_level;
  rep.witnesses["within_hypothesis"] = max_level <= level;

  const CrystalGraph d = filtered(build_spec(cartan, b, cap), level, FilterMode::Head);
  const auto all = all_colors(*cartan);
  const auto comps = components(d);
  json per = json::array();
  std::vector<Weight> lambdas;
  bool ok = true;
  for (const auto& c : comps) {
    json w{{"size", c.size()}};
    const auto bmin = try_find_anchor(c, AnchorMode::Min);
    if (!bmin) {
      ok = false;
      w["counterexample"] = "no unique minimal-weight element";
      per.push_back(w);
      continue;
    }
    w["b_min"] = c.repr(*bmin);
    for (int x = 0; x < c.size(); ++x) {
      if (x == *bmin) continue;
      const auto gap = cartan->root_coords(c.weight(x) - c.weight(*bmin));
      const bool positive = gap && std::all_of(gap->begin(), gap->end(), [](int v) { return v >= 0; }) &&
                            std::any_of(gap->begin(), gap->end(), [](int v) { return v > 0; });
      if (!positive) {
        ok = false;
        w["counterexample"] = "wt(" + c.repr(x) + ") - wt(b_min) not in Q0+ \\ {0}";
        break;
      }
    }
    const auto hws = hw_census(c, all);
    w["hw_weights"] = weights_json(hws);
    const auto dom = dominantize(*cartan, c.weight(*bmin), level);
    w["Lambda"] = dom.dominant.coords();
    w["w"] = dom.word;
    lambdas.push_back(dom.dominant);
    if (hws.size() != 1 || hws.front() != dom.dominant) {
      ok = false;
      if (!w.contains("counterexample"))
        w["counterexample"] = "highest weight of the component is not the dominantized weight of b_min";
    }
    per.push_back(w);
  }
  std::sort(lambdas.begin(), lambdas.end());
  const auto census = hw_census(d, all);
  rep.witnesses["components"] = per;
  rep.witnesses["census"] = weights_json(census);
  rep.witnesses["dominantized"] = weights_json(lambdas);
  if (census != lambdas) {
    ok = false;
    rep.witnesses["counterexample"] = "I-census differs from the dominantized b_min weights";
  }
  rep.pass = ok;
  rep.elapsed_ms = timer.ms();
  return rep;
}

namespace {

// B^{r,s} factors with s = -1 make the whole product empty.
std::optional<CrystalGraph> qsystem_side(const CartanPtr& cartan, const Factors& f, int level, std::size_t cap) {
  for (const auto& [r, s] : f)
    if (s < 0) return std::nullopt;
  return demazure_filter(kr_tensor(cartan, f, cap), level, FilterMode::Head);
}

}  // namespace

Report check_qsystem_typeA(int n, int a, int m, int level, std::size_t cap) {
  Timer timer;
  Report rep;
  rep.name = "qsystem";
  rep.params = {{"n", n}, {"a", a}, {"m", m}, {"level", level}};
  if (a < 1 || a > n || m < 1) throw InvalidArgument("qsystem needs 1 <= a <= n and m >= 1");
  if (level < m) throw PreconditionError("qsystem needs level >= m in type A");
  auto cartan = CartanData::build(Family::A, n);
  const Factors lhs_f{{a, m - 1}, {a, m - 1}};
  const Factors rhs1_f{{a, m}, {a, m - 2}};
  Factors rhs2_f;
  for (int b : cartan->neighbours(a)) rhs2_f.emplace_back(b, m - 1);
  rep.params["lhs"] = factors_json(lhs_f);
  rep.params["rhs_first"] = factors_json(rhs1_f);
  rep.params["rhs_second"] = factors_json(rhs2_f);

  const auto lhs = qsystem_side(cartan, lhs_f, level, cap);
  const auto rhs1 = qsystem_side(cartan, rhs1_f, level, cap);
  const auto rhs2 = qsystem_side(cartan, rhs2_f, level, cap);
  const int sl = lhs ? lhs->size() : 0, s1 = rhs1 ? rhs1->size() : 0, s2 = rhs2 ? rhs2->size() : 0;
  rep.witnesses["sizes"] = {{"lhs", sl}, {"rhs_first", s1}, {"rhs_second", s2}};
  if (sl != s1 + s2) {
    rep.witnesses["counterexample"] = "size ledger " + std::to_string(sl) + " != " + std::to_string(s1) + " + " +
                                      std::to_string(s2);
    rep.elapsed_ms = timer.ms();
    return rep;
  }
  std::vector<CrystalGraph> left, right;
  if (lhs) left = components(*lhs);
  for (const auto* side : {&rhs1, &rhs2})
    if (*side)
      for (auto& c : components(**side)) right.push_back(std::move(c));
  json ls = json::array(), rs = json::array();
  for (const auto& c : left) ls.push_back(c.size());
  for (const auto& c : right) rs.push_back(c.size());
  rep.witnesses["component_sizes_lhs"] = ls;
  rep.witnesses["component_sizes_rhs"] = rs;
  const auto match = match_components(left, right);
  rep.pass = match.has_value();
  if (match) {
    rep.witnesses["matching"] = *match;
  } else {
    json unmatched = json::array();
    for (const auto& c : left) {
      bool any = false;
      for (const auto& d : right) any = any || (c.size() == d.size() && find_isomorphism(c, d));
      if (!any) unmatched.push_back({{"size", c.size()}, {"nodes", nodes_json(c)}});
    }
    rep.witnesses["counterexample"] = {{"lhs_components_without_partner", unmatched}};
  }
  rep.elapsed_ms = timer.ms();
  return rep;
}

namespace {

using Character = std::map<Weight, long long>;

Character character(const CrystalGraph& g) {
  Character ch;
  for (int b = 0; b < g.size(); ++b) ++ch[g.weight(b)];
  return ch;
}

Character multiply(const Character& x, const Character& y) {
  Character out;
  for (const auto& [wx, cx] : x)
    for (const auto& [wy, cy] : y) out[wx + wy] += cx * cy;
  return out;
}

Character add(Character x, const Character& y) {
  for (const auto& [w, c] : y) x[w] += c;
  return x;
}

}  // namespace

Report check_character_qsystem(int n, int a, int m) {
  Timer timer;
  Report rep;
  rep.name = "qchar";
  rep.params = {{"n", n}, {"a", a}, {"m", m}};
  if (a < 1 || a > n || m < 1) throw InvalidArgument("qchar needs 1 <= a <= n and m >= 1");
  auto cartan = CartanData::build(Family::A, n);
  auto q = [&](int r, int s) {
    if (r == 0 || r == n + 1 || s == 0) return Character{{Weight::zero(n), 1}};
    return character(kr_typeA(n, r, s));
  };
  const Character lhs = multiply(q(a, m), q(a, m));
  const Character rhs = add(multiply(q(a, m + 1), q(a, m - 1)), multiply(q(a - 1, m), q(a + 1, m)));
  long long dl = 0, dr = 0;
  for (const auto& [w, c] : lhs) dl += c;
  for (const auto& [w, c] : rhs) dr += c;
  rep.witnesses["dimensions"] = {dl, dr};
  rep.witnesses["monomials"] = lhs.size();
  rep.pass = lhs == rhs;
  if (!rep.pass) {
    for (const auto& [w, c] : lhs) {
      auto it = rhs.find(w);
      const long long other = it == rhs.end() ? 0 : it->second;
      if (other != c) {
        rep.witnesses["counterexample"] = {{"weight", w.coords()}, {"lhs", c}, {"rhs", other}};
        break;
      }
    }
    if (!rep.witnesses.contains("counterexample")) rep.witnesses["counterexample"] = "rhs has extra monomials";
  }
  rep.elapsed_ms = timer.ms();
  return rep;
}

Report check_alcove_correspondence(const CartanPtr& cartan, const Weight& lambda, int level, int threads,
                                   std::size_t cap) {
  Timer timer;
  Report rep;
  rep.name = "alcove";
  rep.params = {{"type", cartan->name()}, {"lambda", lambda.coords()}, {"level", level}};
  if (cartan->family() != Family::A) throw Unsupported("the alcove correspondence check is implemented in type A");
  Factors f;
  for (int p = 1; p <= cartan->rank(); ++p)
    for (int k = 0; k < lambda[p - 1]; ++k) f.emplace_back(p, 1);
  rep.params["factors"] = factors_json(f);
  const auto model = alcove_crystal(cartan, lambda, level, threads, ChainOrder::Lex, cap);
  const CrystalGraph dd = demazure_filter(kr_tensor(cartan, f, cap), level, FilterMode::Tail);
  rep.witnesses["sizes"] = {model.graph.size(), dd.size()};
  rep.witnesses["chain_length"] = model.chain.size();
  std::optional<NodeMap> map;
  if (is_connected(model.graph) && is_connected(dd))
    map = iso_check(model.graph, dd, AnchorMode::Max);
  else
    map = find_isomorphism_any(model.graph, dd);
  rep.pass = map.has_value();
  if (map) {
    rep.witnesses["isomorphism"] = map_json(model.graph, dd, *map);
  } else {
    const auto a = try_find_anchor(model.graph, AnchorMode::Max);
    const auto b = try_find_anchor(dd, AnchorMode::Max);
    rep.witnesses["counterexample"] = a && b ? iso_failure(model.graph, *a, dd, *b) : "no matching of components";
  }
  rep.elapsed_ms = timer.ms();
  return rep;
}

Report check_figure() {
  Timer timer;
  Report rep;
  rep.name = "figure";
  rep.params = {{"type", "C2"}, {"level", 1}};
  auto box = std::make_shared<CrystalGraph>(kr_C_onebox(2));
  const CrystalGraph left = demazure_filter(tensor_graph({box, box}), 1, FilterMode::Head);
  const CrystalGraph fix_left = fixture_C2("tensor11");
  const CrystalGraph fix_right = fixture_C2("B12");

  bool same = left.size() == fix_left.size() && left.edge_count() == fix_left.edge_count();
  std::string diff;
  std::map<std::string, int> by_repr;
  for (int b = 0; b < fix_left.size(); ++b) by_repr[fix_left.repr(b)] = b;
  for (int b = 0; b < left.size() && same; ++b) {
    auto it = by_repr.find(left.repr(b));
    if (it == by_repr.end() || fix_left.weight(it->second) != left.weight(b)) {
      same = false;
      diff = "node " + left.repr(b) + " differs";
      break;
    }
    for (int c = 0; c < 3; ++c) {
      const int t = left.f(b, c), u = fix_left.f(it->second, c);
      if ((t < 0) != (u < 0) || (t >= 0 && left.repr(t) != fix_left.repr(u))) {
        same = false;
        diff = "f_" + std::to_string(c) + " differs at " + left.repr(b);
        break;
      }
    }
  }

  auto counts = [](const CrystalGraph& g) {
    return json{{"nodes", g.size()}, {"edges", g.edge_count()},
                {"edges_by_color", {g.edge_count(0), g.edge_count(1), g.edge_count(2)}}};
  };
  auto zero_edges = [](const CrystalGraph& g) {
    json out = json::array();
    for (int b = 0; b < g.size(); ++b)
      if (g.f(b, 0) >= 0) out.push_back({g.repr(b), g.repr(g.f(b, 0))});
    return out;
  };
  rep.witnesses["left"] = counts(left);
  rep.witnesses["left_zero_edges"] = zero_edges(left);
  rep.witnesses["right"] = counts(fix_right);
  rep.witnesses["right_zero_edges"] = zero_edges(fix_right);
  rep.witnesses["left_nodes"] = nodes_json(left);
  rep.witnesses["left_edges"] = edges_json(left);
  rep.witnesses["right_nodes"] = nodes_json(fix_right);
  rep.witnesses["right_edges"] = edges_json(fix_right);

  const auto comps = components(left);
  json sizes = json::array();
  for (const auto& c : comps) sizes.push_back(c.size());
  rep.witnesses["left_component_sizes"] = sizes;
  const bool left_counts = left.size() == 16 && left.edge_count(0) == 1 && left.edge_count(1) == 8 &&
                           left.edge_count(2) == 6 && zero_edges(left) == json::array({{"-1⊗1", "1⊗1"}});
  const bool right_counts = fix_right.size() == 11 && fix_right.edge_count(0) == 1 && fix_right.edge_count(1) == 6 &&
                            fix_right.edge_count(2) == 4 && zero_edges(fix_right) == json::array({{"∅", "[[1,1]]"}});
  std::optional<NodeMap> map;
  if (comps.size() == 2) map = iso_check(comps[1], fix_right, AnchorMode::Min);
  const bool right_ok = map.has_value() && right_counts;
  rep.witnesses["right_matches_left_component"] = map.has_value();
  if (!same) rep.witnesses["counterexample"] = diff.empty() ? "node or edge counts differ from the fixture" : diff;
  else if (!left_counts) rep.witnesses["counterexample"] = "left graph counts differ from the figure";
  else if (!right_ok) rep.witnesses["counterexample"] = "right fixture does not match the 11-node component";
  rep.pass = same && left_counts && right_ok;
  rep.elapsed_ms = timer.ms();
  return rep;
}

}  // namespace krc
