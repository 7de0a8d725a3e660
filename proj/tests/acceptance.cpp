// Acceptance suite: one line per criterion, nonzero exit if any criterion fails.
// Usage: acceptance [report.json]

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <tuple>

#include "krc/errors.hpp"
#include "krc/experiments.hpp"
#include "krc/io.hpp"

using namespace krc;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  json reports = json::array();
};

struct Criterion {
  int id;
  std::string title;
  double limit_ms;  // whole-criterion budget (per-case budgets are checked inside)
  std::function<Outcome()> run;
};

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Runs sub-cases, each with its own time budget; failures are listed in the detail.
class Cases {
 public:
  explicit Cases(double budget_ms) : budget_ms_(budget_ms) {}

  void add(const std::string& label, const std::function<Report()>& f) {
    ++total_;
    Report r;
    try {
      r = f();
    } catch (const Error& e) {
      r.name = label;
      r.witnesses["counterexample"] = std::string("error: ") + e.what();
    }
    const bool in_time = r.elapsed_ms < budget_ms_;
    if (!in_time) r.witnesses["over_budget_ms"] = budget_ms_;
    out_.reports.push_back(r.to_json());
    if (r.pass && in_time) return;
    out_.pass = false;
    failed_.push_back(label + (in_time ? "" : " (over time budget)"));
  }

  void check(const std::string& label, bool ok, const std::string& why = "") {
    ++total_;
    if (ok) return;
    out_.pass = false;
    failed_.push_back(label + (why.empty() ? "" : ": " + why));
  }

  Outcome finish(const std::string& summary = "") {
    std::ostringstream os;
    os << (total_ - failed_.size()) << "/" << total_ << " cases";
    if (!summary.empty()) os << "; " << summary;
    if (!failed_.empty()) {
      os << "; failing:";
      for (const auto& f : failed_) os << " [" << f << "]";
    }
    out_.detail = os.str();
    return out_;
  }

 private:
  double budget_ms_;
  std::size_t total_ = 0;
  std::vector<std::string> failed_;
  Outcome out_;
};

std::string factors_str(const Factors& f) {
  std::string s;
  for (const auto& [r, c] : f) s += (s.empty() ? "" : "(x)") + std::string("B") + std::to_string(r) + std::to_string(c);
  return s;
}

std::vector<std::vector<int>> all_reduced_words(const WeylGroup& weyl, int w) {
  std::vector<std::vector<int>> frontier{{}};
  for (int len = 0; len < weyl.length(w); ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier)
      for (int i = 1; i <= weyl.cartan().rank(); ++i) {
        auto q = p;
        q.push_back(i);
        if (weyl.is_reduced(q)) next.push_back(q);
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> out;
  for (const auto& p : frontier)
    if (weyl.from_word(p) == w) out.push_back(p);
  return out;
}

Outcome criterion_figure() {
  Cases cs(1000);
  cs.add("figure", check_figure);
  Outcome out = cs.finish();
  if (!out.reports.empty()) {
    const auto& w = out.reports[0]["witnesses"];
    std::ostringstream os;
    os << "left " << w["left"]["nodes"] << " nodes/" << w["left"]["edges"] << " edges " << w["left"]["edges_by_color"]
       << ", right " << w["right"]["nodes"] << " nodes/" << w["right"]["edges"] << " edges "
       << w["right"]["edges_by_color"] << "; " << out.detail;
    out.detail = os.str();
  }
  return out;
}

Outcome criterion_example() {
  Cases cs(1000);
  auto c2 = CartanData::parse("C2");
  const auto t0 = std::chrono::steady_clock::now();
  const auto d = filtered(build_spec(c2, {{1, 1}, {1, 1}}), 1, FilterMode::Head);
  std::vector<int> sizes;
  for (const auto& comp : components(d)) sizes.push_back(comp.size());
  cs.check("two components of sizes 5 and 11", sizes == std::vector<int>{5, 11});
  cs.add("11-node component ~ D1(B12)",
         [&] { return check_reduction(c2, {{1, 1}, {1, 1}}, {{1, 2}}, 1, FilterMode::Head); });
  cs.check("runtime", since(t0) < 1000);
  return cs.finish("component sizes 5, 11");
}

Outcome criterion_alcove() {
  Cases cs(10000);
  struct L {
    const char* type;
    std::vector<int> lambda;
  };
  for (const auto& c : std::vector<L>{{"A2", {1, 0}}, {"A2", {0, 1}}, {"A2", {1, 1}}, {"A2", {2, 0}}, {"A2", {1, 2}},
                                      {"A3", {0, 1, 0}}, {"A3", {1, 0, 1}}}) {
    auto cartan = CartanData::parse(c.type);
    const Weight lam(c.lambda);
    cs.add(std::string(c.type) + " " + lam.str(), [&] { return check_alcove_correspondence(cartan, lam, 1, 2); });
  }
  return cs.finish();
}

Outcome criterion_reduction() {
  Cases cs(30000);
  for (auto [n, r, l] : std::vector<std::tuple<int, int, int>>{{2, 1, 2}, {2, 1, 3}, {2, 2, 2}, {3, 2, 2}}) {
    auto cartan = CartanData::build(Family::A, n);
    std::ostringstream label;
    label << "A" << n << " r=" << r << " l=" << l;
    cs.add(label.str(), [&, r = r, l = l] {
      return check_reduction(cartan, {{r, l}}, Factors(l, {r, 1}), l, FilterMode::Tail, true);
    });
  }
  return cs.finish();
}

Outcome criterion_bmin() {
  Cases cs(10000);
  auto a2 = CartanData::parse("A2");
  std::vector<std::string> outside;
  for (Factors f : {Factors{{1, 1}, {2, 1}}, Factors{{1, 2}, {1, 1}}, Factors{{2, 2}}})
    for (int l : {1, 2}) {
      int max_level = 0;
      for (const auto& [r, s] : f) max_level = std::max(max_level, factor_level(*a2, r, s));
      const std::string label = "A2 " + factors_str(f) + " l=" + std::to_string(l);
      if (max_level > l) outside.push_back(label);
      cs.add(label, [&] { return check_bmin(a2, f, l); });
    }
  auto c2 = CartanData::parse("C2");
  for (Factors f : {Factors{{1, 1}, {1, 1}}, Factors{{1, 2}}})
    cs.add("C2 " + factors_str(f) + " l=1", [&] { return check_bmin(c2, f, 1); });
  std::string note;
  if (!outside.empty()) {
    note = "factor level exceeds l in";
    for (const auto& o : outside) note += " [" + o + "]";
  }
  return cs.finish(note);
}

Outcome criterion_qsystem() {
  Cases cs(60000);
  std::string ledgers;
  for (auto [n, a, m, l] :
       std::vector<std::tuple<int, int, int, int>>{{2, 1, 2, 2}, {2, 1, 3, 3}, {2, 2, 2, 2}, {3, 2, 2, 2}}) {
    std::ostringstream label;
    label << "A" << n << " a=" << a << " m=" << m << " l=" << l;
    Report kept;
    cs.add(label.str(), [&, n = n, a = a, m = m, l = l] {
      kept = check_qsystem_typeA(n, a, m, l);
      return kept;
    });
    if (kept.witnesses.contains("sizes")) {
      const auto& s = kept.witnesses["sizes"];
      ledgers += (ledgers.empty() ? "" : ", ") + s["lhs"].dump() + "=" + s["rhs_first"].dump() + "+" +
                 s["rhs_second"].dump();
    }
  }
  return cs.finish("size ledgers " + ledgers);
}

Outcome criterion_qchar() {
  Cases cs(30000);
  const auto t0 = std::chrono::steady_clock::now();
  for (int n : {2, 3})
    for (int a = 1; a <= n; ++a)
      for (int m = 1; m <= 3; ++m) {
        std::ostringstream label;
        label << "A" << n << " a=" << a << " m=" << m;
        cs.add(label.str(), [&] { return check_character_qsystem(n, a, m); });
      }
  cs.check("runtime", since(t0) < 30000);
  return cs.finish();
}

Outcome criterion_properties() {
  Cases cs(60000);
  auto timed = [&](const std::string& label, const std::function<std::string()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string why;
    try {
      why = body();
    } catch (const Error& e) {
      why = std::string("error: ") + e.what();
    }
    if (why.empty() && since(t0) >= 60000) why = "over time budget";
    cs.check(label, why.empty(), why);
  };

  timed("seminormality", [] {
    for (int n = 1; n <= 4; ++n)
      for (int r = 1; r <= n; ++r)
        for (int s = 1; r * s <= 6; ++s) {
          auto g = kr_typeA(n, r, s);
          if (auto v = seminormal_violation(g, all_colors(g.cartan()))) return "kr_typeA: " + *v;
        }
    for (int n = 2; n <= 4; ++n) {
      auto g = kr_C_onebox(n);
      if (auto v = seminormal_violation(g, all_colors(g.cartan()))) return "kr_C_onebox: " + *v;
    }
    auto a2 = CartanData::parse("A2");
    for (Factors f : {Factors{{1, 1}, {2, 1}}, Factors{{1, 2}, {1, 1}}, Factors{{2, 2}}, Factors{{1, 1}, {1, 1}, {1, 1}}}) {
      auto g = kr_tensor(a2, f);
      if (auto v = seminormal_violation(g, all_colors(*a2))) return "tensor: " + *v;
      for (int l : {1, 2, 3})
        for (auto mode : {FilterMode::Head, FilterMode::Tail}) {
          auto d = demazure_filter(g, l, mode);
          if (auto v = seminormal_violation(d, classical_colors(*a2))) return "filtered: " + *v;
          if (auto v = edge_axiom_violation(d, all_colors(*a2))) return "filtered: " + *v;
        }
    }
    for (auto which : {"tensor11", "B12"}) {
      auto g = fixture_C2(which);
      if (auto v = seminormal_violation(g, classical_colors(g.cartan()))) return std::string(which) + ": " + *v;
      if (auto v = edge_axiom_violation(g, all_colors(g.cartan()))) return std::string(which) + ": " + *v;
    }
    return std::string();
  });

  timed("tensor associativity", [] {
    std::vector<std::shared_ptr<const CrystalGraph>> base{std::make_shared<CrystalGraph>(kr_typeA(2, 1, 1)),
                                                          std::make_shared<CrystalGraph>(kr_typeA(2, 2, 1))};
    for (auto& x : base)
      for (auto& y : base)
        for (auto& z : base) {
          TensorCrystal flat({x, y, z});
          auto xy = std::make_shared<CrystalGraph>(tensor_graph({x, y}));
          auto yz = std::make_shared<CrystalGraph>(tensor_graph({y, z}));
          TensorCrystal left({xy, z}), right({x, yz});
          for (const auto& b : flat.elements()) {
            const Element bl{{*xy->find(Element{{b.data[0], b.data[1]}}), b.data[2]}};
            const Element br{{b.data[0], *yz->find(Element{{b.data[1], b.data[2]}})}};
            for (int i = 0; i <= 2; ++i)
              for (bool up : {true, false}) {
                auto f3 = up ? flat.f(b, i) : flat.e(b, i);
                auto fl = up ? left.f(bl, i) : left.e(bl, i);
                auto fr = up ? right.f(br, i) : right.e(br, i);
                if (f3.has_value() != fl.has_value() || f3.has_value() != fr.has_value()) return flat.repr(b);
                if (!f3) continue;
                const auto& pl = xy->node(fl->data[0]).payload.data;
                const auto& pr = yz->node(fr->data[1]).payload.data;
                if (f3->data != std::vector<int>{pl[0], pl[1], fl->data[1]} ||
                    f3->data != std::vector<int>{fr->data[0], pr[0], pr[1]})
                  return flat.repr(b);
              }
          }
        }
    return std::string();
  });

  timed("alcove e/f pairing", [] {
    struct L {
      const char* type;
      std::vector<int> lambda;
    };
    for (const auto& c : std::vector<L>{{"A1", {2}}, {"A2", {1, 0}}, {"A2", {0, 1}}, {"A2", {1, 1}}, {"A2", {2, 0}},
                                        {"A2", {1, 2}}, {"A3", {0, 1, 0}}, {"A3", {1, 0, 1}}, {"C2", {2, 0}},
                                        {"C2", {1, 1}}, {"B3", {1, 0, 0}}, {"D4", {1, 0, 0, 0}}})
      for (int l : {1, 2}) {
        auto cartan = CartanData::parse(c.type);
        // alcove_crystal throws unless e_p and f_p invert each other on every node.
        const auto a = alcove_crystal(cartan, Weight(c.lambda), l);
        const WeylGroup& w = qbg_for(cartan)->weyl();
        for (int k = 0; k < a.graph.size(); ++k)
          for (int p = 0; p <= cartan->rank(); ++p) {
            const int t = a.graph.f(k, p);
            if (t >= 0 && (a.graph.e(t, p) != k || alcove_e(a.chain, w, a.subsets[t], p, l) != a.subsets[k]))
              return std::string(c.type) + " " + a.graph.repr(k);
          }
        if (auto v = seminormal_violation(a.graph, classical_colors(*cartan))) return *v;
      }
    return std::string();
  });

  timed("promotion order", [] {
    for (int n = 1; n <= 5; ++n)
      for (int r = 1; r <= n; ++r)
        for (int s = 1; r * s <= 6; ++s)
          for (const auto& t : rect_tableaux(r, s, n + 1)) {
            RectTableau x = t;
            for (int k = 0; k <= n; ++k) x = promotion(x, n);
            if (x != t) return t.str();
          }
    return std::string();
  });

  timed("Demazure reduced-word independence", [] {
    for (auto name : {"A2", "C2"}) {
      auto c = CartanData::parse(name);
      auto weyl = qbg_for(c)->weyl_ptr();
      for (auto lam : {Weight({1, 0}), Weight({0, 1}), Weight({1, 1}), Weight({2, 1}), Weight({1, 2})}) {
        auto b = highest_weight_crystal(c, lam);
        for (int w = 0; w < static_cast<int>(weyl->size()); ++w) {
          const auto words = all_reduced_words(*weyl, w);
          const auto first = demazure_subset(b, *b.anchor_max, words.at(0), *weyl);
          for (const auto& word : words)
            if (demazure_subset(b, *b.anchor_max, word, *weyl) != first) return std::string(name) + " " + lam.str();
        }
      }
    }
    return std::string();
  });

  timed("QBG", [] {
    for (auto name : {"A2", "A3", "C2", "C3", "B3", "D4"}) {
      auto c = CartanData::parse(name);
      auto q = qbg_for(c);
      if (!q->strongly_connected()) return std::string(name) + " not strongly connected";
      const WeylGroup& w = q->weyl();
      for (const auto& e : q->edges()) {
        const int two_ht = 2 * c->pairing(c->positive_roots()[e.root], c->rho());
        const int ls = w.length(e.source), lt = w.length(e.target);
        if (e.up ? lt != ls + 1 : ls - lt != two_ht - 1) return std::string(name) + " length identity";
      }
    }
    return std::string();
  });

  timed("similarity m=2", [] {
    for (auto [n, r, s] : std::vector<std::tuple<int, int, int>>{{2, 1, 1}, {2, 2, 1}, {3, 1, 1}}) {
      auto small = kr_typeA(n, r, s);
      auto big = kr_typeA(n, r, 2 * s);
      if (!similarity_check(column_replication(small, big, r, 2), 2, small, big, all_colors(small.cartan())))
        return "(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(s) + ")";
    }
    return std::string();
  });
  return cs.finish();
}

Outcome criterion_phi0() {
  Cases cs(5000);
  const auto t0 = std::chrono::steady_clock::now();
  auto a2 = CartanData::parse("A2");
  const WeylGroup& w = qbg_for(a2)->weyl();
  int count = 0;
  for (auto lam : {Weight({1, 1}), Weight({2, 0})}) {
    const auto a = alcove_crystal(a2, lam, 1);
    for (int k = 0; k < a.graph.size(); ++k) {
      ++count;
      const int formula = phi0(a.chain, w, a.subsets[k]);
      const int counted = a.graph.phi(k, 0);
      cs.check(lam.str() + " " + a.graph.repr(k), formula == counted,
               std::to_string(formula) + " vs " + std::to_string(counted));
    }
  }
  cs.check("runtime", since(t0) < 5000);
  return cs.finish(std::to_string(count) + " admissible subsets");
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "figure exactness", 1000, criterion_figure},
      {2, "C2 example: D1(B11 (x) B11)", 1000, criterion_example},
      {3, "alcove model vs DD1 in type A", 7 * 10000, criterion_alcove},
      {4, "reduction DD_l(B^{r,l}) ~ DD_l((B^{r,1})^l)", 4 * 30000, criterion_reduction},
      {5, "b_min and dominantization", 8 * 10000, criterion_bmin},
      {6, "Q-system, crystal level", 4 * 60000, criterion_qsystem},
      {7, "Q-system, character level", 30000, criterion_qchar},
      {8, "property suites", 7 * 60000, criterion_properties},
      {9, "phi_0 formula", 5000, criterion_phi0},
  };
  json all = json::array();
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("error: ") + e.what();
    }
    const double ms = since(t0);
    if (ms >= c.limit_ms) {
      o.pass = false;
      o.detail += "; over time budget";
    }
    failures += o.pass ? 0 : 1;
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  ("
              << static_cast<long long>(ms) << " ms)  " << o.detail << std::endl;
    all.push_back({{"criterion", c.id}, {"title", c.title}, {"pass", o.pass}, {"elapsed_ms", ms},
                   {"detail", o.detail}, {"reports", o.reports}});
  }
  if (argc > 1) {
    std::ofstream os(argv[1]);
    os << all.dump(2) << "\n";
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria pass" << std::endl;
  return failures == 0 ? 0 : 1;
}
