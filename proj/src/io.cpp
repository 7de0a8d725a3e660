#include "krc/io.hpp"

#include <fstream>
#include <sstream>

#include "krc/errors.hpp"

namespace krc {

using nlohmann::json;

json graph_to_json(const CrystalGraph& g) {
  json nodes = json::array(), edges = json::array();
  for (int b = 0; b < g.size(); ++b) nodes.push_back({{"id", b}, {"repr", g.repr(b)}, {"wt", g.weight(b).coords()}});
  for (int b = 0; b < g.size(); ++b)
    for (int c = 0; c < g.num_colors(); ++c)
      if (g.f(b, c) >= 0) edges.push_back({{"src", b}, {"dst", g.f(b, c)}, {"color", c}});
  json anchors{{"max", nullptr}, {"min", nullptr}};
  if (g.anchor_max) anchors["max"] = *g.anchor_max;
  if (g.anchor_min) anchors["min"] = *g.anchor_min;
  return {{"nodes", nodes}, {"edges", edges}, {"anchors", anchors}};
}

std::string graph_to_dot(const CrystalGraph& g) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') out += '\\';
      out += ch;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (int b = 0; b < g.size(); ++b) os << "  " << b << " [label=" << quote(g.repr(b)) << "];\n";
  for (int b = 0; b < g.size(); ++b)
    for (int c = 0; c < g.num_colors(); ++c) {
      const int t = g.f(b, c);
      if (t < 0) continue;
      os << "  " << b << " -> " << t << " [label=\"" << c << "\"";
      if (c == 0) os << ", color=black";
      if (c == 1) os << ", color=blue";
      if (c == 2) os << ", color=red";
      os << "];\n";
    }
  os << "}\n";
  return os.str();
}

json alcove_to_json(const AlcoveCrystal& a) {
  json out = graph_to_json(a.graph);
  json chain = json::array();
  for (int k = 0; k < a.chain.size(); ++k) chain.push_back(a.chain.root(k).coords);
  json subsets = json::array();
  for (const auto& j : a.subsets) {
    json s = json::array();
    for (int x : j) s.push_back(x + 1);
    subsets.push_back(s);
  }
  out["lambda"] = a.chain.lambda.coords();
  out["chain"] = chain;
  out["subsets"] = subsets;
  return out;
}

void write_graph(const std::string& path, const CrystalGraph& g) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open " + path + " for writing");
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".dot")
    os << graph_to_dot(g);
  else
    os << graph_to_json(g).dump(2) << "\n";
}

}  // namespace krc
