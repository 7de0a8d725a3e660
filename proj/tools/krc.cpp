// Command-line front end: build, check, qbg, alcove.

#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "krc/errors.hpp"
#include "krc/experiments.hpp"
#include "krc/io.hpp"

using namespace krc;

namespace {

struct Options {
  std::string type = "A2";
  std::string factors;
  std::string factors2;
  std::string lambda;
  std::string view = "none";
  std::string mode = "head";
  std::string chain = "lex";
  std::string out;
  std::string junit;
  int level = 1;
  int a = 1;
  int m = 1;
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::size_t node_cap = kDefaultNodeCap;
  std::size_t weyl_cap = kDefaultWeylCap;
};

Weight parse_weight(const std::string& s, int rank) {
  std::vector<int> coords;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      coords.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("bad weight coordinate '" + item + "'");
    }
  }
  if (static_cast<int>(coords.size()) != rank)
    throw InvalidArgument("weight needs " + std::to_string(rank) + " coordinates, got '" + s + "'");
  return Weight(coords);
}

CartanPtr cartan_of(const Options& o) {
  auto c = CartanData::parse(o.type);
  qbg_for(c, o.weyl_cap);
  return c;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open " + path + " for writing");
  os << text;
}

int finish(const Report& r, const Options& o) {
  std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " " << r.params.dump() << "\n";
  if (!r.pass && r.witnesses.contains("counterexample"))
    std::cout << "  counterexample: " << r.witnesses["counterexample"].dump() << "\n";
  if (r.witnesses.contains("within_hypothesis") && !r.witnesses["within_hypothesis"].get<bool>())
    std::cout << "  note: a factor has level above " << o.level << ", outside the decomposition theorem\n";
  if (!o.out.empty()) write_text(o.out, r.to_json().dump(2) + "\n");
  if (!o.junit.empty()) write_text(o.junit, junit_xml({r}));
  return r.pass ? 0 : 1;
}

int cmd_build(const Options& o) {
  auto cartan = cartan_of(o);
  const auto factors = parse_factors(o.factors);
  const auto built = build_spec(cartan, factors, o.node_cap);
  CrystalGraph g = o.view == "demazure" ? filtered(built, o.level, FilterMode::Head)
                   : o.view == "dual"   ? filtered(built, o.level, FilterMode::Tail)
                   : built.prefiltered_level
                       ? throw Unsupported("B^{1,2} in C2 exists only as its level-1 Demazure filtration (--view demazure)")
                       : built.graph;
  std::cout << cartan->name() << " " << (o.factors.empty() ? "(trivial)" : o.factors) << " view=" << o.view
            << ": " << g.size() << " nodes, " << g.edge_count() << " edges, " << components(g).size()
            << " components\n";
  if (!o.out.empty()) write_graph(o.out, g);
  return 0;
}

int cmd_check(const std::string& name, const Options& o) {
  if (name == "figure") return finish(check_figure(), o);
  if (name == "reduction") {
    const auto mode = o.mode == "tail" ? FilterMode::Tail : FilterMode::Head;
    return finish(check_reduction(cartan_of(o), parse_factors(o.factors), parse_factors(o.factors2), o.level, mode,
                                  false, o.node_cap),
                  o);
  }
  if (name == "bmin") return finish(check_bmin(cartan_of(o), parse_factors(o.factors), o.level, o.node_cap), o);
  if (name == "qsystem" || name == "qchar") {
    auto cartan = cartan_of(o);
    if (cartan->family() != Family::A) throw Unsupported("Q-system checks are implemented in type A");
    if (name == "qsystem") return finish(check_qsystem_typeA(cartan->rank(), o.a, o.m, o.level, o.node_cap), o);
    return finish(check_character_qsystem(cartan->rank(), o.a, o.m), o);
  }
  if (name == "alcove") {
    auto cartan = cartan_of(o);
    return finish(check_alcove_correspondence(cartan, parse_weight(o.lambda, cartan->rank()), o.level, o.threads,
                                              o.node_cap),
                  o);
  }
  throw InvalidArgument("unknown check '" + name + "' (reduction, bmin, qsystem, qchar, alcove, figure)");
}

int cmd_qbg(const Options& o) {
  auto cartan = cartan_of(o);
  auto q = qbg_for(cartan, o.weyl_cap);
  std::cout << cartan->name() << ": |W| = " << q->weyl().size() << ", " << q->edges().size() << " edges, "
            << (q->strongly_connected() ? "strongly connected" : "not strongly connected") << "\n";
  if (!o.out.empty()) write_text(o.out, q->to_dot());
  return 0;
}

int cmd_alcove(const Options& o) {
  if (o.lambda.empty()) throw InvalidArgument("alcove needs --lambda");
  auto cartan = cartan_of(o);
  const auto order = o.chain == "reverse" ? ChainOrder::ReverseLex : ChainOrder::Lex;
  const auto a = alcove_crystal(cartan, parse_weight(o.lambda, cartan->rank()), o.level, o.threads, order, o.node_cap);
  std::cout << cartan->name() << " lambda=" << a.chain.lambda.str() << " level=" << o.level
            << ": chain length " << a.chain.size() << ", " << a.subsets.size() << " admissible subsets, "
            << a.graph.edge_count() << " edges\n";
  if (!o.out.empty()) {
    if (o.out.size() >= 4 && o.out.substr(o.out.size() - 4) == ".dot")
      write_graph(o.out, a.graph);
    else
      write_text(o.out, alcove_to_json(a).dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kirillov-Reshetikhin crystals, Demazure filtrations and the quantum alcove model"};
  app.set_config("--config", "", "key=value file with default flag values");
  app.require_subcommand(1);
  Options o;
  std::string check_name;

  app.fallthrough();
  app.add_option("--type", o.type, "Cartan type, e.g. A2, C2~, B3, D4")->capture_default_str();
  app.add_option("--level", o.level, "level l")->capture_default_str();
  app.add_option("--factors", o.factors, "r,s:r,s:... (leftmost factor first)");
  app.add_option("--factors2", o.factors2, "B' for the reduction check");
  app.add_option("--view", o.view, "none, demazure or dual")
      ->check(CLI::IsMember({"none", "demazure", "dual"}))
      ->capture_default_str();
  app.add_option("--mode", o.mode, "head or tail (reduction check)")->check(CLI::IsMember({"head", "tail"}));
  app.add_option("--a", o.a, "node a (Q-system checks)");
  app.add_option("--m", o.m, "m (Q-system checks)");
  app.add_option("--lambda", o.lambda, "dominant weight, comma separated");
  app.add_option("--chain", o.chain, "lex or reverse")->check(CLI::IsMember({"lex", "reverse"}));
  app.add_option("--out", o.out, "output file (.dot or .json)");
  app.add_option("--junit", o.junit, "write a JUnit XML report (check)");
  app.add_option("--threads", o.threads, "worker threads (default: available cores)")->check(CLI::PositiveNumber);
  app.add_option("--node-cap", o.node_cap, "maximum number of crystal nodes")->capture_default_str();
  app.add_option("--weyl-cap", o.weyl_cap, "maximum size of the Weyl group")->capture_default_str();

  auto* build = app.add_subcommand("build", "build a tensor product of KR crystals");
  auto* check = app.add_subcommand("check", "run a named verification");
  check->add_option("name", check_name, "reduction, bmin, qsystem, qchar, alcove or figure")->required();
  auto* qbg = app.add_subcommand("qbg", "quantum Bruhat graph of W0");
  auto* alcove = app.add_subcommand("alcove", "the quantum alcove model crystal");
  for (auto* sub : {build, check, qbg, alcove}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*build) return cmd_build(o);
    if (*check) return cmd_check(check_name, o);
    if (*qbg) return cmd_qbg(o);
    if (*alcove) return cmd_alcove(o);
  } catch (const krc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
