#pragma once

#include <string>

#include "json.hpp"
#include "krc/alcove.hpp"
#include "krc/crystal.hpp"

namespace krc {

/// {"nodes":[{"id","repr","wt"}],"edges":[{"src","dst","color"}],"anchors":{"max","min"}}
nlohmann::json graph_to_json(const CrystalGraph& g);
/// Color 0 black, 1 blue, 2 red; edge label = color.
std::string graph_to_dot(const CrystalGraph& g);
/// Graph JSON plus the chain (root coordinates) and 1-based subsets.
nlohmann::json alcove_to_json(const AlcoveCrystal& a);

/// Writes DOT for a ".dot" path and JSON otherwise.
void write_graph(const std::string& path, const CrystalGraph& g);

}  // namespace krc
