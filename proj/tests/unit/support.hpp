#pragma once

#include <memory>
#include <random>
#include <string>

#include "raag/complex.hpp"

namespace raag::testing {

inline std::string data_path(const std::string& rel) { return std::string(RAAG_DATA_DIR) + "/" + rel; }

inline GraphPtr graph_from(const std::string& text) {
  return std::make_shared<const DefiningGraph>(parse_graph(text));
}

inline GraphPtr load(const std::string& name) {
  return std::make_shared<const DefiningGraph>(load_graph(data_path("graphs/" + name + ".graph")));
}

inline GraphPtr edge_graph() { return load("edge"); }
inline GraphPtr path_graph() { return load("path3"); }
inline GraphPtr cycle_graph() { return load("c5"); }
inline GraphPtr k22_graph() { return load("k22"); }

inline Word random_letters(const DefiningGraph& g, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> gen(0, g.vertex_count() - 1);
  std::bernoulli_distribution inv(0.5);
  Word w;
  for (int i = 0; i < n; ++i) w.push_back({gen(rng), inv(rng)});
  return w;
}

inline GroupElement random_element(const GraphPtr& g, int max_letters, std::mt19937_64& rng) {
  int n = std::uniform_int_distribution<int>(0, max_letters)(rng);
  return normal_form(random_letters(*g, n, rng), g);
}

}  // namespace raag::testing
