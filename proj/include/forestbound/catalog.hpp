#pragma once

#include <string>
#include <vector>

#include "generators.hpp"
#include "multigraph.hpp"

namespace forestbound {

struct NamedGraph {
  std::string name;
  Multigraph graph;
};

// Fixed test catalog: K_2..K_6, C_3..C_8, Petersen, two glued-cycle graphs.
inline std::vector<NamedGraph> catalog() {
  std::vector<NamedGraph> out;
  for (std::size_t n = 2; n <= 6; ++n) out.push_back({"K" + std::to_string(n), complete_graph(n)});
  for (std::size_t k = 3; k <= 8; ++k) out.push_back({"C" + std::to_string(k), cycle_graph(k)});
  out.push_back({"Petersen", petersen()});
  out.push_back({"glued(3,2)", glued_cycles(3, 2)});
  out.push_back({"glued(4,2)", glued_cycles(4, 2)});
  return out;
}

}  // namespace forestbound
