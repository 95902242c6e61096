#pragma once

#include <string>
#include <vector>

#include "bitradelab/surface.hpp"

namespace btl {

struct ExpFamilyParams {
  std::size_t k = 2;  // regions, >= 2
  std::size_t w = 1;  // half the black faces per region, >= 1
};

// Sphere tiling into k regions around two poles s' and s''. Region i fans
// from r_i over two boundary paths of 2w edges each; t = 2wk faces per
// colour, |V| = 2 + k(2w - 1) + k. For w = 2 this is the doubled-edge tiling
// whose digraph is the doubled bidirected k-cycle.
Triangulation exp_family(const ExpFamilyParams& p);

// Hard-coded instances: two-face, intercalate, fgg, torus-i, torus-ii,
// torus-iii, torus-cw, figure-1.
Triangulation fixture(const std::string& name);

const std::vector<std::string>& fixture_names();

}  // namespace btl
