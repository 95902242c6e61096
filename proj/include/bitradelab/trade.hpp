#pragma once

#include <optional>

#include "bitradelab/groups.hpp"
#include "bitradelab/surface.hpp"

namespace btl {

// Region adjacency matrix over one colour class (the regions): t_ij counts
// glued edges whose white side lies in region j and black side in region i,
// both endpoints outside the region class; t_ii = -sum of the rest of row i.
// All row and column sums are zero.
struct TMatrix {
  std::vector<int> region_vertices;  // label-sorted vertex indices of the region class
  BigIntMatrix entries;              // k x k

  std::size_t k() const { return region_vertices.size(); }
};

// Loop-free directed multigraph on z_1..z_k with mult[i][j] edges z_j -> z_i.
struct Digraph {
  std::size_t k = 0;
  std::vector<std::vector<long long>> mult;

  long long total_edges() const;
};

PresentedGroup group_aw(const Triangulation& t, FaceColour colour, Exec ex = Exec::parallel);

// `region_class` names which colour class plays the row role; `swap_colours`
// reverses white/black in the count (used to build the mate's matrix
// independently rather than by transposition).
TMatrix t_matrix(const Triangulation& t, const TriColouring& col,
                 TriClass region_class = TriClass::R, bool swap_colours = false);

PresentedGroup b_group(const TMatrix& tm, Exec ex = Exec::parallel);

// Strips one free factor: Z + C -> C.
AbelianGroup c_group(const AbelianGroup& b);

Digraph digraph_from_t(const TMatrix& tm);
bool is_strongly_connected(const Digraph& d);
bool is_eulerian(const Digraph& d);

// det(-T with last row and column removed); 1 when k = 1.
BigInt tree_number(const TMatrix& tm, Exec ex = Exec::parallel);

// Exhaustive count of spanning arborescences diverging from `root`
// (0-based); parallel edges count separately. Requires <= 16 edges in total.
BigInt count_arborescences_bruteforce(const Digraph& d, std::size_t root);

// Checks that the lattice spanned by the alternating region-boundary sums
// equals the kernel lattice of e -> c + s on the bipartite edge graph over
// the two non-region classes. Requires a sphere.
bool face_boundary_lattice_check(const Triangulation& t, const TriColouring& col,
                                 TriClass region_class = TriClass::R, Exec ex = Exec::parallel);

struct TradeGroupReport {
  SurfaceReport surface;
  PresentedGroup a_w;
  PresentedGroup a_b;
  bool theorem1_holds = false;
  std::optional<TriColouring> colouring;
  std::optional<TricolourConflict> conflict;

  // Present iff the triangulation is a surface and tricolourable.
  struct TBlock {
    TMatrix t;
    AbelianGroup b_w;
    AbelianGroup b_b;
    AbelianGroup c_w;
    BigInt tree_number = 0;
    bool strongly_connected = false;
    bool eulerian = false;
    bool key_lemma_holds = false;
    bool tree_number_matches = false;
    bool bw_iso_bb = false;
  };
  std::optional<TBlock> tb;

  bool all_verdicts_true() const;
};

TradeGroupReport full_report(const Triangulation& t, Exec ex = Exec::parallel);

}  // namespace btl
