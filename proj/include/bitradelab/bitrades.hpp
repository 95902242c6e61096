#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bitradelab/groups.hpp"
#include "bitradelab/surface.hpp"

namespace btl {

// Triples (r, c, s) over pairwise disjoint row/column/symbol label spaces,
// no two triples agreeing in two coordinates.
struct PartialLatinSquare {
  std::vector<Triple> triples;

  std::vector<std::string> labels_of(int coordinate) const;  // sorted, distinct
};

// Throws NotPLS with a witness when the triple set is not a partial latin
// square (or the label spaces collide).
PartialLatinSquare check_pls(std::vector<Triple> triples);

struct Bitrade {
  PartialLatinSquare white;
  PartialLatinSquare black;

  std::size_t size() const { return white.triples.size(); }
};

// Verifies disjointness and the unique row/column/symbol mate axioms in both
// directions. Throws NotPLS, NotDisjoint, MissingMate or NonUniqueMate.
Bitrade check_bitrade(std::vector<Triple> white, std::vector<Triple> black);

// Faces are the triples, glued along the forced mates. Throws Disconnected
// when the bitrade splits into components.
Triangulation bitrade_to_triangulation(const Bitrade& bt);

// Reads the colour classes back as partial latin squares; nullopt (with a
// witness) when the two face families are not disjoint PLSs.
std::optional<Bitrade> triangulation_to_bitrade(const Triangulation& t, const TriColouring& col,
                                                std::string* witness = nullptr);

// Class character into Z^2: R -> (1,0), C -> (0,1), S -> (-1,-1).
std::pair<int, int> nu_class(TriClass c);

struct Embedding {
  AbelianGroup target;
  std::vector<std::pair<std::string, GroupElement>> assignment;  // vertex -> image

  const GroupElement* find(const std::string& label) const;
};

// True iff the map is injective on each of R, C, S and every triple of p sums
// to zero. The assignment must cover all labels of p.
bool check_embedding(const PartialLatinSquare& p, const Embedding& e);

// The natural-map embedding shifted into the torsion subgroup: with g the
// generator images in the face group of `colour` and (r', c', s') the corners
// of the least face of that colour, v -> g(v) - g(rep of v's class) lands in
// torsion(A) = C and is an embedding there. Requires a sphere.
Embedding canonical_torsion_embedding(const Triangulation& t, const TriColouring& col,
                                      FaceColour colour, Exec ex = Exec::parallel);

struct DecomposeResult {
  bool decomposable = false;
  std::optional<Bitrade> sub;  // a proper sub-bitrade when decomposable
};

// A sub-bitrade must be closed under the (globally unique) mate maps, so the
// proper sub-bitrades are exactly the unions of mate-graph components.
DecomposeResult decompose(const Bitrade& bt);

// Difference bitrades of a cyclic latin square of order n against a copy
// mutated by seeded random row-cycle swaps, split into connected components;
// keeps the components whose triangulation is a sphere. Deterministic for a
// fixed seed; may return fewer than `count`.
std::vector<Bitrade> harvest_spherical(std::size_t n, std::uint64_t seed, std::size_t count);

}  // namespace btl
