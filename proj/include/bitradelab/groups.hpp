#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bitradelab/linalg.hpp"

namespace btl {

// Canonical form of a finitely generated abelian group: free rank plus the
// invariant factor chain d1 | d2 | ... with every di >= 2. Equality of
// canonical forms is isomorphism.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<BigInt> invariant_factors;

  // Canonicalises an arbitrary list of cyclic orders (>= 1; 1s are dropped)
  // into an invariant factor chain, e.g. [2,2,3] -> [2,6].
  static AbelianGroup canonical(std::size_t free_rank, std::vector<BigInt> factors);

  bool operator==(const AbelianGroup&) const = default;

  std::size_t rank() const { return free_rank + invariant_factors.size(); }
  bool is_finite() const { return free_rank == 0; }
  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  BigInt torsion_order() const;

  AbelianGroup torsion_part() const { return AbelianGroup{0, invariant_factors}; }
  AbelianGroup plus_z(std::size_t extra = 1) const {
    return AbelianGroup{free_rank + extra, invariant_factors};
  }

  // "Z^r + Z_{d1} + ... + Z_{dm}", "Z" for r = 1, "0" for the trivial group.
  std::string display() const;
};

inline bool is_isomorphic(const AbelianGroup& a, const AbelianGroup& b) { return a == b; }

// True iff q is (isomorphic to) a quotient of a. Both groups must be finite:
// align the invariant factor lists at the largest end, pad the shorter with
// 1s, and require factor-wise divisibility.
bool is_quotient_of(const AbelianGroup& q, const AbelianGroup& a);

struct GroupElement {
  AbelianGroup group;
  std::vector<BigInt> free_coords;     // length group.free_rank
  std::vector<BigInt> torsion_coords;  // coordinate i reduced mod d_i

  static GroupElement zero(const AbelianGroup& g);

  bool is_zero() const;
  bool operator==(const GroupElement&) const = default;
};

GroupElement element_add(const GroupElement& a, const GroupElement& b);
GroupElement element_neg(const GroupElement& x);
GroupElement element_sub(const GroupElement& a, const GroupElement& b);
// Least n >= 1 with n*x = 0; nullopt when x has a nonzero free coordinate.
std::optional<BigInt> element_order(const GroupElement& x);

// A group given by generators and integer relation rows, together with the
// canonical-coordinate images of the generators.
struct PresentedGroup {
  std::vector<std::string> generator_names;
  AbelianGroup group;
  std::vector<GroupElement> images;  // parallel to generator_names

  const GroupElement& image_of(const std::string& name) const;
};

// Canonicalises <generators | relation_rows> via Smith Normal Form. Column j
// of the relation matrix corresponds to generator j; generator images are the
// rows of the SNF column transform read in canonical coordinates.
PresentedGroup from_presentation(std::vector<std::string> generator_names,
                                 const BigIntMatrix& relation_rows, Exec ex = Exec::parallel);

}  // namespace btl
