#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bitradelab/errors.hpp"

namespace btl {

enum class FaceColour { white, black };
enum class TriClass { R, C, S };

inline FaceColour opposite(FaceColour c) {
  return c == FaceColour::white ? FaceColour::black : FaceColour::white;
}

struct SlotRef {
  int face = -1;  // positional face index
  int slot = -1;  // slot k is the edge between corners k and k+1 (mod 3)
  bool operator==(const SlotRef&) const = default;
  auto operator<=>(const SlotRef&) const = default;
};

struct Face {
  int id = 0;
  FaceColour colour = FaceColour::white;
  std::array<int, 3> corners{};  // vertex indices, pairwise distinct
};

// A face 2-coloured triangulation: faces plus an explicit edge gluing. Every
// slot is glued to exactly one slot of a face of the opposite colour carrying
// the same vertex pair, and the face-adjacency graph is connected. Immutable
// after construction.
class Triangulation {
public:
  // `gluing` references faces by positional index.
  static Triangulation build(std::vector<std::string> vertex_labels, std::vector<Face> faces,
                             std::vector<std::pair<SlotRef, SlotRef>> gluing);

  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<std::string>& vertex_labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }
  std::optional<int> vertex_index(const std::string& label) const;

  const std::vector<Face>& faces() const { return faces_; }
  std::size_t face_count() const { return faces_.size(); }
  std::size_t white_count() const { return face_count() / 2; }

  const std::vector<std::pair<SlotRef, SlotRef>>& gluing_pairs() const { return pairs_; }
  std::size_t edge_count() const { return pairs_.size(); }
  SlotRef mate(SlotRef s) const { return mate_[s.face][s.slot]; }
  int gluing_index(SlotRef s) const { return pair_of_[s.face][s.slot]; }

  std::array<int, 2> slot_endpoints(SlotRef s) const {
    const auto& c = faces_[s.face].corners;
    return {c[s.slot], c[(s.slot + 1) % 3]};
  }

  // True when no vertex pair occurs in two faces of the same colour, i.e. the
  // gluing is recoverable from the triples alone.
  bool is_simple() const;

private:
  std::vector<std::string> labels_;
  std::vector<Face> faces_;
  std::vector<std::pair<SlotRef, SlotRef>> pairs_;
  std::vector<std::array<SlotRef, 3>> mate_;
  std::vector<std::array<int, 3>> pair_of_;
};

using Triple = std::array<std::string, 3>;

// Convenience constructor for simple graphs: every vertex pair of a white
// triple must occur in exactly one white and one black triple; the gluing is
// the forced matching.
Triangulation parse_triples(std::vector<std::string> vertex_labels,
                            const std::vector<Triple>& white, const std::vector<Triple>& black);

struct SurfaceReport {
  long long euler_characteristic = 0;
  bool is_surface = false;
  std::vector<std::string> pinch_vertices;  // sorted labels
  std::optional<bool> orientable;           // engaged iff is_surface
  std::optional<std::string> genus;         // "sphere" | "orientable-genus g" |
                                            // "nonorientable-crosscap c"

  bool is_sphere() const { return genus.has_value() && *genus == "sphere"; }
};

SurfaceReport validate(const Triangulation& t);

struct RotationWalk {
  int vertex = -1;
  std::vector<std::pair<int, int>> corners;  // (face index, corner index), cyclic
  std::vector<int> link;                     // far endpoint of each crossed edge
  bool simple_cycle = false;                 // link vertices pairwise distinct
};

// Partitions each vertex's incident corners into maximal closed walks that
// alternate face colours. A vertex is locally a disk iff it has one walk.
std::vector<std::vector<RotationWalk>> rotation_walks(const Triangulation& t);

struct TriColouring {
  std::vector<TriClass> assignment;  // indexed by vertex
  TriClass of(int v) const { return assignment[v]; }
};

struct TricolourConflict {
  int face_a = -1;  // external face ids witnessing the contradiction
  int face_b = -1;
};

// Proper vertex 3-colouring by propagation from the lowest-id face, whose
// corners get classes (R, C, S) in stored order.
std::optional<TriColouring> tricolour(const Triangulation& t,
                                      TricolourConflict* conflict = nullptr);

// Reorders every face's corners into (R, C, S) class order, remapping slots.
Triangulation normalize_corner_order(const Triangulation& t, const TriColouring& col);

inline const char* class_name(TriClass c) {
  switch (c) {
    case TriClass::R: return "R";
    case TriClass::C: return "C";
    case TriClass::S: return "S";
  }
  return "?";
}

}  // namespace btl
