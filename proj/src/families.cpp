#include "bitradelab/families.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "bitradelab/bitrades.hpp"

namespace btl {
namespace {

std::string padded(std::size_t i, std::size_t width) {
  std::string s = std::to_string(i);
  while (s.size() < width) s.insert(s.begin(), '0');
  return s;
}

// --- grid tori -------------------------------------------------------------
//
// A gx x gy square grid with opposite sides identified; each square is split
// by a diagonal, one half shaded. Vertex labels live on the grid points mod
// (gx, gy). Multi-edges appear for small grids, so the gluing is built from
// the geometric segments, not from vertex pairs.

struct GridSquare {
  bool main_diagonal;  // true: (x,y)-(x+1,y+1); false: (x+1,y)-(x,y+1)
  bool lower_white;    // colour of the half below/right of the diagonal
};

struct GridPoint {
  int x, y;
  bool operator<(const GridPoint& o) const { return std::tie(x, y) < std::tie(o.x, o.y); }
  bool operator==(const GridPoint& o) const = default;
};

Triangulation grid_torus(int gx, int gy, const std::vector<std::string>& point_labels,
                         const std::vector<GridSquare>& squares) {
  auto label_at = [&](GridPoint p) -> const std::string& {
    return point_labels[((p.y % gy) + gy) % gy * gx + ((p.x % gx) + gx) % gx];
  };
  std::vector<std::string> labels;
  for (const std::string& l : point_labels)
    if (std::find(labels.begin(), labels.end(), l) == labels.end()) labels.push_back(l);
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<int>(i);

  // canonical key of a grid segment on the torus
  auto seg_key = [&](GridPoint a, GridPoint b) {
    GridPoint d{b.x - a.x, b.y - a.y};
    if (d.x < 0 || (d.x == 0 && d.y < 0)) {
      std::swap(a, b);
      d = {-d.x, -d.y};
    }
    a.x = ((a.x % gx) + gx) % gx;
    a.y = ((a.y % gy) + gy) % gy;
    return std::tuple{a.x, a.y, d.x, d.y};
  };

  std::vector<Face> faces;
  std::vector<std::array<GridPoint, 3>> geo;
  for (int y = 0; y < gy; ++y)
    for (int x = 0; x < gx; ++x) {
      const GridSquare& sq = squares[y * gx + x];
      GridPoint bl{x, y}, br{x + 1, y}, tl{x, y + 1}, tr{x + 1, y + 1};
      std::array<GridPoint, 3> lower, upper;
      if (sq.main_diagonal) {
        lower = {bl, br, tr};
        upper = {bl, tr, tl};
      } else {
        lower = {bl, br, tl};
        upper = {br, tr, tl};
      }
      for (int half = 0; half < 2; ++half) {
        const auto& tri = half == 0 ? lower : upper;
        bool white = half == 0 ? sq.lower_white : !sq.lower_white;
        Face f;
        f.id = static_cast<int>(faces.size());
        f.colour = white ? FaceColour::white : FaceColour::black;
        for (int c = 0; c < 3; ++c) f.corners[c] = index.at(label_at(tri[c]));
        faces.push_back(f);
        geo.push_back(tri);
      }
    }

  std::map<std::tuple<int, int, int, int>, std::vector<SlotRef>> by_seg;
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (int s = 0; s < 3; ++s)
      by_seg[seg_key(geo[f][s], geo[f][(s + 1) % 3])].push_back(
          SlotRef{static_cast<int>(f), s});
  std::vector<std::pair<SlotRef, SlotRef>> gluing;
  for (const auto& [key, slots] : by_seg) {
    if (slots.size() != 2) fail(ErrorKind::malformed_gluing, "grid segment not shared twice");
    gluing.push_back({slots[0], slots[1]});
  }
  return Triangulation::build(std::move(labels), std::move(faces), std::move(gluing));
}

// --- named fixtures ---------------------------------------------------------

Triangulation two_face() {
  return parse_triples({"r", "c", "s"}, {{"r", "c", "s"}}, {{"r", "c", "s"}});
}

Triangulation intercalate() {
  Bitrade bt = check_bitrade(
      {{"r1", "c1", "s1"}, {"r1", "c2", "s2"}, {"r2", "c1", "s2"}, {"r2", "c2", "s1"}},
      {{"r1", "c1", "s2"}, {"r1", "c2", "s1"}, {"r2", "c1", "s1"}, {"r2", "c2", "s2"}});
  return bitrade_to_triangulation(bt);
}

Triangulation fgg() {
  std::vector<std::string> v;
  for (int i = 0; i < 9; ++i) v.push_back(std::to_string(i));
  auto triples = [](std::initializer_list<const char*> ts) {
    std::vector<Triple> out;
    for (const char* t : ts)
      out.push_back({std::string(1, t[0]), std::string(1, t[1]), std::string(1, t[2])});
    return out;
  };
  return parse_triples(
      v,
      triples({"012", "034", "057", "068", "135", "146", "178", "236", "247", "258"}),
      triples({"013", "026", "047", "058", "124", "157", "168", "235", "278", "346"}));
}

Triangulation torus_i() {
  // 2x2 grid, alternating diagonals, shaded halves from the drawing
  std::vector<std::string> pts = {"a", "b", "c", "d"};  // (0,0),(1,0),(0,1),(1,1)
  std::vector<GridSquare> sq = {
      {false, true},   // [0,0] anti, lower-left shaded
      {true, false},   // [1,0] main, upper-left shaded
      {false, true},   // [0,1] anti, lower-left shaded
      {true, false},   // [1,1] main, upper-left shaded
  };
  return grid_torus(2, 2, pts, sq);
}

Triangulation torus_ii() {
  std::vector<std::string> pts = {"a", "b", "c", "d"};
  std::vector<GridSquare> sq = {
      {true, false},   // [0,0] main, upper half shaded
      {false, true},   // [1,0] anti, lower half shaded
      {false, false},  // [0,1] anti, upper half shaded
      {true, true},    // [1,1] main, lower half shaded
  };
  return grid_torus(2, 2, pts, sq);
}

Triangulation torus_iii() {
  std::vector<std::string> pts = {"a", "b", "c", "d", "e", "f"};  // rows y=0 and y=1
  std::vector<GridSquare> sq(6, GridSquare{true, true});  // all main, lower shaded
  return grid_torus(3, 2, pts, sq);
}

Triangulation torus_cw() {
  std::vector<std::string> v = {"r1", "r2", "r3", "r4", "c1", "c2", "c3", "c4",
                                "s1", "s2", "s3", "s4"};
  std::vector<Triple> w = {
      {"r1", "c1", "s1"}, {"r1", "c3", "s4"}, {"r1", "c4", "s3"},
      {"r2", "c1", "s2"}, {"r2", "c2", "s1"},
      {"r3", "c1", "s3"}, {"r3", "c2", "s2"}, {"r3", "c3", "s1"}, {"r3", "c4", "s4"},
      {"r4", "c1", "s4"}, {"r4", "c3", "s3"}, {"r4", "c4", "s1"}};
  std::vector<Triple> b = {
      {"r1", "c1", "s4"}, {"r1", "c3", "s3"}, {"r1", "c4", "s1"},
      {"r2", "c1", "s1"}, {"r2", "c2", "s2"},
      {"r3", "c1", "s2"}, {"r3", "c2", "s1"}, {"r3", "c3", "s4"}, {"r3", "c4", "s3"},
      {"r4", "c1", "s3"}, {"r4", "c3", "s1"}, {"r4", "c4", "s4"}};
  return parse_triples(v, w, b);
}

Triangulation figure_1() {
  std::vector<std::string> labels = {"r1", "r2", "r3", "c1", "c2", "c3", "c4", "c5",
                                     "s1", "s2", "s3", "s4", "s5"};
  std::map<std::string, int> ix;
  for (std::size_t i = 0; i < labels.size(); ++i) ix[labels[i]] = static_cast<int>(i);
  auto face = [&](int id, FaceColour col, const char* r, const char* c, const char* s) {
    return Face{id, col, {ix.at(r), ix.at(c), ix.at(s)}};
  };
  const auto W = FaceColour::white;
  const auto B = FaceColour::black;
  std::vector<Face> faces = {
      face(0, W, "r3", "c5", "s3"),  face(1, W, "r3", "c4", "s5"),
      face(2, W, "r3", "c3", "s4"),  face(3, W, "r2", "c2", "s1"),
      face(4, W, "r2", "c1", "s2"),  face(5, W, "r1", "c2", "s3"),
      face(6, W, "r1", "c5", "s5"),  face(7, W, "r1", "c3", "s3"),
      face(8, W, "r1", "c2", "s2"),  face(9, W, "r1", "c1", "s1"),
      face(10, W, "r1", "c4", "s4"), face(11, B, "r3", "c5", "s5"),
      face(12, B, "r3", "c3", "s3"), face(13, B, "r3", "c4", "s4"),
      face(14, B, "r2", "c1", "s1"), face(15, B, "r2", "c2", "s2"),
      face(16, B, "r1", "c2", "s1"), face(17, B, "r1", "c5", "s3"),
      face(18, B, "r1", "c4", "s5"), face(19, B, "r1", "c3", "s4"),
      face(20, B, "r1", "c2", "s3"), face(21, B, "r1", "c1", "s2"),
  };
  // slot 0 = r-c, slot 1 = c-s, slot 2 = s-r
  std::vector<std::pair<SlotRef, SlotRef>> g = {
      // spokes around r3, hexagon order c4 s5 c5 s3 c3 s4
      {{1, 2}, {11, 2}},  // r3-s5
      {{11, 0}, {0, 0}},  // r3-c5
      {{0, 2}, {12, 2}},  // r3-s3
      {{12, 0}, {2, 0}},  // r3-c3
      {{2, 2}, {13, 2}},  // r3-s4
      {{13, 0}, {1, 0}},  // r3-c4
      // hexagon boundary edges, inner face against outer face
      {{1, 1}, {18, 1}},  // c4-s5
      {{11, 1}, {6, 1}},  // c5-s5
      {{0, 1}, {17, 1}},  // c5-s3
      {{12, 1}, {7, 1}},  // c3-s3
      {{2, 1}, {19, 1}},  // c3-s4
      {{13, 1}, {10, 1}}, // c4-s4
      // spokes around r2, quad order c1 s1 c2 s2
      {{14, 2}, {3, 2}},  // r2-s1
      {{3, 0}, {15, 0}},  // r2-c2
      {{15, 2}, {4, 2}},  // r2-s2
      {{4, 0}, {14, 0}},  // r2-c1
      // quad boundary edges against outer faces
      {{14, 1}, {9, 1}},  // c1-s1
      {{3, 1}, {16, 1}},  // c2-s1
      {{15, 1}, {8, 1}},  // c2-s2
      {{4, 1}, {21, 1}},  // c1-s2
      // spokes around r1, walk c1 s1 c2 s3 c5 s5 c4 s4 c3 s3 c2 s2
      {{9, 2}, {16, 2}},  // r1-s1
      {{16, 0}, {5, 0}},  // r1-c2 (first copy)
      {{5, 2}, {17, 2}},  // r1-s3 (first copy)
      {{17, 0}, {6, 0}},  // r1-c5
      {{6, 2}, {18, 2}},  // r1-s5
      {{18, 0}, {10, 0}}, // r1-c4
      {{10, 2}, {19, 2}}, // r1-s4
      {{19, 0}, {7, 0}},  // r1-c3
      {{7, 2}, {20, 2}},  // r1-s3 (second copy)
      {{20, 0}, {8, 0}},  // r1-c2 (second copy)
      {{8, 2}, {21, 2}},  // r1-s2
      {{21, 0}, {9, 0}},  // r1-c1
      // the equator edge shared by the two (r1,c2,s3) faces
      {{5, 1}, {20, 1}},  // c2-s3
  };
  return Triangulation::build(std::move(labels), std::move(faces), std::move(g));
}

}  // namespace

Triangulation exp_family(const ExpFamilyParams& p) {
  if (p.k < 2 || p.w < 1) fail(ErrorKind::invalid_params, "need k >= 2 and w >= 1");
  const std::size_t width = std::to_string(p.k).size();

  std::vector<std::string> vertices = {"s'", "s''"};
  std::vector<std::vector<std::string>> boundary(p.k + 1);
  std::vector<std::string> region;
  for (std::size_t i = 1; i <= p.k; ++i) {
    region.push_back("r" + padded(i, width));
    auto& path = boundary[i];
    path.push_back("s'");
    for (std::size_t m = 1; m <= p.w; ++m) {
      path.push_back("c" + padded(i, width) + "_" + std::to_string(m));
      if (m < p.w) path.push_back("s" + padded(i, width) + "_" + std::to_string(m));
    }
    path.push_back("s''");
  }
  for (std::size_t i = 1; i <= p.k; ++i) {
    vertices.push_back(region[i - 1]);
    vertices.insert(vertices.end(), boundary[i].begin() + 1, boundary[i].end() - 1);
  }

  // boundary paths alternate S,C,S,C,...,S; a face is (r, c-end, s-end)
  std::vector<Triple> white, black;
  for (std::size_t i = 1; i <= p.k; ++i) {
    const auto& own = boundary[i];
    const auto& next = boundary[i == p.k ? 1 : i + 1];
    for (std::size_t j = 1; j < own.size(); ++j) {
      const std::string& s_end = j % 2 == 1 ? own[j - 1] : own[j];
      const std::string& c_end = j % 2 == 1 ? own[j] : own[j - 1];
      (j % 2 == 1 ? white : black).push_back({region[i - 1], c_end, s_end});
    }
    for (std::size_t j = 1; j < next.size(); ++j) {
      const std::string& s_end = j % 2 == 1 ? next[j - 1] : next[j];
      const std::string& c_end = j % 2 == 1 ? next[j] : next[j - 1];
      (j % 2 == 1 ? black : white).push_back({region[i - 1], c_end, s_end});
    }
  }
  return parse_triples(std::move(vertices), white, black);
}

Triangulation fixture(const std::string& name) {
  if (name == "two-face") return two_face();
  if (name == "intercalate") return intercalate();
  if (name == "fgg") return fgg();
  if (name == "torus-i") return torus_i();
  if (name == "torus-ii") return torus_ii();
  if (name == "torus-iii") return torus_iii();
  if (name == "torus-cw") return torus_cw();
  if (name == "figure-1") return figure_1();
  fail(ErrorKind::unknown_fixture, name);
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"two-face",  "intercalate", "fgg",
                                                 "torus-i",   "torus-ii",    "torus-iii",
                                                 "torus-cw",  "figure-1"};
  return names;
}

}  // namespace btl
