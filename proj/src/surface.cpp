#include "bitradelab/surface.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace btl {
namespace {

std::string pair_str(const std::string& a, const std::string& b) {
  return "{" + a + "," + b + "}";
}

}  // namespace

Triangulation Triangulation::build(std::vector<std::string> vertex_labels,
                                   std::vector<Face> faces,
                                   std::vector<std::pair<SlotRef, SlotRef>> gluing) {
  Triangulation t;
  t.labels_ = std::move(vertex_labels);
  t.faces_ = std::move(faces);
  t.pairs_ = std::move(gluing);

  {
    std::set<std::string> seen;
    for (const auto& l : t.labels_) {
      if (l.empty()) fail(ErrorKind::parse_error, "empty vertex label");
      if (!seen.insert(l).second) fail(ErrorKind::parse_error, "duplicate vertex label " + l);
    }
  }

  const int nv = static_cast<int>(t.labels_.size());
  std::set<int> ids;
  std::size_t white = 0;
  std::vector<bool> vertex_used(nv, false);
  for (const Face& f : t.faces_) {
    if (!ids.insert(f.id).second)
      fail(ErrorKind::parse_error, "duplicate face id " + std::to_string(f.id));
    for (int c : f.corners) {
      if (c < 0 || c >= nv) fail(ErrorKind::parse_error, "face corner out of range");
      vertex_used[c] = true;
    }
    if (f.corners[0] == f.corners[1] || f.corners[1] == f.corners[2] ||
        f.corners[0] == f.corners[2])
      fail(ErrorKind::parse_error,
           "face " + std::to_string(f.id) + " does not have three distinct corners");
    if (f.colour == FaceColour::white) ++white;
  }
  if (2 * white != t.faces_.size())
    fail(ErrorKind::malformed_gluing, "white and black face counts differ");
  for (int v = 0; v < nv; ++v)
    if (!vertex_used[v]) fail(ErrorKind::parse_error, "vertex " + t.labels_[v] + " is isolated");

  t.mate_.assign(t.faces_.size(), {SlotRef{}, SlotRef{}, SlotRef{}});
  t.pair_of_.assign(t.faces_.size(), {-1, -1, -1});
  auto in_range = [&](SlotRef s) {
    return s.face >= 0 && s.face < static_cast<int>(t.faces_.size()) && s.slot >= 0 && s.slot < 3;
  };
  for (std::size_t p = 0; p < t.pairs_.size(); ++p) {
    auto [a, b] = t.pairs_[p];
    if (!in_range(a) || !in_range(b) || a == b)
      fail(ErrorKind::malformed_gluing, "bad slot reference in gluing");
    for (SlotRef s : {a, b})
      if (t.pair_of_[s.face][s.slot] != -1)
        fail(ErrorKind::malformed_gluing, "slot glued twice (face " +
                                              std::to_string(t.faces_[s.face].id) + " slot " +
                                              std::to_string(s.slot) + ")");
    if (t.faces_[a.face].colour == t.faces_[b.face].colour)
      fail(ErrorKind::malformed_gluing, "glued faces share a colour");
    auto ea = t.slot_endpoints(a);
    auto eb = t.slot_endpoints(b);
    if (std::minmax(ea[0], ea[1]) != std::minmax(eb[0], eb[1]))
      fail(ErrorKind::malformed_gluing, "glued slots carry different vertex pairs");
    t.mate_[a.face][a.slot] = b;
    t.mate_[b.face][b.slot] = a;
    t.pair_of_[a.face][a.slot] = static_cast<int>(p);
    t.pair_of_[b.face][b.slot] = static_cast<int>(p);
  }
  for (std::size_t f = 0; f < t.faces_.size(); ++f)
    for (int s = 0; s < 3; ++s)
      if (t.pair_of_[f][s] == -1)
        fail(ErrorKind::malformed_gluing, "unglued slot (face " + std::to_string(t.faces_[f].id) +
                                              " slot " + std::to_string(s) + ")");

  // face-adjacency connectivity
  if (!t.faces_.empty()) {
    std::vector<bool> seen(t.faces_.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (int s = 0; s < 3; ++s) {
        int g = t.mate_[f][s].face;
        if (!seen[g]) {
          seen[g] = true;
          ++count;
          stack.push_back(g);
        }
      }
    }
    if (count != t.faces_.size())
      fail(ErrorKind::disconnected, "face-adjacency graph is not connected");
  }
  return t;
}

std::optional<int> Triangulation::vertex_index(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

bool Triangulation::is_simple() const {
  std::set<std::tuple<int, int, FaceColour>> seen;
  for (const Face& f : faces_)
    for (int s = 0; s < 3; ++s) {
      int a = f.corners[s], b = f.corners[(s + 1) % 3];
      if (!seen.insert({std::min(a, b), std::max(a, b), f.colour}).second) return false;
    }
  return true;
}

Triangulation parse_triples(std::vector<std::string> vertex_labels,
                            const std::vector<Triple>& white, const std::vector<Triple>& black) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < vertex_labels.size(); ++i)
    index[vertex_labels[i]] = static_cast<int>(i);
  if (index.size() != vertex_labels.size())
    fail(ErrorKind::parse_error, "duplicate vertex label");

  auto resolve = [&](const Triple& tr) {
    std::array<int, 3> c{};
    for (int i = 0; i < 3; ++i) {
      auto it = index.find(tr[i]);
      if (it == index.end()) fail(ErrorKind::parse_error, "unknown vertex " + tr[i]);
      c[i] = it->second;
    }
    return c;
  };

  std::vector<Face> faces;
  int id = 0;
  for (const Triple& tr : white)
    faces.push_back(Face{id++, FaceColour::white, resolve(tr)});
  for (const Triple& tr : black)
    faces.push_back(Face{id++, FaceColour::black, resolve(tr)});

  // per colour: each unordered vertex pair must occur on exactly one slot
  std::map<std::pair<int, int>, SlotRef> by_pair[2];
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (int s = 0; s < 3; ++s) {
      int a = faces[f].corners[s], b = faces[f].corners[(s + 1) % 3];
      auto key = std::minmax(a, b);
      auto& m = by_pair[faces[f].colour == FaceColour::white ? 0 : 1];
      auto [it, fresh] = m.insert({key, SlotRef{static_cast<int>(f), s}});
      if (!fresh)
        fail(ErrorKind::duplicate_edge_use,
             "vertex pair " + pair_str(vertex_labels[key.first], vertex_labels[key.second]) +
                 " occurs twice among " +
                 (faces[f].colour == FaceColour::white ? "white" : "black") + " triples");
    }
  for (int side = 0; side < 2; ++side)
    for (const auto& [key, slot] : by_pair[side])
      if (!by_pair[1 - side].count(key))
        fail(ErrorKind::unmatched_edge,
             "vertex pair " + pair_str(vertex_labels[key.first], vertex_labels[key.second]) +
                 " has no " + (side == 0 ? "black" : "white") + " mate");

  std::vector<std::pair<SlotRef, SlotRef>> gluing;
  gluing.reserve(by_pair[0].size());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (faces[f].colour != FaceColour::white) continue;
    for (int s = 0; s < 3; ++s) {
      int a = faces[f].corners[s], b = faces[f].corners[(s + 1) % 3];
      gluing.push_back({SlotRef{static_cast<int>(f), s}, by_pair[1].at(std::minmax(a, b))});
    }
  }
  return Triangulation::build(std::move(vertex_labels), std::move(faces), std::move(gluing));
}

std::vector<std::vector<RotationWalk>> rotation_walks(const Triangulation& t) {
  const int nv = static_cast<int>(t.vertex_count());
  std::vector<std::vector<std::pair<int, int>>> corners(nv);
  for (std::size_t f = 0; f < t.faces().size(); ++f)
    for (int c = 0; c < 3; ++c)
      corners[t.faces()[f].corners[c]].push_back({static_cast<int>(f), c});

  std::vector<std::vector<RotationWalk>> out(nv);
  for (int v = 0; v < nv; ++v) {
    std::set<std::pair<int, int>> unvisited(corners[v].begin(), corners[v].end());
    while (!unvisited.empty()) {
      auto start = *unvisited.begin();
      RotationWalk walk;
      walk.vertex = v;
      std::pair<int, int> cur = start;
      int exit_slot = start.second;  // leave through the edge (corner, corner+1)
      for (;;) {
        unvisited.erase(cur);
        walk.corners.push_back(cur);
        auto ends = t.slot_endpoints({cur.first, exit_slot});
        walk.link.push_back(ends[0] == v ? ends[1] : ends[0]);
        SlotRef m = t.mate({cur.first, exit_slot});
        const auto& gc = t.faces()[m.face].corners;
        int corner = gc[m.slot] == v ? m.slot : (m.slot + 1) % 3;
        int next_exit = (m.slot == corner) ? (corner + 2) % 3 : corner;
        std::pair<int, int> next{m.face, corner};
        if (next == start && next_exit == start.second) break;
        cur = next;
        exit_slot = next_exit;
      }
      std::set<int> distinct(walk.link.begin(), walk.link.end());
      walk.simple_cycle = distinct.size() == walk.link.size();
      out[v].push_back(std::move(walk));
    }
  }
  return out;
}

SurfaceReport validate(const Triangulation& t) {
  SurfaceReport r;
  r.euler_characteristic = static_cast<long long>(t.vertex_count()) -
                           static_cast<long long>(t.edge_count()) +
                           static_cast<long long>(t.face_count());

  auto walks = rotation_walks(t);
  r.is_surface = true;
  for (std::size_t v = 0; v < walks.size(); ++v)
    if (walks[v].size() != 1) {
      r.is_surface = false;
      r.pinch_vertices.push_back(t.label(static_cast<int>(v)));
    }
  std::sort(r.pinch_vertices.begin(), r.pinch_vertices.end());

  // orientation propagation: coherently oriented faces traverse a shared edge
  // in opposite directions
  bool orientable = true;
  std::vector<int> sign(t.face_count(), 0);
  for (std::size_t seed = 0; seed < t.face_count() && orientable; ++seed) {
    if (sign[seed] != 0) continue;
    sign[seed] = 1;
    std::vector<int> stack{static_cast<int>(seed)};
    while (!stack.empty() && orientable) {
      int f = stack.back();
      stack.pop_back();
      for (int s = 0; s < 3 && orientable; ++s) {
        SlotRef m = t.mate({f, s});
        auto ef = t.slot_endpoints({f, s});
        auto eg = t.slot_endpoints(m);
        int needed = (ef[0] == eg[0]) ? -sign[f] : sign[f];
        if (sign[m.face] == 0) {
          sign[m.face] = needed;
          stack.push_back(m.face);
        } else if (sign[m.face] != needed) {
          orientable = false;
        }
      }
    }
  }
  if (r.is_surface) {
    r.orientable = orientable;
    long long chi = r.euler_characteristic;
    if (orientable) {
      r.genus = chi == 2 ? "sphere" : "orientable-genus " + std::to_string((2 - chi) / 2);
    } else {
      r.genus = "nonorientable-crosscap " + std::to_string(2 - chi);
    }
  }
  return r;
}

std::optional<TriColouring> tricolour(const Triangulation& t, TricolourConflict* conflict) {
  if (t.faces().empty()) return TriColouring{{}};
  std::size_t seed = 0;
  for (std::size_t f = 1; f < t.face_count(); ++f)
    if (t.faces()[f].id < t.faces()[seed].id) seed = f;

  std::vector<int> cls(t.vertex_count(), -1);
  const auto& sc = t.faces()[seed].corners;
  cls[sc[0]] = 0;
  cls[sc[1]] = 1;
  cls[sc[2]] = 2;

  auto report = [&](int fa, int fb) {
    if (conflict != nullptr) *conflict = {t.faces()[fa].id, t.faces()[fb].id};
  };

  std::vector<bool> visited(t.face_count(), false);
  visited[seed] = true;
  std::vector<int> queue{static_cast<int>(seed)};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    int f = queue[q];
    for (int s = 0; s < 3; ++s) {
      SlotRef m = t.mate({f, s});
      int apex = t.faces()[m.face].corners[(m.slot + 2) % 3];
      auto ends = t.slot_endpoints({f, s});
      int remaining = 3 - cls[ends[0]] - cls[ends[1]];
      if (cls[apex] == -1) {
        cls[apex] = remaining;
      } else if (cls[apex] != remaining) {
        report(f, m.face);
        return std::nullopt;
      }
      if (!visited[m.face]) {
        visited[m.face] = true;
        queue.push_back(m.face);
      }
    }
  }

  for (const Face& f : t.faces()) {
    int mask = 0;
    for (int c : f.corners) mask |= 1 << cls[c];
    if (mask != 7) {
      report(static_cast<int>(&f - t.faces().data()), static_cast<int>(&f - t.faces().data()));
      return std::nullopt;
    }
  }
  TriColouring col;
  col.assignment.reserve(cls.size());
  for (int c : cls)
    col.assignment.push_back(c == 0 ? TriClass::R : c == 1 ? TriClass::C : TriClass::S);
  return col;
}

Triangulation normalize_corner_order(const Triangulation& t, const TriColouring& col) {
  std::vector<Face> faces = t.faces();
  // old slot -> new slot per face
  std::vector<std::array<int, 3>> slot_map(faces.size());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    std::array<int, 3> by_class{};
    for (int c : t.faces()[f].corners) by_class[static_cast<int>(col.of(c))] = c;
    faces[f].corners = by_class;
    for (int s = 0; s < 3; ++s) {
      auto old_ends = t.slot_endpoints({static_cast<int>(f), s});
      for (int ns = 0; ns < 3; ++ns) {
        std::array<int, 2> ne{by_class[ns], by_class[(ns + 1) % 3]};
        if (std::minmax(ne[0], ne[1]) == std::minmax(old_ends[0], old_ends[1])) {
          slot_map[f][s] = ns;
          break;
        }
      }
    }
  }
  std::vector<std::pair<SlotRef, SlotRef>> gluing;
  gluing.reserve(t.gluing_pairs().size());
  for (auto [a, b] : t.gluing_pairs())
    gluing.push_back({SlotRef{a.face, slot_map[a.face][a.slot]},
                      SlotRef{b.face, slot_map[b.face][b.slot]}});
  return Triangulation::build(t.vertex_labels(), std::move(faces), std::move(gluing));
}

}  // namespace btl
