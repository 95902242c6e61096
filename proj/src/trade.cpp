#include "bitradelab/trade.hpp"

#include <algorithm>
#include <numeric>

namespace btl {

long long Digraph::total_edges() const {
  long long n = 0;
  for (const auto& row : mult) n = std::accumulate(row.begin(), row.end(), n);
  return n;
}

PresentedGroup group_aw(const Triangulation& t, FaceColour colour, Exec ex) {
  std::vector<std::string> gens = t.vertex_labels();
  std::size_t rows = 0;
  for (const Face& f : t.faces())
    if (f.colour == colour) ++rows;
  BigIntMatrix rel(rows, gens.size());
  std::size_t r = 0;
  for (const Face& f : t.faces()) {
    if (f.colour != colour) continue;
    for (int c : f.corners) rel.at(r, c) += 1;
    ++r;
  }
  return from_presentation(std::move(gens), rel, ex);
}

namespace {

std::vector<int> sorted_class_vertices(const Triangulation& t, const TriColouring& col,
                                       TriClass cls) {
  std::vector<int> vs;
  for (std::size_t v = 0; v < t.vertex_count(); ++v)
    if (col.of(static_cast<int>(v)) == cls) vs.push_back(static_cast<int>(v));
  std::sort(vs.begin(), vs.end(),
            [&](int a, int b) { return t.label(a) < t.label(b); });
  return vs;
}

int region_corner(const Triangulation& t, const TriColouring& col, int face, TriClass cls) {
  for (int c : t.faces()[face].corners)
    if (col.of(c) == cls) return c;
  fail(ErrorKind::not_three_coloured, "face has no corner in the region class");
}

}  // namespace

TMatrix t_matrix(const Triangulation& t, const TriColouring& col, TriClass region_class,
                 bool swap_colours) {
  if (col.assignment.size() != t.vertex_count())
    fail(ErrorKind::not_three_coloured, "colouring does not cover the triangulation");
  if (!validate(t).is_surface)
    fail(ErrorKind::not_surface, "region matrix needs a genuine surface");

  TMatrix tm;
  tm.region_vertices = sorted_class_vertices(t, col, region_class);
  const std::size_t k = tm.region_vertices.size();
  std::vector<int> region_index(t.vertex_count(), -1);
  for (std::size_t i = 0; i < k; ++i) region_index[tm.region_vertices[i]] = static_cast<int>(i);

  const FaceColour white_side = swap_colours ? FaceColour::black : FaceColour::white;
  tm.entries = BigIntMatrix(k, k);
  for (const auto& [a, b] : t.gluing_pairs()) {
    auto ends = t.slot_endpoints(a);
    if (col.of(ends[0]) == region_class || col.of(ends[1]) == region_class) continue;
    SlotRef w = t.faces()[a.face].colour == white_side ? a : b;
    SlotRef bl = w == a ? b : a;
    int j = region_index[region_corner(t, col, w.face, region_class)];
    int i = region_index[region_corner(t, col, bl.face, region_class)];
    if (i != j) tm.entries.at(i, j) += 1;
  }
  for (std::size_t i = 0; i < k; ++i) {
    BigInt s = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) s += tm.entries.at(i, j);
    tm.entries.at(i, i) = -s;
  }
  return tm;
}

PresentedGroup b_group(const TMatrix& tm, Exec ex) {
  std::vector<std::string> gens;
  gens.reserve(tm.k());
  for (std::size_t i = 1; i <= tm.k(); ++i) gens.push_back("x" + std::to_string(i));
  return from_presentation(std::move(gens), tm.entries, ex);
}

AbelianGroup c_group(const AbelianGroup& b) {
  if (b.free_rank == 0)
    fail(ErrorKind::no_free_factor, "group has no free factor to strip");
  return AbelianGroup{b.free_rank - 1, b.invariant_factors};
}

Digraph digraph_from_t(const TMatrix& tm) {
  Digraph d;
  d.k = tm.k();
  d.mult.assign(d.k, std::vector<long long>(d.k, 0));
  for (std::size_t i = 0; i < d.k; ++i)
    for (std::size_t j = 0; j < d.k; ++j) {
      if (i == j) continue;
      const BigInt& m = tm.entries.at(i, j);
      if (!m.fits_slong_p()) fail(ErrorKind::too_large, "edge multiplicity overflow");
      d.mult[i][j] = m.get_si();
    }
  return d;
}

bool is_strongly_connected(const Digraph& d) {
  if (d.k == 0) return true;
  auto reach = [&](bool forward) {
    std::vector<bool> seen(d.k, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t n = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t u = 0; u < d.k; ++u) {
        long long m = forward ? d.mult[u][v] : d.mult[v][u];
        if (m > 0 && !seen[u]) {
          seen[u] = true;
          ++n;
          stack.push_back(u);
        }
      }
    }
    return n == d.k;
  };
  return reach(true) && reach(false);
}

bool is_eulerian(const Digraph& d) {
  for (std::size_t v = 0; v < d.k; ++v) {
    long long in = 0, out = 0;
    for (std::size_t u = 0; u < d.k; ++u) {
      in += d.mult[v][u];
      out += d.mult[u][v];
    }
    if (in != out) return false;
  }
  return true;
}

BigInt tree_number(const TMatrix& tm, Exec ex) {
  if (tm.k() == 0) fail(ErrorKind::invalid_params, "empty region matrix");
  return det_bareiss(tm.entries.negated().shaved(), ex);
}

BigInt count_arborescences_bruteforce(const Digraph& d, std::size_t root) {
  if (root >= d.k && d.k > 0) fail(ErrorKind::invalid_params, "root out of range");
  struct Edge {
    std::size_t from, to;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < d.k; ++i)
    for (std::size_t j = 0; j < d.k; ++j)
      for (long long m = 0; m < d.mult[i][j]; ++m) edges.push_back({j, i});
  if (edges.size() > 16) fail(ErrorKind::too_large, "too many edges for brute force");

  const std::size_t need = d.k == 0 ? 0 : d.k - 1;
  BigInt count = 0;
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != need) continue;
    std::vector<int> indeg(d.k, 0);
    bool ok = true;
    for (std::size_t e = 0; e < edges.size() && ok; ++e)
      if (mask & (1u << e)) {
        ++indeg[edges[e].to];
        if (edges[e].to == root || indeg[edges[e].to] > 1) ok = false;
      }
    if (!ok) continue;
    // every non-root vertex has in-degree 1; an arborescence iff all reachable
    std::vector<bool> seen(d.k == 0 ? 1 : d.k, false);
    std::vector<std::size_t> stack{root};
    if (d.k > 0) seen[root] = true;
    std::size_t n = d.k > 0 ? 1 : 0;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t e = 0; e < edges.size(); ++e)
        if ((mask & (1u << e)) && edges[e].from == v && !seen[edges[e].to]) {
          seen[edges[e].to] = true;
          ++n;
          stack.push_back(edges[e].to);
        }
    }
    if (n == d.k) count += 1;
  }
  return count;
}

bool face_boundary_lattice_check(const Triangulation& t, const TriColouring& col,
                                 TriClass region_class, Exec ex) {
  SurfaceReport sr = validate(t);
  if (!sr.is_sphere()) fail(ErrorKind::not_sphere, "lattice identity is stated on the sphere");
  if (col.assignment.size() != t.vertex_count())
    fail(ErrorKind::not_three_coloured, "colouring does not cover the triangulation");

  // edges of the bipartite graph on the two non-region classes
  std::vector<int> edge_index(t.gluing_pairs().size(), -1);
  std::vector<int> edge_pairs;  // E index -> gluing pair index
  for (std::size_t p = 0; p < t.gluing_pairs().size(); ++p) {
    auto ends = t.slot_endpoints(t.gluing_pairs()[p].first);
    if (col.of(ends[0]) == region_class || col.of(ends[1]) == region_class) continue;
    edge_index[p] = static_cast<int>(edge_pairs.size());
    edge_pairs.push_back(static_cast<int>(p));
  }
  const std::size_t ne = edge_pairs.size();

  // vertices of the bipartite graph, compactly indexed
  std::vector<int> vert_index(t.vertex_count(), -1);
  int nv = 0;
  for (std::size_t v = 0; v < t.vertex_count(); ++v)
    if (col.of(static_cast<int>(v)) != region_class) vert_index[v] = nv++;

  // kernel of F(E) -> F(C u S), e -> c + s: bottom rows of the SNF row
  // transform span the left kernel of the incidence matrix
  BigIntMatrix incidence(ne, nv);
  for (std::size_t e = 0; e < ne; ++e) {
    auto ends = t.slot_endpoints(t.gluing_pairs()[edge_pairs[e]].first);
    incidence.at(e, vert_index[ends[0]]) += 1;
    incidence.at(e, vert_index[ends[1]]) += 1;
  }
  SnfResult s = snf(incidence, ex);
  std::size_t rank = 0;
  for (const BigInt& d : s.diagonal())
    if (sgn(d) != 0) ++rank;
  BigIntMatrix kernel(ne - rank, ne);
  for (std::size_t i = rank; i < ne; ++i)
    for (std::size_t j = 0; j < ne; ++j) kernel.at(i - rank, j) = s.u.at(i, j);

  // boundary rows: one alternating sum per region vertex, the walk starting
  // at a white-adjacent edge (least endpoint labels in non-region class order)
  auto walks = rotation_walks(t);
  const TriClass other1 = region_class == TriClass::R ? TriClass::C : TriClass::R;
  const TriClass other2 = region_class == TriClass::S ? TriClass::C : TriClass::S;
  std::vector<int> regions = sorted_class_vertices(t, col, region_class);
  BigIntMatrix boundary(regions.size(), ne);
  for (std::size_t r = 0; r < regions.size(); ++r) {
    const RotationWalk& walk = walks[regions[r]].front();
    const std::size_t len = walk.corners.size();
    auto boundary_edge = [&](std::size_t pos) {
      auto [f, c] = walk.corners[pos];
      return SlotRef{f, (c + 1) % 3};
    };
    std::size_t start = len;
    std::pair<std::string, std::string> best;
    for (std::size_t pos = 0; pos < len; ++pos) {
      auto [f, c] = walk.corners[pos];
      if (t.faces()[f].colour != FaceColour::white) continue;
      auto ends = t.slot_endpoints(boundary_edge(pos));
      std::pair<std::string, std::string> key{
          t.label(col.of(ends[0]) == other1 ? ends[0] : ends[1]),
          t.label(col.of(ends[0]) == other1 ? ends[1] : ends[0])};
      if (start == len || key < best) {
        start = pos;
        best = key;
      }
    }
    if (start == len) fail(ErrorKind::internal_invariant_violation, "region with no white face");
    for (std::size_t a = 1; a <= len; ++a) {
      std::size_t pos = (start + a - 1) % len;
      int e = edge_index[t.gluing_index(boundary_edge(pos))];
      if (e < 0) fail(ErrorKind::internal_invariant_violation, "boundary edge not in C u S");
      if (a % 2 == 1)
        boundary.at(r, e) -= 1;
      else
        boundary.at(r, e) += 1;
    }
  }

  return hnf_row_lattice(boundary, ex) == hnf_row_lattice(kernel, ex);
}

bool TradeGroupReport::all_verdicts_true() const {
  if (!theorem1_holds) return false;
  if (tb.has_value())
    return tb->key_lemma_holds && tb->tree_number_matches && tb->bw_iso_bb;
  return true;
}

TradeGroupReport full_report(const Triangulation& t, Exec ex) {
  TradeGroupReport r;
  r.surface = validate(t);
  r.a_w = group_aw(t, FaceColour::white, ex);
  r.a_b = group_aw(t, FaceColour::black, ex);
  r.theorem1_holds = is_isomorphic(r.a_w.group, r.a_b.group);

  TricolourConflict conflict;
  r.colouring = tricolour(t, &conflict);
  if (!r.colouring.has_value()) {
    r.conflict = conflict;
    return r;
  }
  if (!r.surface.is_surface) return r;

  TradeGroupReport::TBlock tb;
  tb.t = t_matrix(t, *r.colouring);
  TMatrix t_mate = t_matrix(t, *r.colouring, TriClass::R, /*swap_colours=*/true);
  tb.b_w = b_group(tb.t, ex).group;
  tb.b_b = b_group(t_mate, ex).group;
  tb.c_w = c_group(tb.b_w);
  tb.tree_number = tree_number(tb.t, ex);
  Digraph d = digraph_from_t(tb.t);
  tb.strongly_connected = is_strongly_connected(d);
  tb.eulerian = is_eulerian(d);
  tb.key_lemma_holds = is_isomorphic(r.a_w.group, tb.b_w.plus_z()) &&
                       is_isomorphic(r.a_b.group, tb.b_b.plus_z());
  tb.tree_number_matches = tb.c_w.is_finite() && tb.c_w.torsion_order() == tb.tree_number;
  tb.bw_iso_bb = is_isomorphic(tb.b_w, tb.b_b);
  r.tb = std::move(tb);
  return r;
}

}  // namespace btl
