#include "bitradelab/bitrades.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace btl {
namespace {

std::string triple_str(const Triple& t) { return "(" + t[0] + "," + t[1] + "," + t[2] + ")"; }

// union-find
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Index of the unique black triple agreeing with `t` outside coordinate
// `coord`; maps keyed by the two fixed coordinates.
struct MateIndex {
  std::map<std::pair<std::string, std::string>, std::vector<int>> by_cs, by_rs, by_rc;

  explicit MateIndex(const std::vector<Triple>& ts) {
    for (std::size_t i = 0; i < ts.size(); ++i) {
      by_cs[{ts[i][1], ts[i][2]}].push_back(static_cast<int>(i));
      by_rs[{ts[i][0], ts[i][2]}].push_back(static_cast<int>(i));
      by_rc[{ts[i][0], ts[i][1]}].push_back(static_cast<int>(i));
    }
  }

  const std::vector<int>* lookup(const Triple& t, int coord) const {
    static const std::vector<int> empty;
    const auto* m = coord == 0 ? &by_cs : coord == 1 ? &by_rs : &by_rc;
    auto key = coord == 0   ? std::pair{t[1], t[2]}
               : coord == 1 ? std::pair{t[0], t[2]}
                            : std::pair{t[0], t[1]};
    auto it = m->find(key);
    return it == m->end() ? &empty : &it->second;
  }
};

int forced_mate(const std::vector<Triple>& own, const MateIndex& other_index,
                const std::vector<Triple>& other, std::size_t i, int coord) {
  const Triple& t = own[i];
  const std::vector<int>* hits = other_index.lookup(t, coord);
  int found = -1;
  for (int j : *hits) {
    if (other[j][coord] == t[coord]) continue;  // would not differ in `coord`
    if (found != -1)
      fail(ErrorKind::non_unique_mate,
           "triple " + triple_str(t) + " has two mates differing in coordinate " +
               std::to_string(coord));
    found = j;
  }
  if (found == -1)
    fail(ErrorKind::missing_mate, "triple " + triple_str(t) +
                                      " has no mate differing in coordinate " +
                                      std::to_string(coord));
  return found;
}

}  // namespace

std::vector<std::string> PartialLatinSquare::labels_of(int coordinate) const {
  std::set<std::string> s;
  for (const Triple& t : triples) s.insert(t[coordinate]);
  return {s.begin(), s.end()};
}

PartialLatinSquare check_pls(std::vector<Triple> triples) {
  std::map<std::string, int> coordinate_of;
  for (const Triple& t : triples)
    for (int c = 0; c < 3; ++c) {
      auto [it, fresh] = coordinate_of.insert({t[c], c});
      if (!fresh && it->second != c)
        fail(ErrorKind::not_pls, "label " + t[c] + " used in two coordinate positions");
    }
  for (std::size_t i = 0; i < triples.size(); ++i)
    for (std::size_t j = i + 1; j < triples.size(); ++j) {
      int agree = 0;
      for (int c = 0; c < 3; ++c)
        if (triples[i][c] == triples[j][c]) ++agree;
      if (agree >= 2)
        fail(ErrorKind::not_pls,
             "triples " + triple_str(triples[i]) + " and " + triple_str(triples[j]) +
                 " agree in two coordinates");
    }
  return PartialLatinSquare{std::move(triples)};
}

Bitrade check_bitrade(std::vector<Triple> white, std::vector<Triple> black) {
  PartialLatinSquare w = check_pls(std::move(white));
  PartialLatinSquare b = check_pls(std::move(black));
  if (w.triples.empty() || b.triples.empty())
    fail(ErrorKind::not_pls, "a bitrade needs nonempty sides");
  {
    std::set<Triple> ws(w.triples.begin(), w.triples.end());
    for (const Triple& t : b.triples)
      if (ws.count(t)) fail(ErrorKind::not_disjoint, "shared triple " + triple_str(t));
  }
  MateIndex wi(w.triples), bi(b.triples);
  for (std::size_t i = 0; i < w.triples.size(); ++i)
    for (int c = 0; c < 3; ++c) forced_mate(w.triples, bi, b.triples, i, c);
  for (std::size_t i = 0; i < b.triples.size(); ++i)
    for (int c = 0; c < 3; ++c) forced_mate(b.triples, wi, w.triples, i, c);
  return Bitrade{std::move(w), std::move(b)};
}

Triangulation bitrade_to_triangulation(const Bitrade& bt) {
  const auto& W = bt.white.triples;
  const auto& B = bt.black.triples;
  std::vector<std::string> labels;
  for (int c = 0; c < 3; ++c) {
    std::set<std::string> s;
    for (const Triple& t : W) s.insert(t[c]);
    for (const Triple& t : B) s.insert(t[c]);
    labels.insert(labels.end(), s.begin(), s.end());
  }
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<int>(i);

  std::vector<Face> faces;
  for (std::size_t i = 0; i < W.size(); ++i)
    faces.push_back(Face{static_cast<int>(i), FaceColour::white,
                         {index.at(W[i][0]), index.at(W[i][1]), index.at(W[i][2])}});
  for (std::size_t i = 0; i < B.size(); ++i)
    faces.push_back(Face{static_cast<int>(W.size() + i), FaceColour::black,
                         {index.at(B[i][0]), index.at(B[i][1]), index.at(B[i][2])}});

  // corners are (r, c, s): slot 0 = rc edge (s-mate), slot 1 = cs edge
  // (r-mate), slot 2 = sr edge (c-mate)
  MateIndex bi(B);
  std::vector<std::pair<SlotRef, SlotRef>> gluing;
  const int base = static_cast<int>(W.size());
  for (std::size_t i = 0; i < W.size(); ++i) {
    int r_mate = forced_mate(W, bi, B, i, 0);
    int c_mate = forced_mate(W, bi, B, i, 1);
    int s_mate = forced_mate(W, bi, B, i, 2);
    gluing.push_back({SlotRef{static_cast<int>(i), 1}, SlotRef{base + r_mate, 1}});
    gluing.push_back({SlotRef{static_cast<int>(i), 2}, SlotRef{base + c_mate, 2}});
    gluing.push_back({SlotRef{static_cast<int>(i), 0}, SlotRef{base + s_mate, 0}});
  }
  return Triangulation::build(std::move(labels), std::move(faces), std::move(gluing));
}

std::optional<Bitrade> triangulation_to_bitrade(const Triangulation& t, const TriColouring& col,
                                                std::string* witness) {
  auto read = [&](FaceColour colour) {
    std::vector<Triple> triples;
    for (const Face& f : t.faces()) {
      if (f.colour != colour) continue;
      Triple tr;
      for (int c : f.corners) tr[static_cast<int>(col.of(c))] = t.label(c);
      triples.push_back(std::move(tr));
    }
    return triples;
  };
  try {
    return check_bitrade(read(FaceColour::white), read(FaceColour::black));
  } catch (const Error& e) {
    if (witness != nullptr) *witness = e.what();
    return std::nullopt;
  }
}

std::pair<int, int> nu_class(TriClass c) {
  switch (c) {
    case TriClass::R: return {1, 0};
    case TriClass::C: return {0, 1};
    case TriClass::S: return {-1, -1};
  }
  return {0, 0};
}

const GroupElement* Embedding::find(const std::string& label) const {
  for (const auto& [l, e] : assignment)
    if (l == label) return &e;
  return nullptr;
}

bool check_embedding(const PartialLatinSquare& p, const Embedding& e) {
  for (int coord = 0; coord < 3; ++coord) {
    std::vector<std::string> labels = p.labels_of(coord);
    std::vector<const GroupElement*> images;
    for (const auto& l : labels) {
      const GroupElement* g = e.find(l);
      if (g == nullptr) return false;  // must cover all vertices of p
      images.push_back(g);
    }
    for (std::size_t i = 0; i < images.size(); ++i)
      for (std::size_t j = i + 1; j < images.size(); ++j)
        if (*images[i] == *images[j]) return false;
  }
  for (const Triple& tr : p.triples) {
    GroupElement sum = element_add(element_add(*e.find(tr[0]), *e.find(tr[1])), *e.find(tr[2]));
    if (!sum.is_zero()) return false;
  }
  return true;
}

Embedding canonical_torsion_embedding(const Triangulation& t, const TriColouring& col,
                                      FaceColour colour, Exec ex) {
  if (!validate(t).is_sphere())
    fail(ErrorKind::not_sphere, "torsion embedding is defined for sphere triangulations");
  if (col.assignment.size() != t.vertex_count())
    fail(ErrorKind::not_three_coloured, "colouring does not cover the triangulation");

  std::vector<Triple> triples;
  for (const Face& f : t.faces()) {
    if (f.colour != colour) continue;
    Triple tr;
    for (int c : f.corners) tr[static_cast<int>(col.of(c))] = t.label(c);
    triples.push_back(std::move(tr));
  }
  PartialLatinSquare pls = check_pls(std::move(triples));  // throws NotPLS otherwise

  PresentedGroup pg = group_aw(t, colour, ex);

  // class representatives: corners of the least face of the chosen colour,
  // so the representative triple itself sums to zero
  Triple rep = *std::min_element(pls.triples.begin(), pls.triples.end());

  Embedding emb;
  emb.target = pg.group.torsion_part();
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    const std::string& label = t.label(static_cast<int>(v));
    const GroupElement& gv = pg.image_of(label);
    const GroupElement& gr = pg.image_of(rep[static_cast<int>(col.of(static_cast<int>(v)))]);
    GroupElement shifted = element_sub(gv, gr);
    for (const BigInt& f : shifted.free_coords)
      if (sgn(f) != 0)
        fail(ErrorKind::internal_invariant_violation,
             "shifted image of " + label + " is not torsion");
    GroupElement e = GroupElement::zero(emb.target);
    e.torsion_coords = shifted.torsion_coords;
    emb.assignment.push_back({label, std::move(e)});
  }
  if (!check_embedding(pls, emb))
    fail(ErrorKind::internal_invariant_violation, "canonical map failed the embedding check");
  return emb;
}

DecomposeResult decompose(const Bitrade& bt) {
  const auto& W = bt.white.triples;
  const auto& B = bt.black.triples;
  MateIndex wi(W), bi(B);
  Dsu dsu(W.size() + B.size());
  const int base = static_cast<int>(W.size());
  for (std::size_t i = 0; i < W.size(); ++i)
    for (int c = 0; c < 3; ++c) dsu.unite(static_cast<int>(i), base + forced_mate(W, bi, B, i, c));
  for (std::size_t i = 0; i < B.size(); ++i)
    for (int c = 0; c < 3; ++c) dsu.unite(base + static_cast<int>(i), forced_mate(B, wi, W, i, c));

  int root0 = dsu.find(0);
  bool split = false;
  for (std::size_t i = 0; i < W.size() + B.size() && !split; ++i)
    if (dsu.find(static_cast<int>(i)) != root0) split = true;
  if (!split) return DecomposeResult{false, std::nullopt};

  std::vector<Triple> sw, sb;
  for (std::size_t i = 0; i < W.size(); ++i)
    if (dsu.find(static_cast<int>(i)) == root0) sw.push_back(W[i]);
  for (std::size_t i = 0; i < B.size(); ++i)
    if (dsu.find(base + static_cast<int>(i)) == root0) sb.push_back(B[i]);
  return DecomposeResult{true, check_bitrade(std::move(sw), std::move(sb))};
}

namespace {

std::string cell_label(char prefix, std::size_t i) { return std::string(1, prefix) + std::to_string(i); }

// swap the symbols of rows a and b along the symbol cycle through column j0
void row_cycle_swap(std::vector<std::vector<std::size_t>>& sq, std::size_t a, std::size_t b,
                    std::size_t j0) {
  const std::size_t n = sq.size();
  std::vector<std::size_t> col_of(n);  // position of each symbol in row a
  for (std::size_t j = 0; j < n; ++j) col_of[sq[a][j]] = j;
  std::vector<std::size_t> cycle;
  std::size_t j = j0;
  do {
    cycle.push_back(j);
    j = col_of[sq[b][j]];
  } while (j != j0);
  for (std::size_t cj : cycle) std::swap(sq[a][cj], sq[b][cj]);
}

}  // namespace

std::vector<Bitrade> harvest_spherical(std::size_t n, std::uint64_t seed, std::size_t count) {
  if (n < 4) fail(ErrorKind::invalid_params, "order must be at least 4");
  std::mt19937_64 rng(seed);
  std::vector<Bitrade> out;
  const std::size_t max_attempts = std::max<std::size_t>(50, count * 10);

  for (std::size_t attempt = 0; attempt < max_attempts && out.size() < count; ++attempt) {
    std::vector<std::vector<std::size_t>> l1(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) l1[i][j] = (i + j) % n;
    auto l2 = l1;
    std::size_t swaps = 1 + rng() % (2 * n);
    for (std::size_t s = 0; s < swaps; ++s) {
      std::size_t a = rng() % n;
      std::size_t b = rng() % (n - 1);
      if (b >= a) ++b;
      row_cycle_swap(l2, a, b, rng() % n);
    }

    std::vector<Triple> w, b;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (l1[i][j] != l2[i][j]) {
          w.push_back({cell_label('r', i), cell_label('c', j), cell_label('s', l1[i][j])});
          b.push_back({cell_label('r', i), cell_label('c', j), cell_label('s', l2[i][j])});
        }
    if (w.empty()) continue;
    Bitrade diff = check_bitrade(std::move(w), std::move(b));

    // peel off components in order; each is itself a bitrade
    while (out.size() < count) {
      DecomposeResult dr = decompose(diff);
      Bitrade component = dr.decomposable ? std::move(*dr.sub) : std::move(diff);
      bool last = !dr.decomposable;
      Triangulation tri = bitrade_to_triangulation(component);
      if (validate(tri).is_sphere()) out.push_back(component);
      if (last) break;
      // remove the component from the remainder
      std::set<Triple> cw(component.white.triples.begin(), component.white.triples.end());
      std::set<Triple> cb(component.black.triples.begin(), component.black.triples.end());
      std::vector<Triple> rw, rb;
      for (const Triple& t : diff.white.triples)
        if (!cw.count(t)) rw.push_back(t);
      for (const Triple& t : diff.black.triples)
        if (!cb.count(t)) rb.push_back(t);
      if (rw.empty()) break;
      diff = check_bitrade(std::move(rw), std::move(rb));
    }
  }
  return out;
}

}  // namespace btl
