#include "bitradelab/json_io.hpp"

namespace btl {
namespace {

Json triple_array(const Triangulation& t, const Face& f) {
  Json a = Json::array();
  for (int c : f.corners) a.push_back(t.label(c));
  return a;
}

std::vector<Triple> triples_from(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array())
    fail(ErrorKind::parse_error, std::string("missing array \"") + key + "\"");
  std::vector<Triple> out;
  for (const Json& e : j.at(key)) {
    if (!e.is_array() || e.size() != 3) fail(ErrorKind::parse_error, "triples need 3 labels");
    out.push_back({e[0].get<std::string>(), e[1].get<std::string>(), e[2].get<std::string>()});
  }
  return out;
}

}  // namespace

Json matrix_to_json(const BigIntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json group_to_json(const AbelianGroup& g) {
  Json torsion = Json::array();
  for (const BigInt& f : g.invariant_factors) torsion.push_back(f.get_str());
  return Json{{"free_rank", g.free_rank}, {"torsion", std::move(torsion)}};
}

Json triangulation_to_json(const Triangulation& t) {
  Json j;
  j["vertices"] = t.vertex_labels();
  if (t.is_simple()) {
    Json white = Json::array(), black = Json::array();
    for (const Face& f : t.faces())
      (f.colour == FaceColour::white ? white : black).push_back(triple_array(t, f));
    j["white"] = std::move(white);
    j["black"] = std::move(black);
    return j;
  }
  Json faces = Json::array();
  for (const Face& f : t.faces())
    faces.push_back(Json{{"id", f.id},
                         {"colour", f.colour == FaceColour::white ? "white" : "black"},
                         {"corners", triple_array(t, f)}});
  j["faces"] = std::move(faces);
  Json gluing = Json::array();
  for (auto [a, b] : t.gluing_pairs()) {
    auto ja = Json::array({t.faces()[a.face].id, a.slot});
    auto jb = Json::array({t.faces()[b.face].id, b.slot});
    bool swap = std::pair{t.faces()[b.face].id, b.slot} < std::pair{t.faces()[a.face].id, a.slot};
    gluing.push_back(swap ? Json::array({jb, ja}) : Json::array({ja, jb}));
  }
  j["gluing"] = std::move(gluing);
  return j;
}

Triangulation triangulation_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::parse_error, "triangulation must be a JSON object");
  if (!j.contains("vertices")) fail(ErrorKind::parse_error, "missing \"vertices\"");
  std::vector<std::string> labels;
  for (const Json& v : j.at("vertices")) labels.push_back(v.get<std::string>());

  if (!j.contains("faces"))
    return parse_triples(std::move(labels), triples_from(j, "white"), triples_from(j, "black"));

  std::map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<int>(i);
  std::vector<Face> faces;
  std::map<int, int> pos_of_id;
  for (const Json& jf : j.at("faces")) {
    Face f;
    f.id = jf.at("id").get<int>();
    std::string colour = jf.at("colour").get<std::string>();
    if (colour != "white" && colour != "black")
      fail(ErrorKind::parse_error, "face colour must be white or black");
    f.colour = colour == "white" ? FaceColour::white : FaceColour::black;
    const Json& corners = jf.at("corners");
    if (!corners.is_array() || corners.size() != 3)
      fail(ErrorKind::parse_error, "faces need 3 corners");
    for (int c = 0; c < 3; ++c) {
      auto it = index.find(corners[c].get<std::string>());
      if (it == index.end())
        fail(ErrorKind::parse_error, "unknown vertex " + corners[c].get<std::string>());
      f.corners[c] = it->second;
    }
    pos_of_id[f.id] = static_cast<int>(faces.size());
    faces.push_back(f);
  }
  std::vector<std::pair<SlotRef, SlotRef>> gluing;
  if (!j.contains("gluing")) fail(ErrorKind::parse_error, "missing \"gluing\"");
  for (const Json& jp : j.at("gluing")) {
    if (!jp.is_array() || jp.size() != 2) fail(ErrorKind::parse_error, "gluing entries are pairs");
    auto slot = [&](const Json& js) {
      if (!js.is_array() || js.size() != 2)
        fail(ErrorKind::parse_error, "gluing slots are [face id, slot]");
      auto it = pos_of_id.find(js[0].get<int>());
      if (it == pos_of_id.end()) fail(ErrorKind::parse_error, "gluing references unknown face");
      return SlotRef{it->second, js[1].get<int>()};
    };
    gluing.push_back({slot(jp[0]), slot(jp[1])});
  }
  return Triangulation::build(std::move(labels), std::move(faces), std::move(gluing));
}

Json surface_report_to_json(const SurfaceReport& r) {
  Json j;
  j["euler_characteristic"] = r.euler_characteristic;
  j["is_surface"] = r.is_surface;
  j["pinch_vertices"] = r.pinch_vertices;
  j["orientable"] = r.orientable.has_value() ? Json(*r.orientable) : Json(nullptr);
  j["genus"] = r.genus.has_value() ? Json(*r.genus) : Json(nullptr);
  return j;
}

Json report_to_json(const TradeGroupReport& r) {
  Json j;
  j["surface"] = surface_report_to_json(r.surface);
  j["A_W"] = r.a_w.group.display();
  j["A_B"] = r.a_b.group.display();
  if (r.tb.has_value()) {
    j["B_W"] = r.tb->b_w.display();
    j["C_W"] = r.tb->c_w.display();
    j["tree_number"] = r.tb->tree_number.get_str();
  }
  Json verdicts;
  verdicts["theorem1_holds"] = r.theorem1_holds;
  if (r.tb.has_value()) {
    verdicts["key_lemma_holds"] = r.tb->key_lemma_holds;
    verdicts["tree_number_matches"] = r.tb->tree_number_matches;
    verdicts["bw_iso_bb"] = r.tb->bw_iso_bb;
  }
  j["verdicts"] = std::move(verdicts);
  return j;
}

Json bitrade_to_json(const Bitrade& bt) {
  Json w = Json::array(), b = Json::array();
  for (const Triple& t : bt.white.triples) w.push_back(Json::array({t[0], t[1], t[2]}));
  for (const Triple& t : bt.black.triples) b.push_back(Json::array({t[0], t[1], t[2]}));
  return Json{{"white", std::move(w)}, {"black", std::move(b)}};
}

Bitrade bitrade_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::parse_error, "bitrade must be a JSON object");
  return check_bitrade(triples_from(j, "white"), triples_from(j, "black"));
}

Json embedding_to_json(const Embedding& e) {
  Json j;
  j["target"] = group_to_json(e.target);
  Json table;
  for (const auto& [label, elem] : e.assignment) {
    Json coords = Json::array();
    for (const BigInt& c : elem.free_coords) coords.push_back(c.get_str());
    for (const BigInt& c : elem.torsion_coords) coords.push_back(c.get_str());
    table[label] = std::move(coords);
  }
  j["assignment"] = std::move(table);
  return j;
}

}  // namespace btl
