#include "foliage/json_io.hpp"

#include <algorithm>

#include "foliage/error.hpp"

namespace foliage {

Json to_json(SurfaceType s) { return {{"genus", s.genus}, {"punctures", s.punctures}}; }

SurfaceType surface_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("genus") || !j.contains("punctures"))
    throw Error(ErrorKind::Parse, "surface needs genus and punctures");
  return {j.at("genus").get<int>(), j.at("punctures").get<int>()};
}

Json to_json(const NormalVector& v) { return v.weights(); }

NormalVector curve_from_json(SurfaceType s, const Json& j) {
  if (j.is_string()) return named_curve(s, j.get<std::string>());
  if (!j.is_array()) throw Error(ErrorKind::Parse, "curve must be a weight array or a name");
  const auto& t = cached_standard_model(s).triangulation;
  return validate_normal(t, j.get<std::vector<long long>>());
}

Json to_json(const CurveSystem& cs) {
  Json out = Json::array();
  for (const auto& c : cs.curves()) out.push_back(to_json(c));
  return out;
}

Json to_json(const SubsurfacePiece& p) {
  Json boundary = Json::array();
  for (const auto& b : p.boundary) boundary.push_back(to_json(b));
  return {{"genus", p.genus},
          {"punctures", p.punctures},
          {"boundary", boundary},
          {"complexity", p.complexity()}};
}

Json to_json(const FoliationClass& F) {
  const auto pieces = complement_pieces(F.system());
  Json minimal = Json::array();
  for (const auto& m : F.minimal()) {
    const auto it = std::find(pieces.begin(), pieces.end(), m.piece);
    minimal.push_back({{"piece", it - pieces.begin()}, {"fillId", m.fill_id}});
  }
  return {{"surface", to_json(F.surface())},
          {"system", to_json(F.system())},
          {"annular", F.annular()},
          {"minimal", minimal}};
}

FoliationClass class_from_json(SurfaceType s, const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "class must be an object");
  if (j.contains("surface") && !(surface_from_json(j.at("surface")) == s))
    throw Error(ErrorKind::MixedSurfaces, "class is on " + to_string(surface_from_json(j.at("surface"))));
  const auto& t = cached_standard_model(s).triangulation;
  std::vector<NormalVector> given;
  for (const auto& c : j.value("system", Json::array())) given.push_back(curve_from_json(s, c));
  const CurveSystem cs = given.empty() ? CurveSystem::empty(t) : CurveSystem::from_curves(t, given);
  // Indices refer to the order given; translate to the canonical order.
  std::vector<int> annular;
  for (const auto& a : j.value("annular", Json::array())) {
    const int i = a.get<int>();
    if (i < 0 || i >= static_cast<int>(given.size())) throw Error(ErrorKind::BadLength, "annular index out of range");
    annular.push_back(cs.index_of(given[i]));
  }
  std::vector<std::pair<int, std::string>> minimal;
  for (const auto& m : j.value("minimal", Json::array())) {
    if (!m.is_object() || !m.contains("piece")) throw Error(ErrorKind::Parse, "minimal entries need a piece");
    minimal.emplace_back(m.at("piece").get<int>(), m.value("fillId", std::string("m")));
  }
  return make_foliation(cs, std::move(annular), std::move(minimal));
}

Json to_json(const IdealTriangulation& t) {
  Json triangles = Json::array(), gluing = Json::array(), corners = Json::array();
  for (int i = 0; i < t.num_triangles(); ++i) {
    Json edges = Json::array(), classes = Json::array();
    for (int k = 0; k < 3; ++k) {
      const Slot s{i, k};
      edges.push_back(t.edge_of(s));
      classes.push_back(t.vertex_class(i, k));
      const Slot o = t.glued(s);
      if (s < o) gluing.push_back({{i, k}, {o.triangle, o.side}});
    }
    triangles.push_back(edges);
    corners.push_back(classes);
  }
  return {{"surface", to_json(t.surface())},
          {"edges", t.num_edges()},
          {"triangles", triangles},
          {"gluing", gluing},
          {"corner_vertex_classes", corners},
          {"vertex_classes", t.num_vertex_classes()}};
}

Json to_json(const CurveUniverse& u) {
  Json curves = Json::array();
  for (int i = 0; i < u.size(); ++i)
    curves.push_back({{"weights", to_json(u.curves[i])}, {"depth", u.depth[i]}, {"interior", u.interior(i)}});
  return {{"surface", to_json(u.surface)},
          {"word_length", u.word_length},
          {"size", u.size()},
          {"interior", u.interior_count()},
          {"curves", curves}};
}

Json to_json(const CurveGraph& g) {
  Json edges = Json::array();
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g.adjacent(i, j)) edges.push_back({i, j});
  Json out = to_json(*g.universe);
  out["edges"] = edges;
  return out;
}

}  // namespace foliage
