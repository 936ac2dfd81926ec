#pragma once

#include <string>

#include <json.hpp>

#include "foliage/adherence.hpp"
#include "foliage/curvecomplex.hpp"

namespace foliage {

using Json = nlohmann::json;

Json to_json(SurfaceType s);
SurfaceType surface_from_json(const Json& j);

/// A curve is written as its weight vector.
Json to_json(const NormalVector& v);

/// Weight array, or a string accepted by named_curve. Throws Parse or the
/// validation errors of NormalVector.
NormalVector curve_from_json(SurfaceType s, const Json& j);

Json to_json(const CurveSystem& cs);

Json to_json(const SubsurfacePiece& p);

/// {"surface", "system": [...], "annular": [indices], "minimal":
/// [{"piece": index into the complement pieces, "fillId": ...}]}.
Json to_json(const FoliationClass& F);
FoliationClass class_from_json(SurfaceType s, const Json& j);

/// Triangles with their edge ids, the gluing as slot pairs, and the vertex
/// class at each corner.
Json to_json(const IdealTriangulation& t);

Json to_json(const CurveUniverse& u);

/// Graph with vertex weights, depths and edge list.
Json to_json(const CurveGraph& g);

}  // namespace foliage
