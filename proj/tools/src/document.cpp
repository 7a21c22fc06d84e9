#include "cquant_cli/document.hpp"

#include <algorithm>
#include <sstream>

#include "cquant_cli/io.hpp"

namespace cquant::cli {

using nlohmann::json;

namespace {

json vec(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json vecs(const std::vector<Vector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vec(v));
  return out;
}

Rational rat(const json& j) {
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw InputError(std::string("document: ") + e.what());
  }
}

Vector read_vec(const json& j) {
  Vector out;
  for (const auto& x : j) out.push_back(rat(x));
  return out;
}

std::vector<Vector> read_vecs(const json& j) {
  std::vector<Vector> out;
  for (const auto& x : j) out.push_back(read_vec(x));
  return out;
}

}  // namespace

json region_document(const QuantileRegion& region, const DocumentInput& input) {
  json in;
  in["N"] = input.n;
  in["d"] = input.d;
  in["p"] = input.p.str();
  in["ceil_np"] = region.level.ceil_np();
  in["nudged"] = input.requested_p.has_value();
  if (input.requested_p) in["p_requested"] = input.requested_p->str();
  if (input.cone) {
    json cone;
    cone["generators"] = vecs(*input.cone);
    if (input.interior) cone["interior"] = vec(*input.interior);
    in["cone"] = cone;
  } else {
    in["cone"] = "zero";
  }

  json doc;
  doc["format"] = "cquant-region/1";
  doc["provenance"] = std::string(to_string(region.provenance));
  doc["input"] = in;

  json hs = json::array();
  for (const auto& h : region.halfspaces) hs.push_back(json{{"w", vec(h.normal)}, {"t", h.offset.str()}});
  doc["halfspaces"] = hs;

  json entries = json::array();
  for (const auto& e : region.entries) entries.push_back(json{{"w", vec(e.w)}, {"t", e.t.str()}});
  doc["dual_solution"] = entries;

  const VRep& v = region.region.vrep();
  doc["empty"] = v.vertices.empty();
  doc["bounded"] = v.rays.empty() && v.lines.empty();
  doc["vertices"] = vecs(v.vertices);
  doc["rays"] = vecs(v.rays);
  doc["lines"] = vecs(v.lines);
  doc["statistics"] = json{{"benson_rounds", region.stats.rounds},
                           {"cuts_added", region.stats.cuts},
                           {"scalarization_calls", region.stats.scalarizations}};
  return doc;
}

std::vector<Halfspace> document_halfspaces(const json& doc) {
  std::vector<Halfspace> out;
  for (const auto& h : doc.at("halfspaces")) out.push_back(Halfspace{read_vec(h.at("w")), rat(h.at("t"))});
  return out;
}

Polyhedron document_polyhedron(const json& doc) {
  const std::size_t d = doc.at("input").at("d").get<std::size_t>();
  return Polyhedron::from_vrep(
      d, VRep{read_vecs(doc.at("vertices")), read_vecs(doc.at("rays")), read_vecs(doc.at("lines"))});
}

std::string plot_cycle(const Polyhedron& region, int digits) {
  std::vector<Vector> vs = region.vrep().vertices;
  if (!vs.empty()) {
    Vector centroid(2);
    for (const auto& v : vs) {
      centroid[0] += v[0];
      centroid[1] += v[1];
    }
    const Rational n(static_cast<unsigned long>(vs.size()));
    centroid[0] /= n;
    centroid[1] /= n;
    auto half = [](const Rational& x, const Rational& y) {
      return (y.sign() > 0 || (y.is_zero() && x.sign() > 0)) ? 0 : 1;
    };
    std::sort(vs.begin(), vs.end(), [&](const Vector& a, const Vector& b) {
      const Rational ax = a[0] - centroid[0], ay = a[1] - centroid[1];
      const Rational bx = b[0] - centroid[0], by = b[1] - centroid[1];
      const int ha = half(ax, ay);
      const int hb = half(bx, by);
      if (ha != hb) return ha < hb;
      return (ax * by - ay * bx).sign() > 0;
    });
  }
  std::ostringstream os;
  for (const auto& v : vs) os << v[0].decimal(digits) << ',' << v[1].decimal(digits) << '\n';
  return os.str();
}

}  // namespace cquant::cli
