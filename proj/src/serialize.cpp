#include "flatmod/serialize.hpp"

#include <cstdint>
#include <cstdio>
#include <regex>

#include "flatmod/errors.hpp"

namespace flatmod::io {

namespace {

Json complex_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Complex entry_from_json(const Json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return {e[0].get<double>(), e[1].get<double>()};
  throw ParseError("matrix entry must be a number or a [re, im] pair");
}

ComplexMatrix complex_from_json(const Json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) throw ParseError("matrix must have " + std::to_string(dim) + " rows");
  ComplexMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != dim)
      throw ParseError("matrix row " + std::to_string(i) + " must have " + std::to_string(dim) + " entries");
    for (int k = 0; k < dim; ++k) m(i, k) = entry_from_json(j[i][k]);
  }
  return m;
}

Json residues_to_json(const Residues& r) { return Json(r); }

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("invalid integer in " + what + ": '" + s + "'");
  }
}

}  // namespace

Json element_to_json(const GroupElement& g) {
  if (g.is_unitary_payload()) return complex_to_json(g.unitary());
  if (g.is_orthogonal_payload()) {
    const RealMatrix& m = g.orthogonal();
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
      rows.push_back(std::move(row));
    }
    return rows;
  }
  const Clifford& x = g.spinor();
  Json obj = Json::object();
  for (BladeMask b = 0; b < x.size(); ++b)
    if (x[b] != 0.0) obj[blade_label(b)] = x[b];
  return obj;
}

GroupElement element_from_json(const Json& j, const GroupDescriptor& d, double tol) {
  switch (d.family()) {
    case Family::SU:
    case Family::Sp:
      return GroupElement::from_unitary(d, complex_from_json(j, d.matrix_dim()), tol);
    case Family::SO: {
      const ComplexMatrix c = complex_from_json(j, d.n());
      if (c.imag().cwiseAbs().maxCoeff() > tol) throw ValidationError("SO(n) element has imaginary entries");
      return GroupElement::from_orthogonal(d, c.real(), tol);
    }
    case Family::Spin: {
      if (!j.is_object()) throw ParseError("Spin element must be an object of blade coefficients");
      Clifford x(d.n());
      for (const auto& [label, value] : j.items()) {
        if (!value.is_number()) throw ParseError("blade coefficient for '" + label + "' is not a number");
        BladeMask b = 0;
        try {
          b = parse_blade_label(label, d.n());
        } catch (const std::exception& e) {
          throw ParseError(e.what());
        }
        x[b] += value.get<double>();
      }
      return GroupElement::from_spinor(d, std::move(x), tol);
    }
  }
  throw ParseError("unknown family");
}

Json descriptor_to_json(const GroupDescriptor& d) {
  Json j;
  j["family"] = family_name(d.family());
  j["n"] = d.n();
  if (d.family() == Family::SO || d.quotient().empty()) {
    j["quotient"] = "trivial";
  } else if (static_cast<long>(d.quotient().size()) == d.cover_center_group().size()) {
    j["quotient"] = "center";
  } else {
    Json list = Json::array();
    for (const Residues& r : d.quotient()) list.push_back(residues_to_json(r));
    j["quotient"] = list;
  }
  return j;
}

GroupDescriptor descriptor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family") || !j.contains("n")) throw ParseError("group needs 'family' and 'n'");
  if (!j["family"].is_string() || !j["n"].is_number_integer()) throw ParseError("group 'family' must be a string and 'n' an integer");
  Family f;
  try {
    f = parse_family(j["family"].get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
  const int n = j["n"].get<int>();
  const Json q = j.value("quotient", Json("trivial"));
  if (q.is_string()) {
    const std::string s = q.get<std::string>();
    if (s == "trivial") return GroupDescriptor(f, n);
    if (s == "center") {
      if (f == Family::SO) throw ParseError("SO(n) takes no quotient");
      return GroupDescriptor::adjoint(f, n);
    }
    throw ParseError("quotient must be 'trivial', 'center' or a list of residue vectors");
  }
  if (!q.is_array()) throw ParseError("quotient must be 'trivial', 'center' or a list of residue vectors");
  std::vector<Residues> gens;
  for (const Json& r : q) {
    if (!r.is_array()) throw ParseError("quotient entries must be residue arrays");
    Residues res;
    for (const Json& v : r) {
      if (!v.is_number_integer()) throw ParseError("residues must be integers");
      res.push_back(v.get<int>());
    }
    gens.push_back(std::move(res));
  }
  return GroupDescriptor(f, n, gens);
}

GroupDescriptor parse_group_spec(const std::string& spec) {
  static const std::regex re(R"(^(P?)(SU|SO|Spin|Sp):(\d+)(?:/(\d+))?$)");
  std::smatch m;
  if (!std::regex_match(spec, m, re)) throw ParseError("group spec must look like SU:3, PSU:3, Spin:5 or SU:4/2, got '" + spec + "'");
  const Family f = parse_family(m[2]);
  const int n = parse_int(m[3], "group spec");
  const bool adjoint = m[1].length() > 0;
  if (f == Family::SO && (adjoint || m[4].matched)) throw ParseError("SO(n) takes no quotient; use PSpin:n for the adjoint form");
  if (adjoint && m[4].matched) throw ParseError("use either the P prefix or /d, not both");
  if (adjoint) return GroupDescriptor::adjoint(f, n);
  if (!m[4].matched) return GroupDescriptor(f, n);
  const int d = parse_int(m[4], "group spec");
  if (f != Family::SU) throw ParseError("/d quotients are supported for SU(n) only");
  if (d < 1 || n % d != 0) throw ParseError("SU:" + std::to_string(n) + "/d needs d dividing n");
  if (d == 1) return GroupDescriptor(f, n);
  return GroupDescriptor(f, n, {Residues{n / d}});
}

SurfacePresentation parse_surface_spec(const std::string& spec) {
  static const std::regex re(R"(^(orientable|nonorientable):(\d+)$)");
  std::smatch m;
  if (!std::regex_match(spec, m, re))
    throw ParseError("surface spec must look like orientable:2 or nonorientable:5, got '" + spec + "'");
  const int c = parse_int(m[2], "surface spec");
  return m[1] == "orientable" ? SurfacePresentation::orientable(c) : SurfacePresentation::nonorientable(c);
}

Json surface_to_json(const SurfacePresentation& s) {
  Json j;
  j["orientable"] = s.is_orientable();
  j["genus_or_crosscaps"] = s.genus_or_crosscaps();
  return j;
}

SurfacePresentation surface_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("orientable") || !j.contains("genus_or_crosscaps"))
    throw ParseError("surface needs 'orientable' and 'genus_or_crosscaps'");
  if (!j["orientable"].is_boolean() || !j["genus_or_crosscaps"].is_number_integer())
    throw ParseError("surface fields have the wrong types");
  const int c = j["genus_or_crosscaps"].get<int>();
  return j["orientable"].get<bool>() ? SurfacePresentation::orientable(c) : SurfacePresentation::nonorientable(c);
}

Json representation_to_json(const Representation& rep) {
  Json j;
  j["group"] = descriptor_to_json(rep.group());
  j["surface"] = surface_to_json(rep.presentation());
  Json gens = Json::array();
  for (const GroupElement& g : rep.images()) gens.push_back(element_to_json(g));
  j["generators"] = gens;
  return j;
}

Representation representation_from_json(const Json& j, bool strict, double tol) {
  if (!j.is_object() || !j.contains("group") || !j.contains("surface") || !j.contains("generators"))
    throw ParseError("representation file needs 'group', 'surface' and 'generators'");
  const GroupDescriptor d = descriptor_from_json(j["group"]);
  const SurfacePresentation p = surface_from_json(j["surface"]);
  if (!j["generators"].is_array()) throw ParseError("'generators' must be an array");
  if (static_cast<int>(j["generators"].size()) != p.generator_count())
    throw ParseError(p.name() + " needs " + std::to_string(p.generator_count()) + " generators, file has " +
                     std::to_string(j["generators"].size()));
  std::vector<GroupElement> images;
  for (const Json& g : j["generators"]) images.push_back(element_from_json(g, d));
  return Representation(p, d, std::move(images), strict, tol);
}

Json obstruction_to_json(const ObstructionClass& c) {
  Json j;
  j["ambient_orders"] = c.ambient.cyclic_orders();
  j["ambient"] = c.ambient.to_string();
  j["residues"] = c.value;
  j["surface_kind"] = surface_kind_name(c.surface_kind);
  j["is_identity"] = c.is_identity();
  return j;
}

Json center_element_to_json(const CenterElement& z) {
  Json j;
  j["residues"] = z.coords;
  j["element"] = element_to_json(z.element);
  return j;
}

Json path_certificate(const RelationPath& p, const PathReport& r, double tol, bool per_sample) {
  Json j;
  j["group"] = descriptor_to_json(p.group);
  j["surface"] = surface_to_json(p.presentation);
  j["k"] = center_element_to_json(p.k);
  Json start = Json::array(), end = Json::array();
  for (const GroupElement& g : p.start) start.push_back(element_to_json(g));
  for (const GroupElement& g : p.end) end.push_back(element_to_json(g));
  j["endpoints"] = {{"start", start}, {"end", end}, {"start_residual", r.start_residual}, {"end_residual", r.end_residual}};
  j["sample_count"] = r.residuals.size();
  j["max_residual"] = r.max_residual;
  j["tolerance"] = tol;
  j["passed"] = r.passed;
  if (per_sample) j["residuals"] = r.residuals;
  return j;
}

Json prediction_to_json(const ComponentPrediction& p) {
  Json j;
  j["status"] = prediction_status_name(p.status);
  j["count"] = p.count ? Json(*p.count) : Json(nullptr);
  j["open_case"] = p.status == PredictionStatus::OpenCase;
  j["basis"] = p.basis;
  return j;
}

Json involution_report(Family family, int n, const std::vector<InvolutionClass>& classes, int paper_count) {
  Json j;
  j["family"] = family_name(family);
  j["n"] = n;
  Json list = Json::array();
  for (const InvolutionClass& c : classes) {
    const GroupElement sq = c.representative * c.representative;
    list.push_back({{"index", c.index},
                    {"representative", element_to_json(c.representative)},
                    {"signature", c.signature},
                    {"square_check", payload_distance(sq, GroupElement::identity(sq.descriptor()))}});
  }
  j["classes"] = list;
  j["paper_count"] = paper_count;
  j["computed_count"] = classes.size();
  j["discrepancy_flag"] = static_cast<int>(classes.size()) != paper_count;
  return j;
}

Json spin_report_to_json(const SpinSquareReport& r) {
  const GroupDescriptor d = GroupDescriptor::spin(r.n);
  auto clifford_json = [&](const Clifford& x) { return element_to_json(GroupElement::trusted(d, x)); };
  Json j;
  j["family"] = "Spin";
  j["n"] = r.n;
  Json cands = Json::array();
  for (const SpinCandidate& c : r.candidates)
    cands.push_back({{"j", c.j},
                     {"candidate", clifford_json(c.candidate)},
                     {"square", clifford_json(c.square)},
                     {"square_reference", clifford_json(c.square_reference)},
                     {"cross_check", c.cross_check},
                     {"square_sign", c.square_sign},
                     {"is_involution", c.square_sign == 1},
                     {"class_index", c.class_index}});
  j["candidates"] = cands;
  Json classes = Json::array();
  for (const SpinClass& c : r.classes) {
    const Clifford sq = c.representative * c.representative;
    classes.push_back({{"index", c.index},
                       {"representative", clifford_json(c.representative)},
                       {"signature", c.signature},
                       {"orbit_size", c.orbit_size},
                       {"square_check", sq.max_abs_diff(Clifford::scalar(r.n, 1.0))}});
  }
  j["classes"] = classes;
  j["paper_count"] = r.paper_count;
  j["computed_count"] = r.computed_count;
  j["unresolved_pairs"] = r.unresolved_pairs;
  j["discrepancy_flag"] = r.discrepancy;
  j["notes"] = r.notes;
  return j;
}

Json fiber_point_to_json(const FiberPoint& p) {
  Json j;
  j["cover"] = descriptor_to_json(p.cover);
  j["surface"] = surface_to_json(p.presentation);
  j["k"] = center_element_to_json(p.k);
  Json gens = Json::array();
  for (const GroupElement& g : p.images) gens.push_back(element_to_json(g));
  j["generators"] = gens;
  j["residual"] = p.residual;
  return j;
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace flatmod::io
