#pragma once

#include <string>

#include <json.hpp>

#include "flatmod/components.hpp"
#include "flatmod/obstruction.hpp"
#include "flatmod/paths.hpp"

namespace flatmod::io {

/// Insertion-ordered JSON so that reports serialize byte-identically.
using Json = nlohmann::ordered_json;

/// Matrices as rows of [re, im] pairs (SO rows may be plain numbers);
/// Clifford elements as {"": scalar, "12": c12, ...}.
Json element_to_json(const GroupElement& g);
GroupElement element_from_json(const Json& j, const GroupDescriptor& d, double tol = kMatrixTol);

/// {"family": "SU", "n": 3, "quotient": "trivial" | "center" | [[r...], ...]}
Json descriptor_to_json(const GroupDescriptor& d);
GroupDescriptor descriptor_from_json(const Json& j);

/// "SU:3", "SO:3", "Spin:5", "Sp:2", adjoint forms "PSU:3", "PSp:2", "PSpin:6",
/// and "SU:n/d" for SU(n) modulo its central subgroup of order d.
GroupDescriptor parse_group_spec(const std::string& spec);

/// "orientable:2", "nonorientable:5".
SurfacePresentation parse_surface_spec(const std::string& spec);

/// {"orientable": bool, "genus_or_crosscaps": int}
Json surface_to_json(const SurfacePresentation& s);
SurfacePresentation surface_from_json(const Json& j);

/// {"group": ..., "surface": ..., "generators": [...]}
Json representation_to_json(const Representation& rep);
Representation representation_from_json(const Json& j, bool strict = true, double tol = kRelationTol);

/// {"ambient_orders": [...], "residues": [...], "surface_kind": "..."}
Json obstruction_to_json(const ObstructionClass& c);

Json center_element_to_json(const CenterElement& z);
Json path_certificate(const RelationPath& p, const PathReport& r, double tol, bool per_sample);
Json prediction_to_json(const ComponentPrediction& p);
Json involution_report(Family family, int n, const std::vector<InvolutionClass>& classes, int paper_count);
Json spin_report_to_json(const SpinSquareReport& r);
Json fiber_point_to_json(const FiberPoint& p);

/// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string digest(const std::string& bytes);

}  // namespace flatmod::io
