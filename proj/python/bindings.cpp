#include <random>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flatmod/errors.hpp"
#include "flatmod/selftest.hpp"
#include "flatmod/serialize.hpp"

namespace py = pybind11;
using namespace flatmod;
using io::Json;

namespace {

CenterElement center_at(const GroupDescriptor& cover, int index) {
  const CenterData z = enumerate_center(cover);
  if (index < 0 || index >= static_cast<int>(z.elements.size()))
    throw ValidationError("central_k out of range for " + cover.name());
  return z.elements[index];
}

std::string predict(const std::string& group, const std::string& surface) {
  const GroupDescriptor d = io::parse_group_spec(group);
  const SurfacePresentation s = io::parse_surface_spec(surface);
  Json r = io::prediction_to_json(predict_component_count(s, d));
  r["h2_coefficients"] = h2_coefficients(s, d).to_string();
  return r.dump();
}

std::string obstruction_of(const std::string& rep_json, bool validate, double tol) {
  const Representation rep = io::representation_from_json(Json::parse(rep_json), validate, tol);
  Json r = io::obstruction_to_json(obstruction(rep));
  r["relation_residual"] = rep.residual();
  return r.dump();
}

std::string connect(const std::string& group, int crosscaps, int central_k, const std::vector<ComplexMatrix>& targets,
                    int samples, double tol, std::uint64_t seed) {
  const GroupDescriptor d = io::parse_group_spec(group);
  if (crosscaps == 1 || crosscaps == 2 || crosscaps == 4)
    throw UnsupportedError("connect: crosscap number " + std::to_string(crosscaps) + " has no in-fiber path construction");
  if (crosscaps < 1) throw ValidationError("crosscaps must be positive");
  const CenterElement k = center_at(d, central_k);
  const std::size_t needed = crosscaps % 2 ? 1 : 2;
  std::vector<GroupElement> c;
  if (targets.empty()) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < needed; ++i) c.push_back(random_element(d, rng));
  } else {
    if (targets.size() != needed) throw ValidationError("expected " + std::to_string(needed) + " target(s)");
    for (const ComplexMatrix& m : targets) c.push_back(GroupElement::from_unitary(d, m));
  }
  const RelationPath p = crosscaps % 2 ? connect_odd(k, c[0], (crosscaps - 1) / 2)
                                       : connect_even(k, c[0], c[1], (crosscaps - 2) / 2);
  return io::path_certificate(p, validate_path(p, samples, tol), tol, true).dump();
}

std::string involutions(const std::string& family, int n) {
  if (family == "SU") return io::involution_report(Family::SU, n, involutions_su(n), n / 2 + 1).dump();
  if (family == "Sp") return io::involution_report(Family::Sp, n, involutions_sp(n), n + 1).dump();
  if (family == "Spin") return io::spin_report_to_json(enumerate_spin_square_classes(n)).dump();
  throw ValidationError("family must be SU, Sp or Spin");
}

std::string sample_fiber(const std::string& group, const std::string& surface, int central_k, std::uint64_t seed) {
  const GroupDescriptor g = io::parse_group_spec(group);
  const SurfacePresentation s = io::parse_surface_spec(surface);
  const CenterElement k = center_at(g.cover(), central_k);
  const FiberPoint p = s.is_orientable() ? sample_fiber_orientable(s, g.cover(), k, seed)
                                         : sample_fiber_nonorientable(s, g.cover(), k, seed);
  Json r;
  r["fiber_point"] = io::fiber_point_to_json(p);
  const KernelData kernel = covering_kernel(g);
  const bool in_kernel = std::find(kernel.coords.begin(), kernel.coords.end(), k.coords) != kernel.coords.end();
  r["representation"] = in_kernel ? io::representation_to_json(project_fiber_point(p, g)) : Json(nullptr);
  return r.dump();
}

}  // namespace

PYBIND11_MODULE(_flatmod, m) {
  m.doc() = "Surface group representation varieties: obstruction classes, in-fiber paths, component counts";

  static py::exception<RelationError> relation_error(m, "RelationError");
  static py::exception<KernelRecognitionError> kernel_error(m, "KernelRecognitionError");
  static py::exception<UnsupportedError> unsupported_error(m, "UnsupportedError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const RelationError& e) {
      PyErr_SetString(relation_error.ptr(), e.what());
    } catch (const KernelRecognitionError& e) {
      PyErr_SetString(kernel_error.ptr(), e.what());
    } catch (const UnsupportedError& e) {
      PyErr_SetString(unsupported_error.ptr(), e.what());
    } catch (const Json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("_predict", &predict);
  m.def("_obstruction", &obstruction_of);
  m.def("_connect", &connect);
  m.def("_involutions", &involutions);
  m.def("_sample_fiber", &sample_fiber);
  m.def("_selftest", [](std::uint64_t seed) {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const SelftestResult& r : run_selftest(seed)) out.emplace_back(r.name, r.passed, r.detail);
    return out;
  });

  m.def("coxeter_element", [](int n) { return ComplexMatrix(coxeter_element(n).rep.unitary()); }, py::arg("n"),
        "Signed n-cycle permutation matrix in SU(n).");
  m.def(
      "commutator_preimage",
      [](const ComplexMatrix& g) {
        const CommutatorPair p = commutator_preimage(GroupElement::from_unitary(GroupDescriptor::su(g.rows()), g));
        return std::make_pair(ComplexMatrix(p.a.unitary()), ComplexMatrix(p.b.unitary()));
      },
      py::arg("g"), "(a, b) in SU(n) with a b a^-1 b^-1 = g.");
  m.def(
      "random_su",
      [](int n, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        return ComplexMatrix(random_element(GroupDescriptor::su(n), rng).unitary());
      },
      py::arg("n"), py::arg("seed") = 1);
  m.def(
      "relation_value",
      [](const std::string& surface, const std::vector<ComplexMatrix>& generators) {
        const SurfacePresentation s = io::parse_surface_spec(surface);
        if (generators.empty()) throw ValidationError("relation_value needs at least one generator to fix n");
        const GroupDescriptor d = GroupDescriptor::su(static_cast<int>(generators[0].rows()));
        std::vector<GroupElement> images;
        for (const ComplexMatrix& x : generators) images.push_back(GroupElement::from_unitary(d, x));
        return ComplexMatrix(evaluate_relation(images, s, d).unitary());
      },
      py::arg("surface"), py::arg("generators"), "Relation word of SU(n) generators.");
}
