// flatmod: command-line front end. Every subcommand writes one JSON report.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "flatmod/errors.hpp"
#include "flatmod/selftest.hpp"
#include "flatmod/serialize.hpp"

namespace fs = std::filesystem;
using flatmod::io::Json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kParse = 2, kRelation = 3, kKernel = 4, kUnsupported = 5 };

struct Options {
  std::uint64_t seed = 1;
  std::string out;
  bool pretty = true;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw flatmod::ParseError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json parse_json(const std::string& text, const std::string& path) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw flatmod::ParseError(path + ": " + e.what());
  }
}

void emit(const Json& report, const Options& opt) {
  const std::string text = report.dump(opt.pretty ? 2 : -1) + "\n";
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  const fs::path target(opt.out);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << text;
    f.close();
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

Json envelope(const std::string& command, const Json& args, const std::string& inputs, const Options& opt,
              const Json& tolerances) {
  Json r;
  r["command"] = {{"name", command}, {"args", args}};
  r["inputs_digest"] = flatmod::io::digest(args.dump() + inputs);
  r["seed"] = opt.seed;
  r["tolerances"] = tolerances;
  return r;
}

flatmod::CenterElement pick_center(const flatmod::GroupDescriptor& cover, int index) {
  const flatmod::CenterData z = flatmod::enumerate_center(cover);
  if (index < 0 || index >= static_cast<int>(z.elements.size()))
    throw flatmod::ParseError("--central-k must be in [0, " + std::to_string(z.elements.size() - 1) + "] for " +
                              cover.name());
  return z.elements[index];
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representation varieties of surface groups: obstruction classes, in-fiber paths, component counts"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--seed", opt.seed, "Random seed (FLATMOD_SEED overrides)");
  app.add_option("--out", opt.out, "Write the report here instead of stdout");
  app.add_flag("!--compact", opt.pretty, "Single-line JSON");

  std::string rep_file;
  bool no_validate = false;
  double relation_tol = flatmod::kRelationTol;
  auto* obs = app.add_subcommand("obstruction", "Obstruction class of a representation file");
  obs->add_option("file", rep_file, "Representation JSON")->required();
  obs->add_flag("--no-validate", no_validate, "Skip the relation check");
  obs->add_option("--relation-tol", relation_tol, "Relation tolerance");

  std::string group_spec, surface_spec, target_file;
  int crosscaps = 0, central_k = 0, samples = 101;
  double path_tol = 1e-9;
  bool per_sample = false;
  auto* con = app.add_subcommand("connect", "Explicit path inside the fiber over a central element (SU(n) only)");
  con->add_option("--group", group_spec, "SU:n")->required();
  con->add_option("--crosscaps", crosscaps, "Crosscap number")->required();
  con->add_option("--central-k", central_k, "Index of k in the center (exp(2 pi i m/n) I for index m)");
  con->add_option("--target", target_file, "JSON {\"targets\": [c] or [c1, c2]}; random when omitted");
  con->add_option("--samples", samples, "Sample count on [0, 1]")->check(CLI::Range(2, 100000));
  con->add_option("--tol", path_tol, "Certificate tolerance");
  con->add_flag("--per-sample", per_sample, "Include every sampled residual");

  auto* pre = app.add_subcommand("predict", "Predicted number of connected components");
  pre->add_option("--group", group_spec, "e.g. SO:3, PSU:3, SU:4/2")->required();
  pre->add_option("--surface", surface_spec, "orientable:g or nonorientable:k")->required();

  std::string family;
  int rank = 0;
  auto* invo = app.add_subcommand("involutions", "Conjugacy classes of g^2 = e (components for RP^2)");
  invo->add_option("--family", family, "SU, Sp or Spin")->required()->check(CLI::IsMember({"SU", "Sp", "Spin"}));
  invo->add_option("--n", rank, "Rank parameter")->required();

  auto* fib = app.add_subcommand("sample-fiber", "Random generator tuple whose relation word is a central element");
  fib->add_option("--group", group_spec, "Group G; sampling happens in its universal cover")->required();
  fib->add_option("--surface", surface_spec, "orientable:g or nonorientable:k")->required();
  fib->add_option("--central-k", central_k, "Index of k in the center of the cover");

  auto* self = app.add_subcommand("selftest", "Run the invariant suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }
  if (const char* env = std::getenv("FLATMOD_SEED")) {
    try {
      opt.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: FLATMOD_SEED is not an unsigned integer\n";
      return kParse;
    }
  }

  using namespace flatmod;
  try {
    if (*obs) {
      const std::string text = read_file(rep_file);
      const Representation rep = io::representation_from_json(parse_json(text, rep_file), !no_validate, relation_tol);
      const Json args = {{"file", fs::path(rep_file).filename().string()}, {"no_validate", no_validate}};
      Json r = envelope("obstruction", args, text, opt, {{"relation", relation_tol}});
      r["group"] = rep.group().name();
      r["surface"] = rep.presentation().name();
      r["relation_residual"] = rep.residual();
      r["obstruction"] = io::obstruction_to_json(obstruction(rep));
      emit(r, opt);
      return kOk;
    }

    if (*con) {
      const GroupDescriptor d = io::parse_group_spec(group_spec);
      if (d.family() != Family::SU || !d.quotient().empty())
        throw UnsupportedError("connect: paths are constructed in SU(n) only, got " + d.name());
      if (crosscaps < 1) throw ParseError("--crosscaps must be positive");
      if (crosscaps == 1)
        throw UnsupportedError(
            "connect: crosscap number 1 is RP^2 (no handles); its components are the involution classes, see "
            "`flatmod involutions`");
      if (crosscaps == 2 || crosscaps == 4)
        throw UnsupportedError("connect: crosscap number " + std::to_string(crosscaps) +
                               " is an open case; no in-fiber path construction is known");
      const CenterElement k = pick_center(d, central_k);
      const int needed = crosscaps % 2 ? 1 : 2;
      std::vector<GroupElement> targets;
      std::string inputs;
      if (!target_file.empty()) {
        inputs = read_file(target_file);
        const Json tj = parse_json(inputs, target_file);
        if (!tj.contains("targets") || !tj["targets"].is_array() || static_cast<int>(tj["targets"].size()) != needed)
          throw ParseError("target file needs \"targets\" with " + std::to_string(needed) + " element(s)");
        for (const Json& e : tj["targets"]) targets.push_back(io::element_from_json(e, d));
      } else {
        std::mt19937_64 rng(opt.seed);
        for (int i = 0; i < needed; ++i) targets.push_back(random_element(d, rng));
      }
      const RelationPath p = crosscaps % 2 ? connect_odd(k, targets[0], (crosscaps - 1) / 2)
                                           : connect_even(k, targets[0], targets[1], (crosscaps - 2) / 2);
      const PathReport rep = validate_path(p, samples, path_tol);
      const Json args = {{"group", group_spec},
                         {"crosscaps", crosscaps},
                         {"central_k", central_k},
                         {"target", target_file.empty() ? Json(nullptr) : Json(fs::path(target_file).filename().string())},
                         {"samples", samples}};
      Json r = envelope("connect", args, inputs, opt, {{"path", path_tol}});
      r["certificate"] = io::path_certificate(p, rep, path_tol, per_sample);
      emit(r, opt);
      if (!rep.passed) {
        std::cerr << "connect: max residual " << rep.max_residual << " exceeds tolerance " << path_tol << "\n";
        return kFailed;
      }
      return kOk;
    }

    if (*pre) {
      const GroupDescriptor d = io::parse_group_spec(group_spec);
      const SurfacePresentation s = io::parse_surface_spec(surface_spec);
      Json r = envelope("predict", {{"group", group_spec}, {"surface", surface_spec}}, "", opt, Json::object());
      r["group"] = d.name();
      r["surface"] = s.name();
      r["h2_coefficients"] = h2_coefficients(s, d).to_string();
      r["prediction"] = io::prediction_to_json(predict_component_count(s, d));
      emit(r, opt);
      return kOk;
    }

    if (*invo) {
      Json r = envelope("involutions", {{"family", family}, {"n", rank}}, "", opt, Json::object());
      if (family == "SU")
        r["report"] = io::involution_report(Family::SU, rank, involutions_su(rank), rank / 2 + 1);
      else if (family == "Sp")
        r["report"] = io::involution_report(Family::Sp, rank, involutions_sp(rank), rank + 1);
      else
        r["report"] = io::spin_report_to_json(enumerate_spin_square_classes(rank));
      emit(r, opt);
      return kOk;
    }

    if (*fib) {
      const GroupDescriptor g = io::parse_group_spec(group_spec);
      const SurfacePresentation s = io::parse_surface_spec(surface_spec);
      const GroupDescriptor cover = g.cover();
      const CenterElement k = pick_center(cover, central_k);
      const FiberPoint point = s.is_orientable() ? sample_fiber_orientable(s, cover, k, opt.seed)
                                                 : sample_fiber_nonorientable(s, cover, k, opt.seed);
      Json r = envelope("sample-fiber", {{"group", group_spec}, {"surface", surface_spec}, {"central_k", central_k}},
                        "", opt, {{"relation", kRelationTol}});
      r["fiber_point"] = io::fiber_point_to_json(point);
      const KernelData kernel = covering_kernel(g);
      const bool in_kernel = std::find(kernel.coords.begin(), kernel.coords.end(), k.coords) != kernel.coords.end();
      r["representation"] = in_kernel ? io::representation_to_json(project_fiber_point(point, g)) : Json(nullptr);
      emit(r, opt);
      return kOk;
    }

    if (*self) {
      const std::vector<SelftestResult> results = run_selftest(opt.seed);
      Json r = envelope("selftest", Json::object(), "", opt, Json::object());
      Json list = Json::array();
      bool all = true;
      for (const SelftestResult& t : results) {
        list.push_back({{"name", t.name}, {"passed", t.passed}, {"detail", t.detail}});
        all = all && t.passed;
      }
      r["suites"] = list;
      r["passed"] = all;
      emit(r, opt);
      return all ? kOk : kFailed;
    }
  } catch (const RelationError& e) {
    std::cerr << "relation violation: " << e.what() << "\n";
    return kRelation;
  } catch (const KernelRecognitionError& e) {
    std::cerr << "kernel recognition failed: " << e.what() << "\n";
    return kKernel;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kParse;
  } catch (const Json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kParse;
}
