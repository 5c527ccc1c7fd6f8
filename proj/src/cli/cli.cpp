#include "mgeo/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>

#include "mgeo/basis.hpp"
#include "mgeo/bounds.hpp"
#include "mgeo/convexity.hpp"
#include "mgeo/error.hpp"
#include "mgeo/json_out.hpp"
#include "mgeo/orthogonality.hpp"
#include "mgeo/planar.hpp"
#include "mgeo/space_io.hpp"
#include "svg.hpp"

namespace mgeo {
namespace {

using nlohmann::json;

struct UsageError : Error {
  using Error::Error;
};

struct RunConfig {
  std::string command;
  std::string space;
  std::string x;
  std::string y;
  std::string vectors;
  bool standard = false;
  std::optional<double> tol;
  std::optional<double> arg_tol;
  std::optional<std::size_t> grid;
  double resolution = 0.25;
  std::uint64_t seed = 1;
  std::string json_path;
  std::string jsonl_path;
  std::string svg_path;
  std::vector<std::string> overlays;
  long budget = kDefaultBudget;
};

long budget_from_env() {
  const char* env = std::getenv("MGEO_BUDGET");
  if (!env || !*env) return kDefaultBudget;
  std::string_view s(env);
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 1) {
    throw UsageError("MGEO_BUDGET must be a positive integer");
  }
  return v;
}

Vector vector_arg(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string("missing ") + flag);
  try {
    return parse_vector(text);
  } catch (const Error& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

std::vector<Vector> vector_list(const std::string& text) {
  std::vector<Vector> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    out.push_back(vector_arg(text.substr(start, end - start), "--vectors"));
    start = end + 1;
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << content;
}

class Runner {
 public:
  Runner(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  int run() {
    SpaceDefinition def = parse_space_spec(cfg_.space);
    space_.emplace(def.space);
    file_basis_ = def.basis;
    const std::string& c = cfg_.command;
    if (c == "check-orth") return check_orth();
    if (c == "strong-check") return strong_check();
    if (c == "basis") return basis();
    if (c == "bounds") return bounds();
    if (c == "conjugate") return conjugate();
    if (c == "radon") return radon();
    if (c == "scan-pairs") return scan_pairs();
    if (c == "sphere") return sphere();
    if (c == "report") return report();
    throw UsageError("unknown command " + c);
  }

 private:
  const NormedSpace& space() const { return *space_; }

  Tolerances tolerances() const {
    Tolerances t;
    if (cfg_.tol) t.value = *cfg_.tol;
    if (cfg_.arg_tol) t.arg = *cfg_.arg_tol;
    return t;
  }

  Vector checked(const Vector& v) const {
    if (v.dim() != space().dim()) {
      throw UsageError("vector " + v.to_string() + " does not match the space dimension " +
                       std::to_string(space().dim()));
    }
    return v;
  }

  void require_planar() const {
    if (space().dim() != 2) throw UsageError(cfg_.command + " requires a planar space");
  }

  Basis basis_arg() const {
    if (!cfg_.vectors.empty()) {
      std::vector<Vector> v = vector_list(cfg_.vectors);
      for (const auto& e : v) checked(e);
      try {
        return Basis(space(), v);
      } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
      }
    }
    if (!cfg_.standard && file_basis_) {
      try {
        return Basis(space(), *file_basis_);
      } catch (const Error& e) {
        throw InvalidSpace(std::string("basis in space file: ") + e.what());
      }
    }
    return Basis::standard(space());
  }

  json header() const {
    return {{"command", cfg_.command}, {"space", describe_space(space())}, {"seed", cfg_.seed}};
  }

  int emit(json j) {
    std::string text = dump_json(j) + "\n";
    out_ << text;
    if (!cfg_.json_path.empty()) write_file(cfg_.json_path, text);
    return kExitOk;
  }

  static void merge(json& into, const json& from) {
    for (auto it = from.begin(); it != from.end(); ++it) into[it.key()] = it.value();
  }

  int check_orth() {
    Vector x = checked(vector_arg(cfg_.x, "--x"));
    Vector y = checked(vector_arg(cfg_.y, "--y"));
    if (x.is_zero() || y.is_zero()) throw UsageError("--x and --y must be nonzero");
    json j = header();
    j["x"] = as_json(x);
    j["y"] = as_json(y);
    merge(j, as_json(classify(space(), x, y, tolerances())));
    return emit(j);
  }

  int strong_check() {
    json j = header();
    if (!cfg_.x.empty() || !cfg_.y.empty()) {
      Vector x = checked(vector_arg(cfg_.x, "--x"));
      Vector y = checked(vector_arg(cfg_.y, "--y"));
      if (x.is_zero() || y.is_zero()) throw UsageError("--x and --y must be nonzero");
      OrthogonalityVerdict v = classify(space(), x, y, tolerances());
      j["x"] = as_json(x);
      j["y"] = as_json(y);
      j["strongly_birkhoff"] = v.relation == Relation::StronglyBirkhoff;
      merge(j, as_json(v));
      return emit(j);
    }
    Basis b = basis_arg();
    const Tolerances t = tolerances();
    DirectResult d =
        strongly_orthonormal_direct(space(), b, cfg_.tol.value_or(1e-7), t.arg, cfg_.seed, cfg_.budget);
    json vecs = json::array();
    for (const auto& v : b.vectors()) vecs.push_back(as_json(v));
    j["basis"] = vecs;
    merge(j, as_json(d));
    return emit(j);
  }

  int basis() {
    BasisOptions o;
    if (cfg_.tol) o.tol = *cfg_.tol;
    if (cfg_.arg_tol) o.arg_tol = *cfg_.arg_tol;
    o.seed = cfg_.seed;
    o.budget = cfg_.budget;
    BasisReport r = basis_report(space(), basis_arg(), o);
    json j = header();
    merge(j, as_json(r));
    j["space"] = describe_space(space());
    return emit(j);
  }

  int bounds() {
    json j = header();
    if (!cfg_.x.empty() || !cfg_.y.empty()) {
      Vector x = checked(vector_arg(cfg_.x, "--x"));
      Vector y = checked(vector_arg(cfg_.y, "--y"));
      try {
        j["segment"] = as_json(segment_min(space(), x, y));
        j["line"] = as_json(line_min(space(), x, y));
      } catch (const PreconditionFailed& e) {
        throw UsageError(e.what());
      }
      j["x"] = as_json(x);
      j["y"] = as_json(y);
      return emit(j);
    }
    require_planar();
    BoundsSurvey s = bounds_survey(space(), cfg_.grid.value_or(720));
    if (!cfg_.jsonl_path.empty()) {
      std::string lines;
      for (const auto& r : s.records) lines += dump_json(as_json(r), -1) + "\n";
      write_file(cfg_.jsonl_path, lines);
    }
    j["summary"] = as_json(s.summary);
    j["min_segment_record"] = as_json(s.records[s.summary.min_segment_record]);
    j["min_line_record"] = as_json(s.records[s.summary.min_line_record]);
    return emit(j);
  }

  int conjugate() {
    require_planar();
    ConjugateSearch s = find_conjugate_diameters(space(), cfg_.grid.value_or(720), cfg_.tol.value_or(1e-6));
    json j = header();
    merge(j, as_json(s));
    return emit(j);
  }

  int radon() {
    require_planar();
    RadonResult r = is_radon(space(), cfg_.grid.value_or(720), cfg_.tol.value_or(1e-6));
    json j = header();
    merge(j, as_json(r));
    return emit(j);
  }

  int scan_pairs() {
    require_planar();
    PairScanOptions o;
    if (cfg_.tol) o.value_tol = *cfg_.tol;
    if (cfg_.arg_tol) o.arg_tol = *cfg_.arg_tol;
    PairScanReport r;
    try {
      r = exhaustive_pair_scan(space(), cfg_.resolution, o);
    } catch (const PreconditionFailed& e) {
      throw UsageError(e.what());
    }
    json j = header();
    merge(j, as_json(r));
    return emit(j);
  }

  cli::SvgOverlays overlays(const std::vector<std::string>& names) const {
    cli::SvgOverlays o;
    for (const auto& n : names) {
      if (n == "conjugate") {
        for (const auto& p : find_conjugate_diameters(space(), cfg_.grid.value_or(720)).pairs) {
          o.diameters.emplace_back(p.x, p.y);
        }
      } else if (n == "flat") {
        ConvexityProbeOptions po;
        po.seed = cfg_.seed;
        ConvexityReport r = strict_convexity_probe(space(), po);
        if (r.flat_witness) o.flats.emplace_back(r.flat_witness->u, r.flat_witness->v);
      } else if (n == "companion") {
        for (int k = 0; k < 12; ++k) {
          Vector x = sphere_point_2d(space(), std::numbers::pi * k / 6.0);
          o.arrows.emplace_back(x, orthogonal_companion_2d(space(), x));
        }
      } else {
        throw UsageError("unknown overlay " + n + " (expected conjugate, flat or companion)");
      }
    }
    return o;
  }

  int sphere() {
    require_planar();
    std::string svg = cli::sphere_svg(space(), overlays(cfg_.overlays));
    if (cfg_.svg_path.empty()) {
      out_ << svg;
    } else {
      write_file(cfg_.svg_path, svg);
      json j = header();
      j["svg"] = cfg_.svg_path;
      j["overlays"] = cfg_.overlays;
      return emit(j);
    }
    return kExitOk;
  }

  int report() {
    json j = header();
    j["schema"] = "mgeo-report/1";
    NormValidationReport val = validate_norm(space(), 10000, 1e-10, cfg_.seed);
    j["validation"] = as_json(val);
    if (!val.passed) {
      emit(j);
      return kExitInvalidSpace;
    }
    ConvexityProbeOptions po;
    po.seed = cfg_.seed;
    if (cfg_.tol) po.tol = *cfg_.tol;
    ConvexityReport conv = strict_convexity_probe(space(), po);
    conv.modulus_samples = modulus_samples(space(), {0.25, 0.5, 1.0, 1.5, 2.0}, 2000, cfg_.seed);
    j["strictly_convex"] = to_string(conv.verdict);
    j["convexity"] = as_json(conv);
    if (space().dim() == 2) {
      BoundsSurvey s = bounds_survey(space(), cfg_.grid.value_or(720));
      j["bounds"] = {{"summary", as_json(s.summary)},
                     {"min_segment_record", as_json(s.records[s.summary.min_segment_record])},
                     {"min_line_record", as_json(s.records[s.summary.min_line_record])}};
      ConjugateSearch cs = find_conjugate_diameters(space(), cfg_.grid.value_or(720), cfg_.tol.value_or(1e-6));
      j["conjugate"] = as_json(cs);
      j["radon"] = as_json(is_radon(space(), cfg_.grid.value_or(720), cfg_.tol.value_or(1e-6)));
      if (!cfg_.svg_path.empty()) {
        cli::SvgOverlays o;
        for (const auto& p : cs.pairs) o.diameters.emplace_back(p.x, p.y);
        if (conv.flat_witness) o.flats.emplace_back(conv.flat_witness->u, conv.flat_witness->v);
        write_file(cfg_.svg_path, cli::sphere_svg(space(), o));
      }
    } else {
      j["bounds"] = {{"skipped", "the survey generates pairs in planar spaces only"}};
    }
    return emit(j);
  }

  const RunConfig& cfg_;
  std::ostream& out_;
  std::optional<NormedSpace> space_;
  std::optional<std::vector<Vector>> file_basis_;
};

CLI::App* add_command(CLI::App& app, RunConfig& cfg, const char* name, const char* help) {
  CLI::App* sub = app.add_subcommand(name, help);
  sub->add_option("--space", cfg.space, "builtin name (l2, linf, lp:3,dim=3, builtin:stadium, ...) or JSON file")
      ->required();
  sub->add_option("--tol", cfg.tol, "value tolerance");
  sub->add_option("--arg-tol", cfg.arg_tol, "argument tolerance");
  sub->add_option("--seed", cfg.seed, "random seed");
  sub->add_option("--json", cfg.json_path, "also write the JSON output to this path");
  sub->callback([&cfg, name] { cfg.command = name; });
  return sub;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Orthogonality and convexity checks in finite-dimensional normed spaces", "mgeo"};
  app.require_subcommand(1);

  auto* check = add_command(app, cfg, "check-orth", "classify the pair x, y");
  check->add_option("--x", cfg.x)->required();
  check->add_option("--y", cfg.y)->required();

  auto* strong = add_command(app, cfg, "strong-check", "strong orthogonality of a pair or a basis");
  strong->add_option("--x", cfg.x);
  strong->add_option("--y", cfg.y);
  strong->add_option("--vectors", cfg.vectors, "basis vectors \"a,b;c,d\"");
  strong->add_flag("--standard", cfg.standard, "use the standard basis");

  auto* basis = add_command(app, cfg, "basis", "max_Si, uniqueness and both strongly-orthonormal verdicts");
  basis->add_option("--vectors", cfg.vectors, "basis vectors \"a,b;c,d\"");
  basis->add_flag("--standard", cfg.standard, "use the standard basis");

  auto* bounds = add_command(app, cfg, "bounds", "segment and line minima (a pair or a planar survey)");
  bounds->add_option("--x", cfg.x);
  bounds->add_option("--y", cfg.y);
  bounds->add_option("--grid", cfg.grid, "survey points");
  bounds->add_option("--jsonl", cfg.jsonl_path, "write one record per line to this path");

  auto* conj = add_command(app, cfg, "conjugate", "conjugate diameters");
  conj->add_option("--grid", cfg.grid, "angle grid over [0, pi)");

  auto* radon = add_command(app, cfg, "radon", "Radon test");
  radon->add_option("--grid", cfg.grid, "angle grid over [0, pi)");

  auto* scan = add_command(app, cfg, "scan-pairs", "exhaustive diameter pair scan");
  scan->add_option("--resolution", cfg.resolution, "grid step in degrees (<= 1)");

  auto* sphere = add_command(app, cfg, "sphere", "SVG plot of the unit sphere");
  sphere->add_option("--svg", cfg.svg_path, "output path (stdout if omitted)");
  sphere->add_option("--overlay", cfg.overlays, "conjugate, flat or companion")->take_all();
  sphere->add_option("--grid", cfg.grid, "angle grid for the conjugate overlay");

  auto* report = add_command(app, cfg, "report", "full JSON report");
  report->add_option("--grid", cfg.grid, "survey and conjugate grid");
  report->add_option("--svg", cfg.svg_path, "also plot the sphere");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    cfg.budget = budget_from_env();
    Runner runner(cfg, out);
    return runner.run();
  } catch (const InvalidSpace& e) {
    err << "invalid space: " << e.what() << "\n";
    return kExitInvalidSpace;
  } catch (const MalformedBoundary& e) {
    err << "invalid space: " << e.what() << "\n";
    return kExitInvalidSpace;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace mgeo
