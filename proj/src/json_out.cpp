#include "mgeo/json_out.hpp"

#include <cmath>
#include <cstdio>

namespace mgeo {

using nlohmann::json;

namespace {

void write_string(std::string& out, const std::string& s) {
  out += json(s).dump();
}

void write_number(std::string& out, double v) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  out += s;
}

void write(std::string& out, const json& j, int indent, int depth) {
  auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  const char* sep = ",";
  const char* colon = indent < 0 ? ":" : ": ";
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += sep;
        first = false;
        newline(depth + 1);
        write_string(out, it.key());
        out += colon;
        write(out, it.value(), indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Short numeric arrays (vectors, intervals) stay on one line.
      bool flat = j.size() <= 8;
      for (const auto& e : j) flat = flat && e.is_number();
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat && indent >= 0 ? ", " : sep;
        first = false;
        if (!flat) newline(depth + 1);
        write(out, e, indent, depth + 1);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case json::value_t::number_float:
      write_number(out, j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

json opt_vector(const std::optional<Vector>& v) { return v ? as_json(*v) : json(nullptr); }

}  // namespace

std::string dump_json(const json& j, int indent) {
  std::string out;
  write(out, j, indent, 0);
  return out;
}

json as_json(const Vector& v) { return json(v.values()); }

json as_json(const Interval& i) { return json::array({i.lo, i.hi}); }

json as_json(const MinimizationResult& m) {
  return {{"argmin", m.argmin},
          {"min_value", m.min_value},
          {"flat_interval", as_json(m.flat_interval)},
          {"genuinely_flat", m.genuinely_flat},
          {"sublevel", as_json(m.sublevel)},
          {"core", as_json(m.core)},
          {"bracket", m.bracket},
          {"evaluations", m.evaluations},
          {"convexity_violation", m.convexity_violation},
          {"tolerances", {{"value", m.tolerances.value}, {"arg", m.tolerances.arg}, {"flat", m.tolerances.flat}}}};
}

json as_json(const OrthogonalityVerdict& v) {
  return {{"relation", to_string(v.relation)},
          {"norm_x", v.norm_x},
          {"witness_lambda", v.witness},
          {"witness_value", v.witness_value},
          {"minimization", as_json(v.min_result)}};
}

json as_json(const CompanionArc& a) {
  return {{"theta_x", a.theta_x}, {"phi", a.phi},     {"phi_lo", a.phi_lo},
          {"phi_hi", a.phi_hi},   {"y", as_json(a.y)}, {"unique", a.unique}};
}

json as_json(const NormValidationReport& r) {
  json axioms = json::array();
  for (const auto& a : r.axioms) {
    json w = json::array();
    for (const auto& v : a.witness) w.push_back(as_json(v));
    axioms.push_back({{"axiom", a.axiom}, {"passed", a.passed}, {"worst_violation", a.worst_violation}, {"witness", w}});
  }
  return {{"passed", r.passed}, {"samples", r.samples}, {"axioms", axioms}};
}

json as_json(const GaugeConvexityReport& r) {
  return {{"passed", r.passed},
          {"worst_cross", r.worst_cross},
          {"witness_angles", json(std::vector<double>(r.witness_angles.begin(), r.witness_angles.end()))},
          {"samples", r.samples}};
}

json as_json(const ConvexityReport& r) {
  json w = nullptr;
  if (r.flat_witness) {
    w = {{"u", as_json(r.flat_witness->u)},
         {"v", as_json(r.flat_witness->v)},
         {"midpoint_norm", r.flat_witness->midpoint_norm},
         {"separation", r.flat_witness->separation}};
  }
  json mod = json::array();
  for (const auto& [e, d] : r.modulus_samples) mod.push_back({{"epsilon", e}, {"delta", d}});
  return {{"verdict", to_string(r.verdict)},
          {"flat_witness", w},
          {"samples_used", r.samples_used},
          {"candidates_checked", r.candidates_checked},
          {"max_midpoint_norm", r.max_midpoint_norm},
          {"modulus", mod}};
}

json as_json(const SegmentMin& s) {
  return {{"t", s.t}, {"value", s.value}, {"envelope_ok", s.envelope_ok}};
}

json as_json(const LineMin& l) {
  return {{"lambda", l.lambda}, {"value", l.value}, {"envelope_ok", l.envelope_ok}};
}

json as_json(const BoundsRecord& r) {
  return {{"space", r.space},
          {"index", r.index},
          {"theta", r.theta},
          {"companion", to_string(r.role)},
          {"x", as_json(r.x)},
          {"y", as_json(r.y)},
          {"segment_min", r.segment.value},
          {"segment_t", r.segment.t},
          {"line_min", r.line.value},
          {"line_lambda", r.line.lambda},
          {"segment_floor_ok", r.segment_floor_ok},
          {"line_floor_ok", r.line_floor_ok},
          {"envelope_ok", r.segment.envelope_ok && r.line.envelope_ok}};
}

json as_json(const BoundsSummary& s) {
  return {{"records", s.records},
          {"min_segment", s.min_segment},
          {"min_segment_record", s.min_segment_record},
          {"min_line", s.min_line},
          {"min_line_record", s.min_line_record},
          {"segment_floor_violations", s.segment_floor_violations},
          {"line_floor_violations", s.line_floor_violations},
          {"envelope_violations", s.envelope_violations}};
}

json as_json(const MaxCoefficient& m) {
  return {{"index", m.index},
          {"max_si", m.value},
          {"maximizer", as_json(m.maximizer)},
          {"converged", m.converged},
          {"evaluations", m.evaluations}};
}

json as_json(const DirectResult& d) {
  json per = json::array();
  for (const auto& r : d.per_index) {
    per.push_back({{"index", r.index},
                   {"min_value", r.min_value},
                   {"min_lambda", json(r.min_lambda)},
                   {"flat", r.flat},
                   {"flat_lambda", r.flat ? json(r.flat_lambda) : json(nullptr)},
                   {"strongly_orthogonal", r.strongly_orthogonal}});
  }
  return {{"verdict", d.verdict},
          {"worst_index", d.worst_index ? json(*d.worst_index) : json(nullptr)},
          {"per_index", per}};
}

json as_json(const BasisReport& r) {
  json basis = json::array();
  for (const auto& v : r.basis) basis.push_back(as_json(v));
  json per = json::array();
  for (const auto& p : r.per_index) {
    per.push_back({{"index", p.index},
                   {"max_si", p.max_si},
                   {"maximizer", as_json(p.maximizer)},
                   {"converged", p.converged},
                   {"unique", p.unique},
                   {"uniqueness_witness", opt_vector(p.uniqueness_witness)}});
  }
  return {{"space", r.space},
          {"basis", basis},
          {"per_index", per},
          {"verdict_direct", r.verdict_direct},
          {"verdict_criterion", r.verdict_criterion},
          {"agreement", r.agreement},
          {"hypothesis_verified", r.hypothesis_verified},
          {"direct", as_json(r.direct)}};
}

json as_json(const DiameterPair& p) {
  return {{"theta_x", p.theta_x},         {"theta_y", p.theta_y},         {"x", as_json(p.x)},
          {"y", as_json(p.y)},            {"residual_xy", p.residual_xy}, {"residual_yx", p.residual_yx},
          {"strength", to_string(p.strength)}, {"non_smooth", p.non_smooth}};
}

json as_json(const ConjugateSearch& s) {
  json pairs = json::array();
  for (const auto& p : s.pairs) pairs.push_back(as_json(p));
  return {{"grid_size", s.grid_size},
          {"all_conjugate", s.all_conjugate},
          {"non_smooth_caveat", s.non_smooth_caveat},
          {"pairs", pairs}};
}

json as_json(const RadonResult& r) {
  return {{"radon", r.radon},
          {"max_residual", r.max_residual},
          {"witness_theta", r.witness_theta},
          {"witness_x", as_json(r.witness_x)},
          {"witness_y", as_json(r.witness_y)},
          {"non_smooth_caveat", r.non_smooth_caveat},
          {"grid_size", r.grid_size}};
}

json as_json(const PairScanReport& r) {
  json pairs = json::array();
  for (const auto& p : r.conjugate_pairs) pairs.push_back(as_json(p));
  return {{"resolution_deg", r.resolution_deg},
          {"grid_size", r.grid_size},
          {"near_hits", r.near_hits},
          {"refined", r.refined},
          {"conjugate_pairs_found", r.conjugate_pairs.size()},
          {"strongly_conjugate_pairs_found", r.strongly_conjugate},
          {"pairs", pairs}};
}

json as_json(const GeneralizedConjugateResult& r) {
  json fp = nullptr;
  if (r.failing_pair) fp = json::array({r.failing_pair->first, r.failing_pair->second});
  return {{"verdict", r.verdict}, {"failing_pair", fp}};
}

json as_json(const CrosscheckReport& r) {
  json dis = json::array();
  for (const auto& p : r.disagreements) dis.push_back(as_json(p));
  return {{"skipped", r.skipped},
          {"hypothesis_verified", r.hypothesis_verified},
          {"checked", r.checked},
          {"disagreements", dis}};
}

json describe_space(const NormedSpace& space) {
  json j = {{"name", space.name()}, {"dim", space.dim()}};
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, PNorm>) {
          j["type"] = "lp";
          j["p"] = std::isinf(f.p) ? json("inf") : json(f.p);
        } else if constexpr (std::is_same_v<T, Polyhedral>) {
          j["type"] = "polyhedral";
          j["functionals"] = f.functionals.size();
        } else {
          j["type"] = "gauge2d";
          j["pieces"] = f.table->boundary().pieces.size();
          j["symmetric"] = f.table->boundary().symmetric;
        }
      },
      space.form());
  return j;
}

}  // namespace mgeo
