#include "mgeo/space_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "mgeo/error.hpp"

namespace mgeo {
namespace {

using nlohmann::json;

void allow_fields(const json& obj, std::initializer_list<const char*> fields, const std::string& where) {
  if (!obj.is_object()) throw InvalidSpace(where + ": expected an object");
  std::set<std::string> ok(fields.begin(), fields.end());
  for (const auto& [key, _] : obj.items()) {
    if (!ok.count(key)) throw InvalidSpace(where + ": unknown field \"" + key + "\"");
  }
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InvalidSpace(where + ": missing field \"" + key + "\"");
  return *it;
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw InvalidSpace(where + ": expected a number");
  return v.get<double>();
}

std::vector<double> numbers(const json& v, const std::string& where, std::size_t expect = 0) {
  if (!v.is_array()) throw InvalidSpace(where + ": expected an array of numbers");
  std::vector<double> out;
  for (const auto& e : v) out.push_back(number(e, where));
  if (expect && out.size() != expect) {
    throw InvalidSpace(where + ": expected " + std::to_string(expect) + " numbers");
  }
  return out;
}

std::vector<Vector> vectors(const json& v, const std::string& where) {
  if (!v.is_array()) throw InvalidSpace(where + ": expected an array of vectors");
  std::vector<Vector> out;
  try {
    for (const auto& e : v) out.emplace_back(numbers(e, where));
  } catch (const InvalidArgument& e) {
    throw InvalidSpace(where + ": " + e.what());
  }
  return out;
}

Point2 point(const json& v, const std::string& where) {
  auto c = numbers(v, where, 2);
  return {c[0], c[1]};
}

GaugePiece parse_piece(const json& j, std::size_t index) {
  const std::string where = "pieces[" + std::to_string(index) + "]";
  if (!j.is_object()) throw InvalidSpace(where + ": expected an object");
  const json& kind = field(j, "kind", where);
  if (!kind.is_string()) throw InvalidSpace(where + ": \"kind\" must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "implicit") {
    allow_fields(j, {"kind", "equation", "params", "x_range", "branch"}, where);
    ImplicitArc a;
    const json& eq = field(j, "equation", where);
    if (!eq.is_string()) throw InvalidSpace(where + ": \"equation\" must be a string");
    a.equation = eq.get<std::string>();
    a.params = numbers(field(j, "params", where), where);
    auto r = numbers(field(j, "x_range", where), where, 2);
    a.x_begin = r[0];
    a.x_end = r[1];
    if (j.contains("branch")) {
      const json& b = j["branch"];
      if (!b.is_number_integer() || (b.get<int>() != 1 && b.get<int>() != -1)) {
        throw InvalidSpace(where + ": \"branch\" must be 1 or -1");
      }
      a.branch = b.get<int>();
    }
    return a;
  }
  if (k == "circular") {
    allow_fields(j, {"kind", "radius", "angle_range"}, where);
    CircularArc c;
    c.radius = number(field(j, "radius", where), where);
    auto r = numbers(field(j, "angle_range", where), where, 2);
    c.angle_begin = r[0];
    c.angle_end = r[1];
    return c;
  }
  if (k == "segment") {
    allow_fields(j, {"kind", "from", "to"}, where);
    return SegmentArc{point(field(j, "from", where), where), point(field(j, "to", where), where)};
  }
  if (k == "flat") {
    allow_fields(j, {"kind", "y", "x_range"}, where);
    FlatLine f;
    f.y_level = number(field(j, "y", where), where);
    auto r = numbers(field(j, "x_range", where), where, 2);
    f.x_begin = r[0];
    f.x_end = r[1];
    return f;
  }
  throw InvalidSpace(where + ": unknown piece kind \"" + k + "\"");
}

double parse_p(const json& v) {
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return kInf;
    throw InvalidSpace("lp: \"p\" must be a number or \"inf\"");
  }
  return number(v, "lp");
}

std::size_t parse_dim(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long>() < 1) throw InvalidSpace(where + ": \"dim\" must be a positive integer");
  return v.get<std::size_t>();
}

}  // namespace

Gauge2DBoundary parse_boundary(const json& pieces, bool symmetric) {
  if (!pieces.is_array() || pieces.empty()) throw InvalidSpace("gauge2d: \"pieces\" must be a non-empty array");
  Gauge2DBoundary b;
  b.symmetric = symmetric;
  for (std::size_t i = 0; i < pieces.size(); ++i) b.pieces.push_back(parse_piece(pieces[i], i));
  return b;
}

SpaceDefinition load_space_json(const json& doc) {
  if (!doc.is_object()) throw InvalidSpace("space definition must be a JSON object");
  const json& type_field = field(doc, "type", "space");
  if (!type_field.is_string()) throw InvalidSpace("space: \"type\" must be a string");
  const std::string type = type_field.get<std::string>();

  std::optional<NormedSpace> space;
  if (type == "lp") {
    allow_fields(doc, {"type", "p", "dim", "name", "basis"}, "lp");
    std::size_t dim = doc.contains("dim") ? parse_dim(doc["dim"], "lp") : 2;
    space = NormedSpace::lp(parse_p(field(doc, "p", "lp")), dim);
  } else if (type == "polyhedral") {
    allow_fields(doc, {"type", "functionals", "name", "basis"}, "polyhedral");
    space = NormedSpace::polyhedral(vectors(field(doc, "functionals", "polyhedral"), "polyhedral"));
  } else if (type == "gauge2d") {
    allow_fields(doc, {"type", "pieces", "symmetric", "name", "basis"}, "gauge2d");
    bool symmetric = true;
    if (doc.contains("symmetric")) {
      if (!doc["symmetric"].is_boolean()) throw InvalidSpace("gauge2d: \"symmetric\" must be a boolean");
      symmetric = doc["symmetric"].get<bool>();
    }
    Gauge2DBoundary b = parse_boundary(field(doc, "pieces", "gauge2d"), symmetric);
    GaugeConvexityReport conv = validate_gauge_convexity(b, 1e-3);
    if (!conv.passed) {
      std::ostringstream msg;
      msg << "gauge2d: boundary is not convex (turn " << conv.worst_cross << " near angle " << conv.witness_angles[1]
          << ")";
      throw InvalidSpace(msg.str());
    }
    space = NormedSpace::gauge(std::move(b));
  } else if (type == "builtin") {
    allow_fields(doc, {"type", "name", "dim", "basis"}, "builtin");
    const json& n = field(doc, "name", "builtin");
    if (!n.is_string()) throw InvalidSpace("builtin: \"name\" must be a string");
    std::size_t dim = doc.contains("dim") ? parse_dim(doc["dim"], "builtin") : 2;
    try {
      space = builtin_space(n.get<std::string>(), dim);
    } catch (const InvalidArgument& e) {
      throw InvalidSpace(e.what());
    }
  } else {
    throw InvalidSpace("unknown space type \"" + type + "\"");
  }

  if (doc.contains("name") && type != "builtin") {
    if (!doc["name"].is_string()) throw InvalidSpace("space: \"name\" must be a string");
    space = space->with_name(doc["name"].get<std::string>());
  }
  SpaceDefinition def{*space, std::nullopt};
  if (doc.contains("basis")) {
    def.basis = vectors(doc["basis"], "basis");
    if (def.basis->size() != space->dim()) throw InvalidSpace("space: \"basis\" needs one vector per dimension");
    for (const Vector& v : *def.basis) {
      if (v.dim() != space->dim()) throw InvalidSpace("space: basis vector dimension does not match the space");
    }
  }
  return def;
}

SpaceDefinition load_space_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidSpace("cannot open space file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidSpace("space file " + path.string() + ": " + e.what());
  }
  return load_space_json(doc);
}

SpaceDefinition parse_space_spec(std::string_view spec) {
  if (spec.ends_with(".json") || std::filesystem::is_regular_file(std::filesystem::path(spec))) {
    return load_space_file(std::filesystem::path(spec));
  }
  std::string_view s = spec;
  if (s.starts_with("builtin:")) s.remove_prefix(8);
  std::size_t dim = 2;
  if (auto comma = s.find(",dim="); comma != std::string_view::npos) {
    std::string_view d = s.substr(comma + 5);
    auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), dim);
    if (ec != std::errc() || ptr != d.data() + d.size() || dim < 1) {
      throw InvalidSpace("bad dimension in space spec \"" + std::string(spec) + "\"");
    }
    s = s.substr(0, comma);
  }
  try {
    return {builtin_space(s, dim), std::nullopt};
  } catch (const InvalidArgument& e) {
    throw InvalidSpace(e.what());
  }
}

}  // namespace mgeo
