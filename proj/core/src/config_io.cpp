#include "hypcert/config_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hypcert/errors.hpp"
#include "json_util.hpp"

namespace hypcert {

using detail::Field;
using detail::Json;

namespace {

constexpr const char* kConfigFormat = "hypcert-config";

void check_keys(const Field& f, std::initializer_list<const char*> allowed) {
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : f.object().items()) {
    if (!ok.count(key)) f.fail("unknown key '" + key + "'");
  }
}

void check_header(const Field& root, const char* format) {
  if (root.has("format") && root.at("format").string() != format) {
    root.at("format").fail(std::string("expected \"") + format + "\"");
  }
  if (root.has("version") && root.at("version").integer() != 1) root.at("version").fail("unsupported version");
}

std::size_t index_of(const Field& f) {
  const long v = f.integer();
  if (v < 0) f.fail("component indices are nonnegative");
  return static_cast<std::size_t>(v);
}

Multiplicity multiplicity_of(const Field& f) {
  if (f.value().is_string()) {
    try {
      return parse_multiplicity(f.string());
    } catch (const Error& e) {
      f.fail(e.what());
    }
  }
  const long v = f.integer();
  if (v < 1) f.fail("multiplicities are positive integers or \"inf\"");
  return Multiplicity(v);
}

Json multiplicity_json(const Multiplicity& m) {
  if (m.is_infinite()) return "inf";
  return Json(m.value().get_si());
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ConfigFile parse_config(std::string_view text, std::string_view source) {
  const Json doc = detail::parse_json(text, source);
  const Field root(doc, std::string(source));
  root.object();
  check_keys(root, {"format", "version", "components", "hyperplane", "points", "meeting_points", "weights",
                    "multiplicities", "allow_single_component", "metadata"});
  check_header(root, kConfigFormat);

  ConfigFile out;
  const Field comps = root.at("components");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const Field c = comps.at(i);
    check_keys(c, {"degree", "paired", "pairing_degree"});
    Component comp;
    const long degree = c.at("degree").integer();
    if (degree < 1 || degree > 1000) c.at("degree").fail("degree must lie in [1, 1000]");
    comp.degree = static_cast<int>(degree);
    if (c.has("paired")) comp.paired = c.at("paired").boolean();
    if (c.has("pairing_degree")) {
      const long b = c.at("pairing_degree").integer();
      if (b < 1 || b > degree) c.at("pairing_degree").fail("pairing degree must lie in [1, degree]");
      comp.pairing_degree = static_cast<int>(b);
    }
    out.spec.components.push_back(comp);
  }
  if (root.has("hyperplane")) out.spec.hyperplane = root.at("hyperplane").boolean();
  const std::size_t total = out.spec.components.size() + (out.spec.hyperplane ? 1 : 0);
  if (total == 0) comps.fail("at least one component is required");

  if (root.has("points")) {
    const Field pts = root.at("points");
    std::vector<BlownPoint> points;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const Field p = pts.at(k);
      check_keys(p, {"id", "on"});
      BlownPoint bp;
      bp.id = p.at("id").string();
      if (p.has("on")) {
        const Field on = p.at("on");
        for (std::size_t j = 0; j < on.size(); ++j) {
          const std::size_t idx = index_of(on.at(j));
          if (idx >= total) on.at(j).fail("no component with index " + std::to_string(idx));
          bp.incident.push_back(idx);
        }
      }
      points.push_back(std::move(bp));
    }
    out.spec.points = std::move(points);
  }
  if (root.has("meeting_points")) {
    const Field mps = root.at("meeting_points");
    for (std::size_t k = 0; k < mps.size(); ++k) {
      const Field mp = mps.at(k);
      std::vector<std::size_t> idx;
      for (std::size_t j = 0; j < mp.size(); ++j) {
        idx.push_back(index_of(mp.at(j)));
        if (idx.back() >= total) mp.at(j).fail("no component with index " + std::to_string(idx.back()));
      }
      out.spec.meeting_points.push_back(std::move(idx));
    }
  }
  if (root.has("weights")) {
    const Field w = root.at("weights");
    if (w.size() != total) w.fail("expected " + std::to_string(total) + " weights (hyperplane last)");
    std::vector<Rational> weights;
    for (std::size_t i = 0; i < w.size(); ++i) {
      weights.push_back(w.at(i).rational());
      if (weights.back() <= 0) w.at(i).fail("weights must be positive");
    }
    out.weights = std::move(weights);
  }
  if (root.has("multiplicities")) {
    const Field m = root.at("multiplicities");
    if (m.size() != total) m.fail("expected " + std::to_string(total) + " multiplicities (hyperplane last)");
    std::vector<Multiplicity> mult;
    for (std::size_t i = 0; i < m.size(); ++i) mult.push_back(multiplicity_of(m.at(i)));
    out.multiplicities = std::move(mult);
  }
  if (root.has("allow_single_component")) {
    out.allow_single_component = root.at("allow_single_component").boolean();
  }
  if (root.has("metadata")) out.metadata = root.at("metadata").value().dump();
  return out;
}

ConfigFile load_config(const std::filesystem::path& path) {
  return parse_config(read_text_file(path), path.string());
}

std::string serialize_config(const ConfigFile& config) {
  Json doc;
  doc["format"] = kConfigFormat;
  doc["version"] = 1;
  Json comps = Json::array();
  for (const auto& c : config.spec.components) {
    Json j;
    j["degree"] = c.degree;
    j["paired"] = c.paired;
    if (c.pairing_degree != 0) j["pairing_degree"] = c.pairing_degree;
    comps.push_back(j);
  }
  doc["components"] = comps;
  doc["hyperplane"] = config.spec.hyperplane;
  if (config.spec.points) {
    Json pts = Json::array();
    for (const auto& p : *config.spec.points) {
      Json j;
      j["id"] = p.id;
      j["on"] = p.incident;
      pts.push_back(j);
    }
    doc["points"] = pts;
  }
  if (!config.spec.meeting_points.empty()) doc["meeting_points"] = config.spec.meeting_points;
  if (config.weights) {
    Json w = Json::array();
    for (const auto& q : *config.weights) w.push_back(detail::rational_json(q));
    doc["weights"] = w;
  }
  if (config.multiplicities) {
    Json m = Json::array();
    for (const auto& x : *config.multiplicities) m.push_back(multiplicity_json(x));
    doc["multiplicities"] = m;
  }
  doc["allow_single_component"] = config.allow_single_component;
  if (config.metadata != "null") doc["metadata"] = Json::parse(config.metadata);
  return doc.dump(2) + "\n";
}

ProfileFile parse_profile(std::string_view text, std::string_view source) {
  const Json doc = detail::parse_json(text, source);
  const Field root(doc, std::string(source));
  check_keys(root, {"format", "version", "multiplicities", "points"});
  check_header(root, "hypcert-profile");
  ProfileFile out;
  const Field m = root.at("multiplicities");
  for (const auto& [key, value] : m.object().items()) {
    const Field f(value, std::string(source), m.path() + "/" + key);
    std::size_t idx = 0;
    try {
      idx = std::stoul(key);
    } catch (const std::exception&) {
      f.fail("keys are component indices");
    }
    out.delta.set(idx, multiplicity_of(f));
  }
  const Field pts = root.at("points");
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const Field p = pts.at(k);
    check_keys(p, {"id", "t"});
    ProfilePoint pp;
    pp.id = p.at("id").string();
    const Field t = p.at("t");
    for (const auto& [key, value] : t.object().items()) {
      const Field f(value, std::string(source), t.path() + "/" + key);
      std::size_t idx = 0;
      try {
        idx = std::stoul(key);
      } catch (const std::exception&) {
        f.fail("keys are component indices");
      }
      const long v = f.integer();
      if (v < 1) f.fail("multiplicities along the curve are positive");
      pp.t[idx] = v;
    }
    out.profile.points.push_back(std::move(pp));
  }
  try {
    out.profile.validate(out.delta);
  } catch (const DomainError& e) {
    pts.fail(e.what());
  }
  return out;
}

std::string serialize_profile(const ProfileFile& profile) {
  Json doc;
  doc["format"] = "hypcert-profile";
  doc["version"] = 1;
  Json m = Json::object();
  for (const auto& [j, mult] : profile.delta.support()) m[std::to_string(j)] = multiplicity_json(mult);
  doc["multiplicities"] = m;
  Json pts = Json::array();
  for (const auto& p : profile.profile.points) {
    Json t = Json::object();
    for (const auto& [j, v] : p.t) t[std::to_string(j)] = v.get_si();
    pts.push_back(Json{{"id", p.id}, {"t", t}});
  }
  doc["points"] = pts;
  return doc.dump(2) + "\n";
}

BoundaryRealization parse_realization(std::string_view text, std::string_view source) {
  const Json doc = detail::parse_json(text, source);
  const Field root(doc, std::string(source));
  check_keys(root, {"format", "version", "components", "points"});
  check_header(root, "hypcert-realization");
  BoundaryRealization out;
  const Field comps = root.at("components");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    try {
      out.components.push_back(parse_form(comps.at(i).string(), 3));
    } catch (const ConfigError& e) {
      comps.at(i).fail(e.what());
    }
  }
  if (root.has("points")) {
    const Field pts = root.at("points");
    for (const auto& [id, value] : pts.object().items()) {
      const Field q(value, std::string(source), pts.path() + "/" + id);
      if (q.size() != 3) q.fail("expected three homogeneous coordinates");
      std::vector<Rational> coords;
      for (std::size_t k = 0; k < 3; ++k) coords.push_back(q.at(k).rational());
      out.points[id] = std::move(coords);
    }
  }
  return out;
}

BoundaryRealization load_realization(const std::filesystem::path& path) {
  return parse_realization(read_text_file(path), path.string());
}

std::string serialize_realization(const BoundaryRealization& r) {
  Json doc;
  doc["format"] = "hypcert-realization";
  doc["version"] = 1;
  Json comps = Json::array();
  for (const auto& f : r.components) comps.push_back(to_string(f));
  doc["components"] = comps;
  Json pts = Json::object();
  for (const auto& [id, q] : r.points) {
    Json c = Json::array();
    for (const auto& x : q) c.push_back(detail::rational_json(x));
    pts[id] = c;
  }
  doc["points"] = pts;
  return doc.dump(2) + "\n";
}

}  // namespace hypcert
