#include "wallcross/xray_io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace wallcross {

using nlohmann::json;

namespace {

json rat_list(const RatVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

json poly_list(const IntPolynomial& p) {
  json out = json::array();
  for (auto c : p.coefficients()) out.push_back(c);
  return out;
}

const json& field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw LoadError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw LoadError(where + ": missing field \"" + key + "\"");
  return *it;
}

std::int64_t as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw LoadError(where + ": expected an integer");
  return j.get<std::int64_t>();
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw LoadError(where + ": expected a string");
  return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw LoadError(where + ": expected an array");
  return j;
}

RatVector read_rat_vector(const json& j, const std::string& where) {
  RatVector out;
  const json& arr = as_array(j, where);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const std::string text = arr[i].is_number_integer() ? std::to_string(arr[i].get<std::int64_t>())
                                                        : as_string(arr[i], at);
    try {
      out.push_back(parse_rational(text));
    } catch (const std::invalid_argument& e) {
      throw LoadError(at + ": invalid rational \"" + text + "\" (" + e.what() + ")");
    }
  }
  return out;
}

std::string line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

std::string xray_to_json(const WeightedXray& x) {
  json strata = json::array();
  json vdata = json::object();
  for (const auto& s : x.strata()) {
    json verts = json::array();
    for (const auto& v : s.wall.vertices()) verts.push_back(rat_list(v));
    std::vector<StratumId> parents;
    for (auto p : s.parents) parents.push_back(x.stratum(p).id);
    std::sort(parents.begin(), parents.end());
    strata.push_back({{"id", s.id}, {"vertices", verts}, {"parents", parents}});
    if (s.vertex_data) {
      json weights = json::array();
      for (const auto& w : s.vertex_data->weights) weights.push_back(rat_list(w));
      vdata[s.id] = {{"weights", weights},
                     {"signature", s.vertex_data->seed_signature},
                     {"poincare", poly_list(s.vertex_data->seed_poincare)},
                     {"euler", s.vertex_data->seed_euler}};
    }
  }
  json doc = {{"torus_rank", x.torus_rank()}, {"half_dim", x.half_dim()}, {"strata", strata},
              {"vertex_data", vdata}};
  return doc.dump(2) + "\n";
}

WeightedXray xray_from_json(const std::string& text, bool unchecked) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw LoadError("JSON syntax error at " + line_of(text, e.byte > 0 ? e.byte - 1 : 0) + ": " + e.what());
  }
  const int d = static_cast<int>(as_int(field(doc, "torus_rank", "document"), "torus_rank"));
  const int n = static_cast<int>(as_int(field(doc, "half_dim", "document"), "half_dim"));
  const json& strata = as_array(field(doc, "strata", "document"), "strata");
  const json& vdata = field(doc, "vertex_data", "document");
  if (!vdata.is_object()) throw LoadError("vertex_data: expected an object");

  std::vector<StratumSpec> specs;
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const std::string where = "strata[" + std::to_string(i) + "]";
    const json& s = strata[i];
    StratumSpec spec;
    spec.id = as_string(field(s, "id", where), where + ".id");
    const json& verts = as_array(field(s, "vertices", where), where + ".vertices");
    for (std::size_t k = 0; k < verts.size(); ++k) {
      spec.points.push_back(read_rat_vector(verts[k], where + ".vertices[" + std::to_string(k) + "]"));
    }
    const json& parents = as_array(field(s, "parents", where), where + ".parents");
    for (std::size_t k = 0; k < parents.size(); ++k) {
      spec.parents.push_back(as_string(parents[k], where + ".parents[" + std::to_string(k) + "]"));
    }
    if (auto it = vdata.find(spec.id); it != vdata.end()) {
      const std::string vw = "vertex_data[\"" + spec.id + "\"]";
      VertexData v;
      const json& ws = as_array(field(*it, "weights", vw), vw + ".weights");
      for (std::size_t k = 0; k < ws.size(); ++k) {
        v.weights.push_back(read_rat_vector(ws[k], vw + ".weights[" + std::to_string(k) + "]"));
      }
      v.seed_signature = as_int(field(*it, "signature", vw), vw + ".signature");
      std::vector<std::int64_t> coeffs;
      const json& pc = as_array(field(*it, "poincare", vw), vw + ".poincare");
      for (std::size_t k = 0; k < pc.size(); ++k) {
        coeffs.push_back(as_int(pc[k], vw + ".poincare[" + std::to_string(k) + "]"));
      }
      v.seed_poincare = IntPolynomial(std::move(coeffs));
      v.seed_euler = as_int(field(*it, "euler", vw), vw + ".euler");
      spec.vertex_data = std::move(v);
    }
    specs.push_back(std::move(spec));
  }
  for (const auto& [id, _] : vdata.items()) {
    if (std::none_of(specs.begin(), specs.end(), [&](const StratumSpec& s) { return s.id == id; })) {
      throw LoadError("vertex_data[\"" + id + "\"]: no stratum with this id");
    }
  }

  std::optional<WeightedXray> x;
  try {
    x.emplace(d, n, std::move(specs));
  } catch (const XrayError& e) {
    throw LoadError(e.what());
  }
  if (!unchecked) {
    auto violations = validate_all(*x);
    if (!violations.empty()) {
      throw LoadError("X-ray fails validation with " + std::to_string(violations.size()) + " violation(s)",
                      std::move(violations));
    }
  }
  return std::move(*x);
}

void save_xray(const WeightedXray& x, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << xray_to_json(x);
}

WeightedXray load_xray(const std::string& path, bool unchecked) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return xray_from_json(buf.str(), unchecked);
}

std::string tables_to_json(const WeightedXray& x, const std::vector<const InvariantTable*>& tables,
                           const std::vector<std::pair<std::string, std::string>>& checks) {
  json rows = json::array();
  if (!tables.empty()) {
    for (const auto& r : tables.front()->rows()) {
      json row = {{"stratum", r.stratum}, {"subchamber", r.subchamber}, {"rep", rat_list(r.rep)}};
      for (const auto* t : tables) {
        const IntPolynomial& v = t->value(r.stratum, r.subchamber);
        if (t->ring() == Ring::Integer) {
          row[t->name()] = v.as_integer();
        } else {
          row[t->name()] = poly_list(v);
        }
      }
      rows.push_back(std::move(row));
    }
  }
  json summary = json::object();
  for (const auto& [name, status] : checks) summary[name] = status;
  json doc = {{"fingerprint", x.fingerprint()}, {"rows", rows}, {"checks", summary}};
  return doc.dump(2) + "\n";
}

std::string circle_data_to_json(const CircleFixedData& data) {
  json out = json::array();
  for (const auto& c : data.components) {
    out.push_back({{"level", to_string(c.level)},
                   {"weights", c.weights},
                   {"signature", c.seed_signature},
                   {"poincare", poly_list(c.seed_poincare)}});
  }
  return out.dump(2) + "\n";
}

}  // namespace wallcross
