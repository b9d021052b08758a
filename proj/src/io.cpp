#include "toric/io.hpp"

#include <set>

#include "toric/error.hpp"

namespace toric::io {

namespace {

void require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) fail("SchemaError", path + ": expected an object");
}

void require_keys(const Json& j, const std::set<std::string>& keys, const std::string& path) {
  require_object(j, path);
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!keys.count(it.key()))
      fail("SchemaError", path + ": unknown field \"" + it.key() + "\"");
  for (const std::string& k : keys)
    if (!j.contains(k)) fail("SchemaError", path + ": missing field \"" + k + "\"");
}

long get_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer())
    fail("SchemaError", path + ": expected an integer (floats are banned)");
  return static_cast<long>(j.get<long long>());
}

Rat get_rat(const Json& j, const std::string& path) {
  if (!j.is_string())
    fail("SchemaError",
         path + ": rationals must be strings like \"3\" or \"1/2\" (floats are banned)");
  Rat q;
  if (!parse_rat(j.get<std::string>(), q))
    fail("SchemaError", path + ": cannot parse rational \"" + j.get<std::string>() + "\"");
  return q;
}

const Json& get_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail("SchemaError", path + ": expected an array");
  return j;
}

IntVec int_vector(const Json& j, const std::string& path) {
  get_array(j, path);
  IntVec v;
  for (size_t i = 0; i < j.size(); ++i)
    v.push_back(Int(get_int(j[i], path + "[" + std::to_string(i) + "]")));
  return v;
}

Json int_vector_json(const IntVec& v) {
  Json a = Json::array();
  for (const Int& x : v) {
    if (!x.fits_slong_p()) fail("SchemaError", "integer too large for the JSON encoding");
    a.push_back(static_cast<long long>(x.get_si()));
  }
  return a;
}

Json rat_vector_json(const RatVec& v) {
  Json a = Json::array();
  for (const Rat& q : v) a.push_back(rat_to_string(q));
  return a;
}

RatVec rat_vector(const Json& j, const std::string& path) {
  get_array(j, path);
  RatVec v;
  for (size_t i = 0; i < j.size(); ++i)
    v.push_back(get_rat(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

IntMat int_matrix(const Json& j, const std::string& path) {
  get_array(j, path);
  std::vector<IntVec> rows;
  for (size_t i = 0; i < j.size(); ++i) {
    rows.push_back(int_vector(j[i], path + "[" + std::to_string(i) + "]"));
    if (rows.back().size() != rows[0].size())
      fail("SchemaError", path + ": ragged matrix rows");
  }
  if (rows.empty()) fail("SchemaError", path + ": empty matrix");
  return mat_from_rows(rows);
}

Json int_matrix_json(const IntMat& m) {
  Json a = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    IntVec row(m.cols);
    for (int j = 0; j < m.cols; ++j) row[j] = m.at(i, j);
    a.push_back(int_vector_json(row));
  }
  return a;
}

}  // namespace

Json fan_payload(const Fan& fan) {
  Json j;
  j["rank"] = fan.rank;
  Json rays = Json::array();
  for (const IntVec& r : fan.rays) rays.push_back(int_vector_json(r));
  j["rays"] = rays;
  Json cones = Json::array();
  for (const Cone& c : fan.max_cones) {
    Json cone = Json::array();
    for (int r : c.rays) cone.push_back(r);
    cones.push_back(cone);
  }
  j["max_cones"] = cones;
  return j;
}

Fan fan_from_payload(const Json& j) {
  require_keys(j, {"rank", "rays", "max_cones"}, "fan");
  int rank = static_cast<int>(get_int(j["rank"], "fan.rank"));
  std::vector<IntVec> rays;
  for (size_t i = 0; i < get_array(j["rays"], "fan.rays").size(); ++i)
    rays.push_back(int_vector(j["rays"][i], "fan.rays[" + std::to_string(i) + "]"));
  std::vector<std::vector<int>> cones;
  for (size_t i = 0; i < get_array(j["max_cones"], "fan.max_cones").size(); ++i) {
    std::vector<int> c;
    for (const Int& x :
         int_vector(j["max_cones"][i], "fan.max_cones[" + std::to_string(i) + "]"))
      c.push_back(static_cast<int>(x.get_si()));
    cones.push_back(std::move(c));
  }
  return validate_fan(rank, std::move(rays), std::move(cones));
}

Json pair_payload(const ToricPair& pair) {
  Json j;
  j["fan"] = fan_payload(pair.fan);
  j["coeffs"] = rat_vector_json(pair.coeffs);
  return j;
}

ToricPair pair_from_payload(const Json& j) {
  require_keys(j, {"fan", "coeffs"}, "pair");
  return make_toric_pair(fan_from_payload(j["fan"]), rat_vector(j["coeffs"], "pair.coeffs"));
}

Json numerical_pair_payload(const NumericalPair& pair) {
  Json j;
  j["fan"] = fan_payload(pair.fan);
  Json comps = Json::array();
  for (const NumericalComponent& c : pair.components) {
    Json comp;
    comp["class"] = int_vector_json(c.cls);
    comp["coeff"] = rat_to_string(c.coeff);
    if (!c.count.fits_slong_p()) fail("SchemaError", "count too large for the JSON encoding");
    comp["count"] = static_cast<long long>(c.count.get_si());
    comps.push_back(comp);
  }
  j["components"] = comps;
  return j;
}

NumericalPair numerical_pair_from_payload(const Json& j) {
  require_keys(j, {"fan", "components"}, "numerical_pair");
  Fan fan = fan_from_payload(j["fan"]);
  std::vector<NumericalComponent> comps;
  const Json& arr = get_array(j["components"], "numerical_pair.components");
  for (size_t i = 0; i < arr.size(); ++i) {
    std::string path = "numerical_pair.components[" + std::to_string(i) + "]";
    require_keys(arr[i], {"class", "coeff", "count"}, path);
    comps.push_back(NumericalComponent{int_vector(arr[i]["class"], path + ".class"),
                                       get_rat(arr[i]["coeff"], path + ".coeff"),
                                       Int(get_int(arr[i]["count"], path + ".count"))});
  }
  return make_numerical_pair(std::move(fan), std::move(comps));
}

Json arrangement_payload(const PlanePair& pair) {
  Json j;
  Json lines = Json::array();
  for (const auto& l : pair.lines) {
    Json line = Json::array();
    for (int k = 0; k < 3; ++k) line.push_back(rat_to_string(l[k]));
    lines.push_back(line);
  }
  j["lines"] = lines;
  j["coeffs"] = rat_vector_json(pair.coeffs);
  return j;
}

PlanePair arrangement_from_payload(const Json& j) {
  require_keys(j, {"lines", "coeffs"}, "arrangement");
  std::vector<std::array<Rat, 3>> lines;
  const Json& arr = get_array(j["lines"], "arrangement.lines");
  for (size_t i = 0; i < arr.size(); ++i) {
    std::string path = "arrangement.lines[" + std::to_string(i) + "]";
    RatVec triple = rat_vector(arr[i], path);
    if (triple.size() != 3) fail("SchemaError", path + ": a line is a triple");
    lines.push_back({triple[0], triple[1], triple[2]});
  }
  return make_plane_pair(std::move(lines), rat_vector(j["coeffs"], "arrangement.coeffs"));
}

Json morphism_payload(const FanMorphism& f) {
  Json j;
  j["source"] = fan_payload(f.source);
  j["target"] = fan_payload(f.target);
  j["matrix"] = int_matrix_json(f.matrix);
  return j;
}

FanMorphism morphism_from_payload(const Json& j) {
  require_keys(j, {"source", "target", "matrix"}, "morphism");
  return make_fan_morphism(fan_from_payload(j["source"]), fan_from_payload(j["target"]),
                           int_matrix(j["matrix"], "morphism.matrix"));
}

Json tower_spec_payload(const BottTowerSpec& spec) {
  Json j;
  Json stages = Json::array();
  for (const BottStage& s : spec.stages) {
    Json stage;
    stage["dim"] = s.dim;
    Json twists = Json::array();
    for (const IntVec& t : s.twists) twists.push_back(int_vector_json(t));
    stage["twists"] = twists;
    stages.push_back(stage);
  }
  j["stages"] = stages;
  return j;
}

BottTowerSpec tower_spec_from_payload(const Json& j) {
  require_keys(j, {"stages"}, "tower_spec");
  BottTowerSpec spec;
  const Json& arr = get_array(j["stages"], "tower_spec.stages");
  for (size_t i = 0; i < arr.size(); ++i) {
    std::string path = "tower_spec.stages[" + std::to_string(i) + "]";
    require_keys(arr[i], {"dim", "twists"}, path);
    BottStage stage;
    stage.dim = static_cast<int>(get_int(arr[i]["dim"], path + ".dim"));
    const Json& tw = get_array(arr[i]["twists"], path + ".twists");
    for (size_t k = 0; k < tw.size(); ++k)
      stage.twists.push_back(int_vector(tw[k], path + ".twists[" + std::to_string(k) + "]"));
    spec.stages.push_back(std::move(stage));
  }
  return spec;
}

Json make_document(const std::string& kind, Json payload) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = kind;
  doc["payload"] = std::move(payload);
  return doc;
}

Document parse_document_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail("SchemaError", "input is not well-formed JSON");
  require_keys(j, {"schema_version", "kind", "payload"}, "document");
  if (!j["schema_version"].is_string() || j["schema_version"] != kSchemaVersion)
    fail("SchemaError", "unsupported schema_version");
  if (!j["kind"].is_string()) fail("SchemaError", "document.kind must be a string");
  std::string kind = j["kind"];
  static const std::set<std::string> kinds{"fan",         "pair",     "numerical_pair",
                                           "arrangement", "morphism", "tower_spec"};
  if (!kinds.count(kind)) fail("SchemaError", "unknown document kind \"" + kind + "\"");
  return Document{kind, j["payload"]};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace toric::io
