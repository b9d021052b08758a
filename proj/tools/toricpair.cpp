#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "toric/error.hpp"
#include "toric/io.hpp"

using namespace toric;
using io::Json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("IOError", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

io::Document load(const std::string& path, const std::string& expected_kind) {
  io::Document doc = io::parse_document_text(read_file(path));
  if (doc.kind != expected_kind)
    fail("SchemaError", path + ": expected a " + expected_kind + " document, got " + doc.kind);
  return doc;
}

IntVec parse_csv_ints(const std::string& s) {
  IntVec out;
  std::string token;
  std::istringstream ss(s);
  while (std::getline(ss, token, ',')) {
    if (token.empty()) fail("ValidationError", "empty entry in \"" + s + "\"");
    try {
      out.emplace_back(token);
    } catch (const std::invalid_argument&) {
      fail("ValidationError", "cannot parse integer \"" + token + "\"");
    }
  }
  if (out.empty()) fail("ValidationError", "expected comma-separated integers");
  return out;
}

Json tri_json(Tri t) {
  switch (t) {
    case Tri::True: return Json(true);
    case Tri::False: return Json(false);
    default: return Json("unknown");
  }
}

Json cones_json(const std::vector<Cone>& cones) {
  Json a = Json::array();
  for (const Cone& c : cones) {
    Json cone = Json::array();
    for (int r : c.rays) cone.push_back(r);
    a.push_back(cone);
  }
  return a;
}

Json int_rows_json(const std::vector<IntVec>& rows) {
  Json a = Json::array();
  for (const IntVec& row : rows) {
    Json r = Json::array();
    for (const Int& x : row) r.push_back(static_cast<long long>(x.get_si()));
    a.push_back(r);
  }
  return a;
}

Json report_json(const PairReport& r) {
  Json j;
  j["complexity"] = rat_to_string(r.complexity);
  if (r.index)
    j["index"] = static_cast<long long>(r.index->get_si());
  else
    j["index"] = nullptr;
  j["lc"] = tri_json(r.lc);
  j["log_cy"] = r.log_cy;
  return j;
}

struct Output {
  std::string path;  // empty = stdout

  void emit(const Json& j) const {
    std::string text = io::dump(j);
    if (path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(path);
      if (!out) fail("IOError", "cannot write " + path);
      out << text;
    }
  }
};

ToricPair pair_from_doc(const std::string& path) {
  io::Document doc = io::parse_document_text(read_file(path));
  if (doc.kind != "pair")
    fail("SchemaError", path + ": expected a pair document, got " + doc.kind);
  return io::pair_from_payload(doc.payload);
}

Triangle triangle_from_csv(const PlanePair& pair, const std::string& csv) {
  IntVec idx = parse_csv_ints(csv);
  if (idx.size() != 3) fail("ValidationError", "--triangle needs three indices");
  return make_triangle(pair, static_cast<int>(idx[0].get_si()),
                       static_cast<int>(idx[1].get_si()), static_cast<int>(idx[2].get_si()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toric calculus for log Calabi-Yau pairs of complexity zero"};
  app.require_subcommand(0, 1);
  bool version = false;
  app.add_flag("--version", version, "print the document schema version");

  std::string input, output_path, pair_path, morphism_path, point_csv, triangle_csv,
      divisor_csv, force_csv;
  int opt_d = 0, opt_n = 0, opt_m = 0;

  auto add_io = [&](CLI::App* cmd, bool needs_input = true) {
    if (needs_input) cmd->add_option("--input", input, "input document")->required();
    cmd->add_option("--output", output_path, "write the result to a file instead of stdout");
  };

  auto* fan_cmd = app.add_subcommand("fan", "fan operations");
  auto* fan_check = fan_cmd->add_subcommand("check", "validate a fan document");
  add_io(fan_check);
  auto* fan_subdivide = fan_cmd->add_subcommand("subdivide", "star subdivision at a point");
  add_io(fan_subdivide);
  fan_subdivide->add_option("--point", point_csv, "lattice point, comma-separated")->required();

  auto* pair_cmd = app.add_subcommand("pair", "invariant pair operations");
  auto* pair_report_cmd = pair_cmd->add_subcommand("report", "complexity, index, lc, log CY");
  add_io(pair_report_cmd);
  auto* pair_disc = pair_cmd->add_subcommand("discrepancy", "log discrepancy at a primitive point");
  add_io(pair_disc);
  pair_disc->add_option("--point", point_csv, "lattice point, comma-separated")->required();
  auto* pair_centers = pair_cmd->add_subcommand("lc-centers", "log canonical centers");
  add_io(pair_centers);
  auto* pair_sections = pair_cmd->add_subcommand("sections", "lattice-point count of a divisor");
  add_io(pair_sections);
  pair_sections->add_option("--divisor", divisor_csv, "ray coefficients, comma-separated")
      ->required();

  auto* arr_cmd = app.add_subcommand("arr", "line arrangement pairs on P^2");
  auto* arr_report = arr_cmd->add_subcommand("report", "lc, log CY, complexity");
  add_io(arr_report);
  auto* arr_lambda = arr_cmd->add_subcommand("lambda", "peeling invariants for a triangle");
  arr_lambda->add_option("--pair", pair_path, "arrangement document")->required();
  arr_lambda->add_option("--triangle", triangle_csv, "three line indices")->required();
  arr_lambda->add_option("--output", output_path, "write the result to a file instead of stdout");
  auto* arr_triangles = arr_cmd->add_subcommand("triangles", "associated triangles");
  add_io(arr_triangles);
  auto* arr_decompose = arr_cmd->add_subcommand("decompose", "convex decomposition of B");
  add_io(arr_decompose);
  arr_decompose->add_option("--force", force_csv, "require positive weight on this triangle");

  auto* fib_cmd = app.add_subcommand("fib", "toric fibration analysis");
  auto* fib_split = fib_cmd->add_subcommand("split", "fiber/section splitting of the fan");
  add_io(fib_split);
  auto* fib_trivial = fib_cmd->add_subcommand("trivial", "local triviality test");
  add_io(fib_trivial);
  auto* fib_fiber = fib_cmd->add_subcommand("fiber", "general fiber fan and weights");
  add_io(fib_fiber);
  auto* fib_bundles = fib_cmd->add_subcommand("bundles", "line bundle extraction");
  add_io(fib_bundles);
  auto* fib_cbf = fib_cmd->add_subcommand("cbf", "canonical bundle formula pushforward");
  fib_cbf->add_option("--morphism", morphism_path, "morphism document")->required();
  fib_cbf->add_option("--pair", pair_path, "pair document on the source fan")->required();
  fib_cbf->add_option("--output", output_path, "write the result to a file instead of stdout");

  auto* bott_cmd = app.add_subcommand("bott", "generalized Bott towers");
  auto* bott_build = bott_cmd->add_subcommand("build", "build the tower fan from a spec");
  add_io(bott_build);
  auto* bott_recognize = bott_cmd->add_subcommand("recognize", "recognize a tower structure");
  add_io(bott_recognize);
  auto* bott_example = bott_cmd->add_subcommand("example", "index-m complexity-zero family");
  bott_example->add_option("--d", opt_d, "twist degree (>= 1)")->required();
  bott_example->add_option("--n", opt_n, "dimension (>= 2)")->required();
  bott_example->add_option("--m", opt_m, "index (>= 3)")->required();
  bott_example->add_option("--output", output_path, "write the result to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  if (version) {
    std::cout << io::kSchemaVersion << "\n";
    return 0;
  }

  Output out{output_path};
  try {
    if (fan_check->parsed()) {
      Fan fan = io::fan_from_payload(load(input, "fan").payload);
      Json j;
      j["valid"] = true;
      j["rank"] = fan.rank;
      j["ray_count"] = fan.ray_count();
      j["simplicial"] = true;
      j["complete"] = fan.complete;
      j["smooth"] = fan.smooth;
      out.emit(j);
    } else if (fan_subdivide->parsed()) {
      Fan fan = io::fan_from_payload(load(input, "fan").payload);
      auto [refined, new_index] = star_subdivision(fan, parse_csv_ints(point_csv));
      (void)new_index;  // the new ray is always last
      out.emit(io::make_document("fan", io::fan_payload(refined)));
    } else if (pair_report_cmd->parsed()) {
      io::Document doc = io::parse_document_text(read_file(input));
      PairReport r;
      if (doc.kind == "pair")
        r = pair_report(io::pair_from_payload(doc.payload));
      else if (doc.kind == "numerical_pair")
        r = pair_report(io::numerical_pair_from_payload(doc.payload));
      else
        fail("SchemaError", input + ": expected a pair or numerical_pair document");
      out.emit(report_json(r));
    } else if (pair_disc->parsed()) {
      ToricPair pair = pair_from_doc(input);
      Json j;
      j["log_discrepancy"] = rat_to_string(log_discrepancy(pair, parse_csv_ints(point_csv)));
      out.emit(j);
    } else if (pair_centers->parsed()) {
      ToricPair pair = pair_from_doc(input);
      Json j;
      j["centers"] = cones_json(lc_centers(pair));
      out.emit(j);
    } else if (pair_sections->parsed()) {
      Fan fan = io::fan_from_payload(load(input, "fan").payload);
      Json j;
      j["count"] = static_cast<long long>(divisor_sections(fan, parse_csv_ints(divisor_csv)).get_si());
      out.emit(j);
    } else if (arr_report->parsed()) {
      PlanePair pair = io::arrangement_from_payload(load(input, "arrangement").payload);
      ArrangementReport r = check_pair(pair);
      Json j;
      j["lc"] = r.lc;
      j["log_cy"] = r.log_cy;
      j["complexity"] = rat_to_string(r.complexity);
      out.emit(j);
    } else if (arr_lambda->parsed()) {
      PlanePair pair = io::arrangement_from_payload(load(pair_path, "arrangement").payload);
      LambdaReport r = lambda_invariants(pair, triangle_from_csv(pair, triangle_csv));
      Json j;
      j["lambda1"] = rat_to_string(r.lambda1);
      j["lambda2"] = rat_to_string(r.lambda2);
      out.emit(j);
    } else if (arr_triangles->parsed()) {
      PlanePair pair = io::arrangement_from_payload(load(input, "arrangement").payload);
      Json a = Json::array();
      for (const Triangle& t : associated_triangles(pair))
        a.push_back(Json::array({t.lines[0], t.lines[1], t.lines[2]}));
      Json j;
      j["triangles"] = a;
      out.emit(j);
    } else if (arr_decompose->parsed()) {
      PlanePair pair = io::arrangement_from_payload(load(input, "arrangement").payload);
      std::optional<Triangle> force;
      if (!force_csv.empty()) force = triangle_from_csv(pair, force_csv);
      Json a = Json::array();
      for (const WeightedTriangle& wt : decompose(pair, force)) {
        Json item;
        item["triangle"] = Json::array({wt.triangle.lines[0], wt.triangle.lines[1], wt.triangle.lines[2]});
        item["weight"] = rat_to_string(wt.weight);
        a.push_back(item);
      }
      Json j;
      j["decomposition"] = a;
      out.emit(j);
    } else if (fib_split->parsed()) {
      FanMorphism f = io::morphism_from_payload(load(input, "morphism").payload);
      SplitResult s = split_fan(f);
      Json j;
      j["fiber_rays"] = Json(s.fiber_rays);
      j["fiber_max_cones"] = cones_json(s.fiber_max_cones);
      j["lift_map"] = Json(s.lift);
      Json mult = Json::array();
      for (const Int& k : s.lift_multiple) mult.push_back(static_cast<long long>(k.get_si()));
      j["lift_multiples"] = mult;
      j["section_cones"] = cones_json(s.section_cones);
      out.emit(j);
    } else if (fib_trivial->parsed()) {
      FanMorphism f = io::morphism_from_payload(load(input, "morphism").payload);
      Json j;
      j["locally_trivial"] = tri_json(is_locally_trivial(f, split_fan(f)));
      out.emit(j);
    } else if (fib_fiber->parsed()) {
      FanMorphism f = io::morphism_from_payload(load(input, "morphism").payload);
      FiberType ft = fiber_type(f, split_fan(f));
      Json j;
      j["fan"] = io::fan_payload(ft.fan);
      if (ft.weights) {
        Json w = Json::array();
        for (const Int& x : *ft.weights) w.push_back(static_cast<long long>(x.get_si()));
        j["weights"] = w;
      } else {
        j["weights"] = nullptr;
      }
      out.emit(j);
    } else if (fib_bundles->parsed()) {
      FanMorphism f = io::morphism_from_payload(load(input, "morphism").payload);
      BundleExtraction e = extract_line_bundles(f, split_fan(f));
      Json j;
      Json section = Json::array();
      for (int i = 0; i < e.section.rows; ++i) {
        Json row = Json::array();
        for (int k = 0; k < e.section.cols; ++k)
          row.push_back(static_cast<long long>(e.section.at(i, k).get_si()));
        section.push_back(row);
      }
      j["section"] = section;
      j["fiber_basis"] = int_rows_json(e.fiber_basis);
      j["twists"] = int_rows_json(e.twists);
      j["twists_normalized"] = int_rows_json(normalized_twists(e));
      j["line_bundles"] = int_rows_json(e.line_bundle_classes);
      out.emit(j);
    } else if (fib_cbf->parsed()) {
      FanMorphism f = io::morphism_from_payload(load(morphism_path, "morphism").payload);
      ToricPair pair = pair_from_doc(pair_path);
      ToricPair pushed = cbf_pushforward(pair, f);
      Json j;
      j["moduli"] = "trivial";
      j["pair"] = io::make_document("pair", io::pair_payload(pushed));
      out.emit(j);
    } else if (bott_build->parsed()) {
      BottTowerSpec spec = io::tower_spec_from_payload(load(input, "tower_spec").payload);
      TowerReport report = build_bott_tower(spec);
      out.emit(io::make_document("fan", io::fan_payload(report.fans.back())));
    } else if (bott_recognize->parsed()) {
      Fan fan = io::fan_from_payload(load(input, "fan").payload);
      auto report = recognize_bott_tower(fan);
      Json j;
      if (report) {
        Json tower;
        tower["stage_dims"] = Json(report->stage_dims);
        j["tower"] = tower;
      } else {
        j["tower"] = nullptr;
      }
      out.emit(j);
    } else if (bott_example->parsed()) {
      IndexExample ex = build_index_example(opt_d, opt_n, opt_m);
      out.emit(io::make_document("numerical_pair", io::numerical_pair_payload(ex.pair)));
    } else {
      std::cerr << app.help() << std::flush;
      return 2;
    }
  } catch (const Error& e) {
    Json j;
    j["error"] = e.code();
    j["detail"] = e.detail();
    std::cout << io::dump(j);
    return 1;
  }
  return 0;
}
