#include "cstar/cli.hpp"

#include "cstar/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace cstar {

namespace {

// Bad command-line or file input, as opposed to a mathematical precondition.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RationalVector parse_vector(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    try {
      out.push_back(parse_rational(item));
    } catch (const std::exception&) {
      throw UsageError("cannot parse '" + item + "' as a rational number");
    }
  }
  if (out.empty()) throw UsageError("empty coordinate list");
  return RationalVector(std::move(out));
}

RationalVector pad(const RationalVector& v, std::size_t dim) {
  if (v.size() > dim)
    throw DomainError("cocharacter has " + std::to_string(v.size()) + " coordinates, expected at most " +
                      std::to_string(dim));
  RationalVector out(dim);
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

std::optional<Family> parse_family(const std::string& text, int& rank) {
  if (text.size() < 2 || !std::all_of(text.begin() + 1, text.end(), [](unsigned char c) {
        return std::isdigit(c);
      }))
    return std::nullopt;
  if (text.size() > 3) return std::nullopt;
  rank = std::stoi(text.substr(1));
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E':
      if (rank == 6) return Family::E6;
      if (rank == 7) return Family::E7;
      throw DomainError("unsupported root system " + text);
    default: return std::nullopt;
  }
}

bool is_catalog_name(const std::string& name) {
  if (name.rfind("P1xQ[", 0) == 0) return true;
  auto names = catalog_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

struct RhArgs {
  std::string name;
  std::optional<int> index;
  std::string lambda;
  std::optional<int> coweight;
  bool graph = false;
  bool json = false;
  std::string dot;
};

Json run_rh(const RhArgs& a) {
  std::optional<HomogeneousModel> model;
  RationalVector lambda;
  if (is_catalog_name(a.name)) {
    if (a.index) throw UsageError("catalogue names take no weight index");
    CatalogEntry e = catalog(a.name);
    model = std::move(e.model);
    lambda = std::move(e.lambda);
  } else {
    int rank = 0;
    auto family = parse_family(a.name, rank);
    if (!family) {
      std::string valid;
      for (const auto& n : catalog_names()) valid += (valid.empty() ? "" : ", ") + n;
      throw UsageError("'" + a.name + "' is neither a root system like A5 nor a catalogue name (" +
                       valid + ")");
    }
    if (!a.index) throw UsageError("a root system needs a fundamental weight index");
    model = make_model(build_root_system(*family, rank), *a.index);
    if (a.lambda.empty() && !a.coweight)
      throw UsageError("give --lambda or --coweight for a non-catalogue model");
  }
  if (!a.lambda.empty() && a.coweight) throw UsageError("--lambda and --coweight are exclusive");
  if (!a.lambda.empty()) lambda = pad(parse_vector(a.lambda), model->root_system.ambient_dim);
  if (a.coweight) lambda = fundamental_coweight(model->root_system, *a.coweight);

  ActionReport report = analyze(*model, lambda);
  Json payload = {{"model",
                   {{"name", model->name},
                    {"root_system", model->root_system.label()},
                    {"highest_weight", to_json(model->highest_weight)},
                    {"orbit_size", model->orbit.size()},
                    {"dimension", model->dimension}}},
                  {"report", to_json(report)}};
  if (a.graph || !a.dot.empty()) {
    OrbitGraph g = orbit_graph(*model, lambda);
    if (a.graph) payload["orbit_graph"] = to_json(g, report);
    if (!a.dot.empty()) write_file(a.dot, to_dot(g, report, model->name));
  }
  Json inputs = {{"name", a.name}, {"lambda", to_json(lambda)}, {"graph", a.graph}};
  if (a.index) inputs["weight_index"] = *a.index;
  if (a.coweight) inputs["coweight"] = *a.coweight;
  if (!a.dot.empty()) inputs["dot"] = a.dot;
  return envelope("rh", inputs, payload);
}

struct ToricArgs {
  std::string source;
  std::string lambda;
  bool chambers = false;
  bool summary = false;
  bool graph = false;
  std::string dot;
};

PolarizedToric load_toric(const std::string& source) {
  if (!std::filesystem::exists(source)) return toric_preset(source);
  std::ifstream f(source);
  if (!f) throw UsageError("cannot read '" + source + "'");
  Json j;
  try {
    j = Json::parse(f);
  } catch (const Json::exception& e) {
    throw UsageError("malformed JSON in '" + source + "': " + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array() ||
      j["vertices"].empty())
    throw UsageError("expected {\"vertices\": [[...], ...]} in '" + source + "'");
  std::vector<RationalVector> pts;
  for (const auto& row : j["vertices"]) {
    if (!row.is_array() || row.empty()) throw UsageError("each vertex must be a nonempty array");
    std::vector<Rational> coords;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw UsageError("vertex coordinates must be integers");
      coords.emplace_back(x.get<long>());
    }
    if (!pts.empty() && coords.size() != pts.front().size())
      throw UsageError("vertices have different lengths");
    pts.emplace_back(std::move(coords));
  }
  return make_toric(LatticePolytope::hull(pts), std::filesystem::path(source).filename().string());
}

Json run_toric(const ToricArgs& a) {
  PolarizedToric t = load_toric(a.source);
  RationalVector lambda = parse_vector(a.lambda);
  ActionReport report = toric_analyze(t, lambda);
  Json payload = {{"polytope", {{"name", t.name}, {"vertices", to_json(t.polytope.vertices())}}},
                  {"report", to_json(report)}};
  if (a.chambers) payload["chambers"] = to_json(git_chambers(t, lambda));
  if (a.summary) payload["summary"] = to_json(birational_summary(t, lambda));
  if (a.graph || !a.dot.empty()) {
    OrbitGraph g = toric_orbit_graph(t, lambda);
    if (a.graph) payload["orbit_graph"] = to_json(g, report);
    if (!a.dot.empty()) write_file(a.dot, to_dot(g, report, t.name));
  }
  Json inputs = {{"source", a.source},
                 {"lambda", to_json(lambda)},
                 {"chambers", a.chambers},
                 {"summary", a.summary},
                 {"graph", a.graph}};
  if (!a.dot.empty()) inputs["dot"] = a.dot;
  return envelope("toric", inputs, payload);
}

struct RealizeArgs {
  long m_minus = 0, m_plus = 0, r_minus = 2, r_plus = 2;
  bool cones = false;
  std::size_t chambers = 0;
  std::uint64_t seed = 0;
  bool contract = false;
};

Json run_realize(const RealizeArgs& a) {
  BispecialType t = make_type(a.m_minus, a.m_plus, a.r_minus, a.r_plus);
  Json tables = Json::object();
  for (const auto& [v, table] : build_tables(t)) tables[variety_name(v)] = to_json(table);
  Json payload = {{"type", to_json(t)}, {"tables", tables}};
  if (a.cones) {
    Json c = Json::object();
    for (const auto& [v, bundle] : cones(t)) c[variety_name(v)] = to_json(bundle);
    payload["cones"] = c;
  }
  if (a.chambers > 0) payload["chamber_check"] = to_json(chamber_check(t, a.chambers, a.seed));
  if (a.contract) payload["contraction"] = to_json(contraction_analysis(t));
  Json inputs = {{"m_minus", a.m_minus}, {"m_plus", a.m_plus},   {"r_minus", a.r_minus},
                 {"r_plus", a.r_plus},   {"cones", a.cones},     {"chambers", a.chambers},
                 {"seed", a.seed},       {"contract", a.contract}};
  return envelope("realize", inputs, payload);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of C*-actions on polarized varieties", "cstar"};
  app.require_subcommand(1);

  RhArgs rh;
  auto* rh_cmd = app.add_subcommand("rh", "Action on a rational homogeneous variety");
  rh_cmd->add_option("name", rh.name, "Catalogue name (C3(3), A5(3), D6(6), E7(7), P1xQ[n]) or root system (A5, E7, ...)")
      ->required();
  rh_cmd->add_option("index", rh.index, "Fundamental weight index for a root system");
  rh_cmd->add_option("--lambda", rh.lambda, "Cocharacter coordinates, comma separated; zero padded");
  rh_cmd->add_option("--coweight", rh.coweight, "Use the fundamental coweight with this index");
  rh_cmd->add_flag("--graph", rh.graph, "Include the orbit graph");
  rh_cmd->add_flag("--json", rh.json, "JSON output (the default)");
  rh_cmd->add_option("--dot", rh.dot, "Write the orbit graph in DOT format to this file");

  ToricArgs toric;
  auto* toric_cmd = app.add_subcommand("toric", "Subtorus action on a polarized toric variety");
  toric_cmd->add_option("source", toric.source, "Preset name or JSON file {\"vertices\": [[...]]}")
      ->required();
  toric_cmd->add_option("--lambda", toric.lambda, "Cocharacter coordinates, comma separated")
      ->required();
  toric_cmd->add_flag("--chambers", toric.chambers, "Include the GIT chamber report");
  toric_cmd->add_flag("--summary", toric.summary, "Compare the extremal quotients");
  toric_cmd->add_flag("--graph", toric.graph, "Include the orbit graph");
  toric_cmd->add_option("--dot", toric.dot, "Write the orbit graph in DOT format to this file");

  RealizeArgs real;
  auto* real_cmd = app.add_subcommand("realize", "Cones and contractions for a bispecial type");
  real_cmd->add_option("m_minus", real.m_minus)->required();
  real_cmd->add_option("m_plus", real.m_plus)->required();
  real_cmd->add_option("r_minus", real.r_minus, "Codimension of Z- (default 2)");
  real_cmd->add_option("r_plus", real.r_plus, "Codimension of Z+ (default 2)");
  real_cmd->add_flag("--cones", real.cones, "Nef, Mori and movable cones");
  real_cmd->add_option("--chambers", real.chambers, "Check the Mov(X) chamber decomposition with N samples");
  real_cmd->add_option("--seed", real.seed, "Seed for --chambers sampling");
  real_cmd->add_flag("--contract", real.contract, "Contraction analysis");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Json result;
    if (*rh_cmd)
      result = run_rh(rh);
    else if (*toric_cmd)
      result = run_toric(toric);
    else
      result = run_realize(real);
    out << result.dump(2) << "\n";
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace cstar
