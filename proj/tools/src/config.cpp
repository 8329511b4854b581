#include "hooleyff_cli/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hooleyff/error.hpp"
#include "hooleyff_cli/toml.hpp"

namespace hooleyff::cli {

using nlohmann::json;

std::string experiment_name(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::Sweep: return "sweep";
    case ExperimentKind::Mordell: return "mordell";
    case ExperimentKind::Variance: return "variance";
    case ExperimentKind::Covariance: return "covariance";
    case ExperimentKind::Control: return "control";
    case ExperimentKind::IdentitySuite: return "identity-suite";
  }
  return "?";
}

namespace {

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw Error(ErrorCode::ConfigParse, where + " must be a table");
  for (const auto& [key, _] : j.items())
    if (!allowed.count(key)) throw Error(ErrorCode::Validation, "unknown key '" + key + "' in " + where);
}

template <typename T>
T get(const json& j, const char* key, const std::string& where) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::ConfigParse, where + "." + key + ": " + ex.what());
  }
}

template <typename T>
std::vector<T> get_list(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) return {};
  if (j.at(key).is_array()) return get<std::vector<T>>(j, key, where);
  return {get<T>(j, key, where)};
}

ExperimentKind parse_kind(const std::string& s) {
  for (auto k : {ExperimentKind::Sweep, ExperimentKind::Mordell, ExperimentKind::Variance, ExperimentKind::Covariance,
                 ExperimentKind::Control, ExperimentKind::IdentitySuite})
    if (experiment_name(k) == s) return k;
  throw Error(ErrorCode::Validation,
              "experiment '" + s + "' is not one of sweep, mordell, variance, covariance, control, identity-suite");
}

FamilyConfig parse_family(const json& j, const std::string& where) {
  reject_unknown(j, {"kind", "exponents", "F", "a", "b", "k", "P", "table", "shift", "rank", "conductor"}, where);
  FamilyConfig f;
  if (!j.contains("kind")) throw Error(ErrorCode::Validation, where + ".kind is required");
  f.kind = get<std::string>(j, "kind", where);
  static const std::set<std::string> kinds = {"mixed-char", "kloosterman", "value-set", "custom", "catalog"};
  if (!kinds.count(f.kind))
    throw Error(ErrorCode::Validation,
                where + ".kind '" + f.kind + "' is not one of mixed-char, kloosterman, value-set, custom, catalog");
  auto require = [&](const char* key) {
    if (!j.contains(key)) throw Error(ErrorCode::Validation, where + "." + key + " is required for kind " + f.kind);
  };
  auto forbid_except = [&](std::set<std::string> ok) {
    ok.insert({"kind", "shift", "rank", "conductor"});
    for (const auto& [key, _] : j.items())
      if (!ok.count(key)) throw Error(ErrorCode::Validation, where + "." + key + " does not apply to kind " + f.kind);
  };
  if (f.kind == "mixed-char") {
    require("exponents");
    require("F");
    forbid_except({"exponents", "F", "a", "b"});
    f.exponents = get<std::vector<std::uint64_t>>(j, "exponents", where);
    f.F = j.at("F");
    f.a = j.value("a", json::array());
    f.b = j.value("b", json::array({1}));
  } else if (f.kind == "kloosterman") {
    forbid_except({"k", "b"});
    if (j.contains("k")) f.k = get<unsigned>(j, "k", where);
    f.b = j.value("b", json::array({1}));
  } else if (f.kind == "value-set") {
    require("P");
    forbid_except({"P"});
    f.P = j.at("P");
  } else if (f.kind == "custom") {
    require("table");
    forbid_except({"table"});
    f.table = get<std::string>(j, "table", where);
  } else {
    forbid_except({});
  }
  if (j.contains("shift")) f.shift = get<std::uint64_t>(j, "shift", where);
  if (j.contains("rank")) f.rank = get<unsigned>(j, "rank", where);
  if (j.contains("conductor")) f.conductor = get<unsigned>(j, "conductor", where);
  return f;
}

json family_to_json(const FamilyConfig& f) {
  json j{{"kind", f.kind}};
  if (f.kind == "mixed-char") {
    j["exponents"] = f.exponents;
    j["F"] = f.F;
    j["a"] = f.a;
    j["b"] = f.b;
  } else if (f.kind == "kloosterman") {
    j["k"] = f.k;
    j["b"] = f.b;
  } else if (f.kind == "value-set") {
    j["P"] = f.P;
  } else if (f.kind == "custom") {
    j["table"] = f.table;
  }
  if (f.shift != 0) j["shift"] = f.shift;
  if (f.rank) j["rank"] = *f.rank;
  if (f.conductor) j["conductor"] = *f.conductor;
  return j;
}

}  // namespace

ExperimentConfig config_from_json(const json& j) {
  reject_unknown(j, {"experiment", "name", "seed", "g", "output_dir", "field", "family", "second", "parameters"},
                 "config");
  ExperimentConfig c;
  if (!j.contains("experiment")) throw Error(ErrorCode::Validation, "config.experiment is required");
  c.experiment = parse_kind(get<std::string>(j, "experiment", "config"));
  c.name = j.contains("name") ? get<std::string>(j, "name", "config") : experiment_name(c.experiment);
  if (c.name.empty() || c.name.find_first_of("/\\") != std::string::npos)
    throw Error(ErrorCode::Validation, "config.name must be a nonempty file stem");
  if (j.contains("seed")) c.seed = get<std::uint64_t>(j, "seed", "config");
  if (j.contains("output_dir")) c.output_dir = get<std::string>(j, "output_dir", "config");

  if (c.experiment == ExperimentKind::Control) {
    if (j.contains("family")) throw Error(ErrorCode::Validation, "control enumerates e(f^2/g) itself; drop [family]");
  } else {
    if (!j.contains("family")) throw Error(ErrorCode::Validation, "config.family is required");
    c.family = parse_family(j.at("family"), "family");
  }
  const bool catalog = c.family.kind == "catalog";
  if (catalog && c.experiment != ExperimentKind::Sweep)
    throw Error(ErrorCode::Validation, "family.kind = catalog is only valid with experiment = sweep");

  if (j.contains("second")) {
    if (c.experiment != ExperimentKind::Covariance)
      throw Error(ErrorCode::Validation, "[second] is only valid with experiment = covariance");
    c.second = parse_family(j.at("second"), "second");
  } else if (c.experiment == ExperimentKind::Covariance) {
    throw Error(ErrorCode::Validation, "covariance needs a [second] family");
  }

  if (!catalog) {
    if (!j.contains("field")) throw Error(ErrorCode::Validation, "config.field is required");
    const json& f = j.at("field");
    reject_unknown(f, {"p", "e", "modulus"}, "field");
    if (!f.contains("p")) throw Error(ErrorCode::Validation, "field.p is required");
    c.p = get<std::uint32_t>(f, "p", "field");
    if (f.contains("e")) c.e = get<std::uint32_t>(f, "e", "field");
    if (f.contains("modulus")) c.field_modulus = get<std::vector<std::uint32_t>>(f, "modulus", "field");
    if (!j.contains("g")) throw Error(ErrorCode::Validation, "config.g (the modulus) is required");
    c.g = j.at("g");
  } else if (j.contains("field") || j.contains("g")) {
    throw Error(ErrorCode::Validation, "the catalog sweep enumerates its own fields and moduli; drop field and g");
  }

  if (j.contains("parameters")) {
    const json& p = j.at("parameters");
    reject_unknown(p,
                   {"n", "X", "k", "m_small", "centers", "center_count", "bound", "main_indicator", "export_table",
                    "primes", "max_degree", "characters_per_modulus"},
                   "parameters");
    c.n = get_list<int>(p, "n", "parameters");
    c.X = get_list<std::uint64_t>(p, "X", "parameters");
    c.k = get_list<int>(p, "k", "parameters");
    c.m_small = get_list<int>(p, "m_small", "parameters");
    if (p.contains("centers")) {
      const auto s = get<std::string>(p, "centers", "parameters");
      if (s == "auto")
        c.centers.mode = CenterSampling::Mode::Auto;
      else if (s == "exhaustive")
        c.centers.mode = CenterSampling::Mode::Exhaustive;
      else if (s == "sample")
        c.centers.mode = CenterSampling::Mode::Sample;
      else
        throw Error(ErrorCode::Validation, "parameters.centers must be auto, exhaustive or sample");
    }
    if (p.contains("center_count")) c.centers.count = get<std::size_t>(p, "center_count", "parameters");
    if (c.centers.count == 0) throw Error(ErrorCode::Validation, "parameters.center_count must be positive");
    if (p.contains("bound")) {
      const auto s = get<std::string>(p, "bound", "parameters");
      if (s == "mainres")
        c.bound = BoundKind::MainRes;
      else if (s == "hooley")
        c.bound = BoundKind::HooleyCor;
      else
        throw Error(ErrorCode::Validation, "parameters.bound must be mainres or hooley");
    }
    if (p.contains("main_indicator")) c.main_indicator = get<bool>(p, "main_indicator", "parameters");
    if (p.contains("export_table")) c.export_table = get<bool>(p, "export_table", "parameters");
    if (p.contains("primes")) c.catalog.primes = get<std::vector<std::uint32_t>>(p, "primes", "parameters");
    if (p.contains("max_degree")) c.catalog.max_degree = get<int>(p, "max_degree", "parameters");
    if (p.contains("characters_per_modulus"))
      c.catalog.characters_per_modulus = get<std::size_t>(p, "characters_per_modulus", "parameters");
  }
  c.centers.seed = c.seed;
  if (c.bound == BoundKind::HooleyCor && c.family.kind != "mixed-char" && c.family.kind != "catalog")
    throw Error(ErrorCode::Validation, "bound = hooley needs a mixed-char family");
  return c;
}

json config_to_json(const ExperimentConfig& c) {
  json j{{"experiment", experiment_name(c.experiment)}, {"name", c.name}, {"seed", c.seed}};
  if (c.family.kind != "catalog") {
    j["field"] = {{"p", c.p}, {"e", c.e}};
    if (c.field_modulus) j["field"]["modulus"] = *c.field_modulus;
    j["g"] = c.g;
  }
  if (!c.family.kind.empty()) j["family"] = family_to_json(c.family);
  if (c.second) j["second"] = family_to_json(*c.second);
  json p = json::object();
  if (!c.n.empty()) p["n"] = c.n;
  if (!c.X.empty()) p["X"] = c.X;
  if (!c.k.empty()) p["k"] = c.k;
  if (!c.m_small.empty()) p["m_small"] = c.m_small;
  p["centers"] = c.centers.mode == CenterSampling::Mode::Auto         ? "auto"
                 : c.centers.mode == CenterSampling::Mode::Exhaustive ? "exhaustive"
                                                                       : "sample";
  p["center_count"] = c.centers.count;
  if (c.bound) p["bound"] = *c.bound == BoundKind::MainRes ? "mainres" : "hooley";
  p["main_indicator"] = c.main_indicator;
  p["export_table"] = c.export_table;
  if (c.family.kind == "catalog") {
    p["primes"] = c.catalog.primes;
    p["max_degree"] = c.catalog.max_degree;
    p["characters_per_modulus"] = c.catalog.characters_per_modulus;
  }
  j["parameters"] = p;
  if (!c.output_dir.empty()) j["output_dir"] = c.output_dir;
  return j;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  json j;
  const auto ext = path.extension().string();
  if (ext == ".json") {
    try {
      j = json::parse(text);
    } catch (const json::parse_error& ex) {
      throw Error(ErrorCode::ConfigParse, path.string() + ": " + ex.what());
    }
  } else if (ext == ".toml") {
    j = parse_toml(text);
  } else {
    throw Error(ErrorCode::ConfigParse, "config must end in .toml or .json: " + path.string());
  }
  auto c = config_from_json(j);
  c.base_dir = path.parent_path();
  return c;
}

}  // namespace hooleyff::cli
