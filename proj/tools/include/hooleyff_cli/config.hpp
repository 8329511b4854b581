#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hooleyff/experiments.hpp"

namespace hooleyff::cli {

enum class ExperimentKind { Sweep, Mordell, Variance, Covariance, Control, IdentitySuite };

std::string experiment_name(ExperimentKind k);

/// A trace-function family as written in the config. Fields not used by the
/// kind must be absent.
struct FamilyConfig {
  std::string kind;  // mixed-char | kloosterman | value-set | custom | catalog
  // mixed-char
  std::vector<std::uint64_t> exponents;
  nlohmann::json F, a, b;  // T-polynomials; for kloosterman `b` is a polynomial in u
  // kloosterman
  unsigned k = 2;
  // value-set
  nlohmann::json P;
  // custom
  std::string table;
  // translate the table by this residue index after construction
  std::uint64_t shift = 0;
  // metadata overrides
  std::optional<unsigned> rank;
  std::optional<unsigned> conductor;
};

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::Sweep;
  std::string name;
  std::uint64_t seed = 0;

  std::uint32_t p = 0;
  std::uint32_t e = 1;
  std::optional<std::vector<std::uint32_t>> field_modulus;
  nlohmann::json g;  // modulus in u (the irreducible pi / P for mordell and variance)

  FamilyConfig family;
  std::optional<FamilyConfig> second;  // covariance only

  // parameters; empty lists mean "every admissible value"
  std::vector<int> n;
  std::vector<std::uint64_t> X;
  std::vector<int> k;
  std::vector<int> m_small;
  CenterSampling centers;
  std::optional<BoundKind> bound;
  bool main_indicator = false;
  bool export_table = false;
  CatalogSweepOptions catalog;

  std::string output_dir;
  /// Directory of the config file; relative table paths resolve against it.
  std::filesystem::path base_dir;
};

/// Validates and converts. Unknown keys are rejected by name (Validation);
/// type mismatches are ConfigParse.
ExperimentConfig config_from_json(const nlohmann::json& j);
/// Canonical JSON form; config_from_json(config_to_json(c)) reproduces c.
nlohmann::json config_to_json(const ExperimentConfig& c);

/// Reads a .toml or .json config. Throws Io, ConfigParse, Validation.
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace hooleyff::cli
