#include "hooleyff_cli/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "hooleyff/error.hpp"
#include "hooleyff/experiments.hpp"
#include "hooleyff/serialize.hpp"
#include "hooleyff/trace_function.hpp"

namespace hooleyff::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

class Csv {
 public:
  explicit Csv(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  std::string text() const {
    std::string out;
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += quote(row[i]);
      }
      out += '\n';
    }
    return out;
  }
  std::size_t data_rows() const { return rows_.size() - 1; }

 private:
  static std::string quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
  }
  std::vector<std::vector<std::string>> rows_;
};

std::string r(double x) { return format_real(x); }
std::string b(bool x) { return x ? "true" : "false"; }
std::string i(std::int64_t x) { return std::to_string(x); }
std::string u(std::uint64_t x) { return std::to_string(x); }

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

std::uint64_t power(std::uint64_t q, int k) {
  std::uint64_t x = 1;
  for (int j = 0; j < k; ++j) x *= q;
  return x;
}

std::vector<int> all_up_to(int d) {
  std::vector<int> out;
  for (int n = 0; n <= d; ++n) out.push_back(n);
  return out;
}

/// Exponent of X as a power of q, or XNotPowerOfQ.
int log_q(std::uint64_t q, std::uint64_t X) {
  const auto k = exact_log(q, X);
  if (!k) throw Error(ErrorCode::XNotPowerOfQ, "X = " + u(X) + " is not a power of q = " + u(q));
  return *k;
}

struct Family {
  std::optional<TraceFunction> t;
  std::optional<MixedCharSpec> spec;
};

Family build_family(const FamilyConfig& f, const ResidueRing& ring, const fs::path& base_dir,
                    std::vector<std::string>& warnings) {
  const Field& K = ring.field();
  Family out;
  if (f.kind == "mixed-char") {
    MixedCharSpec spec{MultChar::create(ring, f.exponents), tpoly_from_json(K, f.F), tpoly_from_json(K, f.a),
                       tpoly_from_json(K, f.b)};
    out.t = from_mixed_char(spec, "mixed-char");
    out.spec = std::move(spec);
  } else if (f.kind == "kloosterman") {
    const KloostermanSpec spec{f.k, poly_from_json(K, f.b), f.conductor.value_or(0)};
    out.t = from_kloosterman(spec, ring, "kloosterman k=" + std::to_string(f.k));
  } else if (f.kind == "value-set") {
    out.t = value_set(tpoly_from_json(K, f.P), ring).indicator;
  } else if (f.kind == "custom") {
    fs::path path = f.table;
    if (path.is_relative()) path = base_dir / path;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open table " + path.string());
    if (!f.rank || !f.conductor)
      warnings.push_back("custom table without rank/conductor metadata; using rank 1, conductor 0");
    out.t = read_table_csv(in, ring, f.rank.value_or(1), f.conductor.value_or(0), path.filename().string());
  } else {
    throw Error(ErrorCode::Validation, "family kind '" + f.kind + "' does not build a single table");
  }
  if (f.rank) out.t->rank_r = *f.rank;
  if (f.conductor) out.t->conductor_c = *f.conductor;
  if (f.shift != 0) {
    if (f.shift >= ring.size())
      throw Error(ErrorCode::Validation, "family.shift = " + u(f.shift) + " is not a residue index below |g| = " +
                                             u(ring.size()));
    out.t = translate(*out.t, f.shift);
  }
  return out;
}

/// Everything a single-modulus experiment needs.
struct Setup {
  PolyRing R;
  ResidueRing ring;
};

Setup make_setup(const ExperimentConfig& c, std::vector<std::string>& warnings) {
  PolyRing R(Field::create(c.p, c.e, c.field_modulus));
  Poly g = poly_from_json(R.field(), c.g);
  if (g.degree() < 1) throw Error(ErrorCode::Validation, "g must have degree at least 1");
  if (g.coeff(g.degree()) != R.field().one()) {
    warnings.push_back("g = " + poly_to_text(R.field(), g) + " is not monic; normalized to " +
                       poly_to_text(R.field(), R.monic(g)));
    g = R.monic(g);
  }
  auto ring = ResidueRing::create(R, g, c.seed);
  return {std::move(R), std::move(ring)};
}

json ring_json(const ResidueRing& ring) {
  json factors = json::array();
  for (const auto& pi : ring.factors()) factors.push_back(poly_to_text(ring.field(), pi));
  return {{"field", field_to_json(ring.field())},
          {"g", poly_to_text(ring.field(), ring.modulus())},
          {"size", ring.size()},
          {"factors", factors}};
}

struct Report {
  Csv csv{{}};
  json summary = json::object();
  bool asserted_ok = true;
  std::string line;
  std::string gnuplot;  // plot commands, without the preamble
};

std::string status_word(bool ok) { return ok ? "PASS" : "FAIL"; }

Report run_sweep(const ExperimentConfig& c, unsigned jobs, std::vector<std::string>& warnings,
                 std::optional<TraceFunction>& exported) {
  Report rep;
  rep.csv = Csv({"label", "n", "center", "sum_re", "sum_im", "abs_sum", "bound", "ratio", "log10_ratio", "pass"});
  auto add_rows = [&](const SumReport& sr) {
    for (const auto& row : sr.rows)
      rep.csv.add({row.label, i(row.n), u(row.center), r(row.sum.real()), r(row.sum.imag()), r(row.abs_sum),
                   r(row.bound), r(row.ratio), r(row.log10_ratio), b(row.pass)});
  };
  rep.gnuplot = "set ylabel 'log10(|sum| / bound)'\nplot '%CSV%' using 0:9 with points pt 7 ps 0.4 title 'rows', 0 "
                "with lines title 'bound'\n";

  if (c.family.kind == "catalog") {
    auto opts = c.catalog;
    opts.jobs = jobs;
    const auto result = catalog_sweep(opts);
    add_rows(result.report);
    rep.asserted_ok = result.report.all_pass();
    rep.summary = {{"bound", "hooley"},
                   {"asserted", true},
                   {"specs", result.specs},
                   {"skipped", result.skipped},
                   {"rows", result.report.rows.size()},
                   {"sums_checked", result.report.sums_checked},
                   {"failed", result.report.failed},
                   {"max_ratio", result.report.max_ratio}};
    std::ostringstream line;
    line << "sweep " << c.name << ": " << result.specs << " specs, " << result.report.rows.size() << " rows, "
         << result.report.failed << " failures, max ratio " << r(result.report.max_ratio) << " -> "
         << status_word(rep.asserted_ok);
    rep.line = line.str();
    return rep;
  }

  const Setup s = make_setup(c, warnings);
  Family fam = build_family(c.family, s.ring, c.base_dir, warnings);
  const TraceFunction& t = *fam.t;
  const BoundKind kind = c.bound.value_or(fam.spec ? BoundKind::HooleyCor : BoundKind::MainRes);
  const BoundSpec bound = kind == BoundKind::HooleyCor ? BoundSpec::hooley(*fam.spec) : BoundSpec::mainres(t);
  const auto n_values = c.n.empty() ? all_up_to(s.ring.degree()) : c.n;
  const auto result = sweep_short_sums(t, n_values, c.centers, bound, jobs);
  add_rows(result);
  // Value-set indicators and Kloosterman tables carry declared rather than
  // derived metadata here, so their rows are reported, not asserted.
  const bool asserted = c.family.kind == "mixed-char" || c.family.kind == "custom";
  if (!asserted && !result.all_pass())
    warnings.push_back(u(result.failed) + " rows exceed the bound under the declared metadata (reported only)");
  rep.asserted_ok = !asserted || result.all_pass();
  rep.summary = {{"bound", kind == BoundKind::HooleyCor ? "hooley" : "mainres"},
                 {"asserted", asserted},
                 {"ring", ring_json(s.ring)},
                 {"rank", t.rank_r},
                 {"conductor", t.conductor_c},
                 {"rows", result.rows.size()},
                 {"failed", result.failed},
                 {"max_ratio", result.max_ratio}};
  std::ostringstream line;
  line << "sweep " << c.name << ": " << result.rows.size() << " rows, " << result.failed << " failures, max ratio "
       << r(result.max_ratio) << " -> " << (asserted ? status_word(rep.asserted_ok) : "REPORTED");
  rep.line = line.str();
  exported = t;
  return rep;
}

Report run_control(const ExperimentConfig& c, std::vector<std::string>& warnings) {
  Report rep;
  rep.csv = Csv({"g", "m_small", "sum_re", "sum_im", "expected", "identity_ok", "naive_bound", "naive_pass",
                 "expected_violation"});
  const Setup s = make_setup(c, warnings);
  const int deg = s.ring.degree();
  std::vector<int> ms = c.m_small;
  if (ms.empty())
    for (int m = 0; 2 * m < deg - 1; ++m) ms.push_back(m);
  if (ms.empty())
    throw Error(ErrorCode::RangeViolation,
                "no m_small satisfies 2 m_small < deg g - 1 for deg g = " + std::to_string(deg));
  const std::string g_text = poly_to_text(s.R.field(), s.ring.modulus());
  std::size_t identity_failures = 0, violations = 0;
  for (int m : ms) {
    const auto res = square_phase_control(s.R, s.ring.modulus(), m);
    // The naive sqrt(q) X^{1/2} expectation is supposed to break here: that
    // is the point of the control.
    const bool expected_violation = !res.naive_pass;
    identity_failures += !res.identity_ok;
    violations += expected_violation;
    rep.csv.add({g_text, i(m), r(res.sum.real()), r(res.sum.imag()), r(res.expected), b(res.identity_ok),
                 r(res.naive_bound), b(res.naive_pass), b(expected_violation)});
  }
  if (violations == 0)
    warnings.push_back("no m_small exceeds the naive bound; raise deg g to see the expected violation");
  rep.asserted_ok = identity_failures == 0;
  rep.summary = {{"ring", ring_json(s.ring)},
                 {"rows", ms.size()},
                 {"identity_failures", identity_failures},
                 {"expected_violations", violations}};
  rep.line = "control " + c.name + ": " + u(ms.size()) + " rows, " + u(identity_failures) + " identity failures, " +
             u(violations) + " expected violations -> " + status_word(rep.asserted_ok);
  rep.gnuplot = "set logscale y\nset xlabel 'm_small'\nplot '%CSV%' using 2:3 with linespoints title 'sum', '%CSV%' "
                "using 2:7 with linespoints title 'naive bound'\n";
  return rep;
}

Report run_mordell(const ExperimentConfig& c, std::vector<std::string>& warnings) {
  Report rep;
  rep.csv = Csv({"X", "n", "d", "count", "set_size", "main_term", "error_budget", "deviation", "ratio"});
  if (c.family.kind != "value-set") throw Error(ErrorCode::Validation, "mordell needs family.kind = value-set");
  const Setup s = make_setup(c, warnings);
  const TPoly P = tpoly_from_json(s.R.field(), c.family.P);
  std::vector<std::uint64_t> Xs = c.X;
  for (int k : c.k) Xs.push_back(power(s.R.q(), k));
  if (Xs.empty())
    for (int k = 0; k <= s.ring.degree(); ++k) Xs.push_back(power(s.R.q(), k));
  double max_ratio = 0.0;
  for (std::uint64_t X : Xs) {
    const auto res = mordell_experiment(P, s.ring, X);
    max_ratio = std::max(max_ratio, res.ratio);
    rep.csv.add({u(X), i(res.n), u(res.d), u(res.count), u(res.set_size), r(res.main_term), r(res.error_budget),
                 r(res.deviation), r(res.ratio)});
  }
  rep.summary = {{"ring", ring_json(s.ring)}, {"rows", Xs.size()}, {"max_ratio", max_ratio}, {"asserted", false}};
  rep.line = "mordell " + c.name + ": " + u(Xs.size()) + " rows, max deviation/budget " + r(max_ratio) +
             " (reported) -> PASS";
  rep.gnuplot = "set logscale xy\nset xlabel 'X'\nplot '%CSV%' using 1:8 with linespoints title '|count - main|', "
                "'%CSV%' using 1:7 with linespoints title 'error budget'\n";
  return rep;
}

std::vector<int> k_values(const ExperimentConfig& c, std::uint32_t q, int deg) {
  std::vector<int> ks = c.k;
  for (auto X : c.X) ks.push_back(log_q(q, X));
  return ks.empty() ? all_up_to(deg) : ks;
}

Report run_variance(const ExperimentConfig& c, unsigned jobs, std::vector<std::string>& warnings,
                    std::optional<TraceFunction>& exported) {
  Report rep;
  rep.csv = Csv({"k", "X", "variance", "expansion", "main_term", "error_budget", "deviation", "ratio", "identity_ok",
                 "degenerate"});
  const Setup s = make_setup(c, warnings);
  const TraceFunction t = *build_family(c.family, s.ring, c.base_dir, warnings).t;
  const auto ks = k_values(c, s.R.q(), s.ring.degree());
  std::size_t identity_failures = 0;
  double max_ratio = 0.0;
  bool degenerate = false;
  for (int k : ks) {
    if (k < 0) throw Error(ErrorCode::RangeViolation, "k = " + std::to_string(k) + " is negative");
    const std::uint64_t X = power(s.R.q(), std::min(k, 63));
    const auto res = variance_experiment(t, X, jobs);
    const double ratio = res.error_budget > 0 ? res.deviation / res.error_budget : 0.0;
    max_ratio = std::max(max_ratio, ratio);
    identity_failures += !res.identity_ok;
    degenerate = degenerate || res.degenerate;
    rep.csv.add({i(res.k), u(X), r(res.variance), r(res.expansion), r(res.main_term), r(res.error_budget),
                 r(res.deviation), r(ratio), b(res.identity_ok), b(res.degenerate)});
  }
  if (degenerate) warnings.push_back("constant table: the variance hypotheses fail, magnitude rows are a control");
  rep.asserted_ok = identity_failures == 0;
  rep.summary = {{"ring", ring_json(s.ring)},
                 {"rank", t.rank_r},
                 {"conductor", t.conductor_c},
                 {"rows", ks.size()},
                 {"identity_failures", identity_failures},
                 {"max_deviation_over_budget", max_ratio},
                 {"degenerate", degenerate}};
  rep.line = "variance " + c.name + ": " + u(ks.size()) + " rows, " + u(identity_failures) +
             " identity failures, max deviation/budget " + r(max_ratio) + " (reported) -> " +
             status_word(rep.asserted_ok);
  rep.gnuplot = "set xlabel 'k'\nplot '%CSV%' using 1:3 with linespoints title 'variance', '%CSV%' using 1:(1+$6) "
                "with lines title '1 + budget', '%CSV%' using 1:(1-$6) with lines title '1 - budget'\n";
  exported = t;
  return rep;
}

Report run_covariance(const ExperimentConfig& c, unsigned jobs, std::vector<std::string>& warnings,
                      std::optional<TraceFunction>& exported) {
  Report rep;
  rep.csv = Csv({"k", "direct_re", "direct_im", "expansion_re", "expansion_im", "main_term", "error_budget",
                 "deviation", "within_budget", "identity_ok"});
  const Setup s = make_setup(c, warnings);
  const TraceFunction t1 = *build_family(c.family, s.ring, c.base_dir, warnings).t;
  const TraceFunction t2 = *build_family(*c.second, s.ring, c.base_dir, warnings).t;
  const auto ks = k_values(c, s.R.q(), s.ring.degree());
  std::size_t identity_failures = 0, outside = 0;
  for (int k : ks) {
    const auto res = covariance_experiment(t1, t2, k, c.main_indicator, jobs);
    identity_failures += !res.identity_ok;
    outside += !res.within_budget;
    rep.csv.add({i(res.k), r(res.direct.real()), r(res.direct.imag()), r(res.expansion.real()),
                 r(res.expansion.imag()), r(res.main_term), r(res.error_budget), r(res.deviation),
                 b(res.within_budget), b(res.identity_ok)});
  }
  rep.asserted_ok = identity_failures == 0;
  rep.summary = {{"ring", ring_json(s.ring)},
                 {"main_indicator", c.main_indicator},
                 {"rows", ks.size()},
                 {"identity_failures", identity_failures},
                 {"outside_budget", outside}};
  rep.line = "covariance " + c.name + ": " + u(ks.size()) + " rows, " + u(identity_failures) +
             " identity failures, " + u(outside) + " outside budget (reported) -> " + status_word(rep.asserted_ok);
  rep.gnuplot = "set xlabel 'k'\nplot '%CSV%' using 1:8 with linespoints title '|cov - main|', '%CSV%' using 1:7 "
                "with linespoints title 'error budget'\n";
  exported = t1;
  return rep;
}

Report run_identity(const ExperimentConfig& c, unsigned jobs, std::vector<std::string>& warnings,
                    std::optional<TraceFunction>& exported) {
  Report rep;
  rep.csv = Csv({"check", "max_error", "pass"});
  const Setup s = make_setup(c, warnings);
  const TraceFunction t = *build_family(c.family, s.ring, c.base_dir, warnings).t;
  const auto checks = identity_suite(t, c.centers, jobs);
  std::size_t failures = 0;
  double max_error = 0.0;
  for (const auto& chk : checks) {
    failures += !chk.pass;
    max_error = std::max(max_error, chk.max_error);
    rep.csv.add({chk.name, r(chk.max_error), b(chk.pass)});
  }
  rep.asserted_ok = failures == 0;
  rep.summary = {{"ring", ring_json(s.ring)},
                 {"checks", checks.size()},
                 {"failed", failures},
                 {"max_error", max_error},
                 {"tolerance", kIdentityTolerance}};
  rep.line = "identity-suite " + c.name + ": " + u(checks.size()) + " checks, " + u(failures) +
             " failures, max error " + r(max_error) + " -> " + status_word(rep.asserted_ok);
  rep.gnuplot = "set logscale y\nset style data histograms\nset style fill solid\nplot '%CSV%' using "
                "($2+1e-300):xtic(1) title 'max error'\n";
  exported = t;
  return rep;
}

fs::path resolve_out_dir(const ExperimentConfig& c, const RunOptions& o) {
  if (o.out_dir) return *o.out_dir;
  if (const char* env = std::getenv("HOOLEYFF_OUT"); env && *env) return env;
  if (!c.output_dir.empty()) {
    fs::path p = c.output_dir;
    return p.is_relative() ? c.base_dir / p : p;
  }
  return ".";
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
    s.replace(pos, from.size(), to);
  return s;
}

}  // namespace

RunOutcome run_experiment(ExperimentConfig c, const RunOptions& o) {
  if (o.seed) c.seed = *o.seed;
  c.centers.seed = c.seed;
  const unsigned jobs = std::max(1u, o.jobs);
  RunOutcome outcome;
  std::optional<TraceFunction> exported;
  Report rep;
  switch (c.experiment) {
    case ExperimentKind::Sweep: rep = run_sweep(c, jobs, outcome.warnings, exported); break;
    case ExperimentKind::Control: rep = run_control(c, outcome.warnings); break;
    case ExperimentKind::Mordell: rep = run_mordell(c, outcome.warnings); break;
    case ExperimentKind::Variance: rep = run_variance(c, jobs, outcome.warnings, exported); break;
    case ExperimentKind::Covariance: rep = run_covariance(c, jobs, outcome.warnings, exported); break;
    case ExperimentKind::IdentitySuite: rep = run_identity(c, jobs, outcome.warnings, exported); break;
  }

  const fs::path dir = resolve_out_dir(c, o);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create output directory " + dir.string() + ": " + ec.message());
  outcome.csv = dir / (c.name + ".csv");
  outcome.json = dir / (c.name + ".json");
  write_file(outcome.csv, rep.csv.text());

  if (c.export_table) {
    if (!exported) {
      outcome.warnings.push_back("export_table ignored: this experiment has no single table");
    } else {
      std::ostringstream table;
      write_table_csv(table, *exported);
      write_file(dir / (c.name + "_table.csv"), table.str());
      const json sidecar = {{"schema", "hooley-ff/table/v1"},
                            {"field", field_to_json(exported->ring.field())},
                            {"g", poly_to_json(exported->ring.field(), exported->ring.modulus())},
                            {"family", family_name(exported->family)},
                            {"label", exported->label},
                            {"rank", exported->rank_r},
                            {"conductor", exported->conductor_c}};
      write_file(dir / (c.name + "_table.json"), sidecar.dump(2) + "\n");
    }
  }

  if (o.gnuplot) {
    std::string script = "# gnuplot script for " + c.name + ".csv\nset datafile separator ','\nset key "
                         "top left\nset terminal pngcairo size 900,600\nset output '" +
                         c.name + ".png'\n";
    script += replace_all(rep.gnuplot, "%CSV%", c.name + ".csv");
    write_file(dir / (c.name + ".gp"), script);
  }

  outcome.exit_code = rep.asserted_ok ? kExitPass : kExitCheckFailed;
  const json report = {{"schema", kReportSchema},
                       {"experiment", experiment_name(c.experiment)},
                       {"name", c.name},
                       {"config", [&] {
                          json j = config_to_json(c);
                          j.erase("output_dir");
                          return j;
                        }()},
                       {"summary", rep.summary},
                       {"rows", rep.csv.data_rows()},
                       {"status", rep.asserted_ok ? "pass" : "fail"},
                       {"exit_code", outcome.exit_code},
                       {"warnings", outcome.warnings}};
  write_file(outcome.json, report.dump(2) + "\n");
  outcome.summary = rep.line;
  return outcome;
}

int run_config_file(const fs::path& path, const RunOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const auto outcome = run_experiment(load_config(path), options);
    for (const auto& w : outcome.warnings) err << "warning: " << w << '\n';
    out << outcome.summary << '\n';
    return outcome.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const json::exception& e) {
    err << "error: ConfigParse: " << e.what() << '\n';
  } catch (const fs::filesystem_error& e) {
    err << "error: Io: " << e.what() << '\n';
  }
  return kExitConfigError;
}

namespace {

std::string tpoly_text(const Field& K, const TPoly& f) {
  std::string out;
  for (std::size_t j = f.coeffs.size(); j-- > 0;) {
    const Poly& c = f.coeffs[j];
    if (c.is_zero()) continue;
    std::string coeff = poly_to_text(K, c);
    if (c.degree() > 0 && j > 0) coeff = "(" + coeff + ")";
    if (!out.empty()) out += "+";
    if (j == 0)
      out += coeff;
    else
      out += (coeff == "1" ? "" : coeff + "*") + (j == 1 ? std::string("T") : "T^" + std::to_string(j));
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::vector<std::string> list_catalog(std::string_view filter) {
  // Hypotheses are checked modulo u (u^2 + 2) over F_5: one linear and one
  // quadratic factor.
  const PolyRing R(Field::create(5, 1));
  const Poly u = R.u();
  const Poly g = R.mul(u, R.add(R.mul(u, u), R.from_integer(2)));
  const ResidueRing ring = ResidueRing::create(R, g);
  const MultChar principal = MultChar::create(ring, std::vector<std::uint64_t>(ring.factors().size(), 0));
  const std::string where = " mod " + poly_to_text(R.field(), g) + " over F_5";

  std::vector<std::string> lines;
  auto mixed = [&](const std::string& name, const TPoly& F, const TPoly& a, const TPoly& b_) {
    const auto violations = check_mixed_char_hypotheses({principal, F, a, b_});
    std::string status = violations.empty()
                             ? "hypotheses ok" + where
                             : "hypotheses FAIL at " + poly_to_text(R.field(), violations.front().pi) + ": " +
                                   violations.front().clause;
    lines.push_back(name + ": F=" + tpoly_text(R.field(), F) + ", a=" + tpoly_text(R.field(), a) +
                    ", b=" + tpoly_text(R.field(), b_) + " [" + status + "]");
  };

  lines.push_back("family mixed-char: chi(F(u,h)) e(a(u,h)/b(u,h) / g), rank 1, conductor max deg F + 2 deg b");
  for (unsigned k : {2u, 3u}) {
    // Built once so the listed metadata is the constructor's.
    const auto t = from_kloosterman({k, R.one(), 0}, ring);
    lines.push_back("kloosterman k=" + std::to_string(k) + ": normalized Kl_" + std::to_string(k) +
                    "(a; b), rank " + std::to_string(t.rank_r) + ", conductor " + std::to_string(t.conductor_c) +
                    " [built" + where + "]");
  }
  lines.push_back("family value-set: indicator of P(F_q[u]/(pi)) for irreducible pi, rank and conductor d!");
  lines.push_back("family custom: CSV table residue_index,residue_poly,re,im with declared rank/conductor");
  const TPoly one{{R.one()}}, zero{}, T = TPoly::t(R);
  mixed("hooley e(a·h̄/g)", one, one, T);
  mixed("burgess χ(F(h))", T, zero, one);
  for (const auto& tr : catalog_triples(R))
    mixed("catalog " + tr.name + " (p >= " + std::to_string(tr.min_p) + ")", tr.F, tr.a, tr.b);

  std::vector<std::string> out;
  for (auto& line : lines)
    if (filter.empty() || line.find(filter) != std::string::npos) out.push_back(std::move(line));
  return out;
}

}  // namespace hooleyff::cli
