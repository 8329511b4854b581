#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hooleyff/bounds.hpp"
#include "hooleyff/transforms.hpp"

namespace hooleyff {

enum class BoundKind { MainRes, HooleyCor };

/// Which formula a sweep compares against, with the metadata it consumes.
struct BoundSpec {
  BoundKind kind = BoundKind::MainRes;
  unsigned rank = 1;
  unsigned conductor = 0;
  int degT_F = 0;  // HooleyCor only; kNegInfDegree when F vanishes
  int degT_b = 0;

  static BoundSpec mainres(const TraceFunction& t) { return {BoundKind::MainRes, t.rank_r, t.conductor_c, 0, 0}; }
  static BoundSpec hooley(const MixedCharSpec& spec);

  double evaluate(std::uint32_t q, int n, int deg_g) const;
};

/// Exhaustive when |g| <= kExhaustiveCenterLimit (Auto) or on request,
/// otherwise `count` centers drawn from mt19937_64(seed), sorted, distinct.
struct CenterSampling {
  enum class Mode { Auto, Exhaustive, Sample };
  static constexpr std::uint64_t kExhaustiveCenterLimit = 729;  // 3^6

  Mode mode = Mode::Auto;
  std::size_t count = 64;
  std::uint64_t seed = 0;

  std::vector<std::uint64_t> select(std::uint64_t ring_size) const;
};

struct SumRow {
  std::string label;
  int n = 0;
  std::uint64_t center = 0;
  Complex sum;
  double abs_sum = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
  double log10_ratio = 0.0;
  bool pass = true;
};

SumRow make_sum_row(std::string label, int n, std::uint64_t center, Complex sum, double bound);

struct SumReport {
  nlohmann::json config = nlohmann::json::object();
  std::vector<SumRow> rows;
  double max_ratio = 0.0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// Short sums compared against the bound; may exceed rows.size() when rows
  /// summarize several sums.
  std::uint64_t sums_checked = 0;

  void add(SumRow row, std::uint64_t sums = 1);
  bool all_pass() const noexcept { return failed == 0; }
};

/// One row per (n, center), ordered by n then center.
SumReport sweep_short_sums(const TraceFunction& t, std::span<const int> n_values, const CenterSampling& centers,
                           const BoundSpec& bound, unsigned jobs = 1);

/// A hypothesis-satisfying (F, a, b) template for mixed-character specs.
struct CatalogTriple {
  std::string name;
  std::string kind;  // burgess | hooley | mixed
  TPoly F, a, b;
  std::uint32_t min_p = 2;
};

/// Fixed inventory of triples over the given ring, degrees in T at most 2.
std::vector<CatalogTriple> catalog_triples(const PolyRing& ring);

struct CatalogSweepOptions {
  std::vector<std::uint32_t> primes{3, 5};
  int max_degree = 3;
  std::size_t characters_per_modulus = 200;
  unsigned jobs = 1;
};

struct CatalogSweepResult {
  SumReport report;
  std::size_t specs = 0;    // (g, chi, triple) combinations evaluated
  std::size_t skipped = 0;  // (g, triple) pairs failing a hypothesis clause
};

/// Every squarefree monic g of degree 1..max_degree over each F_p, every
/// primitive chi (up to the limit), every catalog triple valid mod g, every
/// n <= deg g and every center, against the corollary bound. Emits one row
/// per (g, triple, n): the worst (chi, center).
CatalogSweepResult catalog_sweep(const CatalogSweepOptions& options);

struct SquarePhaseResult {
  int m_small = 0;
  Complex sum;
  double expected = 0.0;
  bool identity_ok = false;
  /// sqrt(q) X^{1/2}: the MainRes shape with the |g| factor dropped.
  double naive_bound = 0.0;
  bool naive_pass = false;
};

/// sum_{deg f < m_small} e(f^2 / g). Throws RangeViolation unless
/// 2 m_small < deg g - 1.
SquarePhaseResult square_phase_control(const PolyRing& ring, const Poly& g, int m_small);

struct MordellResult {
  unsigned d = 0;
  int n = 0;
  std::uint64_t count = 0;
  std::uint64_t set_size = 0;
  double main_term = 0.0;
  double error_budget = 0.0;
  double deviation = 0.0;
  double ratio = 0.0;  // deviation / error_budget
};

/// Counts deg f < n with f in P(F_q[u]/(pi)). Throws CharacteristicTooSmall
/// (p <= deg_T P), XNotPowerOfQ, XTooLarge (X > |pi|), NotIrreducible.
MordellResult mordell_experiment(const TPoly& P, const ResidueRing& pi_ring, std::uint64_t X);

struct VarianceResult {
  int k = 0;
  double variance = 0.0;
  double expansion = 0.0;
  double main_term = 1.0;
  double error_budget = 0.0;
  double deviation = 0.0;  // |variance - 1|
  bool identity_ok = false;
  bool degenerate = false;  // constant table: the theorem's hypotheses fail
};

/// |P|^{-1} sum_c |X^{-1/2} S(c)|^2 directly and as sum_{deg h < k} of the
/// autocorrelation. Throws NotIrreducible, XNotPowerOfQ, XTooLarge.
VarianceResult variance_experiment(const TraceFunction& t, std::uint64_t X, unsigned jobs = 1);

/// Direct windowed covariance q^{-m} sum_c X^{-1} S1(c) conj(S2(c)).
Complex windowed_covariance(const TraceFunction& t1, const TraceFunction& t2, int k);
/// sum_{deg h < k} autocorrelation(t1, t2, h).
Complex autocorrelation_expansion(const TraceFunction& t1, const TraceFunction& t2, int k, unsigned jobs = 1);

struct CovarianceResult {
  int k = 0;
  Complex direct;
  Complex expansion;
  double main_term = 0.0;
  double error_budget = 0.0;
  double deviation = 0.0;  // |direct - main_term|
  bool within_budget = false;
  bool identity_ok = false;
};

/// Throws RingMismatch, RangeViolation (k outside [0, deg P]).
CovarianceResult covariance_experiment(const TraceFunction& t1, const TraceFunction& t2, int k, bool main_indicator,
                                       unsigned jobs = 1);

struct IdentityCheck {
  std::string name;
  double max_error = 0.0;
  bool pass = false;
};

inline constexpr double kIdentityTolerance = 1e-9;

/// Exact identities on one table: Fourier inversion, Parseval, the double
/// transform, fast vs naive transform, the perpendicular-space restriction
/// (every n, `centers` sampled centers) and the autocorrelation expansion.
std::vector<IdentityCheck> identity_suite(const TraceFunction& t, const CenterSampling& centers, unsigned jobs = 1);

}  // namespace hooleyff
