#include "hooleyff/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <limits>
#include <optional>
#include <set>
#include <string>

#include "hooleyff/detail/digits.hpp"
#include "hooleyff/detail/parallel.hpp"
#include "hooleyff/error.hpp"
#include "hooleyff/serialize.hpp"

namespace hooleyff {

BoundSpec BoundSpec::hooley(const MixedCharSpec& spec) {
  BoundSpec b;
  b.kind = BoundKind::HooleyCor;
  b.degT_F = mixed_char_degree_F(spec);
  b.degT_b = mixed_char_degree_b(spec);
  return b;
}

double BoundSpec::evaluate(std::uint32_t q, int n, int deg_g) const {
  if (kind == BoundKind::MainRes)
    return mainres_bound(q, detail::ipow(q, static_cast<unsigned>(n)), deg_g, rank, conductor).value;
  return hooley_cor_bound(q, n, deg_g, degT_F, degT_b).value;
}

std::vector<std::uint64_t> CenterSampling::select(std::uint64_t ring_size) const {
  const bool all = mode == Mode::Exhaustive || (mode == Mode::Auto && ring_size <= kExhaustiveCenterLimit) ||
                   count >= ring_size;
  std::vector<std::uint64_t> out;
  if (all) {
    out.resize(ring_size);
    for (std::uint64_t c = 0; c < ring_size; ++c) out[c] = c;
    return out;
  }
  // Raw engine output reduced mod |g|: distributions are not portable across
  // standard libraries, the engine is.
  std::mt19937_64 rng(seed);
  std::set<std::uint64_t> picked;
  while (picked.size() < count) picked.insert(rng() % ring_size);
  return {picked.begin(), picked.end()};
}

SumRow make_sum_row(std::string label, int n, std::uint64_t center, Complex sum, double bound) {
  SumRow r;
  r.label = std::move(label);
  r.n = n;
  r.center = center;
  r.sum = sum;
  r.abs_sum = std::abs(sum);
  r.bound = bound;
  r.ratio = r.abs_sum / bound;
  r.log10_ratio = r.abs_sum > 0 ? std::log10(r.abs_sum) - std::log10(bound) : -std::numeric_limits<double>::infinity();
  r.pass = r.abs_sum <= bound + 1e-9;
  return r;
}

void SumReport::add(SumRow row, std::uint64_t sums) {
  max_ratio = std::max(max_ratio, row.ratio);
  (row.pass ? passed : failed) += 1;
  sums_checked += sums;
  rows.push_back(std::move(row));
}

SumReport sweep_short_sums(const TraceFunction& t, std::span<const int> n_values, const CenterSampling& centers,
                           const BoundSpec& bound, unsigned jobs) {
  const auto chosen = centers.select(t.size());
  const int m = t.ring.degree();
  for (int n : n_values)
    if (n < 0 || n > m)
      throw Error(ErrorCode::RangeViolation, "n = " + std::to_string(n) + " outside [0, deg g = " + std::to_string(m) + "]");

  std::vector<std::vector<SumRow>> per_n(n_values.size());
  detail::parallel_for(n_values.size(), jobs, [&](std::uint64_t i) {
    const int n = n_values[i];
    const double b = bound.evaluate(t.ring.q(), n, m);
    const auto sums = short_sums_all_centers(t, n);
    per_n[i].reserve(chosen.size());
    for (auto c : chosen) per_n[i].push_back(make_sum_row(t.label, n, c, sums[c], b));
  });
  SumReport report;
  for (auto& rows : per_n)
    for (auto& r : rows) report.add(std::move(r));
  return report;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

TPoly tp(std::initializer_list<Poly> c) { return TPoly{std::vector<Poly>(c)}; }

}  // namespace

std::vector<CatalogTriple> catalog_triples(const PolyRing& R) {
  const Poly zero;
  const Poly one = R.one();
  const Poly u = R.u();
  std::vector<CatalogTriple> out;
  out.push_back({"burgess chi(h)", "burgess", tp({zero, one}), TPoly{}, tp({one}), 2});
  out.push_back({"burgess chi(h+1)", "burgess", tp({one, one}), TPoly{}, tp({one}), 2});
  out.push_back({"burgess chi(h^2+h+1)", "burgess", tp({one, one, one}), TPoly{}, tp({one}), 2});
  out.push_back({"hooley e(1/h)", "hooley", tp({one}), tp({one}), tp({zero, one}), 2});
  out.push_back({"hooley e(1/(h^2+1))", "hooley", tp({one}), tp({one}), tp({one, zero, one}), 3});
  out.push_back({"mixed chi(h) e(1/(h+1))", "mixed", tp({zero, one}), tp({one}), tp({one, one}), 2});
  out.push_back({"mixed e(h^2/(h+1))", "mixed", tp({one}), tp({zero, zero, one}), tp({one, one}), 2});
  out.push_back({"mixed chi(h^2+1) e(h)", "mixed", tp({one, zero, one}), tp({zero, one}), tp({one}), 2});
  out.push_back({"mixed chi(h) e(h^2/(h+u))", "mixed", tp({zero, one}), tp({zero, zero, one}), tp({u, one}), 2});
  return out;
}

CatalogSweepResult catalog_sweep(const CatalogSweepOptions& options) {
  CatalogSweepResult result;
  for (std::uint32_t p : options.primes) {
    const PolyRing R(Field::create(p, 1));
    const auto triples = catalog_triples(R);
    for (int deg = 1; deg <= options.max_degree; ++deg) {
      const std::uint64_t lower = detail::ipow(p, static_cast<unsigned>(deg));
      for (std::uint64_t idx = 0; idx < lower; ++idx) {
        const Poly g = R.add(R.unrank(idx), Poly::monomial(R.field().one(), deg));
        std::optional<ResidueRing> ring;
        try {
          ring = ResidueRing::create(R, g);
        } catch (const Error& e) {
          if (e.code() == ErrorCode::NotSquarefree) continue;
          throw;
        }
        const auto exps = primitive_character_exponents(*ring, options.characters_per_modulus);
        if (exps.empty()) continue;
        const MultChar principal = MultChar::create(*ring, std::vector<std::uint64_t>(ring->factors().size(), 0));
        const std::string g_text = poly_to_text(R.field(), g);
        for (const auto& tr : triples) {
          if (p < tr.min_p) continue;
          const MixedCharSpec shape{principal, tr.F, tr.a, tr.b};
          if (!check_mixed_char_hypotheses(shape).empty()) {
            ++result.skipped;
            continue;
          }
          const BoundSpec bound = BoundSpec::hooley(shape);
          const auto skeleton = MixedCharSkeleton::build(*ring, tr.F, tr.a, tr.b);
          struct Worst {
            double abs = -1.0;
            Complex sum;
            std::uint64_t center = 0;
          };
          // worst[chi][n]
          std::vector<std::vector<Worst>> worst(exps.size(), std::vector<Worst>(deg + 1));
          detail::parallel_for(exps.size(), options.jobs, [&](std::uint64_t ci) {
            const auto chi = MultChar::create(*ring, exps[ci]);
            const TraceFunction t(*ring, skeleton.apply(chi), 1, 0, Family::MixedChar);
            for (int n = 0; n <= deg; ++n) {
              const auto sums = short_sums_all_centers(t, n);
              auto& w = worst[ci][n];
              for (std::uint64_t c = 0; c < sums.size(); ++c)
                if (std::abs(sums[c]) > w.abs + 1e-12) w = {std::abs(sums[c]), sums[c], c};
            }
          });
          result.specs += exps.size();
          for (int n = 0; n <= deg; ++n) {
            std::size_t best = 0;
            for (std::size_t ci = 1; ci < exps.size(); ++ci)
              if (worst[ci][n].abs > worst[best][n].abs + 1e-12) best = ci;
            std::string chi_text;
            for (auto k : exps[best]) chi_text += (chi_text.empty() ? "" : ".") + std::to_string(k);
            const std::string label =
                "p=" + std::to_string(p) + ";g=" + g_text + ";" + tr.name + ";chi=" + chi_text;
            result.report.add(make_sum_row(label, n, worst[best][n].center, worst[best][n].sum,
                                           bound.evaluate(p, n, deg)),
                              exps.size() * lower);
          }
        }
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Square-phase control

SquarePhaseResult square_phase_control(const PolyRing& ring, const Poly& g, int m_small) {
  const int m = g.degree();
  if (m_small < 0 || 2 * m_small >= m - 1)
    throw Error(ErrorCode::RangeViolation, "m_small = " + std::to_string(m_small) +
                                               " violates m_small < (deg g - 1)/2 with deg g = " + std::to_string(m));
  const AdditiveCharEvaluator e(ring.field());
  const std::uint32_t q = ring.q();
  SquarePhaseResult r;
  r.m_small = m_small;
  const std::uint64_t X = detail::ipow(q, static_cast<unsigned>(m_small));
  for (std::uint64_t f = 0; f < X; ++f) {
    const Poly fp = ring.unrank(f);
    r.sum += e(ring.mul(fp, fp), g);
  }
  r.expected = static_cast<double>(X);
  r.identity_ok = std::abs(r.sum - Complex(r.expected, 0.0)) <= kIdentityTolerance;
  r.naive_bound = std::sqrt(static_cast<double>(q) * static_cast<double>(X));
  r.naive_pass = std::abs(r.sum) <= r.naive_bound + 1e-9;
  return r;
}

// ---------------------------------------------------------------------------
// Mordell counting

MordellResult mordell_experiment(const TPoly& P, const ResidueRing& pi_ring, std::uint64_t X) {
  if (!pi_ring.is_irreducible()) throw Error(ErrorCode::NotIrreducible, "pi must be irreducible");
  const PolyRing& R = pi_ring.poly_ring();
  const int d = t_degree(R, P, pi_ring.modulus());
  if (d >= 1 && static_cast<std::uint32_t>(d) >= R.field().p())
    throw Error(ErrorCode::CharacteristicTooSmall,
                "p = " + std::to_string(R.field().p()) + " must exceed deg_T P = " + std::to_string(d));
  const auto n = exact_log(pi_ring.q(), X);
  if (!n) throw Error(ErrorCode::XNotPowerOfQ, "X = " + std::to_string(X) + " is not a power of q");
  if (X > pi_ring.size())
    throw Error(ErrorCode::XTooLarge, "X = " + std::to_string(X) + " exceeds |pi| = " + std::to_string(pi_ring.size()));
  const auto vs = value_set(P, pi_ring);
  MordellResult r;
  r.d = static_cast<unsigned>(d);
  r.n = *n;
  for (std::uint64_t f = 0; f < X; ++f) r.count += vs.members[f] ? 1 : 0;
  r.set_size = vs.count;
  r.main_term = static_cast<double>(vs.count) * static_cast<double>(X) / static_cast<double>(pi_ring.size());
  r.error_budget = mordell_error_budget(pi_ring.q(), X, pi_ring.degree(), r.d);
  r.deviation = std::abs(static_cast<double>(r.count) - r.main_term);
  r.ratio = r.deviation / r.error_budget;
  return r;
}

// ---------------------------------------------------------------------------
// Variance and covariance

Complex windowed_covariance(const TraceFunction& t1, const TraceFunction& t2, int k) {
  if (!(t1.ring == t2.ring)) throw Error(ErrorCode::RingMismatch, "covariance of tables over different rings");
  const auto s1 = short_sums_all_centers(t1, k);
  const auto s2 = short_sums_all_centers(t2, k);
  Complex acc{};
  for (std::size_t c = 0; c < s1.size(); ++c) acc += s1[c] * std::conj(s2[c]);
  const double X = static_cast<double>(detail::ipow(t1.ring.q(), static_cast<unsigned>(k)));
  return acc / (X * static_cast<double>(t1.size()));
}

Complex autocorrelation_expansion(const TraceFunction& t1, const TraceFunction& t2, int k, unsigned jobs) {
  if (!(t1.ring == t2.ring)) throw Error(ErrorCode::RingMismatch, "covariance of tables over different rings");
  if (k < 0 || k > t1.ring.degree())
    throw Error(ErrorCode::RangeViolation, "k = " + std::to_string(k) + " outside [0, deg P]");
  const std::uint64_t X = detail::ipow(t1.ring.q(), static_cast<unsigned>(k));
  std::vector<Complex> terms(X);
  detail::parallel_for(X, jobs, [&](std::uint64_t h) { terms[h] = autocorrelation(t1, t2, h); });
  Complex acc{};
  for (const auto& v : terms) acc += v;
  return acc;
}

VarianceResult variance_experiment(const TraceFunction& t, std::uint64_t X, unsigned jobs) {
  if (!t.ring.is_irreducible()) throw Error(ErrorCode::NotIrreducible, "variance needs an irreducible modulus P");
  const auto k = exact_log(t.ring.q(), X);
  if (!k) throw Error(ErrorCode::XNotPowerOfQ, "X = " + std::to_string(X) + " is not a power of q");
  if (*k > t.ring.degree())
    throw Error(ErrorCode::XTooLarge, "X = " + std::to_string(X) + " exceeds |P| = " + std::to_string(t.size()));
  VarianceResult r;
  r.k = *k;
  const Complex direct = windowed_covariance(t, t, *k);
  const Complex expansion = autocorrelation_expansion(t, t, *k, jobs);
  r.variance = direct.real();
  r.expansion = expansion.real();
  r.identity_ok = std::abs(direct - expansion) <= kIdentityTolerance;
  r.error_budget = variance_error_budget(t.ring.q(), X, t.ring.degree(), t.rank_r, t.conductor_c);
  r.deviation = std::abs(r.variance - 1.0);
  r.degenerate = std::all_of(t.values.begin(), t.values.end(),
                             [&](const Complex& v) { return std::abs(v - t.values.front()) <= 1e-12; });
  return r;
}

CovarianceResult covariance_experiment(const TraceFunction& t1, const TraceFunction& t2, int k, bool main_indicator,
                                       unsigned jobs) {
  CovarianceResult r;
  r.k = k;
  r.expansion = autocorrelation_expansion(t1, t2, k, jobs);
  r.direct = windowed_covariance(t1, t2, k);
  r.main_term = main_indicator ? 1.0 : 0.0;
  r.error_budget = covariance_error_budget(t1.ring.q(), k, t1.ring.degree(), t1.rank_r, t1.conductor_c, t2.rank_r,
                                           t2.conductor_c);
  r.deviation = std::abs(r.direct - Complex(r.main_term, 0.0));
  r.within_budget = r.deviation <= r.error_budget;
  r.identity_ok = std::abs(r.direct - r.expansion) <= kIdentityTolerance;
  return r;
}

// ---------------------------------------------------------------------------
// Identity suite

namespace {

double max_abs(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

IdentityCheck check(std::string name, double err, double scale) {
  const double rel = err / std::max(1.0, scale);
  return {std::move(name), rel, rel <= kIdentityTolerance};
}

constexpr std::uint64_t kNaiveTransformLimit = 6561;         // 3^8
constexpr std::uint64_t kExpansionWorkLimit = std::uint64_t{1} << 26;

}  // namespace

std::vector<IdentityCheck> identity_suite(const TraceFunction& t, const CenterSampling& centers, unsigned jobs) {
  std::vector<IdentityCheck> out;
  const std::uint64_t N = t.size();
  const ResidueRing& ring = t.ring;
  const double tmax = max_abs(t.values);

  const auto hat = dft(t, jobs);
  const double hat_scale = max_abs(hat.values);

  if (N <= kNaiveTransformLimit) {
    const auto naive = dft_naive(t, jobs);
    double err = 0.0;
    for (std::uint64_t h = 0; h < N; ++h) err = std::max(err, std::abs(hat.values[h] - naive.values[h]));
    out.push_back(check("dft fast = naive", err, hat_scale));
  }
  {
    const auto back = inverse_dft(hat, jobs);
    double err = 0.0;
    for (std::uint64_t x = 0; x < N; ++x) err = std::max(err, std::abs(back.values[x] - t.values[x]));
    out.push_back(check("fourier inversion", err, tmax));
  }
  {
    double lhs = 0.0, rhs = 0.0;
    for (const auto& v : hat.values) lhs += std::norm(v);
    for (const auto& v : t.values) rhs += std::norm(v);
    rhs *= static_cast<double>(N);
    out.push_back(check("parseval", std::abs(lhs - rhs), rhs));
  }
  {
    const auto twice = dft(hat, jobs);
    double err = 0.0;
    for (std::uint64_t x = 0; x < N; ++x)
      err = std::max(err, std::abs(twice.values[x] - static_cast<double>(N) * t.values[ring.neg(x)]));
    out.push_back(check("dft(dft(t))(x) = |g| t(-x)", err, static_cast<double>(N) * tmax));
  }
  {
    const auto chosen = centers.select(N);
    double err = 0.0, scale = 0.0;
    for (int n = 0; n <= ring.degree(); ++n)
      for (auto c : chosen) {
        const Interval V(ring, n, c);
        const Complex direct = short_sum(t, V);
        err = std::max(err, std::abs(direct - short_sum_from_fourier(hat, V)));
        scale = std::max(scale, std::abs(direct));
      }
    out.push_back(check("perpendicular-space restriction", err, scale));
  }
  {
    double err = 0.0, scale = 0.0;
    bool any = false;
    for (int k = 0; k <= ring.degree(); ++k) {
      if (detail::ipow(ring.q(), static_cast<unsigned>(k)) * N > kExpansionWorkLimit) break;
      const Complex direct = windowed_covariance(t, t, k);
      err = std::max(err, std::abs(direct - autocorrelation_expansion(t, t, k, jobs)));
      scale = std::max(scale, std::abs(direct));
      any = true;
    }
    if (any) out.push_back(check("variance = autocorrelation expansion", err, scale));
  }
  return out;
}

}  // namespace hooleyff
