#include "hooleyff/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "hooleyff/detail/arith.hpp"
#include "hooleyff/error.hpp"
#include "hooleyff/poly.hpp"

namespace hooleyff {

namespace mp = boost::multiprecision;

namespace {

BoundValue from_log10(double l) { return BoundValue{std::pow(10.0, l), l}; }

// Compares a log-space value against the exact integer `square` of the bound.
void cross_check(double log10_value, const mp::cpp_int& square, const char* what) {
  const mp::cpp_bin_float_50 exact_log = mp::log10(mp::cpp_bin_float_50(square)) / 2;
  const double diff = std::abs(static_cast<double>(exact_log) - log10_value);
  if (diff > 1e-12 * std::max(1.0, std::abs(log10_value)))
    throw Error(ErrorCode::Internal, std::string(what) + ": log-space evaluation disagrees with exact arithmetic");
}

}  // namespace

std::optional<int> exact_log(std::uint64_t q, std::uint64_t X) noexcept {
  if (q < 2 || X == 0) return std::nullopt;
  int n = 0;
  while (X % q == 0) {
    X /= q;
    ++n;
  }
  if (X != 1) return std::nullopt;
  return n;
}

BoundValue mainres_bound(std::uint32_t q, std::uint64_t X, int deg_g, unsigned rank, unsigned conductor) {
  if (rank == 0) throw Error(ErrorCode::Validation, "rank r must be >= 1");
  const auto n = exact_log(q, X);
  if (!n || *n > deg_g)
    throw Error(ErrorCode::XNotPowerOfQ, "X = " + std::to_string(X) + " is not q^n with 0 <= n <= deg g = " +
                                             std::to_string(deg_g) + " (q = " + std::to_string(q) + ")");
  const unsigned base = 2 * rank + conductor;
  const double l = 0.5 * (1 + *n) * std::log10(double(q)) + deg_g * std::log10(double(base));
  cross_check(l, mp::pow(mp::cpp_int(q), static_cast<unsigned>(1 + *n)) * mp::pow(mp::cpp_int(base), 2u * deg_g),
              "mainres_bound");
  return from_log10(l);
}

BoundValue hooley_cor_bound(std::uint32_t q, int n, int deg_g, int degT_F, int degT_b) {
  if (n > deg_g)
    throw Error(ErrorCode::NTooLarge, "n = " + std::to_string(n) + " exceeds deg g = " + std::to_string(deg_g));
  if (n < 0) throw Error(ErrorCode::Validation, "n must be >= 0");
  if (degT_b < 0) throw Error(ErrorCode::Validation, "deg_T b must be >= 0 (b vanishes)");
  const int with_F = degT_F == kNegInfDegree ? 0 : degT_F + 2 * degT_b + 2;
  const unsigned base = static_cast<unsigned>(std::max(with_F, 2 * degT_b + 2));
  const double l = 0.5 * (n + 1) * std::log10(double(q)) + deg_g * std::log10(double(base));
  cross_check(l, mp::pow(mp::cpp_int(q), static_cast<unsigned>(n + 1)) * mp::pow(mp::cpp_int(base), 2u * deg_g),
              "hooley_cor_bound");
  return from_log10(l);
}

double mordell_error_budget(std::uint32_t q, std::uint64_t X, int deg_pi, unsigned d) {
  const double f = static_cast<double>(detail::factorial(d));
  const double f4 = f * f * f * f;
  const double x = static_cast<double>(X);
  // |pi|^{log_q(3 d!)} = (3 d!)^{deg pi}
  return std::sqrt(x) * std::pow(3.0 * f, deg_pi) + f4 + f4 * x * std::pow(double(q), -0.5 * deg_pi);
}

double variance_error_budget(std::uint32_t q, std::uint64_t X, int deg_P, unsigned rank, unsigned conductor) {
  // |P|^{-1/2} (3 (r + c))^{2 deg P}
  const double l = 0.5 * std::log10(double(X)) - 0.5 * deg_P * std::log10(double(q)) +
                   2.0 * deg_P * std::log10(3.0 * (rank + conductor));
  return std::pow(10.0, l);
}

double covariance_error_budget(std::uint32_t q, int k, int deg_P, unsigned r1, unsigned c1, unsigned r2,
                               unsigned c2) {
  const double gamma = 3.0 * (r1 + c1) * (r2 + c2);
  const double l = 0.5 * (k - deg_P) * std::log10(double(q)) + deg_P * std::log10(gamma);
  return std::pow(10.0, l);
}

}  // namespace hooleyff
