#pragma once

#include <cstdint>
#include <optional>

namespace hooleyff {

/// A bound evaluated in log space. `value` may be +inf when it overflows a
/// double; `log10` is always finite.
struct BoundValue {
  double value = 0.0;
  double log10 = 0.0;
};

/// n with q^n = X, if any.
std::optional<int> exact_log(std::uint64_t q, std::uint64_t X) noexcept;

/// sqrt(q) X^{1/2} |g|^{log_q(2r + c)} = q^{(1+n)/2} (2r + c)^{deg g} for
/// X = q^n, 0 <= n <= deg g. Cross-checked against exact integer arithmetic
/// of the squared bound. Throws XNotPowerOfQ, Validation (r = 0).
BoundValue mainres_bound(std::uint32_t q, std::uint64_t X, int deg_g, unsigned rank, unsigned conductor);

/// q^{(n+1)/2} max{deg_T F + 2 deg_T b + 2, 2 deg_T b + 2}^{deg g}.
/// deg_T F may be kNegInfDegree (F vanishes). Throws NTooLarge for
/// n > deg g, Validation for deg_T b < 0.
BoundValue hooley_cor_bound(std::uint32_t q, int n, int deg_g, int degT_F, int degT_b);

/// X^{1/2} |pi|^{log_q(3 d!)} + d!^4 + d!^4 X |pi|^{-1/2}.
double mordell_error_budget(std::uint32_t q, std::uint64_t X, int deg_pi, unsigned d);

/// X^{1/2} |P|^{-1/2 + 2 log_q(3 (r + c))}.
double variance_error_budget(std::uint32_t q, std::uint64_t X, int deg_P, unsigned rank, unsigned conductor);

/// q^{(k - m)/2} |P|^{log_q(gamma)}, gamma = 3 (r1 + c1)(r2 + c2).
double covariance_error_budget(std::uint32_t q, int k, int deg_P, unsigned r1, unsigned c1, unsigned r2, unsigned c2);

}  // namespace hooleyff
