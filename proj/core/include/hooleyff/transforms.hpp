#pragma once

#include <cstdint>
#include <vector>

#include "hooleyff/trace_function.hpp"

namespace hooleyff {

/// {center + f : deg f < n}, of cardinality q^n, inside F_q[u]/(g).
struct Interval {
  ResidueRing ring;
  int n = 0;
  std::uint64_t center = 0;

  /// Throws RangeViolation unless 0 <= n <= deg g.
  Interval(ResidueRing ring, int n, std::uint64_t center = 0);
  std::uint64_t cardinality() const noexcept;
};

/// Largest |g| accepted by the Fourier transforms.
inline constexpr std::uint64_t kMaxTransformSize = 59049;  // 3^10

Complex complete_sum(const TraceFunction& t);

/// t_hat(h) = sum_f t(f) e(f h / g). Computed as a separable transform over
/// the F_p-coordinates of the residues followed by the linear change of
/// variables given by the pairing matrix. Result family is Custom.
TraceFunction dft(const TraceFunction& t, unsigned jobs = 1);
/// Same transform by direct O(|g|^2) summation over precomputed phases.
TraceFunction dft_naive(const TraceFunction& t, unsigned jobs = 1);
/// t(x) = |g|^{-1} sum_h t_hat(h) e(-x h / g).
TraceFunction inverse_dft(const TraceFunction& t_hat, unsigned jobs = 1);

/// V^perp = {h : e(f h / g) = 1 for all f in V}, V centered at 0. Closed
/// form: the residues of degree < deg g - n. Throws Validation for a
/// nonzero center.
std::vector<std::uint64_t> perp_space(const Interval& V);
/// V^perp straight from its definition, checking every (f, h) pair.
std::vector<std::uint64_t> perp_space_brute_force(const Interval& V);

/// sum_{deg f < n} t(f + center), by enumeration.
Complex short_sum(const TraceFunction& t, const Interval& V);
/// (q^n / |g|) sum_{h in V^perp} t_hat(h) e(-center h / g).
Complex short_sum_from_fourier(const TraceFunction& t_hat, const Interval& V);
/// Window sums S(c) = sum_{deg f < n} t(f + c) for every center c, by the
/// recurrence S_{j+1}(c) = sum_{lambda in F_q} S_j(c + lambda u^j).
std::vector<Complex> short_sums_all_centers(const TraceFunction& t, int n);

/// q^{-m} sum_f t1(f) conj(t2(f - h)). Throws RingMismatch.
Complex autocorrelation(const TraceFunction& t1, const TraceFunction& t2, std::uint64_t h);

}  // namespace hooleyff
