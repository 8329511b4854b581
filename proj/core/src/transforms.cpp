#include "hooleyff/transforms.hpp"

#include <numbers>
#include <string>

#include "hooleyff/detail/digits.hpp"
#include "hooleyff/detail/parallel.hpp"
#include "hooleyff/error.hpp"

namespace hooleyff {

Interval::Interval(ResidueRing ring_, int n_, std::uint64_t center_) : ring(std::move(ring_)), n(n_), center(center_) {
  if (n < 0 || n > ring.degree())
    throw Error(ErrorCode::RangeViolation, "interval length n = " + std::to_string(n) + " outside [0, deg g = " +
                                               std::to_string(ring.degree()) + "]");
  if (center >= ring.size()) throw Error(ErrorCode::RangeViolation, "interval center is not a reduced residue");
}

std::uint64_t Interval::cardinality() const noexcept { return detail::ipow(ring.q(), static_cast<unsigned>(n)); }

Complex complete_sum(const TraceFunction& t) {
  Complex acc{};
  for (const auto& v : t.values) acc += v;
  return acc;
}

namespace {

void check_transform_size(const TraceFunction& t) {
  if (t.size() > kMaxTransformSize)
    throw Error(ErrorCode::TooLarge, "|g| = " + std::to_string(t.size()) + " exceeds the transform cap 3^10");
}

std::vector<Complex> roots_of_unity(std::uint32_t p) {
  std::vector<Complex> roots(p);
  for (std::uint32_t k = 0; k < p; ++k) roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / p);
  return roots;
}

// W(y) = sum_x v(x) zeta_p^{x . y} over F_p^dim, one digit at a time.
std::vector<Complex> coordinate_transform(std::vector<Complex> v, std::uint32_t p, std::size_t dim) {
  const auto roots = roots_of_unity(p);
  std::vector<Complex> scratch(p);
  std::uint64_t stride = 1;
  for (std::size_t j = 0; j < dim; ++j) {
    const std::uint64_t block = stride * p;
    for (std::uint64_t base = 0; base < v.size(); base += block)
      for (std::uint64_t off = 0; off < stride; ++off) {
        for (std::uint32_t y = 0; y < p; ++y) {
          Complex acc{};
          for (std::uint32_t x = 0; x < p; ++x) acc += v[base + off + x * stride] * roots[(std::uint64_t{x} * y) % p];
          scratch[y] = acc;
        }
        for (std::uint32_t y = 0; y < p; ++y) v[base + off + y * stride] = scratch[y];
      }
    stride = block;
  }
  return v;
}

}  // namespace

TraceFunction dft(const TraceFunction& t, unsigned jobs) {
  check_transform_size(t);
  const AdditivePairing pairing(t.ring);
  const auto W = coordinate_transform(t.values, t.ring.p(), pairing.dimension());
  std::vector<Complex> out(t.size());
  detail::parallel_for(t.size(), jobs, [&](std::uint64_t h) { out[h] = W[pairing.linear_image(h)]; });
  return TraceFunction(t.ring, std::move(out), t.rank_r, t.conductor_c, Family::Custom, "dft(" + t.label + ")");
}

TraceFunction dft_naive(const TraceFunction& t, unsigned jobs) {
  check_transform_size(t);
  const AdditivePairing pairing(t.ring);
  const std::uint32_t p = t.ring.p();
  const auto roots = roots_of_unity(p);
  const std::size_t dim = pairing.dimension();
  std::vector<Complex> out(t.size());
  detail::parallel_for(t.size(), jobs, [&](std::uint64_t h) {
    // Phase of f is the dot product of f's digits with w = M h; walk f in
    // index order and update the phase from f - p^j, j the lowest nonzero digit.
    const std::uint64_t w_idx = pairing.linear_image(h);
    std::vector<std::uint32_t> w(dim);
    std::uint64_t tmp = w_idx;
    for (std::size_t j = 0; j < dim; ++j) {
      w[j] = static_cast<std::uint32_t>(tmp % p);
      tmp /= p;
    }
    std::vector<std::uint32_t> phase(t.size());
    Complex acc = t.values[0];
    for (std::uint64_t f = 1; f < t.size(); ++f) {
      std::size_t j = 0;
      std::uint64_t pj = 1;
      while ((f / pj) % p == 0) {
        pj *= p;
        ++j;
      }
      phase[f] = (phase[f - pj] + w[j]) % p;
      acc += t.values[f] * roots[phase[f]];
    }
    out[h] = acc;
  });
  return TraceFunction(t.ring, std::move(out), t.rank_r, t.conductor_c, Family::Custom, "dft(" + t.label + ")");
}

TraceFunction inverse_dft(const TraceFunction& t_hat, unsigned jobs) {
  // sum_h t_hat(h) e(-xh/g) = conj(sum_h conj(t_hat(h)) e(xh/g)); the pairing is symmetric.
  std::vector<Complex> conj_values(t_hat.size());
  for (std::uint64_t i = 0; i < t_hat.size(); ++i) conj_values[i] = std::conj(t_hat.values[i]);
  const TraceFunction tmp(t_hat.ring, std::move(conj_values), t_hat.rank_r, t_hat.conductor_c, Family::Custom);
  auto out = dft(tmp, jobs);
  const double scale = 1.0 / static_cast<double>(t_hat.size());
  for (auto& v : out.values) v = std::conj(v) * scale;
  out.label = "idft(" + t_hat.label + ")";
  return out;
}

std::vector<std::uint64_t> perp_space(const Interval& V) {
  if (V.center != 0) throw Error(ErrorCode::Validation, "perpendicular space needs an interval centered at 0");
  const std::uint64_t n = detail::ipow(V.ring.q(), static_cast<unsigned>(V.ring.degree() - V.n));
  std::vector<std::uint64_t> out(n);
  for (std::uint64_t h = 0; h < n; ++h) out[h] = h;
  return out;
}

std::vector<std::uint64_t> perp_space_brute_force(const Interval& V) {
  if (V.center != 0) throw Error(ErrorCode::Validation, "perpendicular space needs an interval centered at 0");
  const AdditiveCharEvaluator e(V.ring.field());
  const PolyRing& R = V.ring.poly_ring();
  const std::uint64_t card = V.cardinality();
  std::vector<std::uint64_t> out;
  for (std::uint64_t h = 0; h < V.ring.size(); ++h) {
    const Poly hp = V.ring.unrank(h);
    bool in = true;
    for (std::uint64_t f = 0; f < card && in; ++f) in = e.phase(R.mul(R.unrank(f), hp), V.ring.modulus()) == 0;
    if (in) out.push_back(h);
  }
  return out;
}

Complex short_sum(const TraceFunction& t, const Interval& V) {
  if (!(t.ring == V.ring)) throw Error(ErrorCode::RingMismatch, "interval and table live over different rings");
  Complex acc{};
  const std::uint64_t card = V.cardinality();
  for (std::uint64_t f = 0; f < card; ++f) acc += t.values[t.ring.add(f, V.center)];
  return acc;
}

Complex short_sum_from_fourier(const TraceFunction& t_hat, const Interval& V) {
  if (!(t_hat.ring == V.ring)) throw Error(ErrorCode::RingMismatch, "interval and table live over different rings");
  const Interval V0(V.ring, V.n, 0);
  const AdditivePairing pairing(V.ring);
  const auto roots = roots_of_unity(V.ring.p());
  const std::uint32_t p = V.ring.p();
  Complex acc{};
  for (auto h : perp_space(V0)) {
    const std::uint32_t ph = pairing.phase(V.center, h);
    acc += t_hat.values[h] * roots[(p - ph) % p];
  }
  return acc * (static_cast<double>(V.cardinality()) / static_cast<double>(V.ring.size()));
}

std::vector<Complex> short_sums_all_centers(const TraceFunction& t, int n) {
  if (n < 0 || n > t.ring.degree())
    throw Error(ErrorCode::RangeViolation, "window length n = " + std::to_string(n) + " outside [0, deg g]");
  std::vector<Complex> cur = t.values;
  const std::uint32_t q = t.ring.q();
  for (int j = 0; j < n; ++j) {
    const std::uint64_t shift = detail::ipow(q, static_cast<unsigned>(j));
    std::vector<Complex> next(cur.size());
    for (std::uint64_t c = 0; c < cur.size(); ++c) {
      Complex acc{};
      for (std::uint32_t lambda = 0; lambda < q; ++lambda) acc += cur[t.ring.add(c, lambda * shift)];
      next[c] = acc;
    }
    cur = std::move(next);
  }
  return cur;
}

Complex autocorrelation(const TraceFunction& t1, const TraceFunction& t2, std::uint64_t h) {
  if (!(t1.ring == t2.ring)) throw Error(ErrorCode::RingMismatch, "autocorrelation of tables over different rings");
  Complex acc{};
  for (std::uint64_t f = 0; f < t1.size(); ++f) acc += t1.values[f] * std::conj(t2.values[t1.ring.sub(f, h)]);
  return acc / static_cast<double>(t1.size());
}

}  // namespace hooleyff
