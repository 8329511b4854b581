#include "hooleyff/characters.hpp"

#include <numbers>
#include <numeric>
#include <string>

#include "hooleyff/detail/arith.hpp"
#include "hooleyff/detail/digits.hpp"
#include "hooleyff/error.hpp"

namespace hooleyff {

FieldElem residue_at_infinity(const PolyRing& ring, const Poly& f, const Poly& g) {
  if (g.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "e(f/g) with g = 0");
  const Poly r = ring.mod(f, g);
  const int m = g.degree();
  if (r.degree() < m - 1) return FieldElem{};
  return ring.field().div(r.coeff(m - 1), g.leading());
}

AdditiveCharEvaluator::AdditiveCharEvaluator(Field field) : ring_(std::move(field)) {
  const std::uint32_t p = ring_.field().p();
  roots_.reserve(p);
  for (std::uint32_t k = 0; k < p; ++k) roots_.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / p));
}

std::uint32_t AdditiveCharEvaluator::phase(const Poly& f, const Poly& g) const {
  return ring_.field().trace(residue_at_infinity(ring_, f, g));
}

AdditivePairing::AdditivePairing(ResidueRing ring) : ring_(std::move(ring)) {
  const std::uint32_t p = ring_.p();
  dim_ = static_cast<std::size_t>(ring_.field().e()) * static_cast<std::size_t>(ring_.degree());
  matrix_.assign(dim_ * dim_, 0);
  const PolyRing& R = ring_.poly_ring();
  std::vector<Poly> basis;
  for (std::size_t j = 0; j < dim_; ++j) basis.push_back(R.unrank(detail::ipow(p, static_cast<unsigned>(j))));
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = j; k < dim_; ++k) {
      const std::uint32_t v = R.field().trace(residue_at_infinity(R, R.mul(basis[j], basis[k]), ring_.modulus()));
      matrix_[j * dim_ + k] = v;
      matrix_[k * dim_ + j] = v;
    }
}

std::uint64_t AdditivePairing::linear_image(std::uint64_t h) const {
  const std::uint32_t p = ring_.p();
  std::vector<std::uint32_t> hd(dim_, 0);
  for (std::size_t k = 0; k < dim_ && h != 0; ++k) {
    hd[k] = static_cast<std::uint32_t>(h % p);
    h /= p;
  }
  std::uint64_t out = 0;
  for (std::size_t j = dim_; j-- > 0;) {
    std::uint64_t w = 0;
    for (std::size_t k = 0; k < dim_; ++k) w += std::uint64_t{matrix_[j * dim_ + k]} * hd[k];
    out = out * p + w % p;
  }
  return out;
}

std::uint32_t AdditivePairing::phase(std::uint64_t f, std::uint64_t h) const {
  const std::uint32_t p = ring_.p();
  std::uint64_t w = linear_image(h);
  std::uint64_t acc = 0;
  while (f != 0 && w != 0) {
    acc += (f % p) * (w % p);
    f /= p;
    w /= p;
  }
  return static_cast<std::uint32_t>(acc % p);
}

struct MultChar::Data {
  ResidueRing ring;
  std::vector<std::uint64_t> exponents;
  std::uint64_t order = 1;
  std::uint64_t denominator = 1;
  std::vector<std::uint64_t> weights;  // k_i * (L / N_i) mod L
  std::vector<Complex> roots;          // exp(2 pi i j / L) when L is table-sized
};

MultChar MultChar::create(ResidueRing ring, std::vector<std::uint64_t> exponents) {
  const auto& U = ring.units();
  if (exponents.size() != U.cyclic_orders.size())
    throw Error(ErrorCode::ExponentOutOfRange, "expected " + std::to_string(U.cyclic_orders.size()) +
                                                   " exponents (one per irreducible factor), got " +
                                                   std::to_string(exponents.size()));
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const std::uint64_t n = U.cyclic_orders[i];
    if (exponents[i] >= std::max<std::uint64_t>(n, 1))
      throw Error(ErrorCode::ExponentOutOfRange, "exponent k_" + std::to_string(i) + " = " +
                                                     std::to_string(exponents[i]) + " outside [0, " +
                                                     std::to_string(n == 0 ? 0 : n - 1) + "]");
  }

  auto d = std::make_shared<Data>(Data{ring, exponents, 1, 1, {}, {}});
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const std::uint64_t n = U.cyclic_orders[i];
    d->denominator = std::lcm(d->denominator, n);
    d->order = std::lcm(d->order, n / std::gcd(exponents[i], n));
  }
  for (std::size_t i = 0; i < exponents.size(); ++i)
    d->weights.push_back(detail::mul_mod(exponents[i], d->denominator / U.cyclic_orders[i], d->denominator));
  if (d->denominator <= (std::uint64_t{1} << 20)) {
    d->roots.reserve(d->denominator);
    for (std::uint64_t j = 0; j < d->denominator; ++j)
      d->roots.push_back(std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(d->denominator)));
  }
  return MultChar(std::move(d));
}

const ResidueRing& MultChar::ring() const noexcept { return d_->ring; }
const std::vector<std::uint64_t>& MultChar::exponents() const noexcept { return d_->exponents; }
std::uint64_t MultChar::order() const noexcept { return d_->order; }
std::uint64_t MultChar::phase_denominator() const noexcept { return d_->denominator; }

bool MultChar::is_primitive() const noexcept {
  for (auto k : d_->exponents)
    if (k == 0) return false;
  return true;
}

bool MultChar::is_principal() const noexcept {
  for (auto k : d_->exponents)
    if (k != 0) return false;
  return true;
}

std::optional<std::uint64_t> MultChar::phase(std::uint64_t residue) const {
  const auto& U = d_->ring.units();
  const std::uint64_t pos = U.position_of[residue];
  if (pos == UnitGroup::kNotUnit) return std::nullopt;
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < d_->weights.size(); ++i) {
    const std::uint64_t log_i = (pos / U.strides[i]) % U.cyclic_orders[i];
    acc = (acc + detail::mul_mod(log_i, d_->weights[i], d_->denominator)) % d_->denominator;
  }
  return acc;
}

Complex MultChar::at(std::uint64_t residue) const {
  const auto ph = phase(residue);
  if (!ph) return Complex{0.0, 0.0};
  if (!d_->roots.empty()) return d_->roots[*ph];
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(*ph) / static_cast<double>(d_->denominator));
}

Complex MultChar::operator()(const Poly& x) const { return at(d_->ring.rank(x)); }

std::vector<Complex> MultChar::table() const {
  std::vector<Complex> out(d_->ring.size());
  for (std::uint64_t x = 0; x < out.size(); ++x) out[x] = at(x);
  return out;
}

namespace {

std::vector<std::vector<std::uint64_t>> odometer(const ResidueRing& ring, std::uint64_t low, std::size_t limit,
                                                 bool skip_principal) {
  const auto& orders = ring.units().cyclic_orders;
  std::vector<std::vector<std::uint64_t>> out;
  for (auto n : orders)
    if (n <= low) return out;
  std::vector<std::uint64_t> cur(orders.size(), low);
  for (;;) {
    bool principal = true;
    for (auto k : cur) principal = principal && k == 0;
    if (!(skip_principal && principal)) {
      if (out.size() >= limit) break;
      out.push_back(cur);
    }
    std::size_t i = cur.size();
    while (i > 0) {
      --i;
      if (++cur[i] < orders[i]) break;
      cur[i] = low;
      if (i == 0) return out;
    }
    if (cur.empty()) break;
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> primitive_character_exponents(const ResidueRing& ring, std::size_t limit) {
  return odometer(ring, 1, limit, false);
}

std::vector<std::vector<std::uint64_t>> nonprincipal_character_exponents(const ResidueRing& ring) {
  return odometer(ring, 0, ~std::size_t{0}, true);
}

}  // namespace hooleyff
