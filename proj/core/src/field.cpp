#include "hooleyff/field.hpp"

#include <string>

#include "hooleyff/detail/arith.hpp"
#include "hooleyff/detail/digits.hpp"
#include "hooleyff/error.hpp"

namespace hooleyff {
namespace {

// Dense polynomials over F_p, constant term first, used only while the field
// itself is being built (irreducibility and the table-free product).
using PrimePoly = std::vector<std::uint32_t>;

void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, k = p - 2;
  while (k > 0) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
    k >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

PrimePoly rem(PrimePoly a, const PrimePoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i]) % p);
    trim(a);
  }
  return a;
}

PrimePoly mul_mod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return rem(std::move(out), m, p);
}

PrimePoly pow_mod(PrimePoly base, std::uint64_t k, const PrimePoly& m, std::uint32_t p) {
  PrimePoly r{1};
  base = rem(std::move(base), m, p);
  while (k > 0) {
    if (k & 1) r = mul_mod(r, base, m, p);
    base = mul_mod(base, base, m, p);
    k >>= 1;
  }
  return r;
}

PrimePoly gcd(PrimePoly a, PrimePoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PrimePoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: f of degree e is irreducible iff gcd(x^{p^i} - x, f) = 1 for all i <= e/2.
bool is_irreducible(const PrimePoly& f, std::uint32_t p) {
  const std::size_t e = f.size() - 1;
  if (e == 1) return true;
  PrimePoly x{0, 1};
  PrimePoly frob = x;
  for (std::size_t i = 1; i <= e / 2; ++i) {
    frob = pow_mod(frob, p, f, p);
    PrimePoly diff = frob;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

PrimePoly digits_of(std::uint64_t index, std::uint32_t p) {
  PrimePoly out;
  while (index > 0) {
    out.push_back(static_cast<std::uint32_t>(index % p));
    index /= p;
  }
  return out;
}

std::uint32_t index_of(const PrimePoly& d, std::uint32_t p) {
  std::uint64_t out = 0;
  for (std::size_t i = d.size(); i-- > 0;) out = out * p + d[i];
  return static_cast<std::uint32_t>(out);
}

}  // namespace

struct Field::Data {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;
  FieldElem generator;
  std::vector<std::uint32_t> exp_table;  // size q-1
  std::vector<std::uint32_t> log_table;  // size q, entry 0 unused
  std::vector<std::uint32_t> trace_basis;  // Tr(theta^i), i < e

  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    if (e == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
    return index_of(mul_mod(digits_of(a, p), digits_of(b, p), modulus, p), p);
  }

  std::uint32_t slow_pow(std::uint32_t a, std::uint64_t k) const {
    std::uint32_t r = 1;
    while (k > 0) {
      if (k & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      k >>= 1;
    }
    return r;
  }
};

Field Field::create(std::uint32_t p, std::uint32_t e, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!detail::is_prime(p)) throw Error(ErrorCode::NotPrime, "p = " + std::to_string(p) + " is not prime");
  if (e == 0) throw Error(ErrorCode::DegreeMismatch, "extension degree must be positive");
  const std::uint64_t q64 = detail::ipow(p, e);
  if (q64 >= (std::uint64_t{1} << 31) || q64 / detail::ipow(p, e - 1) != p)
    throw Error(ErrorCode::TooLarge, "q = p^e exceeds 2^31");

  auto d = std::make_shared<Data>();
  d->p = p;
  d->e = e;
  d->q = static_cast<std::uint32_t>(q64);

  if (modulus) {
    PrimePoly m = *modulus;
    for (auto c : m)
      if (c >= p) throw Error(ErrorCode::DegreeMismatch, "modulus coefficient out of range [0, p)");
    trim(m);
    if (m.size() != e + 1)
      throw Error(ErrorCode::DegreeMismatch, "modulus has degree " + std::to_string(m.empty() ? -1 : int(m.size()) - 1) +
                                                 ", expected " + std::to_string(e));
    if (m.back() != 1) throw Error(ErrorCode::DegreeMismatch, "modulus must be monic");
    if (!is_irreducible(m, p)) throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
    d->modulus = std::move(m);
  } else {
    const std::uint64_t lower = detail::ipow(p, e);
    for (std::uint64_t idx = 0; idx < lower; ++idx) {
      PrimePoly m = digits_of(idx, p);
      m.resize(e, 0);
      m.push_back(1);
      if (is_irreducible(m, p)) {
        d->modulus = std::move(m);
        break;
      }
    }
  }

  // Smallest element of multiplicative order q - 1.
  const std::uint64_t group = d->q - 1;
  const auto primes = detail::prime_divisors(group);
  for (std::uint32_t cand = 1; cand < d->q; ++cand) {
    bool ok = true;
    for (auto r : primes)
      if (d->slow_pow(cand, group / r) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      d->generator = FieldElem{cand};
      break;
    }
  }

  if (d->q <= kLogTableThreshold) {
    d->exp_table.resize(group);
    d->log_table.assign(d->q, 0);
    std::uint32_t x = 1;
    for (std::uint64_t k = 0; k < group; ++k) {
      d->exp_table[k] = x;
      d->log_table[x] = static_cast<std::uint32_t>(k);
      x = d->slow_mul(x, d->generator.index);
    }
    if (x != 1) throw Error(ErrorCode::Internal, "generator order check failed");
  }

  // Tr(theta^i) = sum_j (theta^i)^{p^j}; lands in F_p.
  for (std::uint32_t i = 0; i < e; ++i) {
    const std::uint32_t basis = static_cast<std::uint32_t>(detail::ipow(p, i));
    std::uint64_t acc = 0;
    std::uint32_t conj = basis;
    for (std::uint32_t j = 0; j < e; ++j) {
      acc = detail::digit_add(acc, conj, p);
      conj = d->slow_pow(conj, p);
    }
    if (acc >= p) throw Error(ErrorCode::Internal, "trace escaped the prime field");
    d->trace_basis.push_back(static_cast<std::uint32_t>(acc));
  }

  return Field(std::move(d));
}

std::uint32_t Field::p() const noexcept { return d_->p; }
std::uint32_t Field::e() const noexcept { return d_->e; }
std::uint32_t Field::q() const noexcept { return d_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return d_->modulus; }
FieldElem Field::generator() const noexcept { return d_->generator; }
bool Field::has_log_table() const noexcept { return !d_->log_table.empty(); }

FieldElem Field::from_integer(std::int64_t n) const noexcept {
  const std::int64_t p = d_->p;
  return FieldElem{static_cast<std::uint32_t>(((n % p) + p) % p)};
}

FieldElem Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  std::size_t len = coeffs.size();
  while (len > 0 && coeffs[len - 1] == 0) --len;
  if (len > d_->e) throw Error(ErrorCode::DegreeMismatch, "field element has more than e coefficients");
  std::uint64_t idx = 0;
  for (std::size_t i = len; i-- > 0;) {
    if (coeffs[i] >= d_->p) throw Error(ErrorCode::DegreeMismatch, "coefficient out of range [0, p)");
    idx = idx * d_->p + coeffs[i];
  }
  return FieldElem{static_cast<std::uint32_t>(idx)};
}

std::vector<std::uint32_t> Field::coeffs(FieldElem x) const {
  std::vector<std::uint32_t> out(d_->e, 0);
  std::uint32_t v = x.index;
  for (std::uint32_t i = 0; i < d_->e; ++i) {
    out[i] = v % d_->p;
    v /= d_->p;
  }
  return out;
}

FieldElem Field::add(FieldElem a, FieldElem b) const noexcept {
  if (d_->e == 1) {
    std::uint32_t s = a.index + b.index;
    return FieldElem{s >= d_->p ? s - d_->p : s};
  }
  return FieldElem{static_cast<std::uint32_t>(detail::digit_add(a.index, b.index, d_->p))};
}

FieldElem Field::neg(FieldElem a) const noexcept {
  if (d_->e == 1) return FieldElem{a.index == 0 ? 0 : d_->p - a.index};
  return FieldElem{static_cast<std::uint32_t>(detail::digit_neg(a.index, d_->p))};
}

FieldElem Field::sub(FieldElem a, FieldElem b) const noexcept { return add(a, neg(b)); }

FieldElem Field::mul(FieldElem a, FieldElem b) const {
  if (a.index == 0 || b.index == 0) return zero();
  if (d_->e == 1) return FieldElem{static_cast<std::uint32_t>(std::uint64_t{a.index} * b.index % d_->p)};
  if (!has_log_table()) return FieldElem{d_->slow_mul(a.index, b.index)};
  std::uint64_t k = std::uint64_t{d_->log_table[a.index]} + d_->log_table[b.index];
  const std::uint64_t group = d_->q - 1;
  if (k >= group) k -= group;
  return FieldElem{d_->exp_table[k]};
}

FieldElem Field::inv(FieldElem a) const {
  if (a.index == 0) throw Error(ErrorCode::ZeroArgument, "inverse of zero in F_q");
  const std::uint64_t group = d_->q - 1;
  if (has_log_table()) {
    const std::uint32_t l = d_->log_table[a.index];
    return FieldElem{d_->exp_table[l == 0 ? 0 : group - l]};
  }
  return FieldElem{d_->slow_pow(a.index, group - 1)};
}

FieldElem Field::pow(FieldElem a, std::uint64_t k) const {
  if (k == 0) return one();
  if (a.index == 0) return zero();
  const std::uint64_t group = d_->q - 1;
  if (has_log_table()) return FieldElem{d_->exp_table[detail::mul_mod(d_->log_table[a.index], k % group, group)]};
  return FieldElem{d_->slow_pow(a.index, k)};
}

std::uint32_t Field::trace(FieldElem x) const noexcept {
  std::uint64_t acc = 0;
  std::uint32_t v = x.index;
  for (std::uint32_t i = 0; i < d_->e && v != 0; ++i) {
    acc += std::uint64_t{v % d_->p} * d_->trace_basis[i];
    v /= d_->p;
  }
  return static_cast<std::uint32_t>(acc % d_->p);
}

FieldElem Field::exp(std::uint64_t k) const {
  const std::uint64_t group = d_->q - 1;
  if (has_log_table()) return FieldElem{d_->exp_table[k % group]};
  return FieldElem{d_->slow_pow(d_->generator.index, k % group)};
}

std::uint32_t Field::discrete_log(FieldElem x) const {
  if (x.index == 0) throw Error(ErrorCode::ZeroArgument, "discrete log of zero");
  if (!has_log_table())
    throw Error(ErrorCode::TableUnavailable, "q = " + std::to_string(d_->q) + " exceeds the log-table threshold 2^20");
  return d_->log_table[x.index];
}

bool Field::operator==(const Field& other) const noexcept {
  return d_ == other.d_ || (d_->p == other.d_->p && d_->e == other.d_->e && d_->modulus == other.d_->modulus);
}

}  // namespace hooleyff
