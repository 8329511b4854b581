#include "hooleyff/residue.hpp"

#include <string>

#include "hooleyff/detail/arith.hpp"
#include "hooleyff/detail/digits.hpp"
#include "hooleyff/error.hpp"
#include "hooleyff/serialize.hpp"

namespace hooleyff {

struct ResidueField::Data {
  PolyRing ring;
  Poly pi;
  int d = 0;
  std::uint64_t size = 0;
  std::uint64_t generator = 0;
  std::vector<std::uint32_t> exp_table;
  std::vector<std::uint32_t> log_table;
};

ResidueField ResidueField::create(const PolyRing& ring, const Poly& pi) {
  if (!ring.is_irreducible(pi)) throw Error(ErrorCode::Reducible, "residue field modulus is not irreducible");
  const Poly m = ring.monic(pi);
  std::uint64_t size = 1;
  for (int i = 0; i < m.degree(); ++i) {
    size *= ring.q();
    if (size > kMaxSize) throw Error(ErrorCode::TooLarge, "residue field has more than 2^20 elements");
  }

  auto d = std::make_shared<Data>(Data{ring, m, m.degree(), size, 0, {}, {}});
  const std::uint64_t group = size - 1;
  const auto primes = detail::prime_divisors(group);
  for (std::uint64_t cand = 1; cand < size; ++cand) {
    const Poly x = ring.unrank(cand);
    bool ok = true;
    for (auto r : primes)
      if (ring.pow_mod(x, group / r, m) == ring.one()) {
        ok = false;
        break;
      }
    if (ok) {
      d->generator = cand;
      break;
    }
  }

  d->exp_table.resize(group);
  d->log_table.assign(size, 0);
  const Poly gen = ring.unrank(d->generator);
  Poly x = ring.one();
  for (std::uint64_t k = 0; k < group; ++k) {
    const auto idx = static_cast<std::uint32_t>(ring.rank(x));
    d->exp_table[k] = idx;
    d->log_table[idx] = static_cast<std::uint32_t>(k);
    x = ring.mul_mod(x, gen, m);
  }
  return ResidueField(std::move(d));
}

const PolyRing& ResidueField::poly_ring() const noexcept { return d_->ring; }
const Poly& ResidueField::modulus() const noexcept { return d_->pi; }
int ResidueField::degree() const noexcept { return d_->d; }
std::uint64_t ResidueField::size() const noexcept { return d_->size; }
std::uint64_t ResidueField::generator() const noexcept { return d_->generator; }

std::uint64_t ResidueField::exp(std::uint64_t k) const noexcept { return d_->exp_table[k % (d_->size - 1)]; }

std::uint64_t ResidueField::discrete_log(std::uint64_t residue) const {
  if (residue == 0) throw Error(ErrorCode::ZeroArgument, "discrete log of the zero residue");
  return d_->log_table[residue];
}

std::uint64_t ResidueField::mul(std::uint64_t a, std::uint64_t b) const noexcept {
  if (a == 0 || b == 0) return 0;
  std::uint64_t k = std::uint64_t{d_->log_table[a]} + d_->log_table[b];
  const std::uint64_t group = d_->size - 1;
  if (k >= group) k -= group;
  return d_->exp_table[k];
}

std::uint64_t ResidueField::inv(std::uint64_t a) const {
  const std::uint64_t l = discrete_log(a);
  return d_->exp_table[l == 0 ? 0 : d_->size - 1 - l];
}

std::uint64_t ResidueField::rank(const Poly& x) const { return d_->ring.rank(d_->ring.mod(x, d_->pi)); }
Poly ResidueField::unrank(std::uint64_t index) const { return d_->ring.unrank(index); }

struct ResidueRing::Data {
  PolyRing ring;
  Poly g;
  std::uint64_t size = 0;
  std::vector<Poly> factors;
  std::vector<Poly> bezout;
  std::vector<Poly> cofactors;
  std::vector<ResidueField> fields;
  UnitGroup units;
};

ResidueRing ResidueRing::create(const PolyRing& ring, const Poly& g, std::uint64_t seed) {
  if (g.degree() <= 0) throw Error(ErrorCode::Validation, "modulus g must be nonconstant");
  const auto& K = ring.field();
  if (g.leading() != K.one()) throw Error(ErrorCode::NotMonic, "modulus g = " + poly_to_text(K, g) + " must be monic");
  const Poly dg = ring.derivative(g);
  if (dg.is_zero())
    throw Error(ErrorCode::NotSquarefree, "g = " + poly_to_text(K, g) + " has g' = 0, so it is a p-th power");
  if (const Poly d = ring.gcd(g, dg); d.degree() > 0)
    throw Error(ErrorCode::NotSquarefree,
                "g = " + poly_to_text(K, g) + " has a repeated factor dividing gcd(g, g') = " + poly_to_text(K, d));

  std::uint64_t size = 1;
  for (int i = 0; i < g.degree(); ++i) {
    size *= ring.q();
    if (size > kMaxSize) throw Error(ErrorCode::TooLarge, "|g| exceeds 2^20");
  }

  auto d = std::make_shared<Data>(Data{ring, g, size, {}, {}, {}, {}, {}});
  d->factors = ring.factor_squarefree(g, seed);

  Poly check;
  for (const auto& pi : d->factors) {
    Poly co = ring.divmod(g, pi).first;
    Poly f = ring.inverse_mod(co, pi);
    check = ring.add(check, ring.mul(f, co));
    d->bezout.push_back(std::move(f));
    d->cofactors.push_back(std::move(co));
    d->fields.push_back(ResidueField::create(ring, pi));
  }
  if (ring.mod(check, g) != ring.one()) throw Error(ErrorCode::Internal, "Bezout identity failed for g");

  auto& U = d->units;
  for (const auto& f : d->fields) {
    U.strides.push_back(U.order);
    U.cyclic_orders.push_back(f.size() - 1);
    U.order *= f.size() - 1;
  }
  U.position_of.assign(size, UnitGroup::kNotUnit);
  U.residue_of.assign(U.order, 0);
  for (std::uint64_t x = 0; x < size; ++x) {
    const Poly px = ring.unrank(x);
    std::uint64_t pos = 0;
    bool unit = true;
    for (std::size_t i = 0; i < d->fields.size(); ++i) {
      const std::uint64_t r = d->fields[i].rank(px);
      if (r == 0) {
        unit = false;
        break;
      }
      pos += d->fields[i].discrete_log(r) * U.strides[i];
    }
    if (!unit) continue;
    U.position_of[x] = pos;
    U.residue_of[pos] = x;
  }
  return ResidueRing(std::move(d));
}

const PolyRing& ResidueRing::poly_ring() const noexcept { return d_->ring; }
const Poly& ResidueRing::modulus() const noexcept { return d_->g; }
int ResidueRing::degree() const noexcept { return d_->g.degree(); }
std::uint64_t ResidueRing::size() const noexcept { return d_->size; }
const std::vector<Poly>& ResidueRing::factors() const noexcept { return d_->factors; }
const std::vector<Poly>& ResidueRing::bezout() const noexcept { return d_->bezout; }
const std::vector<Poly>& ResidueRing::cofactors() const noexcept { return d_->cofactors; }
const UnitGroup& ResidueRing::units() const noexcept { return d_->units; }

const ResidueField& ResidueRing::residue_field(std::size_t i) const {
  if (i >= d_->fields.size()) throw Error(ErrorCode::Validation, "factor index out of range");
  return d_->fields[i];
}

Poly ResidueRing::reduce(const Poly& x) const { return d_->ring.mod(x, d_->g); }

std::uint64_t ResidueRing::add(std::uint64_t a, std::uint64_t b) const noexcept { return detail::digit_add(a, b, p()); }
std::uint64_t ResidueRing::sub(std::uint64_t a, std::uint64_t b) const noexcept { return detail::digit_sub(a, b, p()); }
std::uint64_t ResidueRing::neg(std::uint64_t a) const noexcept { return detail::digit_neg(a, p()); }

std::uint64_t ResidueRing::mul(std::uint64_t a, std::uint64_t b) const {
  return d_->ring.rank(mul(unrank(a), unrank(b)));
}

std::vector<Poly> ResidueRing::crt_split(const Poly& x) const {
  std::vector<Poly> out;
  out.reserve(d_->factors.size());
  for (const auto& pi : d_->factors) out.push_back(d_->ring.mod(x, pi));
  return out;
}

Poly ResidueRing::crt_lift(std::span<const Poly> parts) const {
  if (parts.size() != d_->factors.size()) throw Error(ErrorCode::Validation, "CRT component count mismatch");
  Poly acc;
  for (std::size_t i = 0; i < parts.size(); ++i)
    acc = d_->ring.add(acc, d_->ring.mul(d_->ring.mul_mod(parts[i], d_->bezout[i], d_->factors[i]), d_->cofactors[i]));
  return reduce(acc);
}

bool ResidueRing::operator==(const ResidueRing& other) const noexcept {
  return d_ == other.d_ || (field() == other.field() && modulus() == other.modulus());
}

}  // namespace hooleyff
