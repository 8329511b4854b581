#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "hooleyff/poly.hpp"

namespace hooleyff {

/// F_q[u]/(pi) for a monic irreducible pi, with a fixed generator of the
/// multiplicative group and exp/log tables over residue indices.
class ResidueField {
 public:
  static constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 20;

  /// Throws Reducible or TooLarge. A non-monic pi is replaced by its monic
  /// associate.
  static ResidueField create(const PolyRing& ring, const Poly& pi);

  const PolyRing& poly_ring() const noexcept;
  const Poly& modulus() const noexcept;
  int degree() const noexcept;
  std::uint64_t size() const noexcept;
  /// Residue index of the fixed generator (smallest index of full order).
  std::uint64_t generator() const noexcept;

  std::uint64_t exp(std::uint64_t k) const noexcept;
  /// Throws ZeroArgument for the zero residue.
  std::uint64_t discrete_log(std::uint64_t residue) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t inv(std::uint64_t a) const;

  std::uint64_t rank(const Poly& x) const;
  Poly unrank(std::uint64_t index) const;

 private:
  struct Data;
  explicit ResidueField(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// Unit group of F_q[u]/(g) in discrete-log coordinates: a unit x maps to the
/// mixed-radix position sum_i log_i(x mod pi_i) * stride_i.
struct UnitGroup {
  static constexpr std::uint64_t kNotUnit = ~std::uint64_t{0};

  std::vector<std::uint64_t> cyclic_orders;  // |pi_i| - 1
  std::vector<std::uint64_t> strides;
  std::uint64_t order = 1;
  std::vector<std::uint64_t> position_of;  // residue index -> log position or kNotUnit
  std::vector<std::uint64_t> residue_of;   // log position -> residue index
};

/// F_q[u]/(g) for a monic squarefree g: factorization, Bezout data and the
/// base-q residue indexing. Immutable handle, cheap to copy.
class ResidueRing {
 public:
  static constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 20;

  /// Throws NotMonic, NotSquarefree, TooLarge, or Validation for constant g.
  static ResidueRing create(const PolyRing& ring, const Poly& g, std::uint64_t seed = 0);

  const PolyRing& poly_ring() const noexcept;
  const Field& field() const noexcept { return poly_ring().field(); }
  const Poly& modulus() const noexcept;
  int degree() const noexcept;
  std::uint64_t size() const noexcept;
  std::uint32_t q() const noexcept { return field().q(); }
  std::uint32_t p() const noexcept { return field().p(); }

  const std::vector<Poly>& factors() const noexcept;
  /// f_pi with sum_pi f_pi * (g / pi) = 1, deg f_pi < deg pi.
  const std::vector<Poly>& bezout() const noexcept;
  /// g / pi for each factor.
  const std::vector<Poly>& cofactors() const noexcept;
  const ResidueField& residue_field(std::size_t i) const;
  const UnitGroup& units() const noexcept;
  bool is_irreducible() const noexcept { return factors().size() == 1; }

  Poly reduce(const Poly& x) const;
  std::uint64_t rank(const Poly& x) const { return poly_ring().rank(reduce(x)); }
  Poly unrank(std::uint64_t index) const { return poly_ring().unrank(index); }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t neg(std::uint64_t a) const noexcept;
  Poly mul(const Poly& a, const Poly& b) const { return poly_ring().mul_mod(a, b, modulus()); }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  bool is_unit(std::uint64_t x) const noexcept { return units().position_of[x] != UnitGroup::kNotUnit; }

  /// Component i is x mod pi_i.
  std::vector<Poly> crt_split(const Poly& x) const;
  /// Inverse of crt_split: sum_i x_i f_i (g / pi_i) mod g.
  Poly crt_lift(std::span<const Poly> parts) const;

  /// Same field and same modulus.
  bool operator==(const ResidueRing& other) const noexcept;

 private:
  struct Data;
  explicit ResidueRing(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// The factor_squarefree_modulus operation.
inline ResidueRing factor_squarefree_modulus(const PolyRing& ring, const Poly& g, std::uint64_t seed = 0) {
  return ResidueRing::create(ring, g, seed);
}

/// The residue_field_create operation.
inline ResidueField residue_field_create(const PolyRing& ring, const Poly& pi) {
  return ResidueField::create(ring, pi);
}

}  // namespace hooleyff
