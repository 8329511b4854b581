#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

#include "hooleyff/field.hpp"

namespace hooleyff {

/// Degree of the zero polynomial.
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

/// Element of F_q[u], constant term first, no trailing zero coefficients.
/// Poly carries no field reference; arithmetic goes through PolyRing.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<FieldElem> coeffs);

  static Poly constant(FieldElem c) { return Poly({c}); }
  /// c * u^deg
  static Poly monomial(FieldElem c, int deg);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return coeffs_.empty() ? kNegInfDegree : static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<FieldElem>& coeffs() const noexcept { return coeffs_; }
  FieldElem coeff(int i) const noexcept {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : FieldElem{};
  }
  FieldElem leading() const noexcept { return coeffs_.empty() ? FieldElem{} : coeffs_.back(); }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<FieldElem> coeffs_;
};

/// Canonical ordering used for factor lists: by degree, then by the
/// coefficient sequence compared from the constant term upward.
bool poly_order_less(const Poly& a, const Poly& b) noexcept;

/// Arithmetic in F_q[u].
class PolyRing {
 public:
  explicit PolyRing(Field field) : field_(std::move(field)) {}

  const Field& field() const noexcept { return field_; }
  std::uint32_t q() const noexcept { return field_.q(); }

  Poly u() const { return Poly::monomial(field_.one(), 1); }
  Poly one() const { return Poly::constant(field_.one()); }
  Poly from_integer(std::int64_t n) const { return Poly::constant(field_.from_integer(n)); }

  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly neg(const Poly& a) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly scale(const Poly& a, FieldElem c) const;

  /// a = quotient * b + remainder with deg remainder < deg b.
  std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const;
  Poly mod(const Poly& a, const Poly& b) const;
  Poly monic(const Poly& a) const;

  /// Monic gcd; gcd(0, 0) = 0.
  Poly gcd(const Poly& a, const Poly& b) const;

  struct Xgcd {
    Poly d;
    Poly s;
    Poly t;
  };
  /// s*a + t*b = d with d the monic gcd.
  Xgcd xgcd(const Poly& a, const Poly& b) const;

  /// Inverse of a modulo m. Throws NotCoprime.
  Poly inverse_mod(const Poly& a, const Poly& m) const;

  Poly derivative(const Poly& a) const;
  Poly mul_mod(const Poly& a, const Poly& b, const Poly& m) const;
  Poly pow_mod(const Poly& a, std::uint64_t k, const Poly& m) const;
  FieldElem evaluate(const Poly& a, FieldElem x) const;

  /// q^deg f, and 0 for f = 0. Throws TooLarge beyond 2^63.
  std::uint64_t norm(const Poly& f) const;

  /// Irreducible over F_q (constants are not).
  bool is_irreducible(const Poly& f) const;

  /// Monic irreducible factors of a monic squarefree f, sorted by
  /// poly_order_less. Distinct-degree then equal-degree splitting with the
  /// given seed.
  std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t seed = 0) const;

  /// Base-q positional index of a polynomial (coefficient i is digit i).
  std::uint64_t rank(const Poly& f) const;
  Poly unrank(std::uint64_t index) const;

 private:
  std::vector<Poly> equal_degree_split(const Poly& f, int d, std::mt19937_64& rng) const;

  Field field_;
};

}  // namespace hooleyff
