#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hooleyff/residue.hpp"

namespace hooleyff {

using Complex = std::complex<double>;

/// Coefficient of u^{-1} in the expansion of f/g in F_q((1/u)). Only f mod g
/// contributes, and for r = f mod g this is r_{m-1} / lc(g).
/// Throws DivisionByZeroPoly.
FieldElem residue_at_infinity(const PolyRing& ring, const Poly& f, const Poly& g);

/// e(f/g) = exp(2 pi i Tr(res_inf(f/g)) / p). The orientation (no
/// conjugation) is fixed here; every identity in the library is stated
/// against it.
class AdditiveCharEvaluator {
 public:
  explicit AdditiveCharEvaluator(Field field);

  const Field& field() const noexcept { return ring_.field(); }
  const PolyRing& poly_ring() const noexcept { return ring_; }
  Complex root_of_unity() const noexcept { return roots_[1 % roots_.size()]; }
  /// zeta_p^k for k in [0, p).
  Complex root_power(std::uint32_t k) const noexcept { return roots_[k]; }

  /// Tr(res_inf(f/g)) in [0, p).
  std::uint32_t phase(const Poly& f, const Poly& g) const;
  Complex operator()(const Poly& f, const Poly& g) const { return roots_[phase(f, g)]; }

 private:
  PolyRing ring_;
  std::vector<Complex> roots_;
};

/// The F_p-bilinear pairing (f, h) -> Tr(res_inf(f h / g)) on residue indices.
/// Residue indices are base-p digit strings, digit j being the j-th F_p
/// coordinate, so the pairing is a matrix over F_p of size (e m) x (e m).
class AdditivePairing {
 public:
  explicit AdditivePairing(ResidueRing ring);

  const ResidueRing& ring() const noexcept { return ring_; }
  std::size_t dimension() const noexcept { return dim_; }

  /// Residue index of the vector M h, so that the pairing of f with h is the
  /// standard dot product of the digit vectors of f and linear_image(h).
  std::uint64_t linear_image(std::uint64_t h) const;
  std::uint32_t phase(std::uint64_t f, std::uint64_t h) const;

 private:
  ResidueRing ring_;
  std::size_t dim_ = 0;
  std::vector<std::uint32_t> matrix_;  // dim_ x dim_, symmetric
};

/// Multiplicative character of (F_q[u]/(g))^x given by exponents k_pi against
/// the fixed generators of the residue fields:
///   chi(x) = prod_pi exp(2 pi i k_pi log_pi(x mod pi) / (|pi| - 1)).
class MultChar {
 public:
  /// Throws ExponentOutOfRange unless 0 <= k_pi <= |pi| - 2 for each factor.
  static MultChar create(ResidueRing ring, std::vector<std::uint64_t> exponents);

  const ResidueRing& ring() const noexcept;
  const std::vector<std::uint64_t>& exponents() const noexcept;
  std::uint64_t order() const noexcept;
  bool is_primitive() const noexcept;
  bool is_principal() const noexcept;

  /// Value at a residue index; 0 for non-units.
  Complex at(std::uint64_t residue) const;
  /// Value at an arbitrary polynomial (reduced internally).
  Complex operator()(const Poly& x) const;
  /// chi(x) = exp(2 pi i phase / phase_denominator()), nullopt for non-units.
  std::optional<std::uint64_t> phase(std::uint64_t residue) const;
  std::uint64_t phase_denominator() const noexcept;

  /// Values at every residue index.
  std::vector<Complex> table() const;

  friend bool operator==(const MultChar& a, const MultChar& b) {
    return a.ring() == b.ring() && a.exponents() == b.exponents();
  }

 private:
  struct Data;
  explicit MultChar(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// Exponent vectors of primitive characters (every k_pi nonzero), in
/// odometer order with the last factor varying fastest, at most `limit`.
std::vector<std::vector<std::uint64_t>> primitive_character_exponents(const ResidueRing& ring, std::size_t limit);

/// Exponent vectors of all nonprincipal characters, same order.
std::vector<std::vector<std::uint64_t>> nonprincipal_character_exponents(const ResidueRing& ring);

}  // namespace hooleyff
