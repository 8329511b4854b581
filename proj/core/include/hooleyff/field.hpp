#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace hooleyff {

/// Element of F_q in the power basis of the modulus root. The packed index is
/// sum_i c_i p^i with c_0 the constant coefficient, so index order is the
/// lexicographic order of the coefficient sequence read from the top.
struct FieldElem {
  std::uint32_t index = 0;

  friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

/// The coefficient field F_q, q = p^e. Immutable and cheap to copy: all
/// tables live behind a shared pointer.
class Field {
 public:
  /// Fields up to this size carry exp/log tables.
  static constexpr std::uint64_t kLogTableThreshold = std::uint64_t{1} << 20;

  /// Builds F_{p^e}. When `modulus` is absent the lexicographically smallest
  /// monic irreducible of degree e is used. `modulus` is listed constant term
  /// first and must be monic of degree e.
  static Field create(std::uint32_t p, std::uint32_t e,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t p() const noexcept;
  std::uint32_t e() const noexcept;
  std::uint32_t q() const noexcept;
  const std::vector<std::uint32_t>& modulus() const noexcept;
  FieldElem generator() const noexcept;
  bool has_log_table() const noexcept;

  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1}; }
  /// Image of the integer n in the prime subfield.
  FieldElem from_integer(std::int64_t n) const noexcept;
  /// Throws DegreeMismatch if more than e coefficients or a digit >= p.
  FieldElem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElem x) const;
  bool contains(FieldElem x) const noexcept { return x.index < q(); }

  FieldElem add(FieldElem a, FieldElem b) const noexcept;
  FieldElem sub(FieldElem a, FieldElem b) const noexcept;
  FieldElem neg(FieldElem a) const noexcept;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, std::uint64_t k) const;
  FieldElem frobenius(FieldElem a) const { return pow(a, p()); }

  /// Absolute trace to F_p, returned as an integer in [0, p).
  std::uint32_t trace(FieldElem x) const noexcept;

  /// generator^k.
  FieldElem exp(std::uint64_t k) const;
  /// Inverse of exp on F_q^x, in [0, q-2]. Throws ZeroArgument or
  /// TableUnavailable.
  std::uint32_t discrete_log(FieldElem x) const;

  /// Same characteristic, degree and modulus.
  bool operator==(const Field& other) const noexcept;

 private:
  struct Data;
  explicit Field(std::shared_ptr<const Data> data) : d_(std::move(data)) {}
  std::shared_ptr<const Data> d_;
};

}  // namespace hooleyff
