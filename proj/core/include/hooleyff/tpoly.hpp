#pragma once

#include <vector>

#include "hooleyff/poly.hpp"

namespace hooleyff {

/// Polynomial in T with coefficients in F_q[u] (read modulo some modulus),
/// constant term first. An element of (F_q[u]/(g))[T].
struct TPoly {
  std::vector<Poly> coeffs;

  static TPoly constant(Poly c) { return TPoly{{std::move(c)}}; }
  /// The polynomial T.
  static TPoly t(const PolyRing& ring) { return TPoly{{Poly(), ring.one()}}; }
};

/// Degree in T after reducing every coefficient modulo `modulus`;
/// kNegInfDegree when the reduction is zero.
int t_degree(const PolyRing& ring, const TPoly& f, const Poly& modulus);

/// f(u, h) mod modulus.
Poly t_evaluate(const PolyRing& ring, const TPoly& f, const Poly& h, const Poly& modulus);

/// Reduction of f modulo `modulus` with trailing zero coefficients dropped.
TPoly t_reduce(const PolyRing& ring, const TPoly& f, const Poly& modulus);

/// Whether b divides a in (F_q[u]/(pi))[T], pi irreducible. b must be
/// nonzero modulo pi.
bool t_divides(const PolyRing& ring, const TPoly& b, const TPoly& a, const Poly& pi);

}  // namespace hooleyff
