#include "hooleyff/tpoly.hpp"

#include "hooleyff/error.hpp"

namespace hooleyff {

TPoly t_reduce(const PolyRing& ring, const TPoly& f, const Poly& modulus) {
  TPoly out;
  for (const auto& c : f.coeffs) out.coeffs.push_back(ring.mod(c, modulus));
  while (!out.coeffs.empty() && out.coeffs.back().is_zero()) out.coeffs.pop_back();
  return out;
}

int t_degree(const PolyRing& ring, const TPoly& f, const Poly& modulus) {
  for (std::size_t i = f.coeffs.size(); i-- > 0;)
    if (!ring.mod(f.coeffs[i], modulus).is_zero()) return static_cast<int>(i);
  return kNegInfDegree;
}

Poly t_evaluate(const PolyRing& ring, const TPoly& f, const Poly& h, const Poly& modulus) {
  Poly acc;
  for (std::size_t i = f.coeffs.size(); i-- > 0;) acc = ring.mod(ring.add(ring.mul(acc, h), f.coeffs[i]), modulus);
  return acc;
}

bool t_divides(const PolyRing& ring, const TPoly& b, const TPoly& a, const Poly& pi) {
  const TPoly bb = t_reduce(ring, b, pi);
  TPoly r = t_reduce(ring, a, pi);
  if (bb.coeffs.empty()) throw Error(ErrorCode::DivisionByZeroPoly, "divisor vanishes modulo pi");
  const std::size_t db = bb.coeffs.size() - 1;
  const Poly lead_inv = ring.inverse_mod(bb.coeffs.back(), pi);
  while (r.coeffs.size() > db) {
    const std::size_t shift = r.coeffs.size() - 1 - db;
    const Poly c = ring.mul_mod(r.coeffs.back(), lead_inv, pi);
    for (std::size_t j = 0; j <= db; ++j)
      r.coeffs[shift + j] = ring.mod(ring.sub(r.coeffs[shift + j], ring.mul(c, bb.coeffs[j])), pi);
    while (!r.coeffs.empty() && r.coeffs.back().is_zero()) r.coeffs.pop_back();
  }
  return r.coeffs.empty();
}

}  // namespace hooleyff
