#include "hooleyff/poly.hpp"

#include <algorithm>
#include <string>

#include "hooleyff/error.hpp"

namespace hooleyff {

Poly::Poly(std::vector<FieldElem> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().index == 0) coeffs_.pop_back();
}

Poly Poly::monomial(FieldElem c, int deg) {
  if (c.index == 0) return Poly();
  std::vector<FieldElem> v(static_cast<std::size_t>(deg) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

bool poly_order_less(const Poly& a, const Poly& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

Poly PolyRing::add(const Poly& a, const Poly& b) const {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<FieldElem> out(std::max(x.size(), y.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    const FieldElem xi = i < x.size() ? x[i] : FieldElem{};
    const FieldElem yi = i < y.size() ? y[i] : FieldElem{};
    out[i] = field_.add(xi, yi);
  }
  return Poly(std::move(out));
}

Poly PolyRing::neg(const Poly& a) const {
  std::vector<FieldElem> out(a.coeffs());
  for (auto& c : out) c = field_.neg(c);
  return Poly(std::move(out));
}

Poly PolyRing::sub(const Poly& a, const Poly& b) const { return add(a, neg(b)); }

Poly PolyRing::mul(const Poly& a, const Poly& b) const {
  if (a.is_zero() || b.is_zero()) return Poly();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<FieldElem> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].index == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] = field_.add(out[i + j], field_.mul(x[i], y[j]));
  }
  return Poly(std::move(out));
}

Poly PolyRing::scale(const Poly& a, FieldElem c) const {
  std::vector<FieldElem> out(a.coeffs());
  for (auto& v : out) v = field_.mul(v, c);
  return Poly(std::move(out));
}

std::pair<Poly, Poly> PolyRing::divmod(const Poly& a, const Poly& b) const {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<FieldElem> r = a.coeffs();
  const int db = b.degree();
  std::vector<FieldElem> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  const FieldElem lead_inv = field_.inv(b.leading());
  const auto& bc = b.coeffs();
  for (int i = a.degree(); i >= db; --i) {
    const FieldElem c = field_.mul(r[i], lead_inv);
    if (c.index == 0) continue;
    quot[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] = field_.sub(r[i - db + j], field_.mul(c, bc[j]));
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(r))};
}

Poly PolyRing::mod(const Poly& a, const Poly& b) const {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "reduction modulo the zero polynomial");
  if (a.degree() < b.degree()) return a;
  return divmod(a, b).second;
}

Poly PolyRing::monic(const Poly& a) const {
  if (a.is_zero() || a.leading() == field_.one()) return a;
  return scale(a, field_.inv(a.leading()));
}

Poly PolyRing::gcd(const Poly& a, const Poly& b) const {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

PolyRing::Xgcd PolyRing::xgcd(const Poly& a, const Poly& b) const {
  Poly r0 = a, r1 = b;
  Poly s0 = one(), s1;
  Poly t0, t1 = one();
  while (!r1.is_zero()) {
    auto [quot, r2] = divmod(r0, r1);
    Poly s2 = sub(s0, mul(quot, s1));
    Poly t2 = sub(t0, mul(quot, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {Poly(), Poly(), Poly()};
  const FieldElem norm = field_.inv(r0.leading());
  return {scale(r0, norm), scale(s0, norm), scale(t0, norm)};
}

Poly PolyRing::inverse_mod(const Poly& a, const Poly& m) const {
  auto [d, s, t] = xgcd(mod(a, m), m);
  if (d.degree() != 0) throw Error(ErrorCode::NotCoprime, "element is not invertible modulo the given polynomial");
  return mod(s, m);
}

Poly PolyRing::derivative(const Poly& a) const {
  if (a.degree() <= 0) return Poly();
  std::vector<FieldElem> out(static_cast<std::size_t>(a.degree()));
  for (int i = 1; i <= a.degree(); ++i) {
    // i * a_i with i taken in the prime subfield.
    out[i - 1] = field_.mul(field_.from_integer(i), a.coeff(i));
  }
  return Poly(std::move(out));
}

Poly PolyRing::mul_mod(const Poly& a, const Poly& b, const Poly& m) const { return mod(mul(a, b), m); }

Poly PolyRing::pow_mod(const Poly& a, std::uint64_t k, const Poly& m) const {
  Poly r = mod(one(), m);
  Poly base = mod(a, m);
  while (k > 0) {
    if (k & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    k >>= 1;
  }
  return r;
}

FieldElem PolyRing::evaluate(const Poly& a, FieldElem x) const {
  FieldElem acc{};
  const auto& c = a.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c[i]);
  return acc;
}

std::uint64_t PolyRing::norm(const Poly& f) const {
  if (f.is_zero()) return 0;
  std::uint64_t out = 1;
  for (int i = 0; i < f.degree(); ++i) {
    if (out > (std::uint64_t{1} << 63) / q()) throw Error(ErrorCode::TooLarge, "norm exceeds 2^63");
    out *= q();
  }
  return out;
}

bool PolyRing::is_irreducible(const Poly& f) const {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const Poly m = monic(f);
  const Poly x = u();
  Poly frob = x;
  for (int i = 1; i <= n / 2; ++i) {
    frob = pow_mod(frob, q(), m);
    const Poly diff = sub(frob, x);
    if (diff.is_zero()) return false;
    if (gcd(diff, m).degree() > 0) return false;
  }
  return true;
}

std::vector<Poly> PolyRing::equal_degree_split(const Poly& f, int d, std::mt19937_64& rng) const {
  if (f.degree() == d) return {f};
  const int n = f.degree();
  const bool even = field_.p() == 2;
  std::uint64_t qd = 1;
  for (int i = 0; i < d; ++i) qd *= q();
  for (;;) {
    std::vector<FieldElem> coeffs(static_cast<std::size_t>(n));
    for (auto& c : coeffs) c = FieldElem{static_cast<std::uint32_t>(rng() % q())};
    const Poly a(std::move(coeffs));
    if (a.degree() <= 0) continue;
    Poly b;
    if (even) {
      // Absolute trace to F_2 of a in F_{q^d}: sum of a^{2^j}, j < e*d.
      const int bits = static_cast<int>(field_.e()) * d;
      Poly term = a;
      for (int j = 0; j < bits; ++j) {
        b = add(b, term);
        term = mul_mod(term, term, f);
      }
    } else {
      b = sub(pow_mod(a, (qd - 1) / 2, f), one());
    }
    const Poly c = gcd(b, f);
    if (c.degree() <= 0 || c.degree() >= n) continue;
    auto left = equal_degree_split(c, d, rng);
    auto right = equal_degree_split(divmod(f, c).first, d, rng);
    left.insert(left.end(), right.begin(), right.end());
    return left;
  }
}

std::vector<Poly> PolyRing::factor_squarefree(const Poly& f, std::uint64_t seed) const {
  if (f.degree() <= 0) return {};
  std::mt19937_64 rng(seed);
  std::vector<Poly> out;
  Poly rest = monic(f);
  const Poly x = u();
  Poly frob = x;
  for (int i = 1; 2 * i <= rest.degree(); ++i) {
    frob = pow_mod(frob, q(), rest);
    const Poly g = gcd(sub(frob, x), rest);
    if (g.degree() > 0) {
      auto parts = equal_degree_split(g, i, rng);
      for (auto& part : parts) out.push_back(monic(part));
      rest = divmod(rest, g).first;
      frob = mod(frob, rest);
    }
  }
  if (rest.degree() > 0) out.push_back(monic(rest));
  std::sort(out.begin(), out.end(), poly_order_less);
  return out;
}

std::uint64_t PolyRing::rank(const Poly& f) const {
  std::uint64_t idx = 0;
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) idx = idx * q() + c[i].index;
  return idx;
}

Poly PolyRing::unrank(std::uint64_t index) const {
  std::vector<FieldElem> c;
  while (index > 0) {
    c.push_back(FieldElem{static_cast<std::uint32_t>(index % q())});
    index /= q();
  }
  return Poly(std::move(c));
}

}  // namespace hooleyff
