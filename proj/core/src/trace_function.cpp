#include "hooleyff/trace_function.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "hooleyff/detail/arith.hpp"
#include "hooleyff/error.hpp"
#include "hooleyff/serialize.hpp"

namespace hooleyff {

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::MixedChar: return "mixed-char";
    case Family::Kloosterman: return "kloosterman";
    case Family::ValueSet: return "value-set";
    case Family::Custom: return "custom";
  }
  return "custom";
}

TraceFunction::TraceFunction(ResidueRing ring_, std::vector<Complex> values_, unsigned rank, unsigned conductor,
                             Family family_, std::string label_)
    : ring(std::move(ring_)),
      values(std::move(values_)),
      rank_r(rank),
      conductor_c(conductor),
      family(family_),
      label(std::move(label_)) {
  if (values.size() != ring.size())
    throw Error(ErrorCode::Validation, "table has " + std::to_string(values.size()) + " entries, expected |g| = " +
                                           std::to_string(ring.size()));
  if (rank_r == 0) throw Error(ErrorCode::Validation, "rank metadata must be positive");
}

// ---------------------------------------------------------------------------
// Mixed characters

std::vector<HypothesisViolation> check_mixed_char_hypotheses(const MixedCharSpec& spec) {
  const ResidueRing& R = spec.chi.ring();
  const PolyRing& P = R.poly_ring();
  const int p = static_cast<int>(R.p());
  std::vector<HypothesisViolation> out;
  for (std::size_t i = 0; i < R.factors().size(); ++i) {
    const Poly& pi = R.factors()[i];
    const int dF = t_degree(P, spec.F, pi);
    const int da = t_degree(P, spec.a, pi);
    const int db = t_degree(P, spec.b, pi);
    auto fail = [&](std::string clause) { out.push_back({i, pi, std::move(clause)}); };
    if (db == kNegInfDegree) {
      fail("b mod pi must be nonzero");
      continue;
    }
    if (da != kNegInfDegree && da > db + 1)
      fail("deg_T(a mod pi) = " + std::to_string(da) + " exceeds deg_T(b mod pi) + 1 = " + std::to_string(db + 1));
    if (db >= p) fail("deg_T(b mod pi) = " + std::to_string(db) + " is not less than p = " + std::to_string(p));
    if (!(dF != kNegInfDegree && dF > 0) && t_divides(P, spec.b, spec.a, pi))
      fail("deg_T(F mod pi) is not positive and (b mod pi) divides (a mod pi)");
  }
  return out;
}

int mixed_char_degree_F(const MixedCharSpec& spec) {
  return t_degree(spec.chi.ring().poly_ring(), spec.F, spec.chi.ring().modulus());
}

int mixed_char_degree_b(const MixedCharSpec& spec) {
  return t_degree(spec.chi.ring().poly_ring(), spec.b, spec.chi.ring().modulus());
}

unsigned mixed_char_conductor(const MixedCharSpec& spec) {
  const ResidueRing& R = spec.chi.ring();
  unsigned best = 0;
  for (const auto& pi : R.factors()) {
    const int dF = t_degree(R.poly_ring(), spec.F, pi);
    const int db = t_degree(R.poly_ring(), spec.b, pi);
    const unsigned cF = dF > 0 ? static_cast<unsigned>(dF) : 0u;
    const unsigned cb = db > 0 ? static_cast<unsigned>(db) : 0u;
    best = std::max(best, cF + 2 * cb);
  }
  return best;
}

MixedCharSkeleton MixedCharSkeleton::build(const ResidueRing& ring, const TPoly& F, const TPoly& a, const TPoly& b) {
  const PolyRing& P = ring.poly_ring();
  const Poly& g = ring.modulus();
  MixedCharSkeleton s{ring, std::vector<std::uint64_t>(ring.size()), std::vector<std::int32_t>(ring.size(), -1)};
  for (std::uint64_t h = 0; h < ring.size(); ++h) {
    const Poly hp = ring.unrank(h);
    s.f_values[h] = P.rank(t_evaluate(P, F, hp, g));
    const Poly bv = t_evaluate(P, b, hp, g);
    if (!ring.is_unit(P.rank(bv))) continue;
    const Poly av = t_evaluate(P, a, hp, g);
    const Poly ratio = P.mul_mod(av, P.inverse_mod(bv, g), g);
    s.additive_phase[h] = static_cast<std::int32_t>(P.field().trace(residue_at_infinity(P, ratio, g)));
  }
  return s;
}

std::vector<Complex> MixedCharSkeleton::apply(const MultChar& chi) const {
  const std::uint32_t p = ring.p();
  std::vector<Complex> roots(p);
  for (std::uint32_t k = 0; k < p; ++k) roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / p);
  std::vector<Complex> out(f_values.size());
  for (std::size_t h = 0; h < out.size(); ++h) {
    if (additive_phase[h] < 0) continue;
    out[h] = chi.at(f_values[h]) * roots[static_cast<std::size_t>(additive_phase[h])];
  }
  return out;
}

TraceFunction from_mixed_char(const MixedCharSpec& spec, std::string label) {
  if (!spec.chi.is_primitive()) throw Error(ErrorCode::NotPrimitive, "character is trivial on some factor of g");
  const auto violations = check_mixed_char_hypotheses(spec);
  if (!violations.empty()) {
    const auto& v = violations.front();
    const auto& R = spec.chi.ring();
    throw Error(ErrorCode::HypothesisViolation,
                "factor #" + std::to_string(v.factor_index) + " pi = " + poly_to_string(R.field(), v.pi) + ": " + v.clause);
  }
  const auto skeleton = MixedCharSkeleton::build(spec.chi.ring(), spec.F, spec.a, spec.b);
  return TraceFunction(spec.chi.ring(), skeleton.apply(spec.chi), 1, mixed_char_conductor(spec), Family::MixedChar,
                       std::move(label));
}

Complex mixed_char_value_via_crt(const MixedCharSpec& spec, const Poly& h) {
  const ResidueRing& R = spec.chi.ring();
  const PolyRing& P = R.poly_ring();
  const AdditiveCharEvaluator e(R.field());
  Complex value{1.0, 0.0};
  for (std::size_t i = 0; i < R.factors().size(); ++i) {
    const Poly& pi = R.factors()[i];
    const ResidueField& K = R.residue_field(i);
    const Poly Fv = t_evaluate(P, spec.F, h, pi);
    const Poly bv = t_evaluate(P, spec.b, h, pi);
    if (Fv.is_zero() || bv.is_zero()) return Complex{0.0, 0.0};
    const std::uint64_t n = K.size() - 1;
    const std::uint64_t ph = detail::mul_mod(spec.chi.exponents()[i], K.discrete_log(P.rank(Fv)), n);
    const Complex chi_pi = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(ph) / static_cast<double>(n));
    const Poly av = t_evaluate(P, spec.a, h, pi);
    const Poly num = P.mul(R.bezout()[i], P.mul(av, P.inverse_mod(bv, pi)));
    value *= chi_pi * e(num, pi);
  }
  return value;
}

// ---------------------------------------------------------------------------
// Kloosterman

TraceFunction from_kloosterman(const KloostermanSpec& spec, const ResidueRing& ring, std::string label) {
  if (spec.k < 2) throw Error(ErrorCode::KTooSmall, "k = " + std::to_string(spec.k) + " must be at least 2");
  if (!ring.is_unit(ring.rank(spec.b))) throw Error(ErrorCode::NotCoprime, "b is not coprime to g");

  const UnitGroup& U = ring.units();
  const std::size_t r = U.cyclic_orders.size();
  const AdditivePairing pairing(ring);
  const std::uint64_t b_idx = ring.rank(spec.b);
  const std::uint32_t p = ring.p();
  std::vector<Complex> roots(p);
  for (std::uint32_t k = 0; k < p; ++k) roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / p);

  std::vector<std::vector<std::uint64_t>> coords(U.order, std::vector<std::uint64_t>(r));
  std::vector<Complex> base(U.order);
  for (std::uint64_t pos = 0; pos < U.order; ++pos) {
    for (std::size_t i = 0; i < r; ++i) coords[pos][i] = (pos / U.strides[i]) % U.cyclic_orders[i];
    base[pos] = roots[pairing.phase(U.residue_of[pos], b_idx)];
  }

  std::vector<Complex> cur = base;
  for (unsigned step = 1; step < spec.k; ++step) {
    std::vector<Complex> next(U.order);
    for (std::uint64_t x = 0; x < U.order; ++x) {
      if (cur[x] == Complex{}) continue;
      for (std::uint64_t y = 0; y < U.order; ++y) {
        std::uint64_t z = 0;
        for (std::size_t i = 0; i < r; ++i) {
          std::uint64_t c = coords[x][i] + coords[y][i];
          if (c >= U.cyclic_orders[i]) c -= U.cyclic_orders[i];
          z += c * U.strides[i];
        }
        next[z] += cur[x] * base[y];
      }
    }
    cur = std::move(next);
  }

  const double sign = (spec.k % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k-1}
  const double norm = sign / std::pow(std::sqrt(static_cast<double>(ring.size())), spec.k - 1);
  std::vector<Complex> values(ring.size());
  for (std::uint64_t a = 0; a < ring.size(); ++a) {
    const std::uint64_t pos = U.position_of[a];
    if (pos != UnitGroup::kNotUnit) values[a] = cur[pos] * norm;
  }
  const unsigned conductor = spec.conductor == 0 ? spec.k : spec.conductor;
  return TraceFunction(ring, std::move(values), spec.k, conductor, Family::Kloosterman, std::move(label));
}

// ---------------------------------------------------------------------------
// Value sets

ValueSet value_set(const TPoly& P, const ResidueRing& ring) {
  if (!ring.is_irreducible()) throw Error(ErrorCode::NotIrreducible, "value sets are taken modulo an irreducible pi");
  const PolyRing& R = ring.poly_ring();
  const Poly& pi = ring.modulus();
  const int d = t_degree(R, P, pi);
  if (d < 1) throw Error(ErrorCode::Validation, "deg_T P must be at least 1");
  if (static_cast<std::uint32_t>(d) >= ring.p())
    throw Error(ErrorCode::DegreeTooLargeForCharacteristic,
                "deg_T P = " + std::to_string(d) + " but p = " + std::to_string(ring.p()) + " must exceed it");

  std::vector<bool> members(ring.size(), false);
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < ring.size(); ++x) {
    const std::uint64_t v = R.rank(t_evaluate(R, P, ring.unrank(x), pi));
    if (!members[v]) {
      members[v] = true;
      ++count;
    }
  }
  std::vector<Complex> values(ring.size());
  for (std::uint64_t x = 0; x < ring.size(); ++x) values[x] = members[x] ? 1.0 : 0.0;
  const auto df = static_cast<unsigned>(detail::factorial(static_cast<unsigned>(d)));
  return ValueSet{std::move(members), count, TraceFunction(ring, std::move(values), df, df, Family::ValueSet)};
}

TraceFunction translate(const TraceFunction& t, std::uint64_t c) {
  std::vector<Complex> values(t.size());
  for (std::uint64_t x = 0; x < t.size(); ++x) values[x] = t.values[t.ring.add(x, c)];
  return TraceFunction(t.ring, std::move(values), t.rank_r, t.conductor_c, t.family, t.label);
}

// ---------------------------------------------------------------------------
// CSV

void write_table_csv(std::ostream& out, const TraceFunction& t) {
  out << "residue_index,residue_poly,re,im\n";
  for (std::uint64_t x = 0; x < t.size(); ++x)
    out << x << ",\"" << poly_to_string(t.ring.field(), t.ring.unrank(x)) << "\"," << format_real(t.values[x].real())
        << ',' << format_real(t.values[x].imag()) << '\n';
}

TraceFunction read_table_csv(std::istream& in, const ResidueRing& ring, unsigned rank, unsigned conductor,
                             std::string label) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("residue_index", 0) != 0)
    throw Error(ErrorCode::ConfigParse, "table CSV must start with the residue_index header");
  std::vector<Complex> values(ring.size());
  std::vector<bool> seen(ring.size(), false);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    // residue_index,"poly",re,im  -- the poly field is quoted and may contain commas.
    const auto first = line.find(',');
    const auto last = line.rfind(',');
    const auto middle = line.rfind(',', last - 1);
    if (first == std::string::npos || middle == std::string::npos || middle < first)
      throw Error(ErrorCode::ConfigParse, "malformed table row at line " + std::to_string(lineno));
    try {
      const std::uint64_t idx = std::stoull(line.substr(0, first));
      const double re = std::stod(line.substr(middle + 1, last - middle - 1));
      const double im = std::stod(line.substr(last + 1));
      if (idx >= ring.size()) throw Error(ErrorCode::ConfigParse, "residue index out of range at line " + std::to_string(lineno));
      values[idx] = Complex{re, im};
      seen[idx] = true;
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ConfigParse, "unparsable number at line " + std::to_string(lineno));
    }
  }
  for (std::uint64_t x = 0; x < ring.size(); ++x)
    if (!seen[x]) throw Error(ErrorCode::ConfigParse, "table is missing residue index " + std::to_string(x));
  return TraceFunction(ring, std::move(values), rank, conductor, Family::Custom, std::move(label));
}

}  // namespace hooleyff
