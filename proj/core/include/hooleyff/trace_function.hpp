#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hooleyff/characters.hpp"
#include "hooleyff/tpoly.hpp"

namespace hooleyff {

enum class Family { MixedChar, Kloosterman, ValueSet, Custom };

std::string_view family_name(Family f) noexcept;

/// A |g|-periodic function on F_q[u], stored as a table over residue indices,
/// together with the rank/conductor metadata consumed by the bound formulas.
struct TraceFunction {
  ResidueRing ring;
  std::vector<Complex> values;
  unsigned rank_r = 1;
  unsigned conductor_c = 0;
  Family family = Family::Custom;
  std::string label;

  /// Throws Validation unless values.size() == |g|.
  TraceFunction(ResidueRing ring, std::vector<Complex> values, unsigned rank, unsigned conductor, Family family,
                std::string label = {});

  std::uint64_t size() const noexcept { return values.size(); }
  const Complex& operator[](std::uint64_t i) const noexcept { return values[i]; }
};

/// chi(F(u,h)) e(a(u,h) * inverse(b(u,h)) / g).
struct MixedCharSpec {
  MultChar chi;
  TPoly F;
  TPoly a;
  TPoly b;
};

struct HypothesisViolation {
  std::size_t factor_index = 0;
  Poly pi;
  std::string clause;
};

/// Checks, for every irreducible factor pi of g:
///   b mod pi is nonzero,
///   deg_T(a mod pi) <= deg_T(b mod pi) + 1,
///   deg_T(b mod pi) < p,
///   deg_T(F mod pi) > 0 or (b mod pi) does not divide (a mod pi).
/// The zero polynomial has degree -infinity and satisfies every upper bound.
std::vector<HypothesisViolation> check_mixed_char_hypotheses(const MixedCharSpec& spec);

/// Global T-degrees of F and b modulo g, as used by the corollary bound.
int mixed_char_degree_F(const MixedCharSpec& spec);
int mixed_char_degree_b(const MixedCharSpec& spec);

/// max over pi of deg_T(F mod pi) + 2 deg_T(b mod pi), with a constant or
/// vanishing reduction of F contributing 0.
unsigned mixed_char_conductor(const MixedCharSpec& spec);

/// The part of a mixed-character table that does not depend on chi: for each
/// residue h, the index of F(u,h) mod g and the additive phase of
/// a(u,h)/b(u,h), or -1 where b(u,h) is not a unit.
struct MixedCharSkeleton {
  ResidueRing ring;
  std::vector<std::uint64_t> f_values;
  std::vector<std::int32_t> additive_phase;

  static MixedCharSkeleton build(const ResidueRing& ring, const TPoly& F, const TPoly& a, const TPoly& b);
  std::vector<Complex> apply(const MultChar& chi) const;
};

/// Builds the table of h -> chi(F(u,h)) e(a b^{-1} / g). Throws NotPrimitive
/// or HypothesisViolation (naming the first failing factor and clause).
/// Metadata: rank 1, conductor from mixed_char_conductor.
TraceFunction from_mixed_char(const MixedCharSpec& spec, std::string label = {});

/// Same value computed factor by factor through the Bezout decomposition
/// prod_pi chi_pi(F mod pi) e(f_pi a b_pi^{-1} / pi).
Complex mixed_char_value_via_crt(const MixedCharSpec& spec, const Poly& h);

struct KloostermanSpec {
  unsigned k = 2;
  Poly b;
  /// Conductor metadata; 0 means "use k".
  unsigned conductor = 0;
};

/// Normalized hyper-Kloosterman table
///   Kl_k(a; b) = (-1)^{k-1} |g|^{-(k-1)/2} sum_{x_1...x_k = a} e(b (x_1+...+x_k) / g),
/// all a at once via (k-1)-fold multiplicative convolution in log coordinates.
/// Throws KTooSmall or NotCoprime.
TraceFunction from_kloosterman(const KloostermanSpec& spec, const ResidueRing& ring, std::string label = {});

struct ValueSet {
  std::vector<bool> members;  // indexed by residue index
  std::uint64_t count = 0;
  TraceFunction indicator;
};

/// Image of x -> P(x) on F_q[u]/(pi), pi = ring.modulus() irreducible.
/// Throws NotIrreducible, Validation (deg_T P < 1) or
/// DegreeTooLargeForCharacteristic (p <= d). Indicator metadata: rank and
/// conductor d!.
ValueSet value_set(const TPoly& P, const ResidueRing& ring);

/// x -> t(x + c); metadata unchanged.
TraceFunction translate(const TraceFunction& t, std::uint64_t c);

/// CSV with header residue_index,residue_poly,re,im. Values use 12
/// significant digits.
void write_table_csv(std::ostream& out, const TraceFunction& t);
/// Reads the CSV written by write_table_csv for the given ring.
TraceFunction read_table_csv(std::istream& in, const ResidueRing& ring, unsigned rank, unsigned conductor,
                             std::string label = {});

}  // namespace hooleyff
