#include "hooleyff/field.hpp"

#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_util.hpp"

namespace hooleyff {
namespace {

struct Pe {
  std::uint32_t p, e;
};

// Every field with q <= 25.
const std::vector<Pe> kSmallFields = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {5, 1}, {5, 2},
                                      {7, 1}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}};

TEST(Field, PrimeFieldF3) {
  const auto F = Field::create(3, 1);
  EXPECT_EQ(F.q(), 3u);
  EXPECT_EQ(F.generator(), FieldElem{2});
  EXPECT_EQ(F.discrete_log(FieldElem{2}), 1u);
  EXPECT_EQ(F.discrete_log(FieldElem{1}), 0u);
  EXPECT_EQ(F.trace(FieldElem{2}), 2u);
}

TEST(Field, F5LogOfFour) {
  const auto F = Field::create(5, 1);
  EXPECT_EQ(F.generator(), FieldElem{2});
  EXPECT_EQ(F.discrete_log(FieldElem{4}), 2u);
}

TEST(Field, F4FromExplicitModulus) {
  const auto F = Field::create(2, 2, std::vector<std::uint32_t>{1, 1, 1});
  EXPECT_EQ(F.q(), 4u);
  const FieldElem omega{2};  // x
  EXPECT_EQ(F.trace(F.one()), 0u);
  EXPECT_EQ(F.trace(omega), 1u);
  EXPECT_EQ(F.mul(omega, omega), F.add(omega, F.one()));
}

TEST(Field, DefaultModulusIsSmallestIrreducible) {
  EXPECT_EQ(Field::create(2, 2).modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(Field::create(3, 2).modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
  EXPECT_EQ(Field::create(2, 3).modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));
}

TEST(Field, Errors) {
  EXPECT_HFF_ERROR(Field::create(4, 1), NotPrime);
  EXPECT_HFF_ERROR(Field::create(1, 1), NotPrime);
  EXPECT_HFF_ERROR(Field::create(2, 2, std::vector<std::uint32_t>{1, 0, 1}), ReducibleModulus);
  EXPECT_HFF_ERROR(Field::create(2, 2, std::vector<std::uint32_t>{1, 1}), DegreeMismatch);
  EXPECT_HFF_ERROR(Field::create(3, 0), DegreeMismatch);
  const auto F = Field::create(3, 1);
  EXPECT_HFF_ERROR(F.discrete_log(F.zero()), ZeroArgument);
  EXPECT_HFF_ERROR(F.inv(F.zero()), ZeroArgument);
}

TEST(Field, NoLogTableAboveThreshold) {
  const auto F = Field::create(2, 21);
  EXPECT_FALSE(F.has_log_table());
  EXPECT_HFF_ERROR(F.discrete_log(F.one()), TableUnavailable);
  const FieldElem x{123457};
  EXPECT_EQ(F.mul(x, F.inv(x)), F.one());
}

TEST(Field, MultiplicationMatchesSchoolbookOracle) {
  for (auto [p, e] : kSmallFields) {
    const auto F = Field::create(p, e);
    for (std::uint32_t a = 0; a < F.q(); ++a)
      for (std::uint32_t b = 0; b < F.q(); ++b)
        ASSERT_EQ(F.mul({a}, {b}).index, oracle::field_mul(p, F.modulus(), a, b)) << p << "^" << e;
  }
}

TEST(Field, AxiomsExhaustive) {
  for (auto [p, e] : kSmallFields) {
    const auto F = Field::create(p, e);
    const std::uint32_t q = F.q();
    for (std::uint32_t a = 0; a < q; ++a) {
      const FieldElem x{a};
      EXPECT_EQ(F.add(x, F.neg(x)), F.zero());
      if (a != 0) EXPECT_EQ(F.mul(x, F.inv(x)), F.one());
      for (std::uint32_t b = 0; b < q; ++b) {
        const FieldElem y{b};
        ASSERT_EQ(F.add(x, y), F.add(y, x));
        ASSERT_EQ(F.mul(x, y), F.mul(y, x));
        for (std::uint32_t c = 0; c < q; ++c) {
          const FieldElem z{c};
          ASSERT_EQ(F.mul(F.mul(x, y), z), F.mul(x, F.mul(y, z)));
          ASSERT_EQ(F.add(F.add(x, y), z), F.add(x, F.add(y, z)));
          ASSERT_EQ(F.mul(x, F.add(y, z)), F.add(F.mul(x, y), F.mul(x, z)));
        }
      }
    }
  }
}

TEST(Field, FrobeniusAdditiveAndFixesPrimeField) {
  for (auto [p, e] : kSmallFields) {
    const auto F = Field::create(p, e);
    std::uint32_t fixed = 0;
    for (std::uint32_t a = 0; a < F.q(); ++a) {
      if (F.frobenius({a}) == FieldElem{a}) {
        ++fixed;
        EXPECT_LT(a, p);
      }
      for (std::uint32_t b = 0; b < F.q(); ++b)
        ASSERT_EQ(F.frobenius(F.add({a}, {b})), F.add(F.frobenius({a}), F.frobenius({b})));
    }
    EXPECT_EQ(fixed, p);
  }
}

TEST(Field, TraceSurjectiveWithEqualFibers) {
  for (auto [p, e] : kSmallFields) {
    const auto F = Field::create(p, e);
    std::vector<std::uint32_t> fiber(p, 0);
    for (std::uint32_t a = 0; a < F.q(); ++a) {
      // Definition: sum of the Galois conjugates.
      FieldElem sum = F.zero(), x{a};
      for (std::uint32_t i = 0; i < e; ++i) {
        sum = F.add(sum, x);
        x = F.frobenius(x);
      }
      ASSERT_LT(sum.index, p);
      ASSERT_EQ(F.trace({a}), sum.index);
      ++fiber[F.trace({a})];
      for (std::uint32_t lam = 0; lam < p; ++lam)
        ASSERT_EQ(F.trace(F.mul({lam}, {a})), lam * F.trace({a}) % p);
    }
    for (auto c : fiber) EXPECT_EQ(c, F.q() / p);
  }
}

TEST(Field, GeneratorOrderAndLogRoundTrip) {
  for (auto [p, e] : kSmallFields) {
    const auto F = Field::create(p, e);
    const FieldElem g = F.generator();
    std::set<std::uint32_t> seen;
    FieldElem x = F.one();
    for (std::uint32_t k = 0; k + 1 < F.q(); ++k) {
      seen.insert(x.index);
      EXPECT_EQ(F.exp(k), x);
      x = F.mul(x, g);
    }
    EXPECT_EQ(x, F.one());
    EXPECT_EQ(seen.size(), F.q() - 1);
    // Smallest index of full order.
    for (std::uint32_t c = 1; c < g.index; ++c) {
      std::set<std::uint32_t> orbit;
      FieldElem y = F.one();
      for (std::uint32_t k = 0; k + 1 < F.q(); ++k) {
        orbit.insert(y.index);
        y = F.mul(y, {c});
      }
      EXPECT_LT(orbit.size(), F.q() - 1);
    }
    for (std::uint32_t a = 1; a < F.q(); ++a) EXPECT_EQ(F.exp(F.discrete_log({a})), FieldElem{a});
  }
}

TEST(Field, CoefficientRoundTrip) {
  const auto F = Field::create(3, 2);
  for (std::uint32_t a = 0; a < 9; ++a) EXPECT_EQ(F.from_coeffs(F.coeffs({a})), FieldElem{a});
  EXPECT_EQ(F.from_integer(-1), FieldElem{2});
  EXPECT_HFF_ERROR(F.from_coeffs(std::vector<std::uint32_t>{3}), DegreeMismatch);
}

}  // namespace
}  // namespace hooleyff
