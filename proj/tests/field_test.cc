// Copyright 2026 The pgtool Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "oracles.h"
#include "pgtool/field.h"

namespace pgtool {
namespace {

const std::vector<std::pair<int, int>> kSmallFields = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5},
                                                       {2, 6}, {3, 1}, {3, 2}, {3, 3}, {3, 4},
                                                       {5, 1}, {5, 2}, {7, 1}, {7, 2}};

TEST(CreateField, PrimeFieldModulusIsX) {
  EXPECT_EQ(create_field(2, 1)->modulus(), (std::vector<int>{0, 1}));
  EXPECT_EQ(create_field(2, 1)->q(), 2u);
}

TEST(CreateField, Gf4UsesTheOnlyIrreducibleQuadratic) {
  EXPECT_EQ(create_field(2, 2)->modulus(), (std::vector<int>{1, 1, 1}));
}

TEST(CreateField, Gf9UsesXSquaredPlusOne) {
  EXPECT_EQ(create_field(3, 2)->modulus(), (std::vector<int>{1, 0, 1}));
}

TEST(CreateField, ModulusMatchesBruteForceSearch) {
  for (auto [p, k] : kSmallFields) {
    if (k == 1) continue;
    EXPECT_EQ(canonical_modulus(p, k), oracle::smallest_irreducible(p, k)) << p << "^" << k;
  }
  EXPECT_EQ(canonical_modulus(2, 8), oracle::smallest_irreducible(2, 8));
  EXPECT_EQ(canonical_modulus(11, 3), oracle::smallest_irreducible(11, 3));
}

TEST(CreateField, RejectsBadParameters) {
  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kParseError;
  };
  EXPECT_EQ(code_of([] { create_field(4, 1); }), ErrorCode::kNonPrimeP);
  EXPECT_EQ(code_of([] { create_field(1, 1); }), ErrorCode::kNonPrimeP);
  EXPECT_EQ(code_of([] { create_field(2, 0); }), ErrorCode::kDegreeZero);
  EXPECT_EQ(code_of([] { create_field(2, 21); }), ErrorCode::kSizeCapExceeded);
  EXPECT_EQ(code_of([] { create_field(1031, 2); }), ErrorCode::kSizeCapExceeded);
  EXPECT_NO_THROW(create_field(2, 20));
}

TEST(CreateField, IsDeterministic) {
  for (auto [p, k] : kSmallFields) {
    const auto a = create_field(p, k);
    const auto b = create_field(p, k);
    EXPECT_EQ(a->modulus(), b->modulus());
    EXPECT_TRUE(*a == *b);
    for (Elem x = 0; x < a->q(); ++x) EXPECT_EQ(a->inv(x == 0 ? 1 : x), b->inv(x == 0 ? 1 : x));
  }
}

TEST(FieldOfOrder, DecomposesPrimePowers) {
  EXPECT_EQ(field_of_order(9)->p(), 3);
  EXPECT_EQ(field_of_order(9)->k(), 2);
  EXPECT_EQ(field_of_order(8)->k(), 3);
  EXPECT_THROW(field_of_order(6), Error);
  EXPECT_THROW(field_of_order(1), Error);
}

TEST(ElementOps, SpecExamples) {
  const auto gf3 = create_field(3, 1);
  EXPECT_EQ(gf3->add(2, 2), 1u);
  const auto gf4 = create_field(2, 2);
  EXPECT_EQ(gf4->mul(2, 2), 3u);
  for (auto [p, k] : kSmallFields) {
    const auto f = create_field(p, k);
    for (Elem a = 0; a < f->q(); ++a) EXPECT_EQ(f->mul(a, 1), a);
  }
}

TEST(ElementOps, MultiplicationMatchesPolynomialArithmetic) {
  for (auto [p, k] : kSmallFields) {
    const auto f = create_field(p, k);
    const auto mod = f->modulus();
    for (Elem a = 0; a < f->q(); ++a) {
      for (Elem b = 0; b < f->q(); ++b) {
        ASSERT_EQ(f->mul(a, b), oracle::mulmod(a, b, mod, p)) << p << "^" << k;
      }
    }
  }
}

TEST(ElementOps, FieldAxiomsHoldExhaustively) {
  for (auto [p, k] : kSmallFields) {
    const auto f = create_field(p, k);
    if (f->q() > 81) continue;
    const Elem q = f->q();
    for (Elem a = 0; a < q; ++a) {
      if (a != 0) {
        ASSERT_EQ(f->inv(f->inv(a)), a);
        ASSERT_EQ(f->mul(a, f->inv(a)), 1u);
      }
      ASSERT_EQ(f->add(a, f->neg(a)), 0u);
      for (Elem b = 0; b < q; ++b) {
        ASSERT_EQ(f->add(a, b), f->add(b, a));
        ASSERT_EQ(f->mul(a, b), f->mul(b, a));
        ASSERT_EQ(f->sub(f->add(a, b), b), a);
        for (Elem c = 0; c < q; ++c) {
          ASSERT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
          ASSERT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
          ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
    }
  }
}

TEST(ElementOps, PowMatchesRepeatedMultiplication) {
  const auto f = create_field(3, 3);
  for (Elem a = 0; a < f->q(); ++a) {
    Elem acc = 1;
    for (int e = 0; e < 60; ++e) {
      ASSERT_EQ(f->pow(a, e), acc);
      acc = f->mul(acc, a);
    }
  }
}

TEST(ElementOps, DigitsRoundTrip) {
  const auto f = create_field(5, 2);
  EXPECT_EQ(f->digits(7), (std::vector<int>{2, 1}));
  for (Elem a = 0; a < f->q(); ++a) EXPECT_EQ(f->from_digits(f->digits(a)), a);
}

TEST(FieldElement, ZeroInverseAndMismatch) {
  const auto gf3 = create_field(3, 1);
  const auto gf5 = create_field(5, 1);
  try {
    FieldElement(gf3, 0).inv();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroInverse);
  }
  try {
    (void)(FieldElement(gf3, 1) + FieldElement(gf5, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFieldMismatch);
  }
  EXPECT_FALSE(FieldElement(gf3, 1) == FieldElement(gf5, 1));
  EXPECT_TRUE(FieldElement(gf3, 2) * FieldElement(gf3, 2) == FieldElement(gf3, 1));
  EXPECT_TRUE(FieldElement(gf3, 2).inv() == FieldElement(gf3, 2));
  EXPECT_TRUE(-FieldElement(gf3, 1) == FieldElement(gf3, 2));
  EXPECT_THROW(FieldElement(gf3, 3), Error);
}

TEST(Automorphisms, CountsAndExamples) {
  EXPECT_EQ(automorphisms(*create_field(2, 1)).size(), 1u);
  const auto gf4 = create_field(2, 2);
  EXPECT_EQ(apply_automorphism(*gf4, {1}, 2), 3u);
  const auto gf9 = create_field(3, 2);
  const auto autos = automorphisms(*gf9);
  ASSERT_EQ(autos.size(), 2u);
  EXPECT_EQ(autos[0].exponent, 0);
  EXPECT_EQ(autos[1].exponent, 1);
  std::vector<Elem> fixed;
  for (Elem a = 0; a < 9; ++a) {
    if (apply_automorphism(*gf9, {1}, a) == a) fixed.push_back(a);
  }
  EXPECT_EQ(fixed, (std::vector<Elem>{0, 1, 2}));
}

TEST(Automorphisms, AreFieldAutomorphismsAndComposeAdditively) {
  for (auto [p, k] : kSmallFields) {
    const auto f = create_field(p, k);
    if (f->q() > 81) continue;
    for (const auto alpha : automorphisms(*f)) {
      for (Elem a = 0; a < f->q(); ++a) {
        for (Elem b = 0; b < f->q(); ++b) {
          ASSERT_EQ(apply_automorphism(*f, alpha, f->add(a, b)),
                    f->add(apply_automorphism(*f, alpha, a), apply_automorphism(*f, alpha, b)));
          ASSERT_EQ(apply_automorphism(*f, alpha, f->mul(a, b)),
                    f->mul(apply_automorphism(*f, alpha, a), apply_automorphism(*f, alpha, b)));
        }
      }
      for (const auto beta : automorphisms(*f)) {
        const auto both = compose(*f, alpha, beta);
        EXPECT_EQ(both.exponent, (alpha.exponent + beta.exponent) % k);
        for (Elem a = 0; a < f->q(); ++a) {
          ASSERT_EQ(apply_automorphism(*f, both, a),
                    apply_automorphism(*f, beta, apply_automorphism(*f, alpha, a)));
        }
      }
      EXPECT_EQ(compose(*f, alpha, inverse(*f, alpha)).exponent, 0);
    }
    for (Elem a = 0; a < f->q(); ++a) ASSERT_EQ(f->frobenius(a, k), a);
  }
}

TEST(SubfieldEmbedding, ExistsExactlyForDivisibleDegrees) {
  EXPECT_TRUE(subfield_embedding(*create_field(2, 1), *create_field(2, 2)).has_value());
  EXPECT_FALSE(subfield_embedding(*create_field(2, 2), *create_field(2, 3)).has_value());
  EXPECT_FALSE(subfield_embedding(*create_field(3, 1), *create_field(2, 2)).has_value());
  const auto small = create_field(3, 1);
  const auto big = create_field(3, 2);
  const auto map = subfield_embedding(*small, *big);
  ASSERT_TRUE(map.has_value());
  for (Elem a = 0; a < 3; ++a) {
    for (Elem b = 0; b < 3; ++b) {
      EXPECT_EQ((*map)[small->add(a, b)], big->add((*map)[a], (*map)[b]));
      EXPECT_EQ((*map)[small->mul(a, b)], big->mul((*map)[a], (*map)[b]));
    }
  }
  const auto gf4 = create_field(2, 2);
  const auto gf16 = create_field(2, 4);
  const auto m = subfield_embedding(*gf4, *gf16);
  ASSERT_TRUE(m.has_value());
  for (Elem a = 0; a < 4; ++a) {
    for (Elem b = 0; b < 4; ++b) EXPECT_EQ((*m)[gf4->mul(a, b)], gf16->mul((*m)[a], (*m)[b]));
  }
}

}  // namespace
}  // namespace pgtool
