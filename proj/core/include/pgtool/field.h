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

#ifndef PGTOOL_FIELD_H_
#define PGTOOL_FIELD_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "pgtool/errors.h"

namespace pgtool {

// Element of GF(p^k) encoded by its base-p digits (polynomial coefficients in
// ascending order). Code 0 is zero, code 1 is one.
using Elem = std::uint32_t;

inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

// GF(p^k) realised modulo the lexicographically smallest monic irreducible
// polynomial of degree k (ascending coefficient tuples compared in order).
// Instances are immutable and shared through FieldPtr; obtain them from
// create_field().
class Field {
 public:
  int p() const { return p_; }
  int k() const { return k_; }
  Elem q() const { return q_; }
  // Ascending coefficients, length k + 1, leading coefficient 1.
  const std::vector<int>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (k_ == 1) return static_cast<Elem>((a + b) % p_);
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return digit_add(a, b, 1);
  }
  Elem neg(Elem a) const {
    if (p_ == 2 || a == 0) return a;
    if (k_ == 1) return static_cast<Elem>(p_ - a);
    return digit_add(0, a, p_ - 1);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const {
    if (a == 0) throw Error(ErrorCode::kZeroInverse, "inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  // x -> x^(p^m); m is reduced modulo k.
  Elem frobenius(Elem a, int m) const;

  // Primitive element used for the log tables.
  Elem generator() const { return generator_; }
  // Base-p digits of a code, ascending, always k entries.
  std::vector<int> digits(Elem a) const;
  Elem from_digits(const std::vector<int>& digits) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.k_ == b.k_;
  }

 private:
  friend std::shared_ptr<const Field> create_field(int p, int k);
  Field(int p, int k);

  Elem digit_add(Elem a, Elem b, int scale) const;
  Elem poly_mulmod(Elem a, Elem b) const;

  int p_;
  int k_;
  Elem q_;
  std::vector<int> modulus_;
  Elem generator_ = 1;
  std::vector<Elem> exp_;  // length 2(q-1) so log sums need no reduction
  std::vector<std::uint32_t> log_;
  std::vector<Elem> add_table_;  // populated only for small odd-characteristic extension fields
};

using FieldPtr = std::shared_ptr<const Field>;

// Idempotent: repeated calls with the same (p, k) return the same instance.
FieldPtr create_field(int p, int k);
// Resolves q = p^k. Throws kNonPrimeP if q is not a prime power.
FieldPtr field_of_order(std::uint64_t q);

bool is_prime(std::uint64_t n);

// Ascending coefficients of the canonical modulus, without building the field.
std::vector<int> canonical_modulus(int p, int k);

struct FieldAutomorphism {
  int exponent = 0;  // x -> x^(p^exponent)

  friend bool operator==(const FieldAutomorphism&,
                         const FieldAutomorphism&) = default;
};

std::vector<FieldAutomorphism> automorphisms(const Field& field);
Elem apply_automorphism(const Field& field, FieldAutomorphism alpha, Elem a);
FieldAutomorphism compose(const Field& field, FieldAutomorphism first,
                          FieldAutomorphism second);
FieldAutomorphism inverse(const Field& field, FieldAutomorphism alpha);

// Table of an injective homomorphism small -> big when GF(small) is a subfield
// of GF(big); std::nullopt otherwise.
std::optional<std::vector<Elem>> subfield_embedding(const Field& small,
                                                    const Field& big);

// Value-semantic element bound to its field. Mixed-field arithmetic throws
// kFieldMismatch.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem code);

  const FieldPtr& field() const { return field_; }
  Elem code() const { return code_; }

  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldPtr field_;
  Elem code_;
};

}  // namespace pgtool

#endif  // PGTOOL_FIELD_H_
