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

#include "pgtool/field.h"

#include <map>
#include <mutex>
#include <string>
#include <utility>

namespace pgtool {
namespace {

using Poly = std::vector<int>;  // ascending coefficients over GF(p)

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m.
Poly poly_rem(Poly a, const Poly& m, int p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& f, int p) {
  const int degree = static_cast<int>(f.size()) - 1;
  // Any reducible f has a monic factor of degree d <= degree / 2.
  for (int d = 1; d <= degree / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      Poly g(d + 1, 0);
      std::uint64_t rest = v;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(rest % p);
        rest /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<int> canonical_modulus(int p, int k) {
  std::uint64_t count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  // Enumerate (c_0, ..., c_{k-1}) with c_0 as the most significant position so
  // that the first irreducible hit is the lexicographically smallest tuple.
  for (std::uint64_t v = 0; v < count; ++v) {
    Poly f(k + 1, 0);
    std::uint64_t rest = v;
    for (int i = k - 1; i >= 0; --i) {
      f[i] = static_cast<int>(rest % p);
      rest /= p;
    }
    f[k] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw Error(ErrorCode::kNonPrimeP, "no irreducible polynomial found");
}

Field::Field(int p, int k) : p_(p), k_(k) {
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) q *= static_cast<std::uint64_t>(p);
  q_ = static_cast<Elem>(q);
  modulus_ = canonical_modulus(p, k);

  if (p_ != 2 && k_ > 1 && q_ <= 256) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (Elem a = 0; a < q_; ++a) {
      for (Elem b = 0; b < q_; ++b) add_table_[a * q_ + b] = digit_add(a, b, 1);
    }
  }

  const std::uint64_t order = q_ - 1;
  const auto factors = prime_factors(order);
  auto slow_pow = [&](Elem base, std::uint64_t e) {
    Elem result = 1;
    while (e > 0) {
      if (e & 1) result = poly_mulmod(result, base);
      base = poly_mulmod(base, base);
      e >>= 1;
    }
    return result;
  };
  generator_ = 1;
  if (q_ > 2) {
    for (Elem g = 2; g < q_; ++g) {
      bool primitive = true;
      for (std::uint64_t r : factors) {
        if (slow_pow(g, order / r) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        generator_ = g;
        break;
      }
    }
  }

  exp_.assign(2 * order, 0);
  log_.assign(q_, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    exp_[i] = x;
    exp_[i + order] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = poly_mulmod(x, generator_);
  }
}

Elem Field::digit_add(Elem a, Elem b, int scale) const {
  Elem result = 0;
  Elem place = 1;
  for (int i = 0; i < k_; ++i) {
    const int da = static_cast<int>(a % p_);
    const int db = static_cast<int>(b % p_);
    a /= p_;
    b /= p_;
    result += static_cast<Elem>((da + scale * db) % p_) * place;
    place *= p_;
  }
  return result;
}

Elem Field::poly_mulmod(Elem a, Elem b) const {
  if (p_ == 2) {
    // Carry-less multiply, then reduce by the modulus bit pattern.
    std::uint64_t prod = 0;
    for (int i = 0; i < k_; ++i) {
      if ((b >> i) & 1u) prod ^= static_cast<std::uint64_t>(a) << i;
    }
    std::uint64_t mod_bits = 0;
    for (int i = 0; i <= k_; ++i) {
      if (modulus_[i]) mod_bits |= std::uint64_t{1} << i;
    }
    for (int bit = 2 * k_ - 2; bit >= k_; --bit) {
      if ((prod >> bit) & 1u) prod ^= mod_bits << (bit - k_);
    }
    return static_cast<Elem>(prod);
  }
  const auto da = digits(a);
  const auto db = digits(b);
  Poly prod(2 * k_ - 1, 0);
  for (int i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  auto rem = poly_rem(prod, modulus_, p_);
  rem.resize(k_, 0);
  return from_digits(rem);
}

std::vector<int> Field::digits(Elem a) const {
  std::vector<int> out(k_, 0);
  for (int i = 0; i < k_; ++i) {
    out[i] = static_cast<int>(a % p_);
    a /= p_;
  }
  return out;
}

Elem Field::from_digits(const std::vector<int>& digits) const {
  Elem result = 0;
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
    result = result * p_ + static_cast<Elem>(((digits[i] % p_) + p_) % p_);
  }
  return result;
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = q_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % order)) % order];
}

Elem Field::frobenius(Elem a, int m) const {
  m = ((m % k_) + k_) % k_;
  std::uint64_t e = 1;
  for (int i = 0; i < m; ++i) e *= p_;
  return pow(a, e);
}

FieldPtr create_field(int p, int k) {
  if (k < 1) throw Error(ErrorCode::kDegreeZero, "extension degree must be >= 1");
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw Error(ErrorCode::kNonPrimeP, std::to_string(p) + " is not prime");
  }
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > kMaxFieldOrder) {
      throw Error(ErrorCode::kSizeCapExceeded, "field order exceeds 2^20");
    }
  }
  static std::mutex mutex;
  static std::map<std::pair<int, int>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{p, k}];
  if (!slot) slot = FieldPtr(new Field(p, k));
  return slot;
}

FieldPtr field_of_order(std::uint64_t q) {
  if (q < 2) throw Error(ErrorCode::kNonPrimeP, "field order must be >= 2");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) {
    throw Error(ErrorCode::kNonPrimeP, std::to_string(q) + " is not a prime power");
  }
  if (q > kMaxFieldOrder) throw Error(ErrorCode::kSizeCapExceeded, "field order exceeds 2^20");
  return create_field(static_cast<int>(p), k);
}

std::vector<FieldAutomorphism> automorphisms(const Field& field) {
  std::vector<FieldAutomorphism> out;
  for (int m = 0; m < field.k(); ++m) out.push_back({m});
  return out;
}

Elem apply_automorphism(const Field& field, FieldAutomorphism alpha, Elem a) {
  return field.frobenius(a, alpha.exponent);
}

FieldAutomorphism compose(const Field& field, FieldAutomorphism first,
                          FieldAutomorphism second) {
  return {(first.exponent + second.exponent) % field.k()};
}

FieldAutomorphism inverse(const Field& field, FieldAutomorphism alpha) {
  return {(field.k() - alpha.exponent % field.k()) % field.k()};
}

std::optional<std::vector<Elem>> subfield_embedding(const Field& small,
                                                    const Field& big) {
  if (small.p() != big.p() || big.k() % small.k() != 0) return std::nullopt;
  const auto& m = small.modulus();
  std::optional<Elem> root;
  for (Elem r = 0; r < big.q() && !root; ++r) {
    Elem value = 0;
    for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i) {
      value = big.add(big.mul(value, r), static_cast<Elem>(m[i]));
    }
    if (value == 0) root = r;
  }
  if (!root) return std::nullopt;
  std::vector<Elem> table(small.q());
  for (Elem c = 0; c < small.q(); ++c) {
    const auto d = small.digits(c);
    Elem value = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) {
      value = big.add(big.mul(value, *root), static_cast<Elem>(d[i]));
    }
    table[c] = value;
  }
  return table;
}

FieldElement::FieldElement(FieldPtr field, Elem code)
    : field_(std::move(field)), code_(code) {
  if (code_ >= field_->q()) {
    throw Error(ErrorCode::kParamOutOfRange, "element code out of range");
  }
}

namespace {
const FieldPtr& common_field(const FieldElement& a, const FieldElement& b) {
  if (!(*a.field() == *b.field())) {
    throw Error(ErrorCode::kFieldMismatch, "elements belong to different fields");
  }
  return a.field();
}
}  // namespace

FieldElement FieldElement::inv() const { return {field_, field_->inv(code_)}; }

FieldElement FieldElement::pow(std::uint64_t e) const {
  return {field_, field_->pow(code_, e)};
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return {f, f->add(a.code_, b.code_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return {f, f->sub(a.code_, b.code_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return {f, f->mul(a.code_, b.code_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return {f, f->div(a.code_, b.code_)};
}

FieldElement operator-(const FieldElement& a) {
  return {a.field_, a.field_->neg(a.code_)};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return *a.field_ == *b.field_ && a.code_ == b.code_;
}

}  // namespace pgtool
