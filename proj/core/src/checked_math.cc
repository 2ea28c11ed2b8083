// Copyright 2026 The Cavepoly Authors
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

#include "cavepoly/checked_math.h"

#include <numeric>

#include "cavepoly/errors.h"

namespace cavepoly {
namespace {

[[noreturn]] void ThrowOverflow(const char* what) {
  throw Error(ErrorCode::kOverflow, what);
}

}  // namespace

std::int64_t CheckedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) ThrowOverflow("integer addition");
  return r;
}

std::int64_t CheckedSub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) ThrowOverflow("integer subtraction");
  return r;
}

std::int64_t CheckedMul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) ThrowOverflow("integer product");
  return r;
}

std::int64_t CheckedNeg(std::int64_t a) { return CheckedSub(0, a); }

std::int64_t Binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) {
    throw Error(ErrorCode::kInvalidArgument, "Binomial requires n >= 0");
  }
  if (k < 0 || k > n) return 0;
  return GeneralizedBinomial(n, k);
}

std::int64_t GeneralizedBinomial(std::int64_t x, std::int64_t k) {
  if (k < 0) return 0;
  // Running product r_i = C(x, i) stays integral at every step:
  // C(x, i) = C(x, i-1) * (x - i + 1) / i.
  Rational r(1);
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= Rational(CheckedSub(x, i - 1), i);
  }
  if (!r.is_integer()) {
    throw Error(ErrorCode::kInternalInvariantFailure,
                "binomial coefficient not integral");
  }
  return r.num();
}

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  if (den_ < 0) {
    num_ = CheckedNeg(num_);
    den_ = CheckedNeg(den_);
  }
  std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = CheckedNeg(num_);
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& other) {
  std::int64_t g = std::gcd(den_, other.den_);
  std::int64_t lhs_scale = other.den_ / g;
  std::int64_t rhs_scale = den_ / g;
  std::int64_t num = CheckedAdd(CheckedMul(num_, lhs_scale),
                                CheckedMul(other.num_, rhs_scale));
  *this = Rational(num, CheckedMul(den_, lhs_scale));
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  return *this += -other;
}

Rational& Rational::operator*=(const Rational& other) {
  // Cross-reduce first to keep intermediates small.
  std::int64_t g1 = std::gcd(num_, other.den_);
  std::int64_t g2 = std::gcd(other.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  std::int64_t num = CheckedMul(num_ / g1, other.num_ / g2);
  std::int64_t den = CheckedMul(den_ / g2, other.den_ / g1);
  *this = Rational(num, den);
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.num_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "division by zero");
  }
  return *this *= Rational(other.den_, other.num_);
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

}  // namespace cavepoly
