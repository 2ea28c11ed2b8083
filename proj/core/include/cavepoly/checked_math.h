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

// Overflow-checked 64-bit integer arithmetic and an exact rational type built
// on it. Every operation either returns the exact result or throws
// Error(kOverflow).

#ifndef CAVEPOLY_CHECKED_MATH_H_
#define CAVEPOLY_CHECKED_MATH_H_

#include <cstdint>
#include <ostream>
#include <string>

namespace cavepoly {

std::int64_t CheckedAdd(std::int64_t a, std::int64_t b);
std::int64_t CheckedSub(std::int64_t a, std::int64_t b);
std::int64_t CheckedMul(std::int64_t a, std::int64_t b);
std::int64_t CheckedNeg(std::int64_t a);

// Exact binomial coefficient C(n, k) for n >= 0; zero when k < 0 or k > n.
std::int64_t Binomial(std::int64_t n, std::int64_t k);

// Generalized binomial C(x, k) = x (x-1) ... (x-k+1) / k! for any integer x
// and k >= 0. C(x, 0) = 1.
std::int64_t GeneralizedBinomial(std::int64_t x, std::int64_t k);

class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) = default;

  // "p/q", or "p" when the denominator is 1.
  std::string ToString() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;  // always > 0, gcd(num_, den_) == 1
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace cavepoly

#endif  // CAVEPOLY_CHECKED_MATH_H_
