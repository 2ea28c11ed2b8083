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

#ifndef CAVEPOLY_RATIONAL_POLY_H_
#define CAVEPOLY_RATIONAL_POLY_H_

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cavepoly/checked_math.h"
#include "cavepoly/lattice_point.h"
#include "cavepoly/multi_poly.h"

namespace cavepoly {

// Monomial-basis polynomial with reduced rational coefficients. This is the
// canonical form binomial-basis polynomials are compared in.
class RationalPoly {
 public:
  using TermMap = std::map<IntVector, Rational>;

  explicit RationalPoly(int p);
  static RationalPoly Constant(int p, Rational c);
  static RationalPoly FromIntegerPoly(const MultiPoly& poly);

  int dim() const { return p_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational Coefficient(const IntVector& exponents) const;

  void AddTerm(const IntVector& exponents, const Rational& coefficient);

  RationalPoly& operator+=(const RationalPoly& other);
  RationalPoly& operator*=(const RationalPoly& other);
  RationalPoly& operator*=(const Rational& scalar);
  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) {
    return a += b;
  }
  friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) {
    return a *= b;
  }
  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

  Rational Evaluate(std::span<const std::int64_t> t) const;

  std::vector<std::pair<IntVector, Rational>> SortedTerms() const;
  // Coefficients render as "1/6*t2^3"; integral ones as in MultiPoly.
  std::string ToCanonicalString() const;

 private:
  int p_;
  TermMap terms_;
};

}  // namespace cavepoly

#endif  // CAVEPOLY_RATIONAL_POLY_H_
