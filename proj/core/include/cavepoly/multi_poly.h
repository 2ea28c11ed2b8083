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

#ifndef CAVEPOLY_MULTI_POLY_H_
#define CAVEPOLY_MULTI_POLY_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cavepoly/lattice_point.h"

namespace cavepoly {

// Canonical term order: total degree descending, then lexicographic
// descending with tp as the most significant variable. The running example
// prints as "t2^3 + t1*t2^2 + t1^2*t2 - t2^2 - t1*t2".
bool CanonicalBefore(const IntVector& a, const IntVector& b);

// "t1^2*t2"; empty for the zero exponent vector.
std::string RenderMonomial(const IntVector& exponents);

// Joins already-signed term bodies: first term keeps its sign, later ones
// render as " + body" / " - body".
std::string JoinSignedTerms(
    const std::vector<std::pair<bool, std::string>>& negative_and_body);

// Sparse polynomial in t1..tp with exact 64-bit integer coefficients.
// Exponents are signed and intermediate products may carry t_i^-1. No zero
// coefficient is ever stored.
class MultiPoly {
 public:
  using TermMap = std::map<IntVector, std::int64_t>;

  explicit MultiPoly(int p);

  static MultiPoly Constant(int p, std::int64_t c);
  static MultiPoly Term(IntVector exponents, std::int64_t coefficient = 1);
  static MultiPoly FromTerms(
      int p, const std::vector<std::pair<IntVector, std::int64_t>>& terms);

  int dim() const { return p_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t Coefficient(const IntVector& exponents) const;
  bool HasNegativeExponent() const;

  void AddTerm(const IntVector& exponents, std::int64_t coefficient);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  // Exact integer value at t. Throws kNegativeExponent if a t_i^-k term
  // remains, kDimensionMismatch on a wrong-length t.
  std::int64_t Evaluate(std::span<const std::int64_t> t) const;

  // Terms in canonical order.
  std::vector<std::pair<IntVector, std::int64_t>> SortedTerms() const;
  std::string ToCanonicalString() const;

 private:
  void CheckDim(const MultiPoly& other) const;

  int p_;
  TermMap terms_;
};

}  // namespace cavepoly

#endif  // CAVEPOLY_MULTI_POLY_H_
