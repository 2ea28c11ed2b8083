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

#include "cavepoly/rational_poly.h"

#include <algorithm>

#include "cavepoly/errors.h"

namespace cavepoly {

RationalPoly::RationalPoly(int p) : p_(p) {
  if (p < 1) throw Error(ErrorCode::kInvalidArgument, "dimension must be >= 1");
}

RationalPoly RationalPoly::Constant(int p, Rational c) {
  RationalPoly out(p);
  out.AddTerm(IntVector(p, 0), c);
  return out;
}

RationalPoly RationalPoly::FromIntegerPoly(const MultiPoly& poly) {
  RationalPoly out(poly.dim());
  for (const auto& [exponents, c] : poly.terms()) out.AddTerm(exponents, c);
  return out;
}

Rational RationalPoly::Coefficient(const IntVector& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RationalPoly::AddTerm(const IntVector& exponents,
                           const Rational& coefficient) {
  if (static_cast<int>(exponents.size()) != p_) {
    throw Error(ErrorCode::kDimensionMismatch, "exponent vector length");
  }
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& other) {
  if (other.p_ != p_) {
    throw Error(ErrorCode::kDimensionMismatch, "polynomial dimensions differ");
  }
  for (const auto& [exponents, c] : other.terms_) AddTerm(exponents, c);
  return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& other) {
  if (other.p_ != p_) {
    throw Error(ErrorCode::kDimensionMismatch, "polynomial dimensions differ");
  }
  RationalPoly product(p_);
  IntVector exponents(p_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (int i = 0; i < p_; ++i) exponents[i] = CheckedAdd(ea[i], eb[i]);
      product.AddTerm(exponents, ca * cb);
    }
  }
  *this = std::move(product);
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [exponents, c] : terms_) c *= scalar;
  return *this;
}

Rational RationalPoly::Evaluate(std::span<const std::int64_t> t) const {
  if (static_cast<int>(t.size()) != p_) {
    throw Error(ErrorCode::kDimensionMismatch, "evaluation point length");
  }
  Rational total(0);
  for (const auto& [exponents, c] : terms_) {
    Rational value = c;
    for (int i = 0; i < p_; ++i) {
      if (exponents[i] < 0) {
        throw Error(ErrorCode::kNegativeExponent,
                    "cannot evaluate " + RenderMonomial(exponents));
      }
      for (Coord k = 0; k < exponents[i]; ++k) value *= Rational(t[i]);
    }
    total += value;
  }
  return total;
}

std::vector<std::pair<IntVector, Rational>> RationalPoly::SortedTerms() const {
  std::vector<std::pair<IntVector, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return CanonicalBefore(a.first, b.first);
  });
  return out;
}

std::string RationalPoly::ToCanonicalString() const {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& [exponents, c] : SortedTerms()) {
    std::string mono = RenderMonomial(exponents);
    bool negative = c.sign() < 0;
    std::string magnitude = (negative ? -c : c).ToString();
    std::string body;
    if (mono.empty()) {
      body = magnitude;
    } else if (magnitude == "1") {
      body = mono;
    } else {
      body = magnitude + "*" + mono;
    }
    parts.emplace_back(negative, std::move(body));
  }
  return JoinSignedTerms(parts);
}

}  // namespace cavepoly
