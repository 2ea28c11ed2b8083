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

#include "cavepoly/multi_poly.h"

#include <algorithm>
#include <numeric>

#include "cavepoly/checked_math.h"
#include "cavepoly/errors.h"

namespace cavepoly {

bool CanonicalBefore(const IntVector& a, const IntVector& b) {
  Coord da = std::accumulate(a.begin(), a.end(), Coord{0});
  Coord db = std::accumulate(b.begin(), b.end(), Coord{0});
  if (da != db) return da > db;
  return std::lexicographical_compare(b.rbegin(), b.rend(), a.rbegin(),
                                      a.rend());
}

std::string RenderMonomial(const IntVector& exponents) {
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "t" + std::to_string(i + 1);
    if (exponents[i] != 1) out += "^" + std::to_string(exponents[i]);
  }
  return out;
}

std::string JoinSignedTerms(
    const std::vector<std::pair<bool, std::string>>& negative_and_body) {
  if (negative_and_body.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [negative, body] : negative_and_body) {
    if (first) {
      out += negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

MultiPoly::MultiPoly(int p) : p_(p) {
  if (p < 1) throw Error(ErrorCode::kInvalidArgument, "dimension must be >= 1");
}

MultiPoly MultiPoly::Constant(int p, std::int64_t c) {
  MultiPoly out(p);
  out.AddTerm(IntVector(p, 0), c);
  return out;
}

MultiPoly MultiPoly::Term(IntVector exponents, std::int64_t coefficient) {
  MultiPoly out(static_cast<int>(exponents.size()));
  out.AddTerm(exponents, coefficient);
  return out;
}

MultiPoly MultiPoly::FromTerms(
    int p, const std::vector<std::pair<IntVector, std::int64_t>>& terms) {
  MultiPoly out(p);
  for (const auto& [exponents, c] : terms) out.AddTerm(exponents, c);
  return out;
}

std::int64_t MultiPoly::Coefficient(const IntVector& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? 0 : it->second;
}

bool MultiPoly::HasNegativeExponent() const {
  for (const auto& [exponents, c] : terms_) {
    for (Coord e : exponents) {
      if (e < 0) return true;
    }
  }
  return false;
}

void MultiPoly::AddTerm(const IntVector& exponents, std::int64_t coefficient) {
  if (static_cast<int>(exponents.size()) != p_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "exponent vector of length " +
                    std::to_string(exponents.size()) + " in a polynomial in " +
                    std::to_string(p_) + " variables");
  }
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second = CheckedAdd(it->second, coefficient);
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::CheckDim(const MultiPoly& other) const {
  if (other.p_ != p_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "polynomials in " + std::to_string(p_) + " and " +
                    std::to_string(other.p_) + " variables");
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(p_);
  for (const auto& [exponents, c] : terms_) {
    out.terms_.emplace(exponents, CheckedNeg(c));
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  CheckDim(other);
  for (const auto& [exponents, c] : other.terms_) AddTerm(exponents, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  CheckDim(other);
  for (const auto& [exponents, c] : other.terms_) {
    AddTerm(exponents, CheckedNeg(c));
  }
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  CheckDim(other);
  MultiPoly product(p_);
  IntVector exponents(p_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (int i = 0; i < p_; ++i) exponents[i] = CheckedAdd(ea[i], eb[i]);
      product.AddTerm(exponents, CheckedMul(ca, cb));
    }
  }
  *this = std::move(product);
  return *this;
}

std::int64_t MultiPoly::Evaluate(std::span<const std::int64_t> t) const {
  if (static_cast<int>(t.size()) != p_) {
    throw Error(ErrorCode::kDimensionMismatch, "evaluation point length");
  }
  std::int64_t total = 0;
  for (const auto& [exponents, c] : terms_) {
    std::int64_t value = c;
    for (int i = 0; i < p_; ++i) {
      if (exponents[i] < 0) {
        throw Error(ErrorCode::kNegativeExponent,
                    "cannot evaluate " + RenderMonomial(exponents));
      }
      for (Coord k = 0; k < exponents[i]; ++k) value = CheckedMul(value, t[i]);
    }
    total = CheckedAdd(total, value);
  }
  return total;
}

std::vector<std::pair<IntVector, std::int64_t>> MultiPoly::SortedTerms() const {
  std::vector<std::pair<IntVector, std::int64_t>> out(terms_.begin(),
                                                      terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return CanonicalBefore(a.first, b.first);
  });
  return out;
}

std::string MultiPoly::ToCanonicalString() const {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& [exponents, c] : SortedTerms()) {
    std::string mono = RenderMonomial(exponents);
    bool negative = c < 0;
    // |c| as text without negating INT64_MIN.
    std::string magnitude = std::to_string(c);
    if (negative) magnitude.erase(0, 1);
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
