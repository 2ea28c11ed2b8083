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

#include "cavepoly/binomial_poly.h"

#include <algorithm>

#include "cavepoly/checked_math.h"
#include "cavepoly/errors.h"

namespace cavepoly {
namespace {

// C(t_var + n + shift, n) as a polynomial in t_var.
RationalPoly UnivariateBinomial(int p, int var, Coord n, int shift) {
  RationalPoly out = RationalPoly::Constant(p, Rational(1));
  for (Coord k = 1; k <= n; ++k) {
    RationalPoly factor(p);
    IntVector linear(p, 0);
    linear[var] = 1;
    factor.AddTerm(linear, Rational(1));
    factor.AddTerm(IntVector(p, 0), Rational(CheckedAdd(shift, k)));
    factor *= Rational(1, k);
    out *= factor;
  }
  return out;
}

}  // namespace

BinomialBasisPoly::BinomialBasisPoly(int p, int shift) : p_(p), shift_(shift) {
  if (p < 1) throw Error(ErrorCode::kInvalidArgument, "dimension must be >= 1");
}

void BinomialBasisPoly::AddTerm(const IntVector& n, std::int64_t coefficient) {
  if (static_cast<int>(n.size()) != p_) {
    throw Error(ErrorCode::kDimensionMismatch, "basis index length");
  }
  for (Coord e : n) {
    if (e < 0) {
      throw Error(ErrorCode::kNegativeExponent,
                  "binomial basis index " + RenderMonomial(n));
    }
  }
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(n, coefficient);
  if (!inserted) {
    it->second = CheckedAdd(it->second, coefficient);
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t BinomialBasisPoly::Evaluate(
    std::span<const std::int64_t> t) const {
  if (static_cast<int>(t.size()) != p_) {
    throw Error(ErrorCode::kDimensionMismatch, "evaluation point length");
  }
  std::int64_t total = 0;
  for (const auto& [n, c] : terms_) {
    std::int64_t value = c;
    for (int i = 0; i < p_ && value != 0; ++i) {
      Coord top = CheckedAdd(CheckedAdd(t[i], n[i]), shift_);
      value = CheckedMul(value, GeneralizedBinomial(top, n[i]));
    }
    total = CheckedAdd(total, value);
  }
  return total;
}

std::vector<std::pair<IntVector, std::int64_t>> BinomialBasisPoly::SortedTerms()
    const {
  std::vector<std::pair<IntVector, std::int64_t>> out(terms_.begin(),
                                                      terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return CanonicalBefore(a.first, b.first);
  });
  return out;
}

std::string BinomialBasisPoly::ToCanonicalString() const {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& [n, c] : SortedTerms()) {
    std::string basis;
    for (int i = 0; i < p_; ++i) {
      if (n[i] == 0) continue;
      if (!basis.empty()) basis += "*";
      Coord offset = n[i] + shift_;
      basis += "C(t" + std::to_string(i + 1);
      if (offset > 0) basis += "+" + std::to_string(offset);
      if (offset < 0) basis += std::to_string(offset);
      basis += "," + std::to_string(n[i]) + ")";
    }
    bool negative = c < 0;
    std::string magnitude = std::to_string(c);
    if (negative) magnitude.erase(0, 1);
    std::string body;
    if (basis.empty()) {
      body = magnitude;
    } else if (magnitude == "1") {
      body = basis;
    } else {
      body = magnitude + "*" + basis;
    }
    parts.emplace_back(negative, std::move(body));
  }
  return JoinSignedTerms(parts);
}

BinomialBasisPoly BinomialMap(const MultiPoly& poly) {
  BinomialBasisPoly out(poly.dim(), 0);
  for (const auto& [exponents, c] : poly.terms()) out.AddTerm(exponents, c);
  return out;
}

RationalPoly ExpandBinomial(const BinomialBasisPoly& poly) {
  const int p = poly.dim();
  // Univariate factors are reused heavily across terms.
  std::map<std::pair<int, Coord>, RationalPoly> cache;
  auto factor = [&](int var, Coord n) -> const RationalPoly& {
    auto key = std::make_pair(var, n);
    auto it = cache.find(key);
    if (it == cache.end()) {
      it =
          cache.emplace(key, UnivariateBinomial(p, var, n, poly.shift())).first;
    }
    return it->second;
  };
  RationalPoly out(p);
  for (const auto& [n, c] : poly.terms()) {
    RationalPoly term = RationalPoly::Constant(p, Rational(c));
    for (int i = 0; i < p; ++i) {
      if (n[i] > 0) term *= factor(i, n[i]);
    }
    out += term;
  }
  return out;
}

}  // namespace cavepoly
