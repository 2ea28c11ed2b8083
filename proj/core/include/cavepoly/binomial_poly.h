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

#ifndef CAVEPOLY_BINOMIAL_POLY_H_
#define CAVEPOLY_BINOMIAL_POLY_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cavepoly/lattice_point.h"
#include "cavepoly/multi_poly.h"
#include "cavepoly/rational_poly.h"

namespace cavepoly {

// sum_n c_n prod_i C(t_i + n_i + shift, n_i).
//
// shift = 0 is the image of the monomial-to-binomial map; shift = -1 is the
// basis of the independence-point sum prod_i C(t_i + n_i - 1, n_i).
class BinomialBasisPoly {
 public:
  using TermMap = std::map<IntVector, std::int64_t>;

  explicit BinomialBasisPoly(int p, int shift = 0);

  int dim() const { return p_; }
  int shift() const { return shift_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // n must be nonnegative (kNegativeExponent).
  void AddTerm(const IntVector& n, std::int64_t coefficient);

  friend bool operator==(const BinomialBasisPoly&,
                         const BinomialBasisPoly&) = default;

  // Exact value with exact binomials. Integral for every integer t.
  std::int64_t Evaluate(std::span<const std::int64_t> t) const;

  std::vector<std::pair<IntVector, std::int64_t>> SortedTerms() const;
  // "C(t2+3,3) + C(t1+1,1)*C(t2+2,2) - ..."; the n = 0 basis element is "1".
  std::string ToCanonicalString() const;

 private:
  int p_;
  int shift_;
  TermMap terms_;
};

// t^n -> prod_i C(t_i + n_i, n_i), coefficientwise. Throws kNegativeExponent.
BinomialBasisPoly BinomialMap(const MultiPoly& poly);

// Expands each C(t + n + s, n) = (t+s+1)(t+s+2)...(t+s+n) / n! and
// distributes, giving the monomial-basis form.
RationalPoly ExpandBinomial(const BinomialBasisPoly& poly);

}  // namespace cavepoly

#endif  // CAVEPOLY_BINOMIAL_POLY_H_
