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

#include "cavepoly/polynomials.h"

#include "cavepoly/errors.h"
#include "cavepoly/geometry.h"

namespace cavepoly {

MultiPoly CavePolynomial(const Polymatroid& polymatroid) {
  const int p = polymatroid.dim();
  MultiPoly out(p);
  // Only base points have nonzero indicator.
  for (const LatticePoint& n : polymatroid.points()) {
    MultiPoly term = MultiPoly::Term(n.coords());
    for (int i = 0; i + 1 < p; ++i) {
      bool has_later_neighbor = false;
      for (int j = i + 1; j < p && !has_later_neighbor; ++j) {
        has_later_neighbor = Indicator(polymatroid, n.Exchanged(i, j)) == 1;
      }
      if (!has_later_neighbor) continue;
      IntVector inverse(p, 0);
      inverse[i] = -1;
      MultiPoly factor = MultiPoly::Constant(p, 1);
      factor.AddTerm(inverse, -1);
      term *= factor;
    }
    out += term;
  }
  if (out.HasNegativeExponent()) {
    throw Error(
        ErrorCode::kInternalInvariantFailure,
        "cave polynomial kept a negative exponent: " + out.ToCanonicalString());
  }
  return out;
}

std::vector<BoxSummand> BoxSummands(const Polymatroid& polymatroid) {
  const int p = polymatroid.dim();
  std::vector<BoxSummand> out;
  for (const LatticePoint& n : IndependencePoints(polymatroid)) {
    MultiPoly product = MultiPoly::Constant(p, 1);
    for (int i = 0; i < p; ++i) {
      if (n[i] == 0) continue;
      IntVector high(p, 0);
      IntVector low(p, 0);
      high[i] = n[i];
      low[i] = n[i] - 1;
      MultiPoly factor(p);
      factor.AddTerm(high, 1);
      factor.AddTerm(low, -1);
      product *= factor;
    }
    out.push_back({n, std::move(product)});
  }
  return out;
}

MultiPoly BoxPolynomial(const Polymatroid& polymatroid) {
  MultiPoly out(polymatroid.dim());
  for (const BoxSummand& s : BoxSummands(polymatroid)) out += s.product;
  return out;
}

BinomialBasisPoly SnapperFromCave(const Polymatroid& polymatroid) {
  return BinomialMap(CavePolynomial(polymatroid));
}

BinomialBasisPoly SnapperEurLarson(const Polymatroid& polymatroid) {
  BinomialBasisPoly out(polymatroid.dim(), -1);
  for (const LatticePoint& n : IndependencePoints(polymatroid)) {
    out.AddTerm(n.coords(), 1);
  }
  return out;
}

}  // namespace cavepoly
