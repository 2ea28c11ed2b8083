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

// The four routes to the cave polynomial and the two routes to the Snapper
// polynomial. StalactitePolynomial and MobiusPolynomial live with their
// supporting machinery and are re-exported here.

#ifndef CAVEPOLY_POLYNOMIALS_H_
#define CAVEPOLY_POLYNOMIALS_H_

#include <vector>

#include "cavepoly/binomial_poly.h"
#include "cavepoly/lattice_point.h"
#include "cavepoly/mobius.h"
#include "cavepoly/multi_poly.h"
#include "cavepoly/polymatroid.h"
#include "cavepoly/stalactite.h"

namespace cavepoly {

// sum over base points n of prod_{i<p} (1 - [some n - e_i + e_j, j > i, is a
// base point] t_i^-1) t^n, expanded with signed exponents. Throws
// kInternalInvariantFailure if a negative exponent survives.
MultiPoly CavePolynomial(const Polymatroid& polymatroid);

// One summand of the box polynomial: the independence point and the product
// of its factors t_i^{n_i} - t_i^{n_i - 1} (1 when n_i = 0).
struct BoxSummand {
  LatticePoint point;
  MultiPoly product;
};

std::vector<BoxSummand> BoxSummands(const Polymatroid& polymatroid);
MultiPoly BoxPolynomial(const Polymatroid& polymatroid);

// Binomial map applied to the cave polynomial.
BinomialBasisPoly SnapperFromCave(const Polymatroid& polymatroid);

// sum over independence points n of prod_i C(t_i + n_i - 1, n_i), kept in the
// shift -1 binomial basis.
BinomialBasisPoly SnapperEurLarson(const Polymatroid& polymatroid);

}  // namespace cavepoly

#endif  // CAVEPOLY_POLYNOMIALS_H_
