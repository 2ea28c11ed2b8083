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

#include "cavepoly/lex_order.h"

#include <algorithm>
#include <numeric>

#include "cavepoly/errors.h"

namespace cavepoly {

LexOrder LexOrder::Identity(int p) {
  std::vector<int> priority(p);
  std::iota(priority.begin(), priority.end(), 0);
  return LexOrder(std::move(priority));
}

LexOrder LexOrder::FromPriority(std::vector<int> priority) {
  const int p = static_cast<int>(priority.size());
  std::vector<bool> seen(p, false);
  for (int c : priority) {
    if (c < 0 || c >= p || seen[c]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "lex order must be a permutation of the coordinates");
    }
    seen[c] = true;
  }
  if (p == 0) throw Error(ErrorCode::kInvalidArgument, "empty lex order");
  return LexOrder(std::move(priority));
}

LexOrder LexOrder::FromOneBased(const std::vector<int>& priority) {
  std::vector<int> zero_based;
  zero_based.reserve(priority.size());
  for (int c : priority) zero_based.push_back(c - 1);
  return FromPriority(std::move(zero_based));
}

std::vector<LexOrder> LexOrder::All(int p) {
  std::vector<LexOrder> out;
  std::vector<int> priority = Identity(p).priority_;
  do {
    out.push_back(LexOrder(priority));
  } while (std::next_permutation(priority.begin(), priority.end()));
  return out;
}

bool LexOrder::is_identity() const {
  for (int i = 0; i < dim(); ++i) {
    if (priority_[i] != i) return false;
  }
  return true;
}

bool LexOrder::Less(const LatticePoint& a, const LatticePoint& b) const {
  return Less(a.coords(), b);
}

bool LexOrder::Less(const IntVector& a, const LatticePoint& b) const {
  for (int c : priority_) {
    if (a[c] != b[c]) return a[c] < b[c];
  }
  return false;
}

std::string LexOrder::ToString() const {
  std::string s;
  for (int i = 0; i < dim(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(priority_[i] + 1);
  }
  return s;
}

}  // namespace cavepoly
