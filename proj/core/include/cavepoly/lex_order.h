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

#ifndef CAVEPOLY_LEX_ORDER_H_
#define CAVEPOLY_LEX_ORDER_H_

#include <string>
#include <vector>

#include "cavepoly/lattice_point.h"

namespace cavepoly {

// A lexicographic order on N^p given by a coordinate priority permutation.
// Points compare at the highest-priority coordinate where they differ; the
// smaller value is the smaller point. The identity permutation is the
// standard lex order, under which (0,3) < (1,2) < (2,1).
class LexOrder {
 public:
  static LexOrder Identity(int p);
  // 0-based priority list; throws kInvalidArgument unless it is a bijection
  // on {0..p-1}.
  static LexOrder FromPriority(std::vector<int> priority);
  // 1-based form used on the command line ("2,1").
  static LexOrder FromOneBased(const std::vector<int>& priority);
  // All p! orders, in lexicographic order of their priority lists.
  static std::vector<LexOrder> All(int p);

  int dim() const { return static_cast<int>(priority_.size()); }
  const std::vector<int>& priority() const { return priority_; }
  bool is_identity() const;

  bool Less(const LatticePoint& a, const LatticePoint& b) const;
  bool Less(const IntVector& a, const LatticePoint& b) const;

  // 1-based, comma separated.
  std::string ToString() const;

  friend bool operator==(const LexOrder&, const LexOrder&) = default;

 private:
  explicit LexOrder(std::vector<int> priority)
      : priority_(std::move(priority)) {}

  std::vector<int> priority_;
};

}  // namespace cavepoly

#endif  // CAVEPOLY_LEX_ORDER_H_
