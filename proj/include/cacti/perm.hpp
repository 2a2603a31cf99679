// Copyright 2026 The cacti Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Permutations, integer partitions and set partitions over {1..n}.

#ifndef CACTI_PERM_HPP_
#define CACTI_PERM_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cacti/arith.hpp"

namespace cacti {

// A bijection of {1..n}. Public accessors are 1-based.
class Permutation {
 public:
  Permutation() = default;
  // `images[i-1]` is the image of i. Throws InvalidInput unless bijective.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

// r(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
// i -> i+1, n -> 1.
Permutation long_cycle(int n);

class IntegerPartition {
 public:
  IntegerPartition() = default;
  // Parts in any order; stored weakly decreasing. Throws on parts < 1.
  explicit IntegerPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  // m_i: number of parts equal to i (index 0 unused).
  std::vector<int> multiplicities() const;
  BigInt aut() const;

  std::string str() const;  // "4,2,1,1"

  auto operator<=>(const IntegerPartition& o) const { return parts_ <=> o.parts_; }
  bool operator==(const IntegerPartition& o) const { return parts_ == o.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

IntegerPartition parse_partition(std::string_view text);

// [1^n]
IntegerPartition ones(int n);

class SetPartition {
 public:
  SetPartition() = default;
  // Blocks of 1-based elements; each block is stored sorted, block order kept.
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  int n() const { return n_; }
  int size() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& block(int idx) const { return blocks_[idx]; }
  // 0-based index of the block holding element x.
  int block_of(int x) const { return owner_[x - 1]; }

  IntegerPartition type() const;
  // Same blocks sorted by their minimum element.
  SetPartition canonical() const;
  std::string str() const;  // "{1,2},{3}"

  bool operator==(const SetPartition& o) const {
    return n_ == o.n_ && blocks_ == o.blocks_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> owner_;
};

SetPartition parse_set_partition(std::string_view text, int n);

struct PartitionedCactus {
  SetPartition pi1, pi2, pi3;
  Permutation alpha1, alpha2;

  int n() const { return alpha1.size(); }
  // alpha2^-1 alpha1^-1 gamma_n.
  Permutation alpha3() const;
  // Empty iff all invariants hold.
  std::vector<std::string> violations() const;
};

// Blocks sorted by maximum element, except that the block holding 1 goes
// last.
PartitionedCactus canonical_indexing(const PartitionedCactus& pc);

IntegerPartition cycle_type(const Permutation& p);
SetPartition cycles(const Permutation& p);
bool blocks_stable(const SetPartition& pi, const Permutation& p);

// Lexicographically descending.
std::vector<IntegerPartition> enumerate_partitions(int n);

// Every set partition of {1..n} of type t, each once, blocks ordered by
// their minimum.
void for_each_set_partition_of_type(
    int n, const IntegerPartition& t,
    const std::function<void(const SetPartition&)>& fn);
std::vector<SetPartition> enumerate_set_partitions_of_type(int n, const IntegerPartition& t);

// Every set partition of {1..n}, as 0-based block-id arrays in restricted
// growth form.
std::vector<std::vector<int8_t>> all_set_partitions(int n);

// Number of unordered groupings of lam's parts (as positions) whose sums
// give mu. Zero unless lam refines mu.
BigInt coarsening_count(const IntegerPartition& lam, const IntegerPartition& mu);

// Genus from sum of lengths = (r-1)n + 1 - 2g; nullopt when not admissible.
std::optional<int> genus(const std::vector<IntegerPartition>& types, int n);

// Cycle notation "(1 2 3 6)(4)(5)" (commas allowed) or one-line "[3,4,5,1,2]",
// "3,4,5,1,2" or, when n <= 9, "34512".
// For cycle notation, n = 0 means the largest element mentioned.
Permutation parse_permutation(std::string_view text, int n = 0);
std::string to_cycle_string(const Permutation& p);
std::string to_one_line(const Permutation& p);

}  // namespace cacti

#endif  // CACTI_PERM_HPP_
