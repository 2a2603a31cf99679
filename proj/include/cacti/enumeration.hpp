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

// Brute-force oracles: factorization counts of the long cycle and counts of
// partitioned cacti / bicolored maps by exhaustive search.

#ifndef CACTI_ENUMERATION_HPP_
#define CACTI_ENUMERATION_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "cacti/arith.hpp"
#include "cacti/perm.hpp"

namespace cacti {

inline constexpr int kDefaultGuardK3 = 7;
inline constexpr int kDefaultGuardC3Direct = 6;
inline constexpr int kDefaultGuardTwoFactor = 8;

// Splits the outer loop of an exhaustive search into `count` interleaved
// chunks; summing all chunks gives the unsharded total.
struct Shard {
  int index = 0;
  int count = 1;
};

// Calls `fn` with the 0-based image array of every permutation of cycle
// type `lam`.
void for_each_perm_of_type(const IntegerPartition& lam,
                           const std::function<void(const std::vector<int>&)>& fn);

BigInt k3_brute(const IntegerPartition& lam, const IntegerPartition& mu, const IntegerPartition& nu,
                int nmax = kDefaultGuardK3, Shard shard = {});
BigInt k2_brute(const IntegerPartition& lam, const IntegerPartition& mu,
                int nmax = kDefaultGuardTwoFactor + 1);
BigInt c3_via_types(const IntegerPartition& lam, const IntegerPartition& mu,
                    const IntegerPartition& nu, int nmax = kDefaultGuardK3);
BigInt c3_direct(const IntegerPartition& lam, const IntegerPartition& mu, const IntegerPartition& nu,
                 int nmax = kDefaultGuardC3Direct, Shard shard = {});
BigInt c2_brute(const IntegerPartition& lam, const IntegerPartition& mu,
                int nmax = kDefaultGuardTwoFactor);

// All type triples at once. Indices follow enumerate_partitions(n).
class TripleTable {
 public:
  explicit TripleTable(int n);
  int n() const { return n_; }
  const std::vector<IntegerPartition>& types() const { return types_; }
  int index_of(const IntegerPartition& p) const;
  BigInt& at(int i, int j, int k) { return v_[(i * m_ + j) * m_ + k]; }
  const BigInt& at(int i, int j, int k) const { return v_[(i * m_ + j) * m_ + k]; }
  BigInt total() const;

 private:
  int n_, m_;
  std::vector<IntegerPartition> types_;
  std::map<IntegerPartition, int> index_;
  std::vector<BigInt> v_;
};

// k3 for every type triple from one pass over S_n x S_n.
TripleTable k3_census(int n, int nmax = kDefaultGuardK3, Shard shard = {});
// C via refinement sums over the k3 census.
TripleTable c3_via_types_census(int n, int nmax = kDefaultGuardK3);
// C by direct tuple counting for every triple.
TripleTable c3_direct_census(int n, int nmax = kDefaultGuardC3Direct, Shard shard = {});
// Every partitioned 3-cactus on {1..n} (canonical block indexing), optionally
// only those whose alpha1 index falls in `shard`. Order is deterministic.
void for_each_partitioned_cactus(int n, const std::function<void(const PartitionedCactus&)>& fn,
                                 Shard shard = {});

// c2 for every pair, as a table indexed [lam][mu].
std::vector<std::vector<BigInt>> c2_census(int n, int nmax = kDefaultGuardTwoFactor);

}  // namespace cacti

#endif  // CACTI_ENUMERATION_HPP_
