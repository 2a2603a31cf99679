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

#include "cacti/enumeration.hpp"

#include "doctest.h"

using namespace cacti;
using P = IntegerPartition;

TEST_CASE("three-factor counts") {
  for (int n = 1; n <= 5; ++n) CHECK(k3_brute(ones(n), ones(n), P({n})) == 1);
  CHECK(k3_brute(P({2, 1, 1, 1}), P({2, 2, 1}), P({2, 1, 1, 1})) == 25);
  CHECK(k3_brute(P({2}), P({2}), P({2})) == 1);
}

TEST_CASE("two-factor counts") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(k2_brute(ones(n), P({n})) == 1);
    CHECK(k2_brute(P({n}), ones(n)) == 1);
  }
  CHECK(k2_brute(P({2, 1}), P({2, 1})) == 3);
}

TEST_CASE("partitioned cacti counts") {
  CHECK(c3_direct(P({1}), P({1}), P({1})) == 1);
  CHECK(c3_direct(P({2}), P({2}), P({2})) == 4);
  CHECK(c3_via_types(P({2}), P({2}), P({2})) == 4);
  CHECK(c3_via_types(P({1}), P({1}), P({1})) == 1);
  CHECK(c3_direct(P({3}), P({3}), P({3})) == 36);
  CHECK(c3_direct(P({4, 2}), P({4, 2}), P({4, 1, 1})) == c3_via_types(P({4, 2}), P({4, 2}), P({4, 1, 1})));

  CHECK(c2_brute(P({1}), P({1})) == 1);
  CHECK(c2_brute(P({2, 1}), P({2, 1})) == 3);
  CHECK(c2_brute(P({2}), P({2})) == 2);
}

TEST_CASE("censuses agree with single-triple searches") {
  const int n = 4;
  const TripleTable k = k3_census(n);
  const TripleTable direct = c3_direct_census(n);
  const TripleTable via = c3_via_types_census(n);
  const auto& types = k.types();
  for (size_t i = 0; i < types.size(); ++i)
    for (size_t j = 0; j < types.size(); ++j)
      for (size_t l = 0; l < types.size(); ++l) {
        CHECK(direct.at(i, j, l) == via.at(i, j, l));
        if ((i + j + l) % 5 == 0) CHECK(k.at(i, j, l) == k3_brute(types[i], types[j], types[l]));
      }
  // Every pair (alpha1, alpha2) is counted exactly once.
  CHECK(k.total() == 24 * 24);

  const auto c2 = c2_census(n);
  for (size_t i = 0; i < types.size(); ++i)
    for (size_t j = 0; j < types.size(); ++j) CHECK(c2[i][j] == c2_brute(types[i], types[j]));
}

TEST_CASE("shards sum to the whole") {
  const P l({2, 1, 1}), m({3, 1}), u({2, 2});
  BigInt sum = 0;
  for (int s = 0; s < 3; ++s) sum += k3_brute(l, m, u, kDefaultGuardK3, Shard{s, 3});
  CHECK(sum == k3_brute(l, m, u));
}

TEST_CASE("partitioned cacti generator") {
  for (int n = 1; n <= 4; ++n) {
    const TripleTable direct = c3_direct_census(n);
    BigInt total = 0;
    for (size_t i = 0; i < direct.types().size(); ++i)
      for (size_t j = 0; j < direct.types().size(); ++j)
        for (size_t l = 0; l < direct.types().size(); ++l) total += direct.at(i, j, l);
    int64_t seen = 0;
    for_each_partitioned_cactus(n, [&](const PartitionedCactus& pc) {
      ++seen;
      CHECK(pc.violations().empty());
    });
    CHECK(BigInt(seen) == total);
  }
}

TEST_CASE("guards and input checks") {
  CHECK_THROWS_AS(k3_brute(P({8}), P({8}), P({8})), Refusal);
  CHECK_THROWS_AS(c3_direct(P({7}), P({7}), P({7})), Refusal);
  CHECK_THROWS_AS(k3_brute(P({2}), P({3}), P({2})), InvalidInput);
  CHECK_THROWS_AS(c2_brute(P({9}), P({9})), Refusal);
}
