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

#include "cacti/perm.hpp"

#include "doctest.h"

using namespace cacti;

TEST_CASE("compose and inverse") {
  const Permutation p = parse_permutation("(1 3 2)(4 5)", 5);
  CHECK(compose(Permutation::identity(5), p) == p);
  CHECK(compose(p, inverse(p)) == Permutation::identity(5));
  const Permutation t = parse_permutation("(1 2)", 2);
  CHECK(compose(t, t) == Permutation::identity(2));

  // (p o q)(i) = p(q(i))
  const Permutation q = parse_permutation("(1 2)", 5);
  CHECK(compose(p, q)(1) == p(2));
}

TEST_CASE("three-factor product of a small cactus is the long cycle") {
  const Permutation a1 = parse_permutation("(1)(2 4)(3)(5)", 5);
  const Permutation a2 = parse_permutation("(1)(2 3)(4 5)", 5);
  const Permutation a3 = parse_permutation("(1 5)(2)(3)(4)", 5);
  CHECK(compose(a1, compose(a2, a3)) == long_cycle(5));
}

TEST_CASE("long cycle") {
  CHECK(long_cycle(1) == Permutation::identity(1));
  CHECK(long_cycle(2) == parse_permutation("(1 2)", 2));
  CHECK(long_cycle(5)(5) == 1);
  CHECK(long_cycle(5)(2) == 3);
}

TEST_CASE("cycle types and orbits") {
  CHECK(cycle_type(Permutation::identity(4)).str() == "1,1,1,1");
  CHECK(cycle_type(parse_permutation("(1 2 3 6)", 6)).str() == "4,1,1");
  CHECK(cycle_type(parse_permutation("(1 5 3)", 6)).str() == "3,1,1,1");
  CHECK(cycles(Permutation::identity(3)).str() == "{1},{2},{3}");
  CHECK(cycles(long_cycle(5)).str() == "{1,2,3,4,5}");
  CHECK(cycles(parse_permutation("(1 3 4)", 6)).str() == "{1,3,4},{2},{5},{6}");
}

TEST_CASE("block stability") {
  const SetPartition pi = parse_set_partition("{1,3,4,5},{2,6}", 6);
  CHECK(blocks_stable(pi, Permutation::identity(6)));
  CHECK(blocks_stable(pi, parse_permutation("(1 5 3)", 6)));
  CHECK_FALSE(blocks_stable(parse_set_partition("{1,2},{3}", 3), parse_permutation("(1 2 3)", 3)));
}

TEST_CASE("integer partitions") {
  CHECK(enumerate_partitions(0).size() == 1);
  CHECK(enumerate_partitions(4).size() == 5);
  CHECK(enumerate_partitions(8).size() == 22);
  CHECK(IntegerPartition({1, 2, 1}).str() == "2,1,1");
  CHECK(IntegerPartition({1, 1, 1, 2, 2}).aut() == 12);
  CHECK(parse_partition("4,2,1,1") == IntegerPartition({1, 1, 2, 4}));
  CHECK_THROWS_AS(parse_partition("4,x,1"), InvalidInput);
  CHECK_THROWS_AS(parse_partition("0"), InvalidInput);
}

TEST_CASE("set partitions of a given type") {
  CHECK(enumerate_set_partitions_of_type(3, IntegerPartition({3})).size() == 1);
  CHECK(enumerate_set_partitions_of_type(3, IntegerPartition({2, 1})).size() == 3);
  CHECK(enumerate_set_partitions_of_type(4, IntegerPartition({2, 2})).size() == 3);
  CHECK(all_set_partitions(5).size() == 52);  // Bell(5)
}

TEST_CASE("coarsening counts") {
  CHECK(coarsening_count(IntegerPartition({1, 1, 2, 2}), IntegerPartition({1, 2, 3})) == 4);
  CHECK(coarsening_count(IntegerPartition({1, 1, 1}), IntegerPartition({3})) == 1);
  for (const auto& l : enumerate_partitions(6)) CHECK(coarsening_count(l, l) == 1);
  CHECK(coarsening_count(IntegerPartition({3}), IntegerPartition({2, 1})) == 0);
}

TEST_CASE("genus") {
  using P = IntegerPartition;
  CHECK(genus({P({1, 1, 1, 2}), P({1, 2, 2}), P({1, 1, 1, 2})}, 5) == 0);
  CHECK(genus({P({1, 1, 4}), P({1, 1, 1, 3}), P({1, 1, 1, 3})}, 6) == 1);
  for (int n = 1; n <= 6; ++n) CHECK(genus({ones(n), ones(n), P({n})}, n) == 0);
  CHECK(genus({P({2}), P({2}), P({2})}, 2) == 1);
  // Odd excess: no genus.
  CHECK_FALSE(genus({P({2}), P({2}), P({1, 1})}, 2).has_value());
}

TEST_CASE("permutation parsing") {
  CHECK(parse_permutation("231", 3) == Permutation({2, 3, 1}));
  CHECK(parse_permutation("[2,3,1]") == Permutation({2, 3, 1}));
  CHECK(parse_permutation("(1 2 3)", 3) == Permutation({2, 3, 1}));
  CHECK(to_cycle_string(parse_permutation("(2 4)", 4)) == "(1)(2 4)(3)");
  CHECK_THROWS_AS(parse_permutation("(1 1)", 2), InvalidInput);
  CHECK_THROWS_AS(Permutation({1, 1}), InvalidInput);
}

TEST_CASE("partitioned cactus invariants") {
  PartitionedCactus pc{parse_set_partition("{4,5},{1,2,3,6}", 6), parse_set_partition("{1,3,4,5},{2,6}", 6),
                       parse_set_partition("{1,3,4,6},{2},{5}", 6), parse_permutation("(1 2 3 6)", 6),
                       parse_permutation("(1 5 3)", 6)};
  CHECK(pc.violations().empty());
  CHECK(cycles(pc.alpha3()).str() == "{1,3,4},{2},{5},{6}");

  // A block that splits a cycle of alpha1.
  PartitionedCactus bad = pc;
  bad.pi1 = parse_set_partition("{4,5,1},{2,3,6}", 6);
  CHECK_FALSE(bad.violations().empty());

  // Indexing puts the block holding 1 last.
  PartitionedCactus moved = pc;
  moved.pi1 = parse_set_partition("{1,2,3,6},{4,5}", 6);
  CHECK(canonical_indexing(moved).pi1 == pc.pi1);
}
