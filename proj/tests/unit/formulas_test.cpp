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

#include "cacti/formulas.hpp"

#include "cacti/enumeration.hpp"
#include "doctest.h"

using namespace cacti;
using P = IntegerPartition;

TEST_CASE("m coefficients") {
  CHECK(m_coeff(1, 1, 1, 1) == 1);
  CHECK(m_coeff(2, 1, 1, 1) == 1);
  CHECK(m_coeff(5, 4, 3, 4) == 12);
  CHECK_THROWS_AS(m_coeff(3, 4, 1, 1), InvalidInput);
}

TEST_CASE("closed counts of partitioned cacti") {
  CHECK(c3_closed(P({1}), P({1}), P({1})) == 1);
  CHECK(c3_closed(P({2}), P({2}), P({2})) == 4);
  CHECK(c3_closed(P({2, 1, 1, 1}), P({2, 2, 1}), P({2, 1, 1, 1})) == 25);
  CHECK(c2_closed(P({1}), P({1})) == 1);
  CHECK(c2_closed(P({2, 1}), P({2, 1})) == 3);
  CHECK(c2_closed(P({2}), P({2})) == 2);
  // l1 + l2 > n + 1 has no cacti.
  CHECK(c2_closed(ones(3), ones(3)) == 0);
}

TEST_CASE("closed connection coefficients match exhaustive search") {
  for (int n = 1; n <= 5; ++n) {
    const auto types = enumerate_partitions(n);
    for (const auto& l : types)
      for (const auto& m : types) {
        CHECK(k2_closed(l, m) == k2_brute(l, m));
        if (n <= 4)
          for (const auto& u : types) CHECK(k3_closed(l, m, u) == k3_brute(l, m, u));
      }
  }
}

TEST_CASE("genus-zero expression") {
  CHECK(k3_genus0(P({1}), P({1}), P({1})) == 1);
  CHECK(k3_genus0(P({2, 1, 1, 1}), P({2, 2, 1}), P({2, 1, 1, 1})) == 25);
  CHECK(k3_genus0(ones(3), ones(3), P({3})) == 1);
  // Not genus zero.
  CHECK_THROWS_AS(k3_genus0(P({2}), P({2}), P({2})), InvalidInput);
}

TEST_CASE("thorn cactus tree counts") {
  CHECK(*thorn_cactus_closed(P({2}), P({2}), P({2}), 0, 0, 0) == 2);
  // Zero denominator: the closed form is undefined and the oracle decides.
  CHECK_FALSE(thorn_cactus_closed(P({1}), P({1}), P({1}), 0, 1, 0).has_value());
  const TreeCount t = thorn_cactus_count(P({1}), P({1}), P({1}), 0, 1, 0);
  CHECK(t.value == 1);
  CHECK(t.oracle);
  CHECK(thorn_cactus_count(P({2}), P({2}), P({2}), 0, 0, 0).value == 2);
  CHECK(thorn_cactus_count(P({2}), P({2}), P({2}), -1, 0, 0).value == 0);
}

TEST_CASE("two-colored thorn tree counts") {
  CHECK(bicolored_tree_count(P({1}), P({1})) == 1);
  CHECK(bicolored_tree_count(P({2}), P({2})) == 2);
  CHECK(bicolored_tree_count(P({2, 1}), P({2, 1})) == 3);
}

TEST_CASE("summation identity") {
  CHECK(prop3_identity(1, 1, 1, 1));
  CHECK(prop3_identity(5, 4, 3, 4));
  for (int n = 1; n <= 8; ++n)
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (int c = 1; c <= n; ++c) CHECK(prop3_identity(n, a, b, c));
  // The transcribed fifth multinomial part l2-g-b does not give an identity.
  CHECK_FALSE(summation_identity_sides(3, 2, 2, 2, true).holds());
}

TEST_CASE("cacti from trees") {
  for (int n = 1; n <= 4; ++n) {
    const TripleTable direct = c3_direct_census(n);
    const auto& types = direct.types();
    for (size_t i = 0; i < types.size(); ++i)
      for (size_t j = 0; j < types.size(); ++j)
        for (size_t k = 0; k < types.size(); ++k)
          CHECK(cacti_from_trees(types[i], types[j], types[k]) == direct.at(i, j, k));
  }
}

TEST_CASE("series fixed point") {
  const SeriesState s = series_fixed_point(3);
  CHECK(s.coefficient(CactusKey{P({1}), P({1}), P({1}), 0, 1, 0}) == 1);
  CHECK(s.coefficient(CactusKey{P({2}), P({2}), P({2}), 0, 0, 0}) == 2);
  // Outside the truncation.
  CHECK(s.coefficient(CactusKey{P({4}), P({4}), P({4}), 0, 0, 0}) == 0);
  for (const auto& [key, c] : s.terms()) {
    // Only terms whose three degree sums agree count trees.
    if (key.lam.weight() > 3 || key.mu.weight() != key.lam.weight() || key.nu.weight() != key.lam.weight()) continue;
    CHECK(c == thorn_cactus_count(key.lam, key.mu, key.nu, key.g, key.w, key.b).value);
  }
}
