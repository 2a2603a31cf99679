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

#include "cacti/symfunc.hpp"

#include "cacti/enumeration.hpp"
#include "cacti/formulas.hpp"
#include "doctest.h"

using namespace cacti;
using P = IntegerPartition;

TEST_CASE("power sums in the monomial basis") {
  const CoeffTable single = power_to_monomial(P({4}));
  CHECK(single.entries().size() == 1);
  CHECK(single.at({P({4})}) == 1);

  const CoeffTable sq = power_to_monomial(P({1, 1}));
  CHECK(sq.at({P({1, 1})}) == 2);
  CHECK(sq.at({P({2})}) == 1);

  CHECK(power_to_monomial(P({1, 1, 2, 2})).at({P({1, 2, 3})}) == 4);
}

TEST_CASE("triangularity and leading coefficient") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& lam : enumerate_partitions(n)) {
      const CoeffTable t = power_to_monomial(lam);
      CHECK(t.at({lam}) == lam.aut());
      for (const auto& [key, c] : t.entries()) CHECK(key[0].length() <= lam.length());
    }
}

TEST_CASE("explicit expansions") {
  const Polynomial m1 = expand_monomials(Basis::kMonomial, P({1}), 3);
  CHECK(m1.size() == 3);
  for (const auto& [e, c] : m1) CHECK(c == 1);

  const Polynomial p2 = expand_monomials(Basis::kPower, P({2}), 2);
  CHECK(p2 == Polynomial{{{2, 0}, 1}, {{0, 2}, 1}});

  const Polynomial p11 = expand_monomials(Basis::kPower, P({1, 1}), 2);
  CHECK(p11 == Polynomial{{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}});
}

TEST_CASE("conversion agrees with expansion") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lam : enumerate_partitions(n))
      CHECK(power_to_monomial(lam).to_json() == power_to_monomial_by_expansion(lam).to_json());
}

TEST_CASE("series comparison") {
  CoeffTable p(2, Basis::kPower, 1), m(2, Basis::kMonomial, 1);
  p.add({P({2})}, 1);
  m.add({P({2})}, 1);
  CHECK(series_equal(p, p));
  CHECK(series_equal(p, m));
  m.add({P({1, 1})}, 1);
  CHECK_FALSE(series_equal(p, m));

  CoeffTable other(2, Basis::kPower, 2);
  CHECK_THROWS_AS(series_equal(p, other), InvalidInput);
}

TEST_CASE("two-factor identity as symmetric functions") {
  // sum k p_lam(x) p_mu(y) against sum (closed coefficient) m_lam(x) m_mu(y).
  const int n = 4;
  const auto types = enumerate_partitions(n);
  CoeffTable lhs(n, Basis::kPower, 2), rhs(n, Basis::kMonomial, 2);
  for (const auto& l : types)
    for (const auto& u : types) {
      lhs.add({l, u}, k2_brute(l, u));
      rhs.add({l, u}, c2_closed(l, u) * l.aut() * u.aut());
    }
  CHECK(series_equal(lhs, rhs));
}

TEST_CASE("json form is sorted and stable") {
  const std::string j = power_to_monomial(P({1, 1})).to_json();
  CHECK(j == power_to_monomial(P({1, 1})).to_json());
  CHECK(j.find("\"1,1\"") < j.find("\"2\""));
}
