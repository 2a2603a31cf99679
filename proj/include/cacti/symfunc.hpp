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

// Degree-n symmetric function tables in the power and monomial bases.

#ifndef CACTI_SYMFUNC_HPP_
#define CACTI_SYMFUNC_HPP_

#include <map>
#include <string>
#include <vector>

#include "cacti/arith.hpp"
#include "cacti/perm.hpp"

namespace cacti {

enum class Basis { kMonomial, kPower };

// Coefficients of a series in one to three independent alphabets, keyed by
// one partition per alphabet. Missing keys are zero.
class CoeffTable {
 public:
  using Key = std::vector<IntegerPartition>;

  CoeffTable(int degree, Basis basis, int arity);

  int degree() const { return degree_; }
  Basis basis() const { return basis_; }
  int arity() const { return arity_; }
  const std::map<Key, BigInt>& entries() const { return entries_; }

  // Adds `v` at `key`; zero sums are dropped.
  void add(const Key& key, const BigInt& v);
  BigInt at(const Key& key) const;

  // Sorted by key: [{"key": ["2,1", ...], "value": "3"}, ...]
  std::string to_json() const;

 private:
  int degree_;
  Basis basis_;
  int arity_;
  std::map<Key, BigInt> entries_;
};

// p_lam in the monomial basis: coefficient Aut(mu) * R(lam, mu) at m_mu.
CoeffTable power_to_monomial(const IntegerPartition& lam);

// Converts every alphabet of `t` to the monomial basis.
CoeffTable to_monomial(const CoeffTable& t);

// Explicit polynomial in k variables, keyed by exponent vector.
using Polynomial = std::map<std::vector<int>, BigInt>;
Polynomial expand_monomials(Basis basis, const IntegerPartition& lam, int k);

// Same as power_to_monomial but read off an explicit expansion of p_lam in
// max(n, l(lam)) variables.
CoeffTable power_to_monomial_by_expansion(const IntegerPartition& lam);

// Compares after converting both sides to the monomial basis.
bool series_equal(const CoeffTable& lhs, const CoeffTable& rhs);

}  // namespace cacti

#endif  // CACTI_SYMFUNC_HPP_
