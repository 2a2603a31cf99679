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

// Closed-form counts and the truncated generating-series fixed point.

#ifndef CACTI_FORMULAS_HPP_
#define CACTI_FORMULAS_HPP_

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cacti/arith.hpp"
#include "cacti/perm.hpp"
#include "cacti/tree.hpp"

namespace cacti {

// C(n-1, l3-1) * sum_g C(n-l2, l1-1-g) C(n-l3, g) C(n-1-g, n-l2).
BigInt m_coeff(int n, int l1, int l2, int l3);

// Number of partitioned 3-cacti of types (lam, mu, nu).
BigInt c3_closed(const IntegerPartition& lam, const IntegerPartition& mu, const IntegerPartition& nu);

// n^2 (l1-1)! (l2-1)! (l3-1)! / (Aut Aut Aut); genus-0 triples only.
BigInt k3_genus0(const IntegerPartition& lam, const IntegerPartition& mu, const IntegerPartition& nu);

// Number of partitioned bicolored maps; zero when l1 + l2 > n + 1.
BigInt c2_closed(const IntegerPartition& lam, const IntegerPartition& mu);

// k3 and k2 recovered from c3_closed / c2_closed by inverting the
// refinement sums (C = sum R R R k), finest types first.
BigInt k3_closed(const IntegerPartition& lam, const IntegerPartition& mu, const IntegerPartition& nu);
BigInt k2_closed(const IntegerPartition& lam, const IntegerPartition& mu);

// The product formula for thorn cactus trees. nullopt when its
// denominator n - l1 - l2 + g + 1 vanishes.
std::optional<Rational> thorn_cactus_closed(const IntegerPartition& lam, const IntegerPartition& mu,
                                            const IntegerPartition& nu, int g, int w, int b);

struct TreeCount {
  BigInt value;
  bool oracle = false;  // true when taken from exhaustive generation
};

// thorn_cactus_closed when defined (asserted integral), otherwise the
// exhaustive count.
TreeCount thorn_cactus_count(const IntegerPartition& lam, const IntegerPartition& mu,
                             const IntegerPartition& nu, int g, int w, int b);

// n (n-l1)! (n-l2)! / ((n+1-l1-l2)!^2 Aut Aut).
BigInt bicolored_tree_count(const IntegerPartition& lam, const IntegerPartition& mu);

// Both sides of the summation identity over (g, w, b).
struct SumIdentity {
  BigInt lhs, rhs;
  bool holds() const { return lhs == rhs; }
};
// `literal_middle_part` swaps the fifth multinomial part l2-g-w for
// l2-g-b, the variant that does not hold.
SumIdentity summation_identity_sides(int n, int l1, int l2, int l3, bool literal_middle_part = false);
bool prop3_identity(int n, int l1, int l2, int l3);

// sum_{g,w,b} |trees| (n+1-l1-l3+b)! (n-l2-l3+w)! (n+1-l1-l2+g)_{l3-w-b},
// with tree counts from thorn_cactus_count.
BigInt cacti_from_trees(const IntegerPartition& lam, const IntegerPartition& mu,
                        const IntegerPartition& nu);

// Power series in x1..x6 and the degree markers t_i, u_i, v_i, truncated to
// total marker weight <= N in each of t, u, v. A monomial is stored as
// three partitions (degree multisets, indices into `shapes`) and the
// exponents of x4, x5, x6; x1..x3 are the partition lengths.
class SeriesState {
 public:
  using Poly = std::unordered_map<uint64_t, BigInt>;

  int order() const { return order_; }
  const Poly& W() const { return w_; }
  const Poly& B() const { return b_; }
  const Poly& G() const { return g_; }
  const Poly& F() const { return f_; }
  int iterations() const { return iterations_; }

  // [x1^l1 .. x6^b t^m(lam) u^m(mu) v^m(nu)] F; zero outside the truncation.
  BigInt coefficient(const CactusKey& key) const;
  // Every nonzero coefficient of F.
  std::vector<std::pair<CactusKey, BigInt>> terms() const;

 private:
  friend SeriesState series_fixed_point(int N);
  int order_ = 0;
  int iterations_ = 0;
  std::vector<IntegerPartition> shapes_;
  Poly w_, b_, g_, f_;
};

SeriesState series_fixed_point(int N);

}  // namespace cacti

#endif  // CACTI_FORMULAS_HPP_
