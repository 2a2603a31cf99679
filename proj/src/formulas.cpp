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

#include <algorithm>
#include <map>
#include <mutex>

namespace cacti {
namespace {

void same_weight(std::initializer_list<const IntegerPartition*> ps) {
  int n = -1;
  for (const auto* p : ps) {
    if (n < 0) n = p->weight();
    if (p->weight() != n) throw InvalidInput("types must be partitions of the same n");
  }
  if (n < 1) throw InvalidInput("n must be positive");
}

// Inverse of the refinement matrix R[a][b] = coarsening_count(types[a],
// types[b]) for partitions of n. R is unitriangular once partitions are
// sorted by decreasing length, so the inverse is integral.
struct RefinementInverse {
  std::vector<IntegerPartition> types;
  std::map<IntegerPartition, int> index;
  std::vector<std::vector<BigInt>> inv;
};

const RefinementInverse& refinement_inverse(int n) {
  static std::mutex mu;
  static std::map<int, RefinementInverse> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  RefinementInverse ri;
  ri.types = enumerate_partitions(n);
  std::stable_sort(ri.types.begin(), ri.types.end(),
                   [](const auto& a, const auto& b) { return a.length() > b.length(); });
  const int m = static_cast<int>(ri.types.size());
  for (int i = 0; i < m; ++i) ri.index[ri.types[i]] = i;
  std::vector<std::vector<BigInt>> r(m, std::vector<BigInt>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) r[a][b] = coarsening_count(ri.types[a], ri.types[b]);
  // Upper unitriangular: solve R * inv = I column by column.
  ri.inv.assign(m, std::vector<BigInt>(m, 0));
  for (int col = 0; col < m; ++col)
    for (int row = m - 1; row >= 0; --row) {
      BigInt s = row == col ? 1 : 0;
      for (int k = row + 1; k < m; ++k) s -= r[row][k] * ri.inv[k][col];
      if (r[row][row] != 1) throw InternalInconsistency("refinement matrix is not unitriangular");
      ri.inv[row][col] = s;
    }
  return cache.emplace(n, std::move(ri)).first->second;
}

}  // namespace

BigInt m_coeff(int n, int l1, int l2, int l3) {
  if (l1 < 1 || l2 < 1 || l3 < 1 || l1 > n || l2 > n || l3 > n)
    throw InvalidInput("m_coeff: lengths must lie in 1..n");
  BigInt s = 0;
  for (int g = 0; g <= n; ++g)
    s += binomial(n - l2, l1 - 1 - g) * binomial(n - l3, g) * binomial(n - 1 - g, n - l2);
  return binomial(n - 1, l3 - 1) * s;
}

BigInt c3_closed(const IntegerPartition& lam, const IntegerPartition& mu, const IntegerPartition& nu) {
  same_weight({&lam, &mu, &nu});
  const int n = lam.weight();
  const int l1 = lam.length(), l2 = mu.length(), l3 = nu.length();
  BigInt num = factorial(n) * factorial(n) * m_coeff(n, l1, l2, l3);
  BigInt den = lam.aut() * mu.aut() * nu.aut() * binomial(n - 1, l1 - 1) * binomial(n - 1, l2 - 1) *
               binomial(n - 1, l3 - 1);
  return exact_div(num, den, "c3_closed");
}

BigInt k3_genus0(const IntegerPartition& lam, const IntegerPartition& mu, const IntegerPartition& nu) {
  same_weight({&lam, &mu, &nu});
  const int n = lam.weight();
  auto g = genus({lam, mu, nu}, n);
  if (!g || *g != 0) throw InvalidInput("k3_genus0: triple is not of genus 0");
  Rational v = Rational(BigInt(n) * n * factorial(lam.length() - 1) * factorial(mu.length() - 1) *
                        factorial(nu.length() - 1)) /
               Rational(lam.aut() * mu.aut() * nu.aut());
  return to_integer(v, "k3_genus0");
}

BigInt c2_closed(const IntegerPartition& lam, const IntegerPartition& mu) {
  same_weight({&lam, &mu});
  const int n = lam.weight();
  const int l1 = lam.length(), l2 = mu.length();
  if (l1 + l2 > n + 1) return 0;
  BigInt num = BigInt(n) * factorial(n - l1) * factorial(n - l2);
  BigInt den = factorial(n + 1 - l1 - l2) * lam.aut() * mu.aut();
  return exact_div(num, den, "c2_closed");
}

BigInt k3_closed(const IntegerPartition& lam, const IntegerPartition& mu, const IntegerPartition& nu) {
  same_weight({&lam, &mu, &nu});
  const auto& ri = refinement_inverse(lam.weight());
  const int a0 = ri.index.at(lam), b0 = ri.index.at(mu), c0 = ri.index.at(nu);
  const int m = static_cast<int>(ri.types.size());
  BigInt k = 0;
  for (int a = 0; a < m; ++a) {
    if (ri.inv[a][a0] == 0) continue;
    for (int b = 0; b < m; ++b) {
      if (ri.inv[b][b0] == 0) continue;
      for (int c = 0; c < m; ++c) {
        if (ri.inv[c][c0] == 0) continue;
        k += ri.inv[a][a0] * ri.inv[b][b0] * ri.inv[c][c0] * c3_closed(ri.types[a], ri.types[b], ri.types[c]);
      }
    }
  }
  return k;
}

BigInt k2_closed(const IntegerPartition& lam, const IntegerPartition& mu) {
  same_weight({&lam, &mu});
  const auto& ri = refinement_inverse(lam.weight());
  const int a0 = ri.index.at(lam), b0 = ri.index.at(mu);
  const int m = static_cast<int>(ri.types.size());
  BigInt k = 0;
  for (int a = 0; a < m; ++a) {
    if (ri.inv[a][a0] == 0) continue;
    for (int b = 0; b < m; ++b)
      if (ri.inv[b][b0] != 0) k += ri.inv[a][a0] * ri.inv[b][b0] * c2_closed(ri.types[a], ri.types[b]);
  }
  return k;
}

std::optional<Rational> thorn_cactus_closed(const IntegerPartition& lam, const IntegerPartition& mu,
                                            const IntegerPartition& nu, int g, int w, int b) {
  same_weight({&lam, &mu, &nu});
  const int n = lam.weight();
  const int l1 = lam.length(), l2 = mu.length(), l3 = nu.length();
  const int den = n - l1 - l2 + g + 1;
  if (den == 0) return std::nullopt;
  BigInt num = BigInt(n) * factorial(l1 - 1) * factorial(l2 - 1) * factorial(l3 - 1) *
               (BigInt(g) * (w - l3) + BigInt(l2) * l3) * multinomial(n - l1, {w, l2 - g - w}) *
               multinomial(n - l2, {b, l3 - w - b}) * multinomial(n - l3, {g, l1 - 1 - g - b});
  return Rational(num) / Rational(lam.aut() * mu.aut() * nu.aut() * den);
}

TreeCount thorn_cactus_count(const IntegerPartition& lam, const IntegerPartition& mu,
                             const IntegerPartition& nu, int g, int w, int b) {
  if (g < 0 || w < 0 || b < 0) return {0, false};
  auto closed = thorn_cactus_closed(lam, mu, nu, g, w, b);
  if (closed) return {to_integer(*closed, "thorn_cactus_count"), false};
  static std::mutex mu_;
  static std::map<CactusKey, BigInt> cache;
  CactusKey key{lam, mu, nu, g, w, b};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache.find(key);
    if (it != cache.end()) return {it->second, true};
  }
  int64_t count = 0;
  for_each_thorn_cactus_tree(key, [&](const Tree&) { ++count; });
  std::lock_guard<std::mutex> lock(mu_);
  cache[key] = count;
  return {count, true};
}

BigInt bicolored_tree_count(const IntegerPartition& lam, const IntegerPartition& mu) {
  same_weight({&lam, &mu});
  const int n = lam.weight();
  const int l1 = lam.length(), l2 = mu.length();
  if (l1 + l2 > n + 1) return 0;
  BigInt num = BigInt(n) * factorial(n - l1) * factorial(n - l2);
  BigInt den = factorial(n + 1 - l1 - l2) * factorial(n + 1 - l1 - l2) * lam.aut() * mu.aut();
  return exact_div(num, den, "bicolored_tree_count");
}

SumIdentity summation_identity_sides(int n, int l1, int l2, int l3, bool literal_middle_part) {
  if (l1 < 1 || l2 < 1 || l3 < 1 || l1 > n || l2 > n || l3 > n)
    throw InvalidInput("summation identity: lengths must lie in 1..n");
  SumIdentity s;
  for (int g = 0; g <= n; ++g)
    for (int w = 0; w <= n; ++w)
      for (int b = 0; b <= n; ++b) {
        const int fifth = literal_middle_part ? l2 - g - b : l2 - g - w;
        BigInt m = multinomial(n, {w, g, b, l1 - 1 - g - b, fifth, l3 - w - b});
        if (m != 0) s.lhs += (BigInt(l2) * l3 + BigInt(g) * (w - l3)) * m;
      }
  BigInt sum = 0;
  for (int g = 0; g <= n; ++g)
    sum += binomial(n - l2, l1 - 1 - g) * binomial(n - l3, g) * binomial(n - 1 - g, n - l2);
  s.rhs = BigInt(n) * n * binomial(n - 1, l3 - 1) * sum;
  return s;
}

bool prop3_identity(int n, int l1, int l2, int l3) { return summation_identity_sides(n, l1, l2, l3).holds(); }

BigInt cacti_from_trees(const IntegerPartition& lam, const IntegerPartition& mu,
                        const IntegerPartition& nu) {
  same_weight({&lam, &mu, &nu});
  const int n = lam.weight();
  const int l1 = lam.length(), l2 = mu.length(), l3 = nu.length();
  BigInt total = 0;
  for (int g = 0; g <= n; ++g)
    for (int w = 0; w <= n; ++w)
      for (int b = 0; b <= n; ++b) {
        BigInt weight = factorial_or_zero(n + 1 - l1 - l3 + b) * factorial_or_zero(n - l2 - l3 + w) *
                        falling_factorial(n + 1 - l1 - l2 + g, l3 - w - b);
        if (weight == 0) continue;
        total += thorn_cactus_count(lam, mu, nu, g, w, b).value * weight;
      }
  return total;
}

}  // namespace cacti
