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

#include <algorithm>
#include <functional>

#include "json.hpp"

namespace cacti {

CoeffTable::CoeffTable(int degree, Basis basis, int arity)
    : degree_(degree), basis_(basis), arity_(arity) {
  if (arity < 1 || arity > 3) throw InvalidInput("CoeffTable: arity must be 1..3");
}

void CoeffTable::add(const Key& key, const BigInt& v) {
  if (static_cast<int>(key.size()) != arity_) throw InvalidInput("CoeffTable: key arity mismatch");
  for (const auto& p : key)
    if (p.weight() != degree_) throw InvalidInput("CoeffTable: key of wrong degree");
  if (v == 0) return;
  auto& slot = entries_[key];
  slot += v;
  if (slot == 0) entries_.erase(key);
}

BigInt CoeffTable::at(const Key& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? BigInt(0) : it->second;
}

std::string CoeffTable::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, v] : entries_) {
    nlohmann::json keys = nlohmann::json::array();
    for (const auto& p : k) keys.push_back(p.str());
    arr.push_back({{"key", keys}, {"value", v.str()}});
  }
  return arr.dump();
}

CoeffTable power_to_monomial(const IntegerPartition& lam) {
  CoeffTable t(lam.weight(), Basis::kMonomial, 1);
  for (const auto& mu : enumerate_partitions(lam.weight())) {
    if (mu.length() > lam.length()) continue;
    BigInt r = coarsening_count(lam, mu);
    if (r != 0) t.add({mu}, mu.aut() * r);
  }
  return t;
}

CoeffTable to_monomial(const CoeffTable& t) {
  if (t.basis() == Basis::kMonomial) return t;
  CoeffTable out(t.degree(), Basis::kMonomial, t.arity());
  std::map<IntegerPartition, CoeffTable> cache;
  auto conv = [&](const IntegerPartition& p) -> const CoeffTable& {
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, power_to_monomial(p)).first;
    return it->second;
  };
  for (const auto& [key, coeff] : t.entries()) {
    // Alphabets are independent, so the product expands factor by factor.
    std::vector<std::pair<CoeffTable::Key, BigInt>> acc{{{}, coeff}};
    for (const auto& p : key) {
      std::vector<std::pair<CoeffTable::Key, BigInt>> next;
      for (const auto& [k, c] : acc)
        for (const auto& [mk, mc] : conv(p).entries()) {
          auto nk = k;
          nk.push_back(mk[0]);
          next.emplace_back(std::move(nk), c * mc);
        }
      acc = std::move(next);
    }
    for (const auto& [k, c] : acc) out.add(k, c);
  }
  return out;
}

Polynomial expand_monomials(Basis basis, const IntegerPartition& lam, int k) {
  if (k < 0) throw InvalidInput("expand_monomials: negative variable count");
  Polynomial poly;
  if (basis == Basis::kMonomial) {
    if (k < lam.length()) throw InvalidInput("expand_monomials: too few variables");
    std::vector<int> e(lam.parts());
    e.resize(k, 0);
    std::sort(e.begin(), e.end());
    do {
      poly[e] = 1;
    } while (std::next_permutation(e.begin(), e.end()));
    return poly;
  }
  // Power basis: multiply out p_{l1} p_{l2} ... term by term.
  poly[std::vector<int>(k, 0)] = 1;
  for (int part : lam.parts()) {
    Polynomial next;
    for (const auto& [e, c] : poly)
      for (int v = 0; v < k; ++v) {
        auto f = e;
        f[v] += part;
        next[f] += c;
      }
    poly = std::move(next);
  }
  return poly;
}

CoeffTable power_to_monomial_by_expansion(const IntegerPartition& lam) {
  const int n = lam.weight();
  const int k = std::max(n, lam.length());
  Polynomial poly = expand_monomials(Basis::kPower, lam, k);
  CoeffTable t(n, Basis::kMonomial, 1);
  for (const auto& mu : enumerate_partitions(n)) {
    // m_mu is the only monomial function containing x^mu with mu decreasing.
    std::vector<int> e(mu.parts());
    e.resize(k, 0);
    auto it = poly.find(e);
    if (it != poly.end()) t.add({mu}, it->second);
  }
  return t;
}

bool series_equal(const CoeffTable& lhs, const CoeffTable& rhs) {
  if (lhs.degree() != rhs.degree() || lhs.arity() != rhs.arity())
    throw InvalidInput("series_equal: degree or arity mismatch");
  return to_monomial(lhs).entries() == to_monomial(rhs).entries();
}

}  // namespace cacti
