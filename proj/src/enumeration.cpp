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

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>
#include <unordered_map>

namespace cacti {
namespace {

// Cycle type packed as 4-bit multiplicities; n <= 15 keeps it exact.
uint64_t type_code(const IntegerPartition& p) {
  uint64_t c = 0;
  for (int part : p.parts()) c += uint64_t{1} << (4 * (part - 1));
  return c;
}

uint64_t type_code(const int* img, int n) {
  uint64_t c = 0;
  uint32_t seen = 0;
  for (int i = 0; i < n; ++i) {
    if (seen >> i & 1) continue;
    int len = 0;
    for (int j = i; !(seen >> j & 1); j = img[j]) {
      seen |= 1u << j;
      ++len;
    }
    c += uint64_t{1} << (4 * (len - 1));
  }
  return c;
}

// Orbits in restricted growth form, packed 4 bits per element.
uint64_t orbit_code(const int* img, int n) {
  int label[16];
  std::fill(label, label + n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (label[i] >= 0) continue;
    for (int j = i; label[j] < 0; j = img[j]) label[j] = next;
    ++next;
  }
  uint64_t c = 0;
  for (int i = 0; i < n; ++i) c |= uint64_t(label[i]) << (4 * i);
  return c;
}

void check_weights(std::initializer_list<const IntegerPartition*> ps) {
  int n = -1;
  for (const auto* p : ps) {
    if (n < 0) n = p->weight();
    if (p->weight() != n) throw InvalidInput("types must be partitions of the same n");
  }
  if (n < 1) throw InvalidInput("n must be positive");
}

void check_guard(int n, int nmax) {
  if (n > nmax)
    throw Refusal("n = " + std::to_string(n) + " exceeds the guard " + std::to_string(nmax) +
                  " for exhaustive search");
  if (n > 15) throw Refusal("exhaustive search is limited to n <= 15");
}

// Every permutation of S_n with its inverse, type and orbit partition.
struct PermTable {
  int n = 0;
  std::vector<int> img, inv;  // flat, n entries per permutation
  std::vector<uint64_t> type, orbit;
  size_t size() const { return type.size(); }
  const int* at(size_t i) const { return img.data() + i * n; }
  const int* inv_at(size_t i) const { return inv.data() + i * n; }
};

PermTable make_perm_table(int n) {
  PermTable t;
  t.n = n;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<int> q(n);
  do {
    for (int i = 0; i < n; ++i) q[p[i]] = i;
    t.img.insert(t.img.end(), p.begin(), p.end());
    t.inv.insert(t.inv.end(), q.begin(), q.end());
    t.type.push_back(type_code(p.data(), n));
    t.orbit.push_back(orbit_code(p.data(), n));
  } while (std::next_permutation(p.begin(), p.end()));
  return t;
}

// For every set partition o of [n] (seen as the orbits of some permutation),
// the number of set partitions of each type whose blocks are unions of
// blocks of o. Counted by testing every set partition.
class StableCounts {
 public:
  explicit StableCounts(int n) : n_(n), types_(enumerate_partitions(n)) {
    for (size_t i = 0; i < types_.size(); ++i) type_index_[type_code(types_[i])] = static_cast<int>(i);
    for (const auto& rg : all_set_partitions(n)) {
      std::vector<int> sizes(n, 0);
      for (int x = 0; x < n; ++x) ++sizes[rg[x]];
      std::vector<int> s;
      for (int v : sizes)
        if (v) s.push_back(v);
      parts_.push_back(rg);
      part_type_.push_back(type_index_.at(type_code(IntegerPartition(s))));
    }
  }

  int num_types() const { return static_cast<int>(types_.size()); }
  int type_index(uint64_t tcode) const { return type_index_.at(tcode); }

  // Row for orbit partition `ocode`, memoized.
  const std::vector<int64_t>& row(uint64_t ocode) {
    auto it = rows_.find(ocode);
    if (it != rows_.end()) return it->second;
    int rep[16];
    int first[16];
    std::fill(first, first + n_, -1);
    for (int x = 0; x < n_; ++x) {
      int lab = static_cast<int>(ocode >> (4 * x) & 15);
      if (first[lab] < 0) first[lab] = x;
      rep[x] = first[lab];
    }
    std::vector<int64_t> r(types_.size(), 0);
    for (size_t s = 0; s < parts_.size(); ++s) {
      const auto& sp = parts_[s];
      bool ok = true;
      for (int x = 0; x < n_ && ok; ++x) ok = sp[x] == sp[rep[x]];
      if (ok) ++r[part_type_[s]];
    }
    return rows_.emplace(ocode, std::move(r)).first->second;
  }

 private:
  int n_;
  std::vector<IntegerPartition> types_;
  std::unordered_map<uint64_t, int> type_index_;
  std::vector<std::vector<int8_t>> parts_;
  std::vector<int> part_type_;
  std::unordered_map<uint64_t, std::vector<int64_t>> rows_;
};

std::vector<std::vector<int>> perms_of_type(const IntegerPartition& lam) {
  std::vector<std::vector<int>> out;
  for_each_perm_of_type(lam, [&](const std::vector<int>& p) { out.push_back(p); });
  return out;
}

std::vector<int> inverse_of(const std::vector<int>& p) {
  std::vector<int> q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

}  // namespace

void for_each_perm_of_type(const IntegerPartition& lam,
                           const std::function<void(const std::vector<int>&)>& fn) {
  const int n = lam.weight();
  std::vector<int> img(n);
  for_each_set_partition_of_type(n, lam, [&](const SetPartition& sp) {
    // Each block becomes a cycle: its minimum first, then any order of the
    // rest.
    std::vector<std::vector<int>> tails;
    for (const auto& b : sp.blocks()) tails.emplace_back(b.begin() + 1, b.end());
    std::function<void(size_t)> rec = [&](size_t bi) {
      if (bi == tails.size()) {
        fn(img);
        return;
      }
      auto& tail = tails[bi];
      const int head = sp.block(static_cast<int>(bi)).front();
      std::sort(tail.begin(), tail.end());
      do {
        int prev = head;
        for (int x : tail) {
          img[prev - 1] = x - 1;
          prev = x;
        }
        img[prev - 1] = head - 1;
        rec(bi + 1);
      } while (std::next_permutation(tail.begin(), tail.end()));
    };
    rec(0);
  });
}

BigInt k3_brute(const IntegerPartition& lam, const IntegerPartition& mu, const IntegerPartition& nu,
                int nmax, Shard shard) {
  check_weights({&lam, &mu, &nu});
  const int n = lam.weight();
  check_guard(n, nmax);
  if (shard.count < 1 || shard.index < 0 || shard.index >= shard.count)
    throw InvalidInput("bad shard");
  auto a1s = perms_of_type(lam);
  auto a2s = perms_of_type(mu);
  std::vector<std::vector<int>> a2inv;
  for (const auto& p : a2s) a2inv.push_back(inverse_of(p));
  const uint64_t target = type_code(nu);
  int64_t count = 0;
  std::vector<int> beta(n), a3(n);
  for (size_t i = shard.index; i < a1s.size(); i += shard.count) {
    auto a1inv = inverse_of(a1s[i]);
    for (int x = 0; x < n; ++x) beta[x] = a1inv[(x + 1) % n];
    for (const auto& q : a2inv) {
      for (int x = 0; x < n; ++x) a3[x] = q[beta[x]];
      if (type_code(a3.data(), n) == target) ++count;
    }
  }
  return count;
}

BigInt k2_brute(const IntegerPartition& lam, const IntegerPartition& mu, int nmax) {
  check_weights({&lam, &mu});
  const int n = lam.weight();
  check_guard(n, nmax);
  const uint64_t target = type_code(mu);
  int64_t count = 0;
  std::vector<int> b(n);
  for_each_perm_of_type(lam, [&](const std::vector<int>& a) {
    auto ai = inverse_of(a);
    for (int x = 0; x < n; ++x) b[x] = ai[(x + 1) % n];
    if (type_code(b.data(), n) == target) ++count;
  });
  return count;
}

// ---------------------------------------------------------------------------

TripleTable::TripleTable(int n) : n_(n), types_(enumerate_partitions(n)) {
  m_ = static_cast<int>(types_.size());
  for (int i = 0; i < m_; ++i) index_[types_[i]] = i;
  v_.assign(static_cast<size_t>(m_) * m_ * m_, 0);
}

int TripleTable::index_of(const IntegerPartition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw InvalidInput("type " + p.str() + " is not a partition of n");
  return it->second;
}

BigInt TripleTable::total() const {
  BigInt s = 0;
  for (const auto& v : v_) s += v;
  return s;
}

TripleTable k3_census(int n, int nmax, Shard shard) {
  if (n < 1) throw InvalidInput("n must be positive");
  check_guard(n, nmax);
  TripleTable t(n);
  const int m = static_cast<int>(t.types().size());
  std::unordered_map<uint64_t, int> idx;
  for (int i = 0; i < m; ++i) idx[type_code(t.types()[i])] = i;
  PermTable perms = make_perm_table(n);
  std::vector<int> tid(perms.size());
  for (size_t i = 0; i < perms.size(); ++i) tid[i] = idx.at(perms.type[i]);
  std::vector<int64_t> acc(static_cast<size_t>(m) * m * m, 0);
  std::vector<int> beta(n), a3(n);
  for (size_t i = shard.index; i < perms.size(); i += shard.count) {
    const int* a1inv = perms.inv_at(i);
    for (int x = 0; x < n; ++x) beta[x] = a1inv[(x + 1) % n];
    for (size_t j = 0; j < perms.size(); ++j) {
      const int* a2inv = perms.inv_at(j);
      for (int x = 0; x < n; ++x) a3[x] = a2inv[beta[x]];
      ++acc[(static_cast<size_t>(tid[i]) * m + tid[j]) * m + idx.at(type_code(a3.data(), n))];
    }
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) t.at(i, j, k) = acc[(static_cast<size_t>(i) * m + j) * m + k];
  return t;
}

TripleTable c3_via_types_census(int n, int nmax) {
  TripleTable k = k3_census(n, nmax);
  const auto& ty = k.types();
  const int m = static_cast<int>(ty.size());
  std::vector<std::vector<BigInt>> r(m, std::vector<BigInt>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) r[a][b] = coarsening_count(ty[a], ty[b]);
  // Contract one axis at a time.
  TripleTable s1(n), s2(n), out(n);
  for (int l = 0; l < m; ++l)
    for (int d = 0; d < m; ++d)
      for (int e = 0; e < m; ++e)
        for (int rho = 0; rho < m; ++rho)
          if (r[rho][l] != 0) s1.at(l, d, e) += r[rho][l] * k.at(rho, d, e);
  for (int l = 0; l < m; ++l)
    for (int mu = 0; mu < m; ++mu)
      for (int e = 0; e < m; ++e)
        for (int d = 0; d < m; ++d)
          if (r[d][mu] != 0) s2.at(l, mu, e) += r[d][mu] * s1.at(l, d, e);
  for (int l = 0; l < m; ++l)
    for (int mu = 0; mu < m; ++mu)
      for (int nu = 0; nu < m; ++nu)
        for (int e = 0; e < m; ++e)
          if (r[e][nu] != 0) out.at(l, mu, nu) += r[e][nu] * s2.at(l, mu, e);
  return out;
}

BigInt c3_via_types(const IntegerPartition& lam, const IntegerPartition& mu, const IntegerPartition& nu,
                    int nmax) {
  check_weights({&lam, &mu, &nu});
  const int n = lam.weight();
  check_guard(n, nmax);
  static std::mutex m;
  static std::map<int, TripleTable> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, c3_via_types_census(n, nmax)).first;
  const auto& t = it->second;
  return t.at(t.index_of(lam), t.index_of(mu), t.index_of(nu));
}

BigInt c3_direct(const IntegerPartition& lam, const IntegerPartition& mu, const IntegerPartition& nu,
                 int nmax, Shard shard) {
  check_weights({&lam, &mu, &nu});
  const int n = lam.weight();
  check_guard(n, nmax);
  StableCounts sc(n);
  const int tl = sc.type_index(type_code(lam)), tm = sc.type_index(type_code(mu)),
            tn = sc.type_index(type_code(nu));
  PermTable perms = make_perm_table(n);
  BigInt total = 0;
  std::vector<int> a3(n);
  for (size_t i = shard.index; i < perms.size(); i += shard.count) {
    const int64_t c1 = sc.row(perms.orbit[i])[tl];
    if (c1 == 0) continue;
    const int* a1inv = perms.inv_at(i);
    int64_t row_sum = 0;
    for (size_t j = 0; j < perms.size(); ++j) {
      const int64_t c2 = sc.row(perms.orbit[j])[tm];
      if (c2 == 0) continue;
      const int* a2inv = perms.inv_at(j);
      for (int x = 0; x < n; ++x) a3[x] = a2inv[a1inv[(x + 1) % n]];
      row_sum += c2 * sc.row(orbit_code(a3.data(), n))[tn];
    }
    total += BigInt(c1) * row_sum;
  }
  return total;
}

TripleTable c3_direct_census(int n, int nmax, Shard shard) {
  if (n < 1) throw InvalidInput("n must be positive");
  check_guard(n, nmax);
  StableCounts sc(n);
  PermTable perms = make_perm_table(n);
  // Histogram of orbit-partition triples, then one product per entry.
  std::map<std::tuple<uint64_t, uint64_t, uint64_t>, int64_t> hist;
  std::vector<int> a3(n);
  for (size_t i = shard.index; i < perms.size(); i += shard.count) {
    const int* a1inv = perms.inv_at(i);
    for (size_t j = 0; j < perms.size(); ++j) {
      const int* a2inv = perms.inv_at(j);
      for (int x = 0; x < n; ++x) a3[x] = a2inv[a1inv[(x + 1) % n]];
      ++hist[{perms.orbit[i], perms.orbit[j], orbit_code(a3.data(), n)}];
    }
  }
  const int m = sc.num_types();
  std::vector<int64_t> acc(static_cast<size_t>(m) * m * m, 0);
  for (const auto& [key, h] : hist) {
    const auto& r1 = sc.row(std::get<0>(key));
    const auto& r2 = sc.row(std::get<1>(key));
    const auto& r3 = sc.row(std::get<2>(key));
    for (int a = 0; a < m; ++a) {
      if (!r1[a]) continue;
      for (int b = 0; b < m; ++b) {
        if (!r2[b]) continue;
        const int64_t ab = h * r1[a] * r2[b];
        for (int c = 0; c < m; ++c)
          if (r3[c]) acc[(static_cast<size_t>(a) * m + b) * m + c] += ab * r3[c];
      }
    }
  }
  TripleTable t(n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) t.at(a, b, c) = acc[(static_cast<size_t>(a) * m + b) * m + c];
  return t;
}

std::vector<std::vector<BigInt>> c2_census(int n, int nmax) {
  if (n < 1) throw InvalidInput("n must be positive");
  check_guard(n, nmax);
  StableCounts sc(n);
  PermTable perms = make_perm_table(n);
  std::map<std::pair<uint64_t, uint64_t>, int64_t> hist;
  std::vector<int> b(n);
  for (size_t i = 0; i < perms.size(); ++i) {
    const int* ainv = perms.inv_at(i);
    for (int x = 0; x < n; ++x) b[x] = ainv[(x + 1) % n];
    ++hist[{perms.orbit[i], orbit_code(b.data(), n)}];
  }
  const int m = sc.num_types();
  std::vector<std::vector<BigInt>> out(m, std::vector<BigInt>(m, 0));
  for (const auto& [key, h] : hist) {
    const auto& r1 = sc.row(key.first);
    const auto& r2 = sc.row(key.second);
    for (int a = 0; a < m; ++a) {
      if (!r1[a]) continue;
      for (int c = 0; c < m; ++c)
        if (r2[c]) out[a][c] += BigInt(h * r1[a]) * r2[c];
    }
  }
  return out;
}

BigInt c2_brute(const IntegerPartition& lam, const IntegerPartition& mu, int nmax) {
  check_weights({&lam, &mu});
  const int n = lam.weight();
  check_guard(n, nmax);
  StableCounts sc(n);
  const int tl = sc.type_index(type_code(lam)), tm = sc.type_index(type_code(mu));
  PermTable perms = make_perm_table(n);
  BigInt total = 0;
  std::vector<int> b(n);
  for (size_t i = 0; i < perms.size(); ++i) {
    const int64_t c1 = sc.row(perms.orbit[i])[tl];
    if (!c1) continue;
    const int* ainv = perms.inv_at(i);
    for (int x = 0; x < n; ++x) b[x] = ainv[(x + 1) % n];
    total += c1 * sc.row(orbit_code(b.data(), n))[tm];
  }
  return total;
}

void for_each_partitioned_cactus(int n, const std::function<void(const PartitionedCactus&)>& fn,
                                 Shard shard) {
  if (n < 1) throw InvalidInput("for_each_partitioned_cactus: n must be positive");
  check_guard(n, kDefaultGuardC3Direct);
  // Coarsenings of the cycles of p, as SetPartitions.
  auto coarsenings = [](const Permutation& p) {
    const SetPartition cyc = cycles(p);
    std::vector<SetPartition> out;
    for (const auto& rg : all_set_partitions(cyc.size())) {
      const int nb = rg.empty() ? 0 : *std::max_element(rg.begin(), rg.end()) + 1;
      std::vector<std::vector<int>> blocks(nb);
      for (int c = 0; c < cyc.size(); ++c)
        blocks[rg[c]].insert(blocks[rg[c]].end(), cyc.block(c).begin(), cyc.block(c).end());
      out.emplace_back(p.size(), std::move(blocks));
    }
    return out;
  };
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> perms;
  do perms.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  const Permutation gamma = long_cycle(n);
  std::vector<std::vector<SetPartition>> coarse;
  coarse.reserve(perms.size());
  for (const auto& p : perms) coarse.push_back(coarsenings(p));
  for (size_t i = shard.index; i < perms.size(); i += shard.count) {
    const auto& a1 = perms[i];
    for (size_t j = 0; j < perms.size(); ++j) {
      const auto& a2 = perms[j];
      const Permutation a3 = compose(a2.inverse(), compose(a1.inverse(), gamma));
      const auto c3 = coarsenings(a3);
      for (const auto& p1 : coarse[i])
        for (const auto& p2 : coarse[j])
          for (const auto& p3 : c3) fn(canonical_indexing(PartitionedCactus{p1, p2, p3, a1, a2}));
    }
  }
}

}  // namespace cacti
