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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace cacti {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  const int n = size();
  std::vector<char> seen(n, 0);
  for (int v : img_) {
    if (v < 1 || v > n || seen[v - 1]) throw InvalidInput("not a permutation");
    seen[v - 1] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw InvalidInput("negative size");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (int i = 0; i < size(); ++i) v[img_[i] - 1] = i + 1;
  return Permutation(std::move(v));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw InvalidInput("compose: size mismatch");
  std::vector<int> v(p.size());
  for (int i = 1; i <= p.size(); ++i) v[i - 1] = p(q(i));
  return Permutation(std::move(v));
}

Permutation inverse(const Permutation& p) { return p.inverse(); }

Permutation long_cycle(int n) {
  if (n < 1) throw InvalidInput("long_cycle: n must be positive");
  std::vector<int> v(n);
  for (int i = 1; i <= n; ++i) v[i - 1] = i % n + 1;
  return Permutation(std::move(v));
}

// ---------------------------------------------------------------------------

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw InvalidInput("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> IntegerPartition::multiplicities() const {
  std::vector<int> m(weight_ + 1, 0);
  for (int p : parts_) ++m[p];
  return m;
}

BigInt IntegerPartition::aut() const {
  BigInt a = 1;
  for (int m : multiplicities()) a *= factorial(m);
  return a;
}

std::string IntegerPartition::str() const {
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

namespace {

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
      if (ec != std::errc()) throw InvalidInput("bad integer in '" + std::string(text) + "'");
      out.push_back(v);
      i = ptr - text.data();
    } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else {
      throw InvalidInput("unexpected character in '" + std::string(text) + "'");
    }
  }
  return out;
}

}  // namespace

IntegerPartition parse_partition(std::string_view text) {
  std::vector<int> parts = parse_ints(text);
  for (int p : parts)
    if (p < 1) throw InvalidInput("partition parts must be positive");
  return IntegerPartition(std::move(parts));
}

IntegerPartition ones(int n) { return IntegerPartition(std::vector<int>(n, 1)); }

// ---------------------------------------------------------------------------

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)), owner_(n, -1) {
  for (size_t b = 0; b < blocks_.size(); ++b) {
    auto& bl = blocks_[b];
    if (bl.empty()) throw InvalidInput("empty block");
    std::sort(bl.begin(), bl.end());
    for (int x : bl) {
      if (x < 1 || x > n || owner_[x - 1] != -1)
        throw InvalidInput("set partition blocks must cover 1..n disjointly");
      owner_[x - 1] = static_cast<int>(b);
    }
  }
  for (int o : owner_)
    if (o < 0) throw InvalidInput("set partition blocks must cover 1..n");
}

IntegerPartition SetPartition::type() const {
  std::vector<int> s;
  for (const auto& b : blocks_) s.push_back(static_cast<int>(b.size()));
  return IntegerPartition(std::move(s));
}

SetPartition SetPartition::canonical() const {
  auto b = blocks_;
  std::sort(b.begin(), b.end(), [](const auto& x, const auto& y) { return x[0] < y[0]; });
  return SetPartition(n_, std::move(b));
}

std::string SetPartition::str() const {
  std::string s;
  for (size_t b = 0; b < blocks_.size(); ++b) {
    if (b) s += ',';
    s += '{';
    for (size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i) s += ',';
      s += std::to_string(blocks_[b][i]);
    }
    s += '}';
  }
  return s;
}

SetPartition parse_set_partition(std::string_view text, int n) {
  std::vector<std::vector<int>> blocks;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '{') {
      size_t j = text.find('}', i);
      if (j == std::string_view::npos) throw InvalidInput("unbalanced '{'");
      blocks.push_back(parse_ints(text.substr(i + 1, j - i - 1)));
      i = j + 1;
    } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else {
      throw InvalidInput("set partitions look like {1,2},{3}");
    }
  }
  return SetPartition(n, std::move(blocks));
}

// ---------------------------------------------------------------------------

Permutation PartitionedCactus::alpha3() const {
  const int n = alpha1.size();
  return compose(alpha2.inverse(), compose(alpha1.inverse(), long_cycle(n)));
}

std::vector<std::string> PartitionedCactus::violations() const {
  std::vector<std::string> v;
  const int n = alpha1.size();
  if (n < 1) {
    v.push_back("empty ground set");
    return v;
  }
  if (alpha2.size() != n || pi1.n() != n || pi2.n() != n || pi3.n() != n) {
    v.push_back("ground set sizes differ");
    return v;
  }
  if (!blocks_stable(pi1, alpha1)) v.push_back("pi1 is not a union of alpha1 cycles");
  if (!blocks_stable(pi2, alpha2)) v.push_back("pi2 is not a union of alpha2 cycles");
  if (!blocks_stable(pi3, alpha3())) v.push_back("pi3 is not a union of alpha3 cycles");
  if (pi1.block_of(1) != pi1.size() - 1) v.push_back("1 must lie in the last block of pi1");
  return v;
}

PartitionedCactus canonical_indexing(const PartitionedCactus& pc) {
  auto by_max = [](std::vector<std::vector<int>> b) {
    std::sort(b.begin(), b.end(), [](const auto& x, const auto& y) { return x.back() < y.back(); });
    return b;
  };
  const int n = pc.n();
  auto b1 = by_max(pc.pi1.blocks());
  auto root = std::find_if(b1.begin(), b1.end(), [](const auto& b) { return b.front() == 1; });
  std::rotate(root, root + 1, b1.end());
  return PartitionedCactus{SetPartition(n, std::move(b1)), SetPartition(n, by_max(pc.pi2.blocks())),
                           SetPartition(n, by_max(pc.pi3.blocks())), pc.alpha1, pc.alpha2};
}

IntegerPartition cycle_type(const Permutation& p) {
  const int n = p.size();
  std::vector<char> seen(n + 1, 0);
  std::vector<int> lens;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p(j)) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  return IntegerPartition(std::move(lens));
}

SetPartition cycles(const Permutation& p) {
  const int n = p.size();
  std::vector<char> seen(n + 1, 0);
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit;
    for (int j = i; !seen[j]; j = p(j)) {
      seen[j] = 1;
      orbit.push_back(j);
    }
    blocks.push_back(std::move(orbit));
  }
  return SetPartition(n, std::move(blocks));
}

bool blocks_stable(const SetPartition& pi, const Permutation& p) {
  if (pi.n() != p.size()) throw InvalidInput("blocks_stable: size mismatch");
  for (int i = 1; i <= p.size(); ++i)
    if (pi.block_of(i) != pi.block_of(p(i))) return false;
  return true;
}

// ---------------------------------------------------------------------------

std::vector<IntegerPartition> enumerate_partitions(int n) {
  if (n < 0) throw InvalidInput("enumerate_partitions: negative n");
  std::vector<IntegerPartition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(rest, cap); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

void for_each_set_partition_of_type(int n, const IntegerPartition& t,
                                    const std::function<void(const SetPartition&)>& fn) {
  if (t.weight() != n) throw InvalidInput("type is not a partition of n");
  // Blocks are opened in order of their minimum: the smallest unused element
  // always starts the next block. Sizes are drawn from the remaining
  // multiset, taking each distinct size once per step.
  std::vector<int> mult = t.multiplicities();
  std::vector<char> used(n + 1, 0);
  std::vector<std::vector<int>> blocks;
  std::vector<int> cur;

  std::function<void()> open_block;
  std::function<void(int, int)> fill = [&](int need, int from) {
    if (need == 0) {
      blocks.push_back(cur);
      open_block();
      blocks.pop_back();
      return;
    }
    for (int x = from; x <= n; ++x) {
      if (used[x]) continue;
      used[x] = 1;
      cur.push_back(x);
      fill(need - 1, x + 1);
      cur.pop_back();
      used[x] = 0;
    }
  };
  open_block = [&]() {
    int first = 1;
    while (first <= n && used[first]) ++first;
    if (first > n) {
      fn(SetPartition(n, blocks));
      return;
    }
    auto saved = cur;
    for (int s = n; s >= 1; --s) {
      if (s >= static_cast<int>(mult.size()) || mult[s] == 0) continue;
      --mult[s];
      used[first] = 1;
      cur.assign(1, first);
      fill(s - 1, first + 1);
      used[first] = 0;
      ++mult[s];
    }
    cur = saved;
  };
  open_block();
}

std::vector<SetPartition> enumerate_set_partitions_of_type(int n, const IntegerPartition& t) {
  std::vector<SetPartition> out;
  for_each_set_partition_of_type(n, t, [&](const SetPartition& sp) { out.push_back(sp); });
  return out;
}

std::vector<std::vector<int8_t>> all_set_partitions(int n) {
  std::vector<std::vector<int8_t>> out;
  std::vector<int8_t> rg(n, 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      out.push_back(rg);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rg[i] = static_cast<int8_t>(b);
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  rec(0, 0);
  return out;
}

BigInt coarsening_count(const IntegerPartition& lam, const IntegerPartition& mu) {
  if (lam.weight() != mu.weight()) throw InvalidInput("coarsening_count: different weights");
  const auto& parts = lam.parts();
  const int max_part = mu.parts().empty() ? 0 : mu.parts().front();
  std::vector<int> sums;
  BigInt count = 0;
  // Positions go one by one into an existing group or a new one, so each
  // unordered grouping is produced once.
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == parts.size()) {
      std::vector<int> s = sums;
      std::sort(s.begin(), s.end(), std::greater<>());
      if (s == mu.parts()) ++count;
      return;
    }
    for (size_t g = 0; g < sums.size(); ++g) {
      if (sums[g] + parts[i] > max_part) continue;
      sums[g] += parts[i];
      rec(i + 1);
      sums[g] -= parts[i];
    }
    if (static_cast<int>(sums.size()) < mu.length()) {
      sums.push_back(parts[i]);
      rec(i + 1);
      sums.pop_back();
    }
  };
  rec(0);
  return count;
}

std::optional<int> genus(const std::vector<IntegerPartition>& types, int n) {
  const int r = static_cast<int>(types.size());
  int total = 0;
  for (const auto& t : types) {
    if (t.weight() != n) throw InvalidInput("genus: type is not a partition of n");
    total += t.length();
  }
  int twice = (r - 1) * n + 1 - total;
  if (twice < 0 || twice % 2) return std::nullopt;
  return twice / 2;
}

// ---------------------------------------------------------------------------

Permutation parse_permutation(std::string_view text, int n) {
  size_t start = text.find_first_not_of(" \t");
  if (start == std::string_view::npos) {
    if (n > 0) return Permutation::identity(n);
    throw InvalidInput("empty permutation");
  }
  text = text.substr(start);
  if (text.front() == '[') {
    if (text.back() != ']') throw InvalidInput("one-line form must end with ']'");
    std::vector<int> img = parse_ints(text.substr(1, text.size() - 2));
    if (n > 0 && static_cast<int>(img.size()) != n) throw InvalidInput("one-line form has wrong length");
    return Permutation(std::move(img));
  }
  if (std::isdigit(static_cast<unsigned char>(text.front()))) {
    // "2,3,1" or, for n <= 9, the digit string "231".
    std::vector<int> img;
    if (text.find_first_of(", \t") != std::string_view::npos) {
      img = parse_ints(text);
    } else {
      for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
          throw InvalidInput("one-line digit strings use the digits 1-9");
        img.push_back(c - '0');
      }
    }
    if (n > 0 && static_cast<int>(img.size()) != n) throw InvalidInput("one-line form has wrong length");
    return Permutation(std::move(img));
  }
  std::vector<std::vector<int>> cyc;
  size_t i = 0;
  int max_el = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '(') {
      size_t j = text.find(')', i);
      if (j == std::string_view::npos) throw InvalidInput("unbalanced '('");
      auto c1 = parse_ints(text.substr(i + 1, j - i - 1));
      for (int x : c1) max_el = std::max(max_el, x);
      cyc.push_back(std::move(c1));
      i = j + 1;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else {
      throw InvalidInput("permutations look like (1 2 3)(4) or [2,3,1,4]");
    }
  }
  if (n == 0) n = max_el;
  if (max_el > n) throw InvalidInput("cycle element exceeds n");
  std::vector<int> img(n, 0);
  for (const auto& c : cyc)
    for (size_t k = 0; k < c.size(); ++k) {
      int a = c[k], b = c[(k + 1) % c.size()];
      if (a < 1 || img[a - 1] != 0) throw InvalidInput("cycles must be disjoint");
      img[a - 1] = b;
    }
  for (int x = 1; x <= n; ++x)
    if (img[x - 1] == 0) img[x - 1] = x;
  return Permutation(std::move(img));
}

std::string to_cycle_string(const Permutation& p) {
  std::string s;
  const SetPartition cyc = cycles(p);
  for (const auto& b : cyc.blocks()) {
    // cycles() lists an orbit starting from its minimum.
    s += '(';
    int x = b.front();
    for (size_t k = 0; k < b.size(); ++k) {
      if (k) s += ' ';
      s += std::to_string(x);
      x = p(x);
    }
    s += ')';
  }
  return s;
}

std::string to_one_line(const Permutation& p) {
  std::string s = "[";
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) s += ',';
    s += std::to_string(p(i));
  }
  return s + "]";
}

}  // namespace cacti
