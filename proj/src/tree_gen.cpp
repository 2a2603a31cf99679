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

// Exhaustive generation of thorn cactus trees and two-colored thorn trees.
//
// Vertices are expanded in preorder from a stack. Expanding a vertex picks
// its whole slot word at once; the children it creates are pushed so that
// the leftmost is expanded next. Every tree arises from exactly one sequence
// of choices. Degree sums only grow, so a sum above n prunes the branch.

#include "cacti/tree.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace cacti {
namespace {

constexpr int kMaxN = 15;

struct Target {
  std::array<std::array<int, kMaxN + 2>, 3> mult{};  // remaining degree multiplicities
  std::array<int, 3> max_degree{};
  std::array<int, 3> tri{};  // triangles indexed by the color of their root
};

class Generator {
 public:
  using Callback = std::function<void(const Tree&, const Generator&)>;

  Generator(int n, bool tricolored, const Target* target, Callback fn)
      : n_(n), colors_(tricolored ? 3 : 2), target_(target), fn_(std::move(fn)) {
    if (n < 1 || n > kMaxN) throw InvalidInput("tree generation needs 1 <= n <= 15");
    if (target_) rem_ = *target_;
  }

  void run() {
    tree_ = Tree();
    tree_.add_node(Color::kWhite);
    middle_.assign(1, 0);
    stack_.assign(1, 0);
    step();
  }

  // Degree multiplicities and triangle counts of the current tree.
  const std::array<std::array<int, kMaxN + 2>, 3>& degree_mult() const { return used_; }
  const std::array<int, 3>& triangles() const { return tri_; }

 private:
  Color child_color(Color c) const {
    if (colors_ == 3) return next_color(c);
    return c == Color::kWhite ? Color::kBlack : Color::kWhite;
  }

  void step() {
    if (stack_.empty()) {
      for (int c = 0; c < colors_; ++c)
        if (sum_[c] != n_) return;
      if (target_)
        for (int c = 0; c < 3; ++c)
          if (tri_[c] != target_->tri[c]) return;
      fn_(tree_, *this);
      return;
    }
    const int v = stack_.back();
    stack_.pop_back();
    extend(v);
    stack_.push_back(v);
  }

  // Degree of v if its word stopped now.
  int degree_now(int v) const {
    const int len = static_cast<int>(tree_.node(v).slots.size());
    if (v == 0 || middle_[v]) return len;
    return len + 1;
  }

  void extend(int v) {
    const Color col = tree_.node(v).color;
    const int ci = idx(col);
    // No references into tree_ are held across calls: add_node may
    // reallocate.
    const int len = static_cast<int>(tree_.node(v).slots.size());
    const SlotKind last = len ? tree_.node(v).slots.back().kind : SlotKind::kThorn;
    const int deg = degree_now(v);

    bool can_stop = true;
    if ((v == 0 || middle_[v]) && len == 0) can_stop = false;
    if (middle_[v] && len > 0 && last != SlotKind::kChild) can_stop = false;
    if (can_stop && target_ && (deg > kMaxN || rem_.mult[ci][deg] == 0)) can_stop = false;
    if (can_stop) {
      if (target_) --rem_.mult[ci][deg];
      ++used_[ci][deg];
      const size_t mark = stack_.size();
      for (int k = len - 1; k >= 0; --k) {
        const Slot s = tree_.node(v).slots[k];
        if (s.kind != SlotKind::kThorn) stack_.push_back(s.node);
      }
      step();
      stack_.resize(mark);
      --used_[ci][deg];
      if (target_) ++rem_.mult[ci][deg];
    }

    // Adding a slot raises v's degree by one, except the first slot of a
    // middle vertex (already counted as 1 when it was created).
    const int bump = (middle_[v] && len == 0) ? 0 : 1;
    if (sum_[ci] + bump > n_) return;
    if (target_ && deg + bump > target_->max_degree[ci]) return;
    sum_[ci] += bump;

    // thorn
    tree_.node(v).slots.push_back(Slot{SlotKind::kThorn, -1});
    extend(v);
    tree_.node(v).slots.pop_back();

    const Color cc = child_color(col);
    const int cci = idx(cc);
    if (sum_[cci] + 1 <= n_) {
      for (int kind = 1; kind <= (colors_ == 3 ? 2 : 1); ++kind) {
        if (kind == 2 && target_ && tri_[ci] + 1 > target_->tri[ci]) continue;
        const int u = tree_.add_node(cc);
        middle_.push_back(kind == 2);
        sum_[cci] += 1;
        tri_[ci] += kind == 2;
        tree_.node(v).slots.push_back(Slot{kind == 1 ? SlotKind::kChild : SlotKind::kTriChild, u});
        extend(v);
        tree_.node(v).slots.pop_back();
        tri_[ci] -= kind == 2;
        sum_[cci] -= 1;
        middle_.pop_back();
        tree_.pop_node();
      }
    }
    sum_[ci] -= bump;
  }

  int n_;
  int colors_;
  const Target* target_;
  Callback fn_;
  Target rem_{};
  Tree tree_;
  std::vector<char> middle_;
  std::vector<int> stack_;
  std::array<int, 3> sum_{};
  std::array<int, 3> tri_{};
  std::array<std::array<int, kMaxN + 2>, 3> used_{};
};

IntegerPartition from_mult(const std::array<int, kMaxN + 2>& m) {
  std::vector<int> parts;
  for (int d = 1; d <= kMaxN + 1; ++d)
    for (int k = 0; k < m[d]; ++k) parts.push_back(d);
  return IntegerPartition(std::move(parts));
}

uint64_t pack(const std::array<int, kMaxN + 2>& m) {
  uint64_t c = 0;
  for (int d = 1; d <= kMaxN; ++d) c |= uint64_t(m[d]) << (4 * (d - 1));
  return c;
}

void fill_target(Target& t, int c, const IntegerPartition& p) {
  for (int part : p.parts()) {
    if (part > kMaxN) throw InvalidInput("degree too large for generation");
    ++t.mult[c][part];
    t.max_degree[c] = std::max(t.max_degree[c], part);
  }
}

}  // namespace

void for_each_thorn_cactus_tree(int n, const std::function<void(const Tree&)>& fn) {
  Generator g(n, true, nullptr, [&](const Tree& t, const Generator&) { fn(t); });
  g.run();
}

void for_each_thorn_cactus_tree(const CactusKey& key, const std::function<void(const Tree&)>& fn) {
  const int n = key.lam.weight();
  if (key.mu.weight() != n || key.nu.weight() != n) throw InvalidInput("types must share n");
  if (key.g < 0 || key.w < 0 || key.b < 0) return;
  const int p1 = key.lam.length(), p2 = key.mu.length(), p3 = key.nu.length();
  // Negative thorn budgets: no tree can exist.
  if (n + 1 - p1 - p2 + key.g < 0 || n - p2 - p3 + key.w < 0 || n + 1 - p1 - p3 + key.b < 0) return;
  Target t;
  fill_target(t, 0, key.lam);
  fill_target(t, 1, key.mu);
  fill_target(t, 2, key.nu);
  t.tri = {key.w, key.b, key.g};
  Generator g(n, true, &t, [&](const Tree& tr, const Generator&) { fn(tr); });
  g.run();
}

std::vector<Tree> enumerate_thorn_cactus_trees(const IntegerPartition& lam, const IntegerPartition& mu,
                                               const IntegerPartition& nu, int g, int w, int b) {
  std::vector<Tree> out;
  for_each_thorn_cactus_tree(CactusKey{lam, mu, nu, g, w, b},
                             [&](const Tree& t) { out.push_back(t.canonical()); });
  return out;
}

std::map<CactusKey, int64_t> thorn_cactus_census(int n) {
  struct K {
    uint64_t a, b, c;
    int tri;
    bool operator==(const K&) const = default;
  };
  struct H {
    size_t operator()(const K& k) const {
      return std::hash<uint64_t>()(k.a * 1000003u ^ k.b * 7919u ^ k.c * 31u ^ uint64_t(k.tri));
    }
  };
  std::unordered_map<K, int64_t, H> counts;
  std::unordered_map<K, CactusKey, H> keys;
  Generator gen(n, true, nullptr, [&](const Tree&, const Generator& g) {
    const auto& m = g.degree_mult();
    const auto& tr = g.triangles();
    K k{pack(m[0]), pack(m[1]), pack(m[2]), tr[0] | tr[1] << 8 | tr[2] << 16};
    auto [it, fresh] = counts.try_emplace(k, 0);
    ++it->second;
    if (fresh) keys.emplace(k, CactusKey{from_mult(m[0]), from_mult(m[1]), from_mult(m[2]), tr[2], tr[0], tr[1]});
  });
  gen.run();
  std::map<CactusKey, int64_t> out;
  for (const auto& [k, c] : counts) out[keys.at(k)] = c;
  return out;
}

void for_each_bicolored_thorn_tree(int n, const std::function<void(const Tree&)>& fn) {
  Generator g(n, false, nullptr, [&](const Tree& t, const Generator&) { fn(t); });
  g.run();
}

std::vector<Tree> enumerate_bicolored_thorn_trees(const IntegerPartition& lam, const IntegerPartition& mu) {
  const int n = lam.weight();
  if (mu.weight() != n) throw InvalidInput("types must share n");
  std::vector<Tree> out;
  if (lam.length() + mu.length() > n + 1) return out;
  Target t;
  fill_target(t, 0, lam);
  fill_target(t, 1, mu);
  Generator g(n, false, &t, [&](const Tree& tr, const Generator&) { out.push_back(tr.canonical()); });
  g.run();
  return out;
}

std::map<std::pair<IntegerPartition, IntegerPartition>, int64_t> bicolored_census(int n) {
  std::map<std::pair<uint64_t, uint64_t>, int64_t> counts;
  std::map<std::pair<uint64_t, uint64_t>, std::pair<IntegerPartition, IntegerPartition>> keys;
  Generator gen(n, false, nullptr, [&](const Tree&, const Generator& g) {
    const auto& m = g.degree_mult();
    std::pair<uint64_t, uint64_t> k{pack(m[0]), pack(m[1])};
    if (counts[k]++ == 0) keys.emplace(k, std::make_pair(from_mult(m[0]), from_mult(m[1])));
  });
  gen.run();
  std::map<std::pair<IntegerPartition, IntegerPartition>, int64_t> out;
  for (const auto& [k, c] : counts) out[keys.at(k)] = c;
  return out;
}

}  // namespace cacti
