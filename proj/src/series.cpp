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

// Truncated fixed point of
//   W = x1 sum_i t_{i+1} (1 + B + B G x5)^i
//   B = x2 sum_i u_{i+1} (1 + G + G W x6)^i
//   G = x3 sum_i v_{i+1} (1 + W + W B x4)^i
// with F = W + W B + W B G x5.
//
// Key layout (low to high): t shape, u shape, v shape (12 bits each), then
// x4, x5, x6 exponents (8 bits each). Shapes index all partitions of weight
// <= N. Arithmetic is int64 with overflow checks; the public state is
// converted to BigInt at the end.

#include <algorithm>
#include <map>

#include "cacti/formulas.hpp"

namespace cacti {
namespace {

constexpr int kMaxOrder = 15;

using Key = uint64_t;
using Coef = int64_t;
using IPoly = std::unordered_map<Key, Coef>;

constexpr int kShapeBits = 12;
constexpr Key kShapeMask = (Key(1) << kShapeBits) - 1;

struct Ring {
  int n = 0;
  std::vector<IntegerPartition> shapes;
  std::vector<int> weight;
  std::map<IntegerPartition, int> index;
  std::vector<int> add;  // add[i * S + j], -1 when too heavy

  int shape_count() const { return static_cast<int>(shapes.size()); }

  static Key pack(int t, int u, int v, int e4, int e5, int e6) {
    return Key(t) | Key(u) << 12 | Key(v) << 24 | Key(e4) << 36 | Key(e5) << 44 | Key(e6) << 52;
  }
  static int t_of(Key k) { return static_cast<int>(k & kShapeMask); }
  static int u_of(Key k) { return static_cast<int>(k >> 12 & kShapeMask); }
  static int v_of(Key k) { return static_cast<int>(k >> 24 & kShapeMask); }
  static int e_of(Key k, int which) { return static_cast<int>(k >> (36 + 8 * which) & 0xff); }

  explicit Ring(int order) : n(order) {
    for (int w = 0; w <= n; ++w)
      for (auto& p : w == 0 ? std::vector<IntegerPartition>{IntegerPartition()} : enumerate_partitions(w)) {
        index[p] = static_cast<int>(shapes.size());
        weight.push_back(w);
        shapes.push_back(p);
      }
    const int s = shape_count();
    add.assign(static_cast<size_t>(s) * s, -1);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) {
        if (weight[i] + weight[j] > n) continue;
        std::vector<int> parts = shapes[i].parts();
        parts.insert(parts.end(), shapes[j].parts().begin(), shapes[j].parts().end());
        add[static_cast<size_t>(i) * s + j] = index.at(IntegerPartition(parts));
      }
  }

  // Product truncated to shape weight <= n and x4..x6 exponents <= n.
  IPoly mul(const IPoly& a, const IPoly& b) const {
    IPoly out;
    if (a.empty() || b.empty()) return out;
    // Bucket b by its weight triple so heavy pairs are never visited.
    const int w1 = n + 1;
    std::vector<std::vector<std::pair<Key, Coef>>> buckets(static_cast<size_t>(w1) * w1 * w1);
    for (const auto& [k, c] : b)
      buckets[(weight[t_of(k)] * w1 + weight[u_of(k)]) * w1 + weight[v_of(k)]].emplace_back(k, c);
    const int s = shape_count();
    for (const auto& [ka, ca] : a) {
      const int at = weight[t_of(ka)], au = weight[u_of(ka)], av = weight[v_of(ka)];
      for (int bt = 0; bt + at <= n; ++bt)
        for (int bu = 0; bu + au <= n; ++bu)
          for (int bv = 0; bv + av <= n; ++bv)
            for (const auto& [kb, cb] : buckets[(bt * w1 + bu) * w1 + bv]) {
              int e[3];
              bool ok = true;
              for (int q = 0; q < 3 && ok; ++q) {
                e[q] = e_of(ka, q) + e_of(kb, q);
                ok = e[q] <= n;
              }
              if (!ok) continue;
              const Key k = pack(add[static_cast<size_t>(t_of(ka)) * s + t_of(kb)],
                                 add[static_cast<size_t>(u_of(ka)) * s + u_of(kb)],
                                 add[static_cast<size_t>(v_of(ka)) * s + v_of(kb)], e[0], e[1], e[2]);
              Coef prod;
              if (__builtin_mul_overflow(ca, cb, &prod) || __builtin_add_overflow(out[k], prod, &out[k]))
                throw Refusal("series coefficient overflow; lower the truncation order");
            }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  }

  static void add_into(IPoly& a, const IPoly& b) {
    for (const auto& [k, c] : b)
      if (__builtin_add_overflow(a[k], c, &a[k])) throw Refusal("series coefficient overflow");
    std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  }

  // Single vertex marker of degree d in family f (0 t, 1 u, 2 v).
  Key marker(int family, int d) const {
    const int s = index.at(IntegerPartition({d}));
    return pack(family == 0 ? s : 0, family == 1 ? s : 0, family == 2 ? s : 0, 0, 0, 0);
  }

  // sum_{i=0}^{n-1} m_{i+1} X^i by Horner.
  IPoly horner(int family, const IPoly& x) const {
    IPoly p{{marker(family, n), 1}};
    for (int d = n - 1; d >= 1; --d) {
      p = mul(x, p);
      add_into(p, IPoly{{marker(family, d), 1}});
    }
    return p;
  }

  static IPoly times_x(const IPoly& a, int which) {
    IPoly out;
    const int n_cap = 0xff;
    for (const auto& [k, c] : a) {
      if (e_of(k, which) + 1 > n_cap) continue;
      out[k + (Key(1) << (36 + 8 * which))] = c;
    }
    return out;
  }

  IPoly truncate_e(IPoly a) const {
    std::erase_if(a, [&](const auto& kv) {
      for (int q = 0; q < 3; ++q)
        if (e_of(kv.first, q) > n) return true;
      return false;
    });
    return a;
  }

  // 1 + P + P Q x_e
  IPoly step_base(const IPoly& p, const IPoly& q, int e) const {
    IPoly x{{pack(0, 0, 0, 0, 0, 0), 1}};
    add_into(x, p);
    add_into(x, truncate_e(times_x(mul(p, q), e)));
    return x;
  }
};

SeriesState::Poly to_big(const IPoly& p) {
  SeriesState::Poly out;
  for (const auto& [k, c] : p) out.emplace(k, BigInt(c));
  return out;
}

}  // namespace

SeriesState series_fixed_point(int N) {
  if (N < 1 || N > kMaxOrder) throw InvalidInput("series order must lie in 1..15");
  const Ring ring(N);
  IPoly w, b, g;
  int iterations = 0;
  for (;;) {
    ++iterations;
    IPoly nw = ring.horner(0, ring.step_base(b, g, 1));
    IPoly nb = ring.horner(1, ring.step_base(g, w, 2));
    IPoly ng = ring.horner(2, ring.step_base(w, b, 0));
    const bool done = nw == w && nb == b && ng == g;
    w = std::move(nw);
    b = std::move(nb);
    g = std::move(ng);
    if (done) break;
    if (iterations > 3 * N + 5) throw InternalInconsistency("series iteration did not stabilise");
  }
  IPoly wb = ring.mul(w, b);
  IPoly f = w;
  Ring::add_into(f, wb);
  Ring::add_into(f, ring.truncate_e(Ring::times_x(ring.mul(wb, g), 1)));

  SeriesState st;
  st.order_ = N;
  st.iterations_ = iterations;
  st.shapes_ = ring.shapes;
  st.w_ = to_big(w);
  st.b_ = to_big(b);
  st.g_ = to_big(g);
  st.f_ = to_big(f);
  return st;
}

BigInt SeriesState::coefficient(const CactusKey& key) const {
  auto find = [&](const IntegerPartition& p) -> int {
    auto it = std::find(shapes_.begin(), shapes_.end(), p);
    return it == shapes_.end() ? -1 : static_cast<int>(it - shapes_.begin());
  };
  const int t = find(key.lam), u = find(key.mu), v = find(key.nu);
  if (t < 0 || u < 0 || v < 0) return 0;
  if (key.g < 0 || key.w < 0 || key.b < 0 || key.g > order_ || key.w > order_ || key.b > order_) return 0;
  auto it = f_.find(Ring::pack(t, u, v, key.g, key.w, key.b));
  return it == f_.end() ? BigInt(0) : it->second;
}

std::vector<std::pair<CactusKey, BigInt>> SeriesState::terms() const {
  std::vector<std::pair<CactusKey, BigInt>> out;
  for (const auto& [k, c] : f_)
    out.push_back({CactusKey{shapes_[Ring::t_of(k)], shapes_[Ring::u_of(k)], shapes_[Ring::v_of(k)],
                             Ring::e_of(k, 0), Ring::e_of(k, 1), Ring::e_of(k, 2)},
                   c});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace cacti
