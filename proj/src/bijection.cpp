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

#include "cacti/bijection.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace cacti {
namespace {

// Everything below works 0-based on elements; labels are 1-based.
struct Ctx {
  int n = 0;
  std::vector<int> a3, ia3, ia2, a2a3;
  std::vector<std::vector<int>> wb, bb, gb, bp;  // blocks; bp = alpha3^-1 of bb
  std::vector<int> wof, bof, gof;                // element -> block
  int root = 0;
  std::vector<int> m1, m2, m3;  // m2 is the max of bp

  explicit Ctx(const PartitionedCactus& pc) : n(pc.n()) {
    auto zero = [&](const Permutation& p) {
      std::vector<int> v(n);
      for (int i = 0; i < n; ++i) v[i] = p.images()[i] - 1;
      return v;
    };
    const auto alpha3 = pc.alpha3();
    a3 = zero(alpha3);
    ia3 = zero(alpha3.inverse());
    ia2 = zero(pc.alpha2.inverse());
    const auto a2 = zero(pc.alpha2);
    a2a3.resize(n);
    for (int i = 0; i < n; ++i) a2a3[i] = a2[a3[i]];
    auto blocks = [&](const SetPartition& sp, std::vector<std::vector<int>>& out, std::vector<int>& owner,
                      std::vector<int>& mx) {
      owner.assign(n, -1);
      for (int k = 0; k < sp.size(); ++k) {
        std::vector<int> b;
        for (int x : sp.block(k)) {
          b.push_back(x - 1);
          owner[x - 1] = k;
        }
        mx.push_back(*std::max_element(b.begin(), b.end()));
        out.push_back(std::move(b));
      }
    };
    std::vector<int> bmax;  // maxima of the pi2 blocks themselves, unused
    blocks(pc.pi1, wb, wof, m1);
    blocks(pc.pi2, bb, bof, bmax);
    blocks(pc.pi3, gb, gof, m3);
    for (const auto& b : bb) {
      std::vector<int> s;
      for (int x : b) s.push_back(ia3[x]);
      std::sort(s.begin(), s.end());
      m2.push_back(s.back());
      bp.push_back(std::move(s));
    }
    root = wof[0];
  }
  int p1() const { return static_cast<int>(wb.size()); }
  int p2() const { return static_cast<int>(bb.size()); }
  int p3() const { return static_cast<int>(gb.size()); }
};

// Vertices of `c` in RLT order.
std::vector<int> rlt_vertices(const Tree& t, Color c) {
  std::vector<int> out;
  for (const auto& v : rlt(t, c))
    if (!v.thorn && t.node(v.node).color == c) out.push_back(v.node);
  return out;
}

// Label read by the RLT of color `c` at vertex v.
int& label_ref(LabeledTree& lt, int v, Color c) {
  const Color vc = lt.tree.node(v).color;
  if (c == Color::kWhite) return lt.labels[v][0];           // circles
  if (c == Color::kBlack) return lt.labels[v][vc == Color::kBlack ? 1 : 0];  // squares
  return lt.labels[v][1];                                   // rhombi
}
int label_of(const LabeledTree& lt, int v, Color c) { return label_ref(const_cast<LabeledTree&>(lt), v, c); }

// Labels of the vertex visits of the RLT of `c`, last visit excluded.
std::vector<int> d_sequence(const LabeledTree& lt, Color c, std::vector<int>* seq_out = nullptr) {
  std::vector<int> seq;
  for (const auto& v : rlt(lt.tree, c))
    if (!v.thorn) seq.push_back(v.node);
  std::vector<int> d;
  for (size_t i = 0; i + 1 < seq.size(); ++i) d.push_back(label_of(lt, seq[i], c));
  if (seq_out) *seq_out = std::move(seq);
  return d;
}

Permutation two_line(const std::vector<const std::vector<int>*>& blocks, int n) {
  std::vector<int> img(n, 0);
  int pos = 0;
  for (const auto* b : blocks) {
    std::vector<int> s = *b;
    std::sort(s.begin(), s.end());
    for (int x : s) img[x] = ++pos;
  }
  return Permutation(std::move(img));
}

std::vector<int> standardise(const std::vector<std::pair<int, int>>& m) {
  std::vector<int> cod;
  for (const auto& [x, y] : m) cod.push_back(y);
  std::sort(cod.begin(), cod.end());
  std::vector<int> out;
  for (const auto& [x, y] : m)
    out.push_back(static_cast<int>(std::lower_bound(cod.begin(), cod.end(), y) - cod.begin()) + 1);
  return out;
}

void check_pc(const PartitionedCactus& pc) {
  auto v = pc.violations();
  if (!v.empty()) throw InvalidInput("invalid partitioned cactus: " + v.front());
}

std::vector<int> set_difference_of(int lo, int hi, const std::set<int>& drop) {
  std::vector<int> out;
  for (int x = lo; x <= hi; ++x)
    if (!drop.count(x)) out.push_back(x);
  return out;
}

}  // namespace

std::string LabeledTree::key() const {
  std::string s;
  if (tree.size() == 0) return s;
  static const char kColor[] = {'w', 'b', 'g'};
  std::function<void(int)> rec = [&](int v) {
    s += kColor[idx(tree.node(v).color)];
    if (v < static_cast<int>(labels.size()))
      s += "(" + std::to_string(labels[v][0]) + "," + std::to_string(labels[v][1]) + ")";
    s += '[';
    bool first = true;
    for (const auto& sl : tree.node(v).slots) {
      if (!first) s += ',';
      first = false;
      if (sl.kind == SlotKind::kThorn) {
        s += 't';
      } else {
        s += sl.kind == SlotKind::kChild ? 'c' : 'x';
        rec(sl.node);
      }
    }
    s += ']';
  };
  rec(0);
  return s;
}

LabeledTree build_T(const PartitionedCactus& pc) {
  check_pc(pc);
  const Ctx c(pc);
  LabeledTree lt;
  std::vector<int> wn(c.p1()), bn(c.p2()), gn(c.p3());
  wn[c.root] = lt.tree.add_node(Color::kWhite);
  lt.block.push_back(c.root);
  for (int i = 0; i < c.p1(); ++i)
    if (i != c.root) {
      wn[i] = lt.tree.add_node(Color::kWhite);
      lt.block.push_back(i);
    }
  for (int j = 0; j < c.p2(); ++j) {
    bn[j] = lt.tree.add_node(Color::kBlack);
    lt.block.push_back(j);
  }
  for (int k = 0; k < c.p3(); ++k) {
    gn[k] = lt.tree.add_node(Color::kGrey);
    lt.block.push_back(k);
  }
  // Children of each vertex with their sort keys.
  auto attach = [&](int parent, std::vector<std::pair<int, int>> kids) {
    std::sort(kids.begin(), kids.end());
    for (const auto& [key, node] : kids) lt.tree.node(parent).slots.push_back(Slot{SlotKind::kChild, node});
  };
  for (int i = 0; i < c.p1(); ++i) {
    std::vector<std::pair<int, int>> kids;
    for (int j = 0; j < c.p2(); ++j)
      if (c.wof[c.a2a3[c.m2[j]]] == i) kids.emplace_back(c.a2a3[c.m2[j]], bn[j]);
    attach(wn[i], std::move(kids));
  }
  for (int j = 0; j < c.p2(); ++j) {
    std::vector<std::pair<int, int>> kids;
    for (int k = 0; k < c.p3(); ++k)
      if (c.bof[c.a3[c.m3[k]]] == j) kids.emplace_back(c.ia3[c.ia2[c.a3[c.m3[k]]]], gn[k]);
    attach(bn[j], std::move(kids));
  }
  for (int k = 0; k < c.p3(); ++k) {
    std::vector<std::pair<int, int>> kids;
    for (int i = 0; i < c.p1(); ++i)
      if (i != c.root && c.gof[c.m1[i]] == k) kids.emplace_back(c.ia3[c.m1[i]], wn[i]);
    attach(gn[k], std::move(kids));
  }
  // Must be a tree spanning every block.
  std::vector<int> hits(lt.tree.size(), 0);
  for (const auto& nd : lt.tree.nodes())
    for (const auto& s : nd.slots) ++hits[s.node];
  for (int v = 1; v < lt.tree.size(); ++v)
    if (hits[v] != 1) throw InternalInconsistency("build_T: a block does not have exactly one parent");
  std::vector<char> seen(lt.tree.size(), 0);
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (seen[v]) throw InternalInconsistency("build_T: cycle");
    seen[v] = 1;
    for (const auto& s : lt.tree.node(v).slots) stack.push_back(s.node);
  }
  if (std::count(seen.begin(), seen.end(), 1) != lt.tree.size())
    throw InternalInconsistency("build_T: not connected");
  lt.rank.assign(lt.tree.size(), 0);
  lt.labels.assign(lt.tree.size(), {0, 0});
  return lt;
}

LabeledTree add_triangles(const LabeledTree& t, const PartitionedCactus& pc) {
  check_pc(pc);
  const Ctx c(pc);
  LabeledTree u = t;
  u.g = u.w = u.b = 0;
  const auto parent = u.tree.parents();
  std::vector<int> wn(c.p1()), bn(c.p2()), gn(c.p3());
  for (int v = 0; v < u.tree.size(); ++v) {
    const int blk = u.block[v];
    switch (u.tree.node(v).color) {
      case Color::kWhite: wn[blk] = v; break;
      case Color::kBlack: bn[blk] = v; break;
      case Color::kGrey: gn[blk] = v; break;
    }
  }
  auto make = [&](int mid, int third) {
    const auto& ms = u.tree.node(mid).slots;
    if (ms.empty() || ms.back().kind != SlotKind::kChild || ms.back().node != third)
      throw InternalInconsistency("add_triangles: third vertex is not the rightmost child of the middle");
    const int par = parent[mid];
    if (par < 0) throw InternalInconsistency("add_triangles: the root cannot be a middle vertex");
    for (auto& s : u.tree.node(par).slots)
      if (s.node == mid) {
        if (s.kind != SlotKind::kChild) throw InternalInconsistency("add_triangles: vertex is already a middle");
        s.kind = SlotKind::kTriChild;
        return;
      }
    throw InternalInconsistency("add_triangles: parent slot not found");
  };
  for (int i = 0; i < c.p1(); ++i) {
    if (i == c.root) continue;
    for (int j = 0; j < c.p2(); ++j)
      if (c.a2a3[c.m2[j]] == c.m1[i]) {
        make(wn[i], bn[j]);
        ++u.g;
      }
  }
  for (int j = 0; j < c.p2(); ++j)
    for (int k = 0; k < c.p3(); ++k)
      if (c.a3[c.m3[k]] == c.a2a3[c.m2[j]]) {
        make(bn[j], gn[k]);
        ++u.w;
      }
  for (int k = 0; k < c.p3(); ++k)
    for (int i = 0; i < c.p1(); ++i) {
      if (i == c.root) continue;
      if (c.m1[i] == c.a3[c.m3[k]]) {
        make(gn[k], wn[i]);
        ++u.b;
      }
    }
  return u;
}

Relabeled relabel(const LabeledTree& upsilon, const PartitionedCactus& pc) {
  check_pc(pc);
  const Ctx c(pc);
  Relabeled r;
  r.tree = upsilon;
  std::vector<const std::vector<int>*> order[3];
  for (Color col : {Color::kWhite, Color::kBlack, Color::kGrey}) {
    const auto vs = rlt_vertices(upsilon.tree, col);
    for (size_t q = 0; q < vs.size(); ++q) {
      r.tree.rank[vs[q]] = static_cast<int>(q) + 1;
      const int blk = upsilon.block[vs[q]];
      order[idx(col)].push_back(col == Color::kWhite ? &c.wb[blk] : col == Color::kBlack ? &c.bp[blk] : &c.gb[blk]);
    }
  }
  if (rlt_vertices(upsilon.tree, Color::kWhite).back() != 0)
    throw InternalInconsistency("relabel: the root is not last in its traversal");
  r.theta1 = two_line(order[0], c.n);
  r.theta2 = two_line(order[1], c.n);
  r.theta3 = two_line(order[2], c.n);
  return r;
}

std::pair<LabelMultisets, LabeledTree> label_multisets(const PartitionedCactus& pc, const Relabeled& r) {
  check_pc(pc);
  const Ctx c(pc);
  LabeledTree lt = r.tree;
  const auto& t1 = r.theta1;
  const auto& t2 = r.theta2;
  const auto& t3 = r.theta3;
  LabelMultisets s;
  const int nb = c.p2(), ng = c.p3();
  for (int v = 0; v < lt.tree.size(); ++v) {
    const int blk = lt.block[v];
    switch (lt.tree.node(v).color) {
      case Color::kWhite:
        if (v == 0) {
          lt.labels[v] = {c.n, 0};
        } else {
          lt.labels[v] = {t1(c.m1[blk] + 1), t3(c.ia3[c.m1[blk]] + 1)};
          s.s1.push_back(lt.labels[v][0]);
          s.s3.push_back(lt.labels[v][1]);
        }
        break;
      case Color::kBlack:
        lt.labels[v] = {t1(c.a2a3[c.m2[blk]] + 1), t2(c.m2[blk] + 1)};
        s.s1.push_back(lt.labels[v][0]);
        if (lt.rank[v] != nb) s.s2.push_back(lt.labels[v][1]);
        break;
      case Color::kGrey:
        lt.labels[v] = {t2(c.ia3[c.ia2[c.a3[c.m3[blk]]]] + 1), t3(c.m3[blk] + 1)};
        s.s2.push_back(lt.labels[v][0]);
        if (lt.rank[v] != ng) s.s3.push_back(lt.labels[v][1]);
        break;
    }
  }
  std::sort(s.s1.begin(), s.s1.end());
  std::sort(s.s2.begin(), s.s2.end());
  std::sort(s.s3.begin(), s.s3.end());

  // Underlying-set sizes; elements equal to n do not count for S2, S3.
  auto distinct_below = [](const std::vector<int>& v, int cap) {
    std::set<int> u;
    for (int x : v)
      if (x <= cap) u.insert(x);
    return static_cast<int>(u.size());
  };
  if (c.n >= 2) {
    const int p1 = c.p1(), p2 = c.p2(), p3 = c.p3();
    if (distinct_below(s.s1, c.n) != p1 + p2 - 1 - lt.g || distinct_below(s.s2, c.n - 1) != p2 + p3 - 1 - lt.w ||
        distinct_below(s.s3, c.n - 1) != p1 + p3 - 2 - lt.b)
      throw InternalInconsistency("label_multisets: underlying set sizes disagree with the triangle counts");
  }
  // The traversals must read the multisets in increasing order.
  if (d_sequence(lt, Color::kWhite) != s.s1 || d_sequence(lt, Color::kBlack) != s.s2 ||
      d_sequence(lt, Color::kGrey) != s.s3)
    throw InternalInconsistency("label_multisets: traversal labels are not the sorted multisets");
  return {std::move(s), std::move(lt)};
}

// For each color the vertex visits of its RLT carry labels d (sorted). A
// gap of k missing labels before visit v becomes k thorns: on v itself
// (appended) when v has the traversal's color, otherwise on v's parent just
// left of v. In both cases the thorns are read right before v. Labels
// above the last one go to the last vertex.
Tree add_thorns(const LabeledTree& upsilon2, int n) {
  LabeledTree lt = upsilon2;
  const auto parent = lt.tree.parents();
  for (Color col : {Color::kWhite, Color::kBlack, Color::kGrey}) {
    const int top = col == Color::kWhite ? n : n - 1;
    std::vector<int> seq;
    const auto d = d_sequence(lt, col, &seq);
    int prev = 0;
    auto put = [&](int owner, int before, int count) {
      auto& slots = lt.tree.node(owner).slots;
      auto at = slots.end();
      if (before >= 0)
        at = std::find_if(slots.begin(), slots.end(),
                          [&](const Slot& s) { return s.kind != SlotKind::kThorn && s.node == before; });
      slots.insert(at, count, Slot{SlotKind::kThorn, -1});
    };
    for (size_t q = 0; q < d.size(); ++q) {
      if (d[q] > prev + 1) {
        const int v = seq[q];
        if (lt.tree.node(v).color == col)
          put(v, -1, d[q] - prev - 1);
        else
          put(parent[v], v, d[q] - prev - 1);
      }
      prev = std::max(prev, d[q]);
    }
    if (top > prev) put(seq.back(), -1, top - prev);
  }
  return lt.tree.canonical();
}

ChiSigmas chi_and_sigmas(const PartitionedCactus& pc, const Relabeled& r, const LabelMultisets& s) {
  check_pc(pc);
  const Ctx c(pc);
  const int n = c.n;
  const auto& lt = r.tree;
  const auto& t1 = r.theta1;
  const Permutation it1 = r.theta1.inverse();
  ChiSigmas out;

  const std::set<int> s1(s.s1.begin(), s.s1.end());
  const auto comp1 = set_difference_of(1, n, s1);

  std::vector<int> grey_order = rlt_vertices(lt.tree, Color::kGrey);
  std::set<int> grey_hits, white_hits, black_hits;
  for (int v : grey_order) {
    const int x = t1(c.a3[c.m3[lt.block[v]]] + 1);
    grey_hits.insert(x);
    if (!s1.count(x)) {
      out.chi_tilde.push_back(x);
      out.chi.push_back(static_cast<int>(std::lower_bound(comp1.begin(), comp1.end(), x) - comp1.begin()) + 1);
    }
  }
  for (int i = 0; i < c.p1(); ++i)
    if (i != c.root) white_hits.insert(t1(c.m1[i] + 1));
  for (int j = 0; j < c.p2(); ++j) black_hits.insert(t1(c.a2a3[c.m2[j]] + 1));

  std::set<int> drop_e = white_hits, drop_f = black_hits;
  drop_e.insert(grey_hits.begin(), grey_hits.end());
  drop_f.insert(grey_hits.begin(), grey_hits.end());
  out.e = set_difference_of(1, n, drop_e);
  out.f = set_difference_of(1, n, drop_f);

  std::vector<std::pair<int, int>> m1, m2;
  for (int u : out.e) m1.emplace_back(u, r.theta3(c.ia3[it1(u) - 1] + 1));
  for (int u : out.f) m2.emplace_back(u, r.theta2(c.ia3[c.ia2[it1(u) - 1]] + 1));

  // Codomains [n-1] \ S3 and [n-1] \ S2.
  auto codomain_ok = [&](const std::vector<std::pair<int, int>>& m, const std::vector<int>& sk) {
    std::set<int> got;
    for (const auto& [x, y] : m) got.insert(y);
    const auto want = set_difference_of(1, n - 1, std::set<int>(sk.begin(), sk.end()));
    return got.size() == m.size() && std::vector<int>(got.begin(), got.end()) == want;
  };
  const int p1 = c.p1(), p2 = c.p2(), p3 = c.p3();
  if (static_cast<int>(out.e.size()) != n + 1 - p1 - p3 + lt.b || !codomain_ok(m1, s.s3))
    throw InternalInconsistency("chi_and_sigmas: sigma1 domain or codomain has the wrong size");
  if (static_cast<int>(out.f.size()) != n - p2 - p3 + lt.w || !codomain_ok(m2, s.s2))
    throw InternalInconsistency("chi_and_sigmas: sigma2 domain or codomain has the wrong size");
  if (static_cast<int>(out.chi.size()) != p3 - lt.w - lt.b ||
      static_cast<int>(comp1.size()) != n + 1 - p1 - p2 + lt.g)
    throw InternalInconsistency("chi_and_sigmas: chi has the wrong size");
  out.sigma1 = Permutation(standardise(m1));
  out.sigma2 = Permutation(standardise(m2));
  return out;
}

ThetaResult theta(const PartitionedCactus& pc, ThetaTrace* trace) {
  check_pc(pc);
  ThetaTrace local;
  ThetaTrace& tr = trace ? *trace : local;
  tr.t = build_T(pc);
  tr.upsilon = add_triangles(tr.t, pc);
  tr.relabeled = relabel(tr.upsilon, pc);
  std::tie(tr.s, tr.upsilon2) = label_multisets(pc, tr.relabeled);
  tr.cs = chi_and_sigmas(pc, tr.relabeled, tr.s);

  ThetaResult r;
  r.n = pc.n();
  r.tree = add_thorns(tr.upsilon2, r.n);
  r.sigma1 = tr.cs.sigma1;
  r.sigma2 = tr.cs.sigma2;
  r.chi = tr.cs.chi;
  r.lam = pc.pi1.type();
  r.mu = pc.pi2.type();
  r.nu = pc.pi3.type();
  r.g = tr.upsilon.g;
  r.w = tr.upsilon.w;
  r.b = tr.upsilon.b;
  return r;
}

nlohmann::json theta_to_json(const ThetaResult& r) {
  return nlohmann::json{{"tree", tree_to_json(r.tree)},
                        {"sigma1", r.sigma1.images()},
                        {"sigma2", r.sigma2.images()},
                        {"chi", r.chi},
                        {"params",
                         {{"n", r.n},
                          {"lambda", r.lam.parts()},
                          {"mu", r.mu.parts()},
                          {"nu", r.nu.parts()},
                          {"g", r.g},
                          {"w", r.w},
                          {"b", r.b}}}};
}

ThetaResult theta_from_json(const nlohmann::json& j) {
  try {
    ThetaResult r;
    r.tree = tree_from_json(j.at("tree"));
    r.sigma1 = Permutation(j.at("sigma1").get<std::vector<int>>());
    r.sigma2 = Permutation(j.at("sigma2").get<std::vector<int>>());
    r.chi = j.at("chi").get<std::vector<int>>();
    auto v = validate(r.tree);
    if (!v.empty()) throw InvalidInput("invalid tree: " + v.front());
    const auto deg = degrees(r.tree);
    const auto cnt = count_tree(r.tree);
    r.n = cnt.degree_sum[0];
    r.lam = deg.white;
    r.mu = deg.black;
    r.nu = deg.grey;
    r.g = cnt.g;
    r.w = cnt.w;
    r.b = cnt.b;
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed theta JSON: ") + e.what());
  }
}

Intermediate recover_intermediate(const Tree& tct, const Permutation& sigma1, const Permutation& sigma2,
                                  const std::vector<int>& chi) {
  auto v = validate(tct);
  if (!v.empty()) throw InvalidInput("recover_intermediate: invalid tree: " + v.front());
  const auto cnt = count_tree(tct);
  const int n = cnt.degree_sum[0];
  const int p1 = cnt.vertices[0], p2 = cnt.vertices[1], p3 = cnt.vertices[2];
  if (sigma1.size() != n + 1 - p1 - p3 + cnt.b || sigma2.size() != n - p2 - p3 + cnt.w)
    throw InvalidInput("recover_intermediate: sigma sizes do not match the tree");
  const int chi_range = n + 1 - p1 - p2 + cnt.g;
  if (static_cast<int>(chi.size()) != p3 - cnt.w - cnt.b)
    throw InvalidInput("recover_intermediate: chi has the wrong length");
  if (std::set<int>(chi.begin(), chi.end()).size() != chi.size() ||
      std::any_of(chi.begin(), chi.end(), [&](int x) { return x < 1 || x > chi_range; }))
    throw InvalidInput("recover_intermediate: chi is not an ordered subset of [" + std::to_string(chi_range) + "]");

  Intermediate out;
  LabeledTree& lt = out.upsilon2;
  lt.tree = tct;
  lt.block.assign(tct.size(), -1);
  lt.rank.assign(tct.size(), 0);
  lt.labels.assign(tct.size(), {0, 0});
  lt.g = cnt.g;
  lt.w = cnt.w;
  lt.b = cnt.b;
  const auto mid = tct.middles();
  // Each thorn and each vertex visit takes the next label, except that a
  // middle vertex repeats the label of its third vertex (read just before
  // it) and the last vertex of every traversal is labelled n.
  for (Color col : {Color::kWhite, Color::kBlack, Color::kGrey}) {
    const auto visits = rlt(tct, col);
    int counter = 0, rank = 0;
    for (size_t q = 0; q < visits.size(); ++q) {
      const auto& vis = visits[q];
      if (vis.thorn) {
        ++counter;
        continue;
      }
      const bool own = tct.node(vis.node).color == col;
      if (own) lt.rank[vis.node] = ++rank;
      int& label = label_ref(lt, vis.node, col);
      if (own && mid[vis.node])
        label = counter;
      else if (q + 1 == visits.size())
        label = n;
      else
        label = ++counter;
      if (label > n) throw InvalidInput("recover_intermediate: labels exceed n");
    }
  }
  for (int u = 0; u < lt.tree.size(); ++u) {
    auto& slots = lt.tree.node(u).slots;
    slots.erase(std::remove_if(slots.begin(), slots.end(), [](const Slot& s) { return s.kind == SlotKind::kThorn; }),
                slots.end());
  }
  out.s.s1 = d_sequence(lt, Color::kWhite);
  out.s.s2 = d_sequence(lt, Color::kBlack);
  out.s.s3 = d_sequence(lt, Color::kGrey);
  std::sort(out.s.s1.begin(), out.s.s1.end());
  std::sort(out.s.s2.begin(), out.s.s2.end());
  std::sort(out.s.s3.begin(), out.s.s3.end());
  const auto comp1 = set_difference_of(1, n, std::set<int>(out.s.s1.begin(), out.s.s1.end()));
  if (static_cast<int>(comp1.size()) != chi_range)
    throw InvalidInput("recover_intermediate: label multiset S1 has the wrong size");
  for (int x : chi) out.chi_tilde.push_back(comp1[x - 1]);
  return out;
}

Reduced reduce_trivial_nu(const Tree& tct, const Permutation& sigma1, const Permutation& sigma2,
                          const std::vector<int>& chi) {
  auto v = validate(tct);
  if (!v.empty()) throw InvalidInput("reduce: invalid tree: " + v.front());
  const auto cnt = count_tree(tct);
  const int n = cnt.degree_sum[0];
  const int p1 = cnt.vertices[0], p2 = cnt.vertices[1], p3 = cnt.vertices[2];
  if (p3 != n) throw InvalidInput("reduce: grey degrees are not all 1");
  if (cnt.g != 0 || cnt.w != p2 || cnt.b != p1 - 1)
    throw InvalidInput("reduce: triangle counts are not (0, l(mu), l(lambda) - 1)");
  if (cnt.thorns[1] != 0 || cnt.thorns[2] != 0) throw InvalidInput("reduce: black or grey thorns present");
  if (sigma1.size() != 0 || sigma2.size() != 0) throw InvalidInput("reduce: sigma1 and sigma2 must be empty");
  if (static_cast<int>(chi.size()) != n + 1 - p1 - p2) throw InvalidInput("reduce: chi has the wrong length");
  Permutation sigma(chi);  // throws unless a permutation

  Tree out;
  std::function<int(int)> white;
  std::function<int(int)> black = [&](int u) {
    const auto slots = tct.node(u).slots;
    const Slot third = slots.back();
    if (third.kind != SlotKind::kChild || !tct.node(third.node).slots.empty())
      throw InvalidInput("reduce: a black vertex does not end with a grey leaf");
    const int nu_ = out.add_node(Color::kBlack);
    std::vector<Slot> ns;
    for (size_t q = 0; q + 1 < slots.size(); ++q) {
      const Slot& s = slots[q];
      const auto& gs = tct.node(s.node).slots;
      if (s.kind == SlotKind::kTriChild) {
        if (gs.size() != 1 || gs[0].kind != SlotKind::kChild) throw InvalidInput("reduce: malformed grey middle");
        ns.push_back(Slot{SlotKind::kChild, white(gs[0].node)});
      } else if (s.kind == SlotKind::kChild && gs.empty()) {
        ns.push_back(Slot{SlotKind::kThorn, -1});
      } else {
        throw InvalidInput("reduce: unexpected black slot");
      }
    }
    out.node(nu_).slots = std::move(ns);
    return nu_;
  };
  white = [&](int u) {
    const int nw = out.add_node(Color::kWhite);
    std::vector<Slot> ns;
    for (const auto& s : tct.node(u).slots) {
      if (s.kind == SlotKind::kThorn)
        ns.push_back(s);
      else if (s.kind == SlotKind::kTriChild)
        ns.push_back(Slot{SlotKind::kChild, black(s.node)});
      else
        throw InvalidInput("reduce: a black vertex is not the middle of a white-rooted triangle");
    }
    out.node(nw).slots = std::move(ns);
    return nw;
  };
  white(0);
  out = out.canonical();
  auto bad = validate_bicolored(out);
  if (!bad.empty()) throw InternalInconsistency("reduce: result is not a two-colored thorn tree: " + bad.front());
  return Reduced{std::move(out), std::move(sigma)};
}

ThetaResult expand_trivial_nu(const Tree& bicolored, const Permutation& sigma) {
  auto v = validate_bicolored(bicolored);
  if (!v.empty()) throw InvalidInput("expand: invalid two-colored tree: " + v.front());
  const auto [lam, mu] = bicolored_degrees(bicolored);
  const int n = lam.weight();
  if (sigma.size() != n + 1 - lam.length() - mu.length()) throw InvalidInput("expand: sigma has the wrong size");

  Tree out;
  std::function<int(int)> white;
  auto grey_leaf = [&]() { return out.add_node(Color::kGrey); };
  std::function<int(int)> black = [&](int u) {
    const int nb = out.add_node(Color::kBlack);
    std::vector<Slot> ns;
    for (const auto& s : bicolored.node(u).slots) {
      if (s.kind == SlotKind::kThorn) {
        ns.push_back(Slot{SlotKind::kChild, grey_leaf()});
      } else {
        const int gm = out.add_node(Color::kGrey);
        const int w = white(s.node);
        out.node(gm).slots = {Slot{SlotKind::kChild, w}};
        ns.push_back(Slot{SlotKind::kTriChild, gm});
      }
    }
    ns.push_back(Slot{SlotKind::kChild, grey_leaf()});
    out.node(nb).slots = std::move(ns);
    return nb;
  };
  white = [&](int u) {
    const int nw = out.add_node(Color::kWhite);
    std::vector<Slot> ns;
    for (const auto& s : bicolored.node(u).slots)
      ns.push_back(s.kind == SlotKind::kThorn ? s : Slot{SlotKind::kTriChild, black(s.node)});
    out.node(nw).slots = std::move(ns);
    return nw;
  };
  white(0);
  ThetaResult r;
  r.tree = out.canonical();
  auto bad = validate(r.tree);
  if (!bad.empty()) throw InternalInconsistency("expand: result is not a thorn cactus tree: " + bad.front());
  r.sigma1 = Permutation(std::vector<int>{});
  r.sigma2 = Permutation(std::vector<int>{});
  r.chi = sigma.images();
  r.n = n;
  r.lam = lam;
  r.mu = mu;
  r.nu = ones(n);
  r.g = 0;
  r.w = mu.length();
  r.b = lam.length() - 1;
  return r;
}

}  // namespace cacti
