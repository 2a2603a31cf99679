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

#include "cacti/tree.hpp"

#include <algorithm>
#include <map>

namespace cacti {

const char* color_name(Color c) {
  switch (c) {
    case Color::kWhite:
      return "white";
    case Color::kBlack:
      return "black";
    case Color::kGrey:
      return "grey";
  }
  return "?";
}

std::vector<int> Tree::parents() const {
  std::vector<int> p(nodes_.size(), -1);
  for (int v = 0; v < size(); ++v)
    for (const auto& s : nodes_[v].slots)
      if (s.kind != SlotKind::kThorn) p[s.node] = v;
  return p;
}

std::vector<char> Tree::middles() const {
  std::vector<char> m(nodes_.size(), 0);
  for (const auto& nd : nodes_)
    for (const auto& s : nd.slots)
      if (s.kind == SlotKind::kTriChild) m[s.node] = 1;
  return m;
}

Tree Tree::canonical() const {
  Tree out;
  if (nodes_.empty()) return out;
  std::function<int(int)> copy = [&](int v) {
    int nv = out.add_node(nodes_[v].color);
    std::vector<Slot> slots;
    for (const auto& s : nodes_[v].slots)
      slots.push_back(s.kind == SlotKind::kThorn ? s : Slot{s.kind, copy(s.node)});
    out.node(nv).slots = std::move(slots);
    return nv;
  };
  copy(0);
  return out;
}

std::string Tree::key() const {
  std::string s;
  if (nodes_.empty()) return s;
  static const char kColor[] = {'w', 'b', 'g'};
  std::function<void(int)> rec = [&](int v) {
    s += kColor[idx(nodes_[v].color)];
    s += '[';
    bool first = true;
    for (const auto& sl : nodes_[v].slots) {
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

TreeCounts count_tree(const Tree& t) {
  TreeCounts c;
  auto deg = vertex_degrees(t);
  for (int v = 0; v < t.size(); ++v) {
    const auto& nd = t.node(v);
    const int ci = idx(nd.color);
    ++c.vertices[ci];
    c.degree_sum[ci] += deg[v];
    for (const auto& s : nd.slots) {
      if (s.kind == SlotKind::kThorn) ++c.thorns[ci];
      if (s.kind == SlotKind::kTriChild) {
        if (nd.color == Color::kGrey) ++c.g;
        if (nd.color == Color::kWhite) ++c.w;
        if (nd.color == Color::kBlack) ++c.b;
      }
    }
  }
  return c;
}

std::vector<int> vertex_degrees(const Tree& t) {
  auto mid = t.middles();
  std::vector<int> d(t.size());
  for (int v = 0; v < t.size(); ++v) {
    const int slots = static_cast<int>(t.node(v).slots.size());
    d[v] = v == 0 ? slots : slots + 1 - mid[v];
  }
  return d;
}

namespace {

// Structural checks shared by both tree kinds.
void check_shape(const Tree& t, bool tricolored, std::vector<std::string>& out) {
  if (t.size() == 0) {
    out.push_back("empty tree");
    return;
  }
  if (t.node(0).color != Color::kWhite) out.push_back("root is not white");
  std::vector<int> hits(t.size(), 0);
  for (int v = 0; v < t.size(); ++v)
    for (const auto& s : t.node(v).slots) {
      if (s.kind == SlotKind::kThorn) continue;
      if (s.node <= 0 || s.node >= t.size()) {
        out.push_back("slot points outside the tree");
        continue;
      }
      ++hits[s.node];
      const Color want = tricolored ? next_color(t.node(v).color)
                                    : (t.node(v).color == Color::kWhite ? Color::kBlack : Color::kWhite);
      if (t.node(s.node).color != want)
        out.push_back(std::string("a ") + color_name(t.node(v).color) + " vertex has a " +
                      color_name(t.node(s.node).color) + " child");
      if (s.kind == SlotKind::kTriChild) {
        if (!tricolored) {
          out.push_back("two-colored trees have no triangles");
          continue;
        }
        const auto& mid = t.node(s.node).slots;
        if (mid.empty() || mid.back().kind != SlotKind::kChild)
          out.push_back("a triangle middle vertex must end with a plain child");
      }
    }
  for (int v = 1; v < t.size(); ++v)
    if (hits[v] != 1) out.push_back("vertex " + std::to_string(v) + " does not have exactly one parent");
  // Reachability from the root rules out cycles.
  std::vector<char> seen(t.size(), 0);
  std::vector<int> stack{0};
  int reached = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (seen[v]) {
      out.push_back("cycle through vertex " + std::to_string(v));
      return;
    }
    seen[v] = 1;
    ++reached;
    for (const auto& s : t.node(v).slots)
      if (s.kind != SlotKind::kThorn && s.node > 0 && s.node < t.size()) stack.push_back(s.node);
  }
  if (reached != t.size()) out.push_back("some vertices are not reachable from the root");
}

}  // namespace

std::vector<std::string> validate(const Tree& t) {
  std::vector<std::string> out;
  check_shape(t, true, out);
  if (!out.empty()) return out;
  TreeCounts c = count_tree(t);
  const int n = c.degree_sum[0];
  if (t.node(0).slots.empty()) out.push_back("root has degree 0");
  if (c.degree_sum[1] != n || c.degree_sum[2] != n)
    out.push_back("degree sums differ: white " + std::to_string(n) + ", black " +
                  std::to_string(c.degree_sum[1]) + ", grey " + std::to_string(c.degree_sum[2]));
  const int p1 = c.vertices[0], p2 = c.vertices[1], p3 = c.vertices[2];
  const int want[3] = {n + 1 - p1 - p2 + c.g, n - p2 - p3 + c.w, n + 1 - p1 - p3 + c.b};
  for (int k = 0; k < 3; ++k)
    if (c.thorns[k] != want[k])
      out.push_back(std::string(color_name(static_cast<Color>(k))) + " thorn budget is " +
                    std::to_string(want[k]) + " but the tree has " + std::to_string(c.thorns[k]));
  return out;
}

Degrees degrees(const Tree& t) {
  auto v = validate(t);
  if (!v.empty()) throw InvalidInput("degrees: invalid tree: " + v.front());
  std::vector<int> d[3];
  auto deg = vertex_degrees(t);
  for (int u = 0; u < t.size(); ++u) d[idx(t.node(u).color)].push_back(deg[u]);
  return Degrees{IntegerPartition(d[0]), IntegerPartition(d[1]), IntegerPartition(d[2])};
}

std::vector<Visit> rlt(const Tree& t, Color color) {
  std::map<int, std::vector<int>, std::greater<>> levels;
  std::function<void(int, int)> dfs = [&](int v, int depth) {
    if (t.node(v).color == color) levels[depth].push_back(v);
    for (const auto& s : t.node(v).slots)
      if (s.kind != SlotKind::kThorn) dfs(s.node, depth + 1);
  };
  if (t.size()) dfs(0, 0);
  std::vector<Visit> seq;
  for (const auto& [depth, vs] : levels)
    for (int v : vs) {
      for (const auto& s : t.node(v).slots)
        seq.push_back(s.kind == SlotKind::kThorn ? Visit{true, v} : Visit{false, s.node});
      seq.push_back(Visit{false, v});
    }
  return seq;
}

std::string CactusKey::str() const {
  return "(" + lam.str() + " | " + mu.str() + " | " + nu.str() + "; g=" + std::to_string(g) +
         " w=" + std::to_string(w) + " b=" + std::to_string(b) + ")";
}

// ---------------------------------------------------------------------------

std::vector<std::string> validate_bicolored(const Tree& t) {
  std::vector<std::string> out;
  check_shape(t, false, out);
  if (!out.empty()) return out;
  for (const auto& nd : t.nodes())
    if (nd.color == Color::kGrey) out.push_back("grey vertex in a two-colored tree");
  if (t.node(0).slots.empty()) out.push_back("root has degree 0");
  auto deg = vertex_degrees(t);
  int sum[2] = {0, 0}, verts[2] = {0, 0}, thorns[2] = {0, 0};
  for (int v = 0; v < t.size(); ++v) {
    int c = idx(t.node(v).color);
    if (c > 1) continue;
    sum[c] += deg[v];
    ++verts[c];
    for (const auto& s : t.node(v).slots) thorns[c] += s.kind == SlotKind::kThorn;
  }
  if (sum[0] != sum[1]) out.push_back("white and black degree sums differ");
  const int budget = sum[0] + 1 - verts[0] - verts[1];
  for (int c = 0; c < 2; ++c)
    if (thorns[c] != budget)
      out.push_back(std::string(color_name(static_cast<Color>(c))) + " thorn count differs from " +
                    std::to_string(budget));
  return out;
}

std::pair<IntegerPartition, IntegerPartition> bicolored_degrees(const Tree& t) {
  auto v = validate_bicolored(t);
  if (!v.empty()) throw InvalidInput("bicolored_degrees: invalid tree: " + v.front());
  std::vector<int> d[2];
  auto deg = vertex_degrees(t);
  for (int u = 0; u < t.size(); ++u) d[idx(t.node(u).color)].push_back(deg[u]);
  return {IntegerPartition(d[0]), IntegerPartition(d[1])};
}

// ---------------------------------------------------------------------------

nlohmann::json tree_to_json(const Tree& t) {
  if (t.size() == 0) return nullptr;
  std::function<nlohmann::json(int)> rec = [&](int v) {
    nlohmann::json slots = nlohmann::json::array();
    for (const auto& s : t.node(v).slots) {
      if (s.kind == SlotKind::kThorn)
        slots.push_back("thorn");
      else
        slots.push_back({{s.kind == SlotKind::kChild ? "child" : "tri_child", rec(s.node)}});
    }
    return nlohmann::json{{"color", color_name(t.node(v).color)}, {"slots", slots}};
  };
  return rec(0);
}

Tree tree_from_json(const nlohmann::json& j) {
  Tree t;
  std::function<int(const nlohmann::json&)> rec = [&](const nlohmann::json& nj) -> int {
    if (!nj.is_object() || !nj.contains("color") || !nj.contains("slots"))
      throw InvalidInput("tree node needs \"color\" and \"slots\"");
    const std::string c = nj.at("color").get<std::string>();
    Color col;
    if (c == "white")
      col = Color::kWhite;
    else if (c == "black")
      col = Color::kBlack;
    else if (c == "grey")
      col = Color::kGrey;
    else
      throw InvalidInput("unknown color '" + c + "'");
    int v = t.add_node(col);
    std::vector<Slot> slots;
    for (const auto& s : nj.at("slots")) {
      if (s.is_string()) {
        if (s.get<std::string>() != "thorn") throw InvalidInput("unknown slot '" + s.get<std::string>() + "'");
        slots.push_back(Slot{SlotKind::kThorn, -1});
      } else if (s.is_object() && s.size() == 1 && s.contains("child")) {
        slots.push_back(Slot{SlotKind::kChild, rec(s.at("child"))});
      } else if (s.is_object() && s.size() == 1 && s.contains("tri_child")) {
        slots.push_back(Slot{SlotKind::kTriChild, rec(s.at("tri_child"))});
      } else {
        throw InvalidInput("malformed slot");
      }
    }
    t.node(v).slots = std::move(slots);
    return v;
  };
  rec(j);
  return t;
}

}  // namespace cacti
