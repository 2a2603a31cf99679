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

// Tricolored plane trees with triangles and thorns, plus the two-colored
// variant.
//
// A vertex owns an ordered list of slots. A slot is a thorn, a plain child,
// or a tri_child. A tri_child v of u is the middle vertex of a triangle
// whose third vertex is the last slot of v (always a plain child); the
// non-tree edge joining u to that third vertex is implicit. Children of a
// white vertex are black, of black are grey, of grey are white.

#ifndef CACTI_TREE_HPP_
#define CACTI_TREE_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cacti/perm.hpp"
#include "json.hpp"

namespace cacti {

enum class Color : uint8_t { kWhite = 0, kBlack = 1, kGrey = 2 };
enum class SlotKind : uint8_t { kThorn = 0, kChild = 1, kTriChild = 2 };

inline Color next_color(Color c) { return static_cast<Color>((static_cast<int>(c) + 1) % 3); }
inline int idx(Color c) { return static_cast<int>(c); }
const char* color_name(Color c);

struct Slot {
  SlotKind kind = SlotKind::kThorn;
  int node = -1;  // target vertex for child slots
};

struct Node {
  Color color = Color::kWhite;
  std::vector<Slot> slots;
};

// Vertex 0 is the root.
class Tree {
 public:
  Tree() = default;

  int add_node(Color c) {
    nodes_.push_back(Node{c, {}});
    return static_cast<int>(nodes_.size()) - 1;
  }
  void pop_node() { nodes_.pop_back(); }

  int size() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int v) const { return nodes_[v]; }
  Node& node(int v) { return nodes_[v]; }
  const std::vector<Node>& nodes() const { return nodes_; }

  // Parent of every vertex (-1 for the root) and whether it hangs from a
  // tri_child slot.
  std::vector<int> parents() const;
  std::vector<char> middles() const;

  // Same tree with vertices renumbered in preorder.
  Tree canonical() const;

  // Compact bracket form, e.g. "w[t,cb[cg[]]]"; equal iff trees are equal.
  std::string key() const;

  bool operator==(const Tree& o) const { return key() == o.key(); }

 private:
  std::vector<Node> nodes_;
};

struct TreeCounts {
  int vertices[3] = {0, 0, 0};  // p1, p2, p3
  int thorns[3] = {0, 0, 0};    // attached to white, black, grey
  int g = 0, w = 0, b = 0;      // triangles rooted at grey, white, black
  int degree_sum[3] = {0, 0, 0};
};

TreeCounts count_tree(const Tree& t);

// Degree of each vertex: slots + 1 - [middle] for non-root, slots for root.
std::vector<int> vertex_degrees(const Tree& t);

// Empty iff `t` is a valid thorn cactus tree.
std::vector<std::string> validate(const Tree& t);

struct Degrees {
  IntegerPartition white, black, grey;
  auto operator<=>(const Degrees&) const = default;
};
// Throws InvalidInput on an invalid tree.
Degrees degrees(const Tree& t);

struct Visit {
  bool thorn = false;
  int node = -1;  // the vertex visited, or the owner of the thorn
  bool operator==(const Visit&) const = default;
};

// Reverse levels traversal: levels of `color` vertices from deepest to
// shallowest, each level left to right; every vertex is preceded by its
// slots (children and own thorns) in order.
std::vector<Visit> rlt(const Tree& t, Color color);

struct CactusKey {
  IntegerPartition lam, mu, nu;
  int g = 0, w = 0, b = 0;
  auto operator<=>(const CactusKey&) const = default;
  std::string str() const;
};

// Every thorn cactus tree with all three degree sums equal to n.
void for_each_thorn_cactus_tree(int n, const std::function<void(const Tree&)>& fn);
// Same, restricted to one class; pruned on degrees and triangle counts.
void for_each_thorn_cactus_tree(const CactusKey& key, const std::function<void(const Tree&)>& fn);
std::vector<Tree> enumerate_thorn_cactus_trees(const IntegerPartition& lam, const IntegerPartition& mu,
                                               const IntegerPartition& nu, int g, int w, int b);
// Number of trees per class, from one generation pass.
std::map<CactusKey, int64_t> thorn_cactus_census(int n);

// Two-colored trees: white root, child slots and thorns only.
std::vector<std::string> validate_bicolored(const Tree& t);
std::pair<IntegerPartition, IntegerPartition> bicolored_degrees(const Tree& t);
void for_each_bicolored_thorn_tree(int n, const std::function<void(const Tree&)>& fn);
std::vector<Tree> enumerate_bicolored_thorn_trees(const IntegerPartition& lam, const IntegerPartition& mu);
std::map<std::pair<IntegerPartition, IntegerPartition>, int64_t> bicolored_census(int n);

// {"color": "white", "slots": ["thorn", {"child": node}, {"tri_child": node}]}
nlohmann::json tree_to_json(const Tree& t);
Tree tree_from_json(const nlohmann::json& j);

}  // namespace cacti

#endif  // CACTI_TREE_HPP_
