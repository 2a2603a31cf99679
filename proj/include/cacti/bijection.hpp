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

// The map from partitioned 3-cacti to (thorn cactus tree, sigma1, sigma2,
// chi), built in stages so that every intermediate tree can be inspected,
// and the reduction to two-colored thorn trees when nu = [1^n].
//
// Stages:
//   build_T          block tree from the incidence rules
//   add_triangles    marks tri_child slots, counts (g, w, b)
//   relabel          reverse-levels order of each color, theta1..theta3
//   label_multisets  double labels and S1, S2, S3
//   add_thorns       thorns fill the label gaps of each traversal
//   chi_and_sigmas   chi and the standardised sigma1, sigma2

#ifndef CACTI_BIJECTION_HPP_
#define CACTI_BIJECTION_HPP_

#include <array>
#include <string>
#include <vector>

#include "cacti/perm.hpp"
#include "cacti/tree.hpp"
#include "json.hpp"

namespace cacti {

// A thorn-free tree shape with per-vertex data. `block` is the index of the
// vertex's block in pi1, pi2 or pi3 (by color), in the caller's indexing.
// `rank` is the 1-based position in the RLT of the vertex's own color.
// `labels` holds the double label: white (circle, rhombus), black (circle,
// square), grey (square, rhombus). The root carries only n.
struct LabeledTree {
  Tree tree;
  std::vector<int> block;
  std::vector<int> rank;
  std::vector<std::array<int, 2>> labels;
  int g = 0, w = 0, b = 0;

  // Preorder bracket form with the labels, independent of vertex numbering.
  std::string key() const;
};

LabeledTree build_T(const PartitionedCactus& pc);
LabeledTree add_triangles(const LabeledTree& t, const PartitionedCactus& pc);

struct Relabeled {
  LabeledTree tree;
  Permutation theta1, theta2, theta3;
};
Relabeled relabel(const LabeledTree& upsilon, const PartitionedCactus& pc);

// Sorted multisets.
struct LabelMultisets {
  std::vector<int> s1, s2, s3;
  bool operator==(const LabelMultisets&) const = default;
};
std::pair<LabelMultisets, LabeledTree> label_multisets(const PartitionedCactus& pc, const Relabeled& r);

// Thorns for the gaps of each reverse-levels traversal. The result is
// renumbered in preorder.
Tree add_thorns(const LabeledTree& upsilon2, int n);

struct ChiSigmas {
  std::vector<int> chi_tilde, chi;
  std::vector<int> e, f;  // domains of the unstandardised sigmas
  Permutation sigma1, sigma2;
};
ChiSigmas chi_and_sigmas(const PartitionedCactus& pc, const Relabeled& r, const LabelMultisets& s);

struct ThetaResult {
  Tree tree;
  Permutation sigma1, sigma2;
  std::vector<int> chi;
  int n = 0;
  IntegerPartition lam, mu, nu;
  int g = 0, w = 0, b = 0;
};

struct ThetaTrace {
  LabeledTree t, upsilon, upsilon2;
  Relabeled relabeled;
  LabelMultisets s;
  ChiSigmas cs;
};

// Throws InvalidInput unless pc.violations() is empty.
ThetaResult theta(const PartitionedCactus& pc, ThetaTrace* trace = nullptr);

// {"tree", "sigma1", "sigma2", "chi", "params": {n, lambda, mu, nu, g, w, b}}
nlohmann::json theta_to_json(const ThetaResult& r);
ThetaResult theta_from_json(const nlohmann::json& j);

// Everything the forward map produced before thorns were added, read back
// from its output.
struct Intermediate {
  LabeledTree upsilon2;
  LabelMultisets s;
  std::vector<int> chi_tilde;
};
Intermediate recover_intermediate(const Tree& tct, const Permutation& sigma1, const Permutation& sigma2,
                                  const std::vector<int>& chi);

// nu = [1^n] only: black-rooted triangles become edges, the remaining grey
// leaves become black thorns and white-rooted triangles become plain
// white-black edges. sigma is chi read as a permutation.
struct Reduced {
  Tree tree;
  Permutation sigma;
};
Reduced reduce_trivial_nu(const Tree& tct, const Permutation& sigma1, const Permutation& sigma2,
                          const std::vector<int>& chi);
// Inverse of reduce_trivial_nu.
ThetaResult expand_trivial_nu(const Tree& bicolored, const Permutation& sigma);

}  // namespace cacti

#endif  // CACTI_BIJECTION_HPP_
