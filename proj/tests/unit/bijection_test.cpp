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
#include <numeric>
#include <random>
#include <set>

#include "cacti/enumeration.hpp"
#include "doctest.h"

using namespace cacti;
using P = IntegerPartition;

namespace {

PartitionedCactus example_six() {
  return {parse_set_partition("{4,5},{1,2,3,6}", 6), parse_set_partition("{1,3,4,5},{2,6}", 6),
          parse_set_partition("{1,3,4,6},{2},{5}", 6), parse_permutation("(1 2 3 6)", 6),
          parse_permutation("(1 5 3)", 6)};
}

PartitionedCactus triangle_pc() {
  return {SetPartition(1, {{1}}), SetPartition(1, {{1}}), SetPartition(1, {{1}}), Permutation::identity(1),
          Permutation::identity(1)};
}

// Merges the cycles of `p` into random blocks.
SetPartition random_coarsening(const Permutation& p, std::mt19937& rng) {
  auto cyc = cycles(p).blocks();
  std::vector<std::vector<int>> blocks;
  for (auto& c : cyc) {
    const size_t k = std::uniform_int_distribution<size_t>(0, blocks.size())(rng);
    if (k == blocks.size())
      blocks.push_back(c);
    else
      blocks[k].insert(blocks[k].end(), c.begin(), c.end());
  }
  return SetPartition(p.size(), blocks);
}

PartitionedCactus random_pc(int n, std::mt19937& rng) {
  std::vector<int> a(n), b(n);
  std::iota(a.begin(), a.end(), 1);
  std::iota(b.begin(), b.end(), 1);
  std::shuffle(a.begin(), a.end(), rng);
  std::shuffle(b.begin(), b.end(), rng);
  PartitionedCactus pc;
  pc.alpha1 = Permutation(a);
  pc.alpha2 = Permutation(b);
  pc.pi1 = random_coarsening(pc.alpha1, rng);
  pc.pi2 = random_coarsening(pc.alpha2, rng);
  pc.pi3 = random_coarsening(pc.alpha3(), rng);
  return canonical_indexing(pc);
}

// Same blocks in a random order, keeping the block of 1 last in pi1.
PartitionedCactus shuffle_blocks(const PartitionedCactus& pc, std::mt19937& rng) {
  auto shuffled = [&](const SetPartition& s, bool keep_last) {
    auto blocks = s.blocks();
    std::shuffle(blocks.begin(), blocks.end() - (keep_last ? 1 : 0), rng);
    return SetPartition(s.n(), blocks);
  };
  return {shuffled(pc.pi1, true), shuffled(pc.pi2, false), shuffled(pc.pi3, false), pc.alpha1, pc.alpha2};
}

std::string image_key(const ThetaResult& r) { return theta_to_json(r).dump(); }

}  // namespace

TEST_CASE("stages on the six-element example") {
  const PartitionedCactus pc = example_six();
  const LabeledTree t = build_T(pc);
  CHECK(t.tree.size() == 7);
  const LabeledTree u = add_triangles(t, pc);
  CHECK(u.g == 0);
  CHECK(u.w == 1);
  CHECK(u.b == 1);

  const Relabeled r = relabel(u, pc);
  CHECK(r.theta1 == Permutation({3, 4, 5, 1, 2, 6}));
  CHECK(r.theta2 == Permutation({1, 5, 2, 3, 4, 6}));
  CHECK(r.theta3 == Permutation({3, 2, 4, 5, 1, 6}));

  const auto [s, u2] = label_multisets(pc, r);
  const ChiSigmas cs = chi_and_sigmas(pc, r, s);
  CHECK(cs.chi_tilde == std::vector<int>{4});
  CHECK(cs.chi == std::vector<int>{3});
  CHECK(cs.sigma1 == Permutation({2, 3, 1}));
  CHECK(cs.sigma2 == Permutation({2, 1}));

  const ThetaResult res = theta(pc);
  CHECK(validate(res.tree).empty());
  CHECK(res.lam == P({4, 2}));
  CHECK(res.mu == P({4, 2}));
  CHECK(res.nu == P({4, 1, 1}));
  CHECK(res.tree == add_thorns(u2, 6));
}

TEST_CASE("smallest cactus") {
  const ThetaResult r = theta(triangle_pc());
  CHECK(r.tree.key() == "w[xb[cg[]]]");
  CHECK(r.chi.empty());
  CHECK(r.sigma1.size() == 0);
  CHECK(r.sigma2.size() == 0);
  CHECK(r.w == 1);
}

TEST_CASE("intermediates are recovered from the image") {
  const PartitionedCactus pc = example_six();
  ThetaTrace tr;
  const ThetaResult r = theta(pc, &tr);
  const Intermediate im = recover_intermediate(r.tree, r.sigma1, r.sigma2, r.chi);
  CHECK(im.s == tr.s);
  CHECK(im.chi_tilde == std::vector<int>{4});
  CHECK(im.upsilon2.key() == tr.upsilon2.key());
}

TEST_CASE("images are independent of block indexing") {
  std::mt19937 rng(20261015);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 7;
    const PartitionedCactus pc = random_pc(n, rng);
    REQUIRE(pc.violations().empty());
    const std::string want = image_key(theta(pc));
    const PartitionedCactus other = shuffle_blocks(pc, rng);
    REQUIRE(other.violations().empty());
    CHECK(image_key(theta(other)) == want);
    CHECK(image_key(theta(canonical_indexing(other))) == want);
  }
}

TEST_CASE("random cacti land in the codomain and round trip") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 7;
    const PartitionedCactus pc = random_pc(n, rng);
    ThetaTrace tr;
    const ThetaResult r = theta(pc, &tr);
    CHECK(validate(r.tree).empty());
    const Degrees d = degrees(r.tree);
    CHECK(d.white == pc.pi1.type());
    CHECK(d.black == pc.pi2.type());
    CHECK(d.grey == pc.pi3.type());
    const int l1 = r.lam.length(), l2 = r.mu.length(), l3 = r.nu.length();
    CHECK(r.sigma1.size() == n + 1 - l1 - l3 + r.b);
    CHECK(r.sigma2.size() == n - l2 - l3 + r.w);
    CHECK(static_cast<int>(r.chi.size()) == l3 - r.w - r.b);
    for (int c : r.chi) CHECK((c >= 1 && c <= n + 1 - l1 - l2 + r.g));
    CHECK(std::set<int>(r.chi.begin(), r.chi.end()).size() == r.chi.size());

    const Intermediate im = recover_intermediate(r.tree, r.sigma1, r.sigma2, r.chi);
    CHECK(im.s == tr.s);
    CHECK(im.chi_tilde == tr.cs.chi_tilde);

    CHECK(theta_from_json(theta_to_json(r)).tree == r.tree);
  }
}

TEST_CASE("the tree part of every vertex-labelled stage is a tree") {
  // Every partitioned cactus on at most four elements gives a tree on
  // p1 + p2 + p3 vertices, rooted at the white block holding 1.
  for (int n = 1; n <= 4; ++n)
    for_each_partitioned_cactus(n, [&](const PartitionedCactus& pc) {
      const LabeledTree t = build_T(pc);
      CHECK(t.tree.size() == pc.pi1.size() + pc.pi2.size() + pc.pi3.size());
      CHECK(t.block[0] == pc.pi1.size() - 1);
    });
}

TEST_CASE("trivial nu reduction") {
  const PartitionedCactus pc{parse_set_partition("{3,4,6,7},{1,2,5,8,9,10}", 10),
                             parse_set_partition("{1,2,4,5,7,10},{3,9},{6,8}", 10),
                             parse_set_partition("{1},{2},{3},{4},{5},{6},{7},{8},{9},{10}", 10),
                             parse_permutation("(1 8 9 10)(2 5)(3 4 6 7)", 10),
                             parse_permutation("(1 5 4 2 7)", 10)};
  const ThetaResult r = theta(canonical_indexing(pc));
  CHECK(r.g == 0);
  CHECK(r.w == 3);
  CHECK(r.b == 1);
  CHECK(r.sigma1.size() == 0);
  CHECK(r.sigma2.size() == 0);
  const Reduced red = reduce_trivial_nu(r.tree, r.sigma1, r.sigma2, r.chi);
  CHECK(validate_bicolored(red.tree).empty());
  CHECK(bicolored_degrees(red.tree) == std::pair{r.lam, r.mu});
  CHECK(red.sigma.images() == r.chi);
  const ThetaResult back = expand_trivial_nu(red.tree, red.sigma);
  CHECK(back.tree == r.tree);
  CHECK(back.chi == r.chi);

  CHECK(reduce_trivial_nu(theta(triangle_pc()).tree, Permutation(), Permutation(), {}).tree.key() == "w[cb[]]");
  CHECK_THROWS_AS(reduce_trivial_nu(theta(example_six()).tree, Permutation({2, 3, 1}), Permutation({2, 1}), {3}),
                  InvalidInput);
}

TEST_CASE("bad input") {
  PartitionedCactus pc = example_six();
  pc.pi1 = parse_set_partition("{1,2,3,6},{4,5}", 6);
  CHECK_THROWS_AS(theta(pc), InvalidInput);
  CHECK_THROWS_AS(recover_intermediate(theta(example_six()).tree, Permutation({1, 2}), Permutation({2, 1}), {3}),
                  InvalidInput);
}
