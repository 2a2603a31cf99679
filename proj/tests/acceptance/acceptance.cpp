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

// Acceptance run: one PASS or FAIL line per criterion, followed by indented
// detail lines. `acceptance <name>` runs a single criterion. Exit status is
// 0 iff every criterion that ran passed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cacti/bijection.hpp"
#include "cacti/checks.hpp"

namespace {

using namespace cacti;

struct Outcome {
  bool pass = false;
  std::vector<std::string> details;
};

Outcome from_suite(const std::string& name, int nmax) {
  for (const auto& s : suites()) {
    if (s.name != name) continue;
    SuiteOptions o;
    o.nmax = nmax;
    const SuiteReport r = s.run(o);
    Outcome out;
    out.pass = r.passed();
    out.details = r.lines;
    std::ostringstream os;
    os << r.cases << " cases, " << r.failures << " failures";
    if (!r.passed()) os << "; first: " << r.first_failure;
    out.details.push_back(os.str());
    return out;
  }
  return {false, {"no suite named " + name}};
}

std::string seq(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += std::to_string(x);
  return s;
}

// Permutation from the top row of a two-line display whose bottom row is
// 1..n: the k-th entry maps to k.
Permutation from_top_row(const std::vector<int>& top) {
  std::vector<int> img(top.size());
  for (size_t k = 0; k < top.size(); ++k) img[top[k] - 1] = static_cast<int>(k) + 1;
  return Permutation(img);
}

Outcome worked_examples() {
  Outcome out;
  out.pass = true;
  auto expect = [&](const std::string& what, const std::string& got, const std::string& want) {
    const bool ok = got == want;
    out.pass = out.pass && ok;
    out.details.push_back(what + ": " + got + (ok ? " (as printed)" : " but printed " + want));
  };

  const PartitionedCactus ex{parse_set_partition("{4,5},{1,2,3,6}", 6), parse_set_partition("{1,3,4,5},{2,6}", 6),
                             parse_set_partition("{1,3,4,6},{2},{5}", 6), parse_permutation("(1 2 3 6)(4)(5)", 6),
                             parse_permutation("(1 5 3)(2)(4)(6)", 6)};
  ThetaTrace tr;
  const ThetaResult r = theta(canonical_indexing(ex), &tr);
  expect("six-element example theta1", to_one_line(tr.relabeled.theta1), to_one_line(from_top_row({4, 5, 1, 2, 3, 6})));
  expect("six-element example theta2", to_one_line(tr.relabeled.theta2), to_one_line(from_top_row({1, 3, 4, 5, 2, 6})));
  expect("six-element example theta3", to_one_line(tr.relabeled.theta3), to_one_line(from_top_row({5, 2, 1, 3, 4, 6})));
  expect("six-element example chi~", seq(tr.cs.chi_tilde), "4");
  expect("six-element example chi", seq(r.chi), "3");
  expect("six-element example sigma1", seq(r.sigma1.images()), "231");
  expect("six-element example sigma2", seq(r.sigma2.images()), "21");

  const PartitionedCactus red{parse_set_partition("{3,4,6,7},{1,2,5,8,9,10}", 10),
                              parse_set_partition("{1,2,4,5,7,10},{3,9},{6,8}", 10),
                              parse_set_partition("{1},{2},{3},{4},{5},{6},{7},{8},{9},{10}", 10),
                              parse_permutation("(1 8 9 10)(2 5)(3 4 6 7)", 10),
                              parse_permutation("(1 5 4 2 7)(3)(6)(8)(9)(10)", 10)};
  const ThetaResult q = theta(canonical_indexing(red));
  expect("ten-element example sigma1", std::to_string(q.sigma1.size()) + " elements", "0 elements");
  expect("ten-element example sigma2", std::to_string(q.sigma2.size()) + " elements", "0 elements");
  expect("ten-element example sigma", seq(q.chi), "251364");
  return out;
}

struct Criterion {
  const char* name;
  const char* description;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"product_formula", "partitioned 3-cacti against the product formula, every triple, n <= 6",
       [] { return from_suite("thm1", 6); }},
      {"two_factor_formula", "partitioned bicolored maps against their closed form, every pair, n <= 8",
       [] { return from_suite("cor1", 8); }},
      {"tree_count_formula", "thorn cactus tree counts against exhaustive generation, n <= 6",
       [] { return from_suite("prop2", 6); }},
      {"summation_identity", "summation identity for n <= 12 and the tree decomposition of C for n <= 5",
       [] { return from_suite("prop3", 12); }},
      {"bijection_certificate", "image in the codomain, injectivity and cardinalities over every cactus, n <= 5",
       [] { return from_suite("bijection", 5); }},
      {"worked_examples", "worked examples reproduce the printed relabelings, chi and sigmas", worked_examples},
      {"trivial_nu_reduction", "nu = [1^n]: triangle counts, reduction, round trip and counts, n <= 6",
       [] { return from_suite("reduce5", 6); }},
      {"series_fixed_point", "generating-series coefficients against tree counts, n <= 5",
       [] { return from_suite("series", 5); }},
      {"genus_zero", "genus-zero triples: factorization counts, direct counts, closed expression, n <= 6",
       [] { return from_suite("genus0", 6); }},
      {"power_to_monomial", "power-sum to monomial conversion against explicit expansion, n <= 8",
       [] { return from_suite("symfunc", 8); }},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<const Criterion*> chosen;
  for (const auto& c : criteria())
    if (argc < 2 || c.name == std::string(argv[1])) chosen.push_back(&c);
  if (chosen.empty()) {
    std::cerr << "unknown criterion '" << argv[1] << "'; choose from:";
    for (const auto& c : criteria()) std::cerr << " " << c.name;
    std::cerr << "\n";
    return 2;
  }
  int failed = 0;
  for (const Criterion* c : chosen) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c->run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.details.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << (o.pass ? "PASS " : "FAIL ") << c->name << ": " << c->description << " [" << timing << "]\n";
    for (const auto& d : o.details) std::cout << "    " << d << "\n";
    std::cout.flush();
    if (!o.pass) ++failed;
  }
  if (chosen.size() > 1)
    std::cout << (chosen.size() - failed) << " of " << chosen.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
