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

// Verification sweeps shared by the command-line tool and the acceptance
// binary. Each sweep compares an exact closed form or construction against
// an independent exhaustive oracle and reports tallies.

#ifndef CACTI_CHECKS_HPP_
#define CACTI_CHECKS_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cacti {

struct SuiteReport {
  std::string suite;
  int64_t cases = 0;
  int64_t failures = 0;
  std::string first_failure;       // empty when everything passed
  std::vector<std::string> lines;  // per-n tallies and findings, in order
  bool passed() const { return failures == 0; }

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
  void note(std::string line) { lines.push_back(std::move(line)); }
};

struct SuiteOptions {
  int nmax = 0;
  // Perturbs the closed-form side of the first comparison by one, so that
  // callers can check that failures are reported.
  bool inject_fault = false;
};

// Exact product formula for partitioned 3-cacti against direct counting
// (n <= 5) and the refinement sums over factorization counts (n = 6).
SuiteReport check_product_formula(const SuiteOptions& o);
// Partitioned bicolored maps against their closed form.
SuiteReport check_two_factor_formula(const SuiteOptions& o);
// Thorn cactus tree product formula against exhaustive generation.
SuiteReport check_tree_count_formula(const SuiteOptions& o);
// The summation identity over (g, w, b) for n <= nmax, and the tree-count
// decomposition of C against direct counting for n <= min(nmax, 5).
SuiteReport check_summation_identity(const SuiteOptions& o);
// Image in the codomain, injectivity, recovery of the intermediates and
// cardinality of the codomain, over every partitioned 3-cactus.
SuiteReport check_bijection(const SuiteOptions& o);
// Coefficients of the generating-series fixed point against tree counts.
SuiteReport check_series(const SuiteOptions& o);
// The nu = [1^n] reduction: triangle counts, validity, round trip, counts.
SuiteReport check_reduce(const SuiteOptions& o);
// Genus-zero triples: factorization counts, direct counts and the
// closed genus-zero expression.
SuiteReport check_genus0(const SuiteOptions& o);
// Power-sum to monomial conversion against polynomial expansion.
SuiteReport check_symfunc(const SuiteOptions& o);

struct SuiteInfo {
  std::string name;
  int default_nmax;
  int max_nmax;
  std::function<SuiteReport(const SuiteOptions&)> run;
};
// thm1, cor1, prop2, prop3, bijection, series, reduce5, genus0, symfunc.
const std::vector<SuiteInfo>& suites();

}  // namespace cacti

#endif  // CACTI_CHECKS_HPP_
