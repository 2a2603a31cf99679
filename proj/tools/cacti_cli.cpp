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

// cacti: coefficients, verification sweeps, the cactus-to-tree map, tree
// enumeration and the nu = [1^n] reduction.
//
// Exit status: 0 success, 1 a verification failed, 2 bad input or a broken
// invariant, 3 a size guard was hit.

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cacti/bijection.hpp"
#include "cacti/checks.hpp"
#include "cacti/enumeration.hpp"
#include "cacti/formulas.hpp"
#include "json.hpp"

namespace {

using namespace cacti;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitGuard = 3;

bool use_color() {
  const char* nc = std::getenv("NO_COLOR");
  if (nc && *nc) return false;
  return isatty(STDOUT_FILENO);
}

std::string paint(const std::string& s, const char* code) {
  return use_color() ? std::string("\033[") + code + "m" + s + "\033[0m" : s;
}

json partition_json(const IntegerPartition& p) { return p.parts(); }

// Reads a whole file, or stdin for "-".
std::string slurp(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read " + path);
    os << in.rdbuf();
  }
  return os.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

int largest_integer(const std::string& s) {
  int best = 0;
  static const std::regex num("[0-9]+");
  for (auto it = std::sregex_iterator(s.begin(), s.end(), num); it != std::sregex_iterator(); ++it)
    best = std::max(best, std::stoi(it->str()));
  return best;
}

// A set partition given as "{1,2},{3}" or [[1,2],[3]].
SetPartition set_partition_from(const json& j, int n) {
  if (j.is_string()) return parse_set_partition(j.get<std::string>(), n);
  if (j.is_array()) return SetPartition(n, j.get<std::vector<std::vector<int>>>());
  throw InvalidInput("set partitions are strings like \"{1,2},{3}\" or arrays of arrays");
}

// A permutation given in cycle or one-line notation, or as a one-line array.
Permutation permutation_from(const json& j, int n) {
  if (j.is_string()) return parse_permutation(j.get<std::string>(), n);
  if (j.is_array()) {
    Permutation p(j.get<std::vector<int>>());
    if (p.size() != n) throw InvalidInput("permutation has the wrong length");
    return p;
  }
  throw InvalidInput("permutations are strings like \"(1 2 3)\" or one-line arrays");
}

struct PcArgs {
  int n = 0;
  std::string pi1, pi2, pi3, alpha1, alpha2, input;
};

void add_pc_options(CLI::App* sub, PcArgs& a) {
  sub->add_option("--n", a.n, "ground set size (default: largest element of --pi1)");
  sub->add_option("--pi1", a.pi1, "blocks of pi1, e.g. \"{4,5},{1,2,3,6}\"");
  sub->add_option("--pi2", a.pi2, "blocks of pi2");
  sub->add_option("--pi3", a.pi3, "blocks of pi3");
  sub->add_option("--alpha1", a.alpha1, "alpha1 in cycle or one-line notation");
  sub->add_option("--alpha2", a.alpha2, "alpha2 in cycle or one-line notation");
  sub->add_option("--input", a.input, "JSON file (or - for stdin) with n, pi1, pi2, pi3, alpha1, alpha2");
}

PartitionedCactus read_pc(const PcArgs& a) {
  json j;
  if (!a.input.empty()) {
    j = parse_json(slurp(a.input));
  } else {
    if (a.pi1.empty() || a.pi2.empty() || a.pi3.empty() || a.alpha1.empty() || a.alpha2.empty())
      throw InvalidInput("give --pi1 --pi2 --pi3 --alpha1 --alpha2, or --input");
    j = {{"pi1", a.pi1}, {"pi2", a.pi2}, {"pi3", a.pi3}, {"alpha1", a.alpha1}, {"alpha2", a.alpha2}};
    if (a.n) j["n"] = a.n;
  }
  for (const char* k : {"pi1", "pi2", "pi3", "alpha1", "alpha2"})
    if (!j.contains(k)) throw InvalidInput(std::string("missing field \"") + k + "\"");
  int n = j.value("n", 0);
  if (n == 0) n = j["pi1"].is_string() ? largest_integer(j["pi1"].get<std::string>()) : largest_integer(j["pi1"].dump());
  if (n < 1) throw InvalidInput("cannot determine n");
  PartitionedCactus pc{set_partition_from(j["pi1"], n), set_partition_from(j["pi2"], n),
                       set_partition_from(j["pi3"], n), permutation_from(j["alpha1"], n),
                       permutation_from(j["alpha2"], n)};
  if (pc.alpha1.size() != n || pc.alpha2.size() != n) throw InvalidInput("permutations must act on {1..n}");
  pc = canonical_indexing(pc);
  if (auto v = pc.violations(); !v.empty()) throw InvalidInput(v.front());
  return pc;
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

// ---------------------------------------------------------------------------

struct CoeffArgs {
  std::string kind = "k3", lambda, mu, nu, mode = "closed";
  bool force = false;
};

int run_coeff(const CoeffArgs& a, bool as_json) {
  const bool three = a.kind == "k3" || a.kind == "c3";
  const IntegerPartition lam = parse_partition(a.lambda), mu = parse_partition(a.mu);
  IntegerPartition nu;
  if (three) {
    if (a.nu.empty()) throw InvalidInput("--nu is required for " + a.kind);
    nu = parse_partition(a.nu);
  }
  const int n = lam.weight();
  if (mu.weight() != n || (three && nu.weight() != n)) throw InvalidInput("partitions must have the same weight");
  std::optional<BigInt> brute, closed;
  if (a.mode == "brute" || a.mode == "both") {
    const int k3_guard = a.force ? 15 : kDefaultGuardK3;
    const int c3_guard = a.force ? 15 : kDefaultGuardC3Direct;
    const int two_guard = a.force ? 15 : kDefaultGuardTwoFactor;
    if (a.kind == "k3") brute = k3_brute(lam, mu, nu, k3_guard);
    if (a.kind == "c3") brute = c3_direct(lam, mu, nu, c3_guard);
    if (a.kind == "k2") brute = k2_brute(lam, mu, two_guard + 1);
    if (a.kind == "c2") brute = c2_brute(lam, mu, two_guard);
  }
  if (a.mode == "closed" || a.mode == "both") {
    if (a.kind == "k3") closed = k3_closed(lam, mu, nu);
    if (a.kind == "c3") closed = c3_closed(lam, mu, nu);
    if (a.kind == "k2") closed = k2_closed(lam, mu);
    if (a.kind == "c2") closed = c2_closed(lam, mu);
  }
  const bool both = brute && closed;
  const bool match = !both || *brute == *closed;
  if (as_json) {
    json j{{"kind", a.kind}, {"lambda", partition_json(lam)}, {"mu", partition_json(mu)}};
    if (three) j["nu"] = partition_json(nu);
    if (brute) j["brute"] = brute->str();
    if (closed) j["closed"] = closed->str();
    if (both) j["match"] = match;
    std::cout << j.dump() << "\n";
  } else if (both) {
    std::cout << brute->str() << " " << closed->str() << " "
              << (match ? paint("MATCH", "32") : paint("MISMATCH", "31")) << "\n";
  } else {
    std::cout << (brute ? *brute : *closed).str() << "\n";
  }
  return match ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  int nmax = 0;
  bool force = false;
  bool inject_fault = false;
};

int run_verify(const VerifyArgs& a, bool as_json) {
  const SuiteInfo* info = nullptr;
  for (const auto& s : suites())
    if (s.name == a.suite) info = &s;
  if (!info) throw InvalidInput("unknown suite '" + a.suite + "'");
  SuiteOptions o;
  o.nmax = a.nmax ? a.nmax : info->default_nmax;
  o.inject_fault = a.inject_fault;
  if (o.nmax < 1) throw InvalidInput("--nmax must be positive");
  if (o.nmax > info->max_nmax && !a.force)
    throw Refusal("--nmax " + std::to_string(o.nmax) + " exceeds the guard " + std::to_string(info->max_nmax) +
                  " for suite " + a.suite + " (use --force)");
  const SuiteReport r = info->run(o);
  const std::string summary = r.suite == "bijection" ? "injective + counts match"
                              : r.suite == "thm1" || r.suite == "prop3" ? "all triples pass"
                                                                          : "all cases pass";
  if (as_json) {
    json j{{"suite", r.suite}, {"nmax", o.nmax}, {"cases", r.cases}, {"failures", r.failures},
           {"passed", r.passed()}, {"lines", r.lines}};
    if (!r.passed()) j["first_failure"] = r.first_failure;
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& l : r.lines) std::cout << l << "\n";
    if (r.passed())
      std::cout << paint("PASS", "32") << " " << r.suite << ": " << summary << " (" << r.cases << " cases)\n";
    else
      std::cout << paint("FAIL", "31") << " " << r.suite << ": " << r.failures << " of " << r.cases
                << " cases failed; first counterexample: " << r.first_failure << "\n";
  }
  return r.passed() ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------

int run_theta(const PcArgs& a, bool trace, bool as_json) {
  const PartitionedCactus pc = read_pc(a);
  ThetaTrace tr;
  const ThetaResult r = theta(pc, &tr);
  json j = theta_to_json(r);
  if (trace) {
    j["trace"] = {{"theta1", tr.relabeled.theta1.images()},
                  {"theta2", tr.relabeled.theta2.images()},
                  {"theta3", tr.relabeled.theta3.images()},
                  {"S1", tr.s.s1},
                  {"S2", tr.s.s2},
                  {"S3", tr.s.s3},
                  {"chi_tilde", tr.cs.chi_tilde},
                  {"E", tr.cs.e},
                  {"F", tr.cs.f},
                  {"labeled_tree", tr.upsilon2.key()}};
  }
  if (as_json) {
    std::cout << j.dump() << "\n";
    return kExitOk;
  }
  std::cout << "tree    " << r.tree.key() << "\n"
            << "sigma1  [" << join(r.sigma1.images()) << "]\n"
            << "sigma2  [" << join(r.sigma2.images()) << "]\n"
            << "chi     (" << join(r.chi) << ")\n"
            << "types   " << r.lam.str() << " | " << r.mu.str() << " | " << r.nu.str() << "\n"
            << "(g,w,b) (" << r.g << "," << r.w << "," << r.b << ")\n";
  if (trace) {
    std::cout << "theta1  " << to_one_line(tr.relabeled.theta1) << "\n"
              << "theta2  " << to_one_line(tr.relabeled.theta2) << "\n"
              << "theta3  " << to_one_line(tr.relabeled.theta3) << "\n"
              << "S1      {" << join(tr.s.s1) << "}\n"
              << "S2      {" << join(tr.s.s2) << "}\n"
              << "S3      {" << join(tr.s.s3) << "}\n"
              << "chi~    (" << join(tr.cs.chi_tilde) << ")\n"
              << "labels  " << tr.upsilon2.key() << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct TreesArgs {
  std::string lambda, mu, nu;
  int g = 0, w = 0, b = 0;
  bool bicolored = false, count_only = false;
  std::string validate_file;
};

int run_trees(const TreesArgs& a, bool as_json) {
  if (!a.validate_file.empty()) {
    const Tree t = tree_from_json(parse_json(slurp(a.validate_file)));
    const auto problems = a.bicolored ? validate_bicolored(t) : validate(t);
    if (as_json) {
      std::cout << json{{"valid", problems.empty()}, {"problems", problems}, {"key", t.key()}}.dump() << "\n";
    } else {
      std::cout << t.key() << "\n";
      for (const auto& p : problems) std::cout << "  " << p << "\n";
      std::cout << (problems.empty() ? "valid" : "invalid") << "\n";
    }
    return problems.empty() ? kExitOk : kExitBadInput;
  }
  const IntegerPartition lam = parse_partition(a.lambda), mu = parse_partition(a.mu);
  std::vector<Tree> trees;
  std::string formula;
  if (a.bicolored) {
    trees = enumerate_bicolored_thorn_trees(lam, mu);
    formula = bicolored_tree_count(lam, mu).str();
  } else {
    const IntegerPartition nu = parse_partition(a.nu);
    trees = enumerate_thorn_cactus_trees(lam, mu, nu, a.g, a.w, a.b);
    const auto c = thorn_cactus_closed(lam, mu, nu, a.g, a.w, a.b);
    formula = c ? c->str() : "undefined";
  }
  std::sort(trees.begin(), trees.end(), [](const Tree& x, const Tree& y) { return x.key() < y.key(); });
  if (as_json) {
    json j{{"count", trees.size()}, {"formula", formula}};
    if (!a.count_only) {
      j["trees"] = json::array();
      for (const auto& t : trees) j["trees"].push_back(tree_to_json(t));
    }
    std::cout << j.dump() << "\n";
  } else {
    if (!a.count_only)
      for (const auto& t : trees) std::cout << t.key() << "\n";
    std::cout << "count " << trees.size() << " formula " << formula << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

int run_reduce(const PcArgs& a, const std::string& result_file, bool expand, bool as_json) {
  if (expand) {
    if (result_file.empty()) throw InvalidInput("--expand needs --result with {\"tree\", \"sigma\"}");
    const json j = parse_json(slurp(result_file));
    if (!j.contains("tree") || !j.contains("sigma")) throw InvalidInput("expected fields \"tree\" and \"sigma\"");
    const ThetaResult r = expand_trivial_nu(tree_from_json(j["tree"]), Permutation(j["sigma"].get<std::vector<int>>()));
    if (as_json)
      std::cout << theta_to_json(r).dump() << "\n";
    else
      std::cout << "tree  " << r.tree.key() << "\nchi   (" << join(r.chi) << ")\n";
    return kExitOk;
  }
  ThetaResult r;
  if (!result_file.empty())
    r = theta_from_json(parse_json(slurp(result_file)));
  else
    r = theta(read_pc(a));
  const Reduced red = reduce_trivial_nu(r.tree, r.sigma1, r.sigma2, r.chi);
  if (as_json) {
    std::cout << json{{"tree", tree_to_json(red.tree)}, {"sigma", red.sigma.images()}}.dump() << "\n";
  } else {
    std::cout << "tree   " << red.tree.key() << "\n"
              << "sigma  " << join(red.sigma.images(), "") << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factorizations of the long cycle, cacti and thorn trees"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  CoeffArgs ca;
  auto* coeff = app.add_subcommand("coeff", "connection coefficient or partitioned-cacti count");
  coeff->add_option("--kind", ca.kind, "k3, k2, c3 or c2")->check(CLI::IsMember({"k3", "k2", "c3", "c2"}));
  coeff->add_option("--lambda", ca.lambda, "partition, e.g. 2,1,1")->required();
  coeff->add_option("--mu", ca.mu, "partition")->required();
  coeff->add_option("--nu", ca.nu, "partition (k3 and c3)");
  coeff->add_option("--mode", ca.mode, "brute, closed or both")->check(CLI::IsMember({"brute", "closed", "both"}));
  coeff->add_flag("--force", ca.force, "lift the exhaustive-search guards");
  coeff->add_flag("--json", as_json, "machine-readable output");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a verification sweep");
  std::vector<std::string> names;
  for (const auto& s : suites()) names.push_back(s.name);
  verify->add_option("--suite", va.suite, "suite name")->required()->check(CLI::IsMember(names));
  verify->add_option("--nmax", va.nmax, "largest n (default per suite)");
  verify->add_flag("--force", va.force, "lift the size guard");
  verify->add_flag("--inject-fault", va.inject_fault, "perturb one comparison (exercises the failure path)");
  verify->add_flag("--json", as_json, "machine-readable output");

  PcArgs ta;
  bool trace = false;
  auto* th = app.add_subcommand("theta", "map a partitioned 3-cactus to (tree, sigma1, sigma2, chi)");
  add_pc_options(th, ta);
  th->add_flag("--trace", trace, "include the intermediate labels and relabelings");
  th->add_flag("--json", as_json, "machine-readable output");

  TreesArgs tra;
  auto* trees = app.add_subcommand("trees", "enumerate, count or validate thorn trees");
  trees->add_option("--lambda", tra.lambda, "white degrees");
  trees->add_option("--mu", tra.mu, "black degrees");
  trees->add_option("--nu", tra.nu, "grey degrees");
  trees->add_option("--g", tra.g, "triangles rooted at grey vertices");
  trees->add_option("--w", tra.w, "triangles rooted at white vertices");
  trees->add_option("--b", tra.b, "triangles rooted at black vertices");
  trees->add_flag("--bicolored", tra.bicolored, "two-colored thorn trees of types (lambda, mu)");
  trees->add_flag("--count-only", tra.count_only, "print only the count");
  trees->add_option("--validate", tra.validate_file, "validate a tree JSON file (- for stdin)");
  trees->add_flag("--json", as_json, "machine-readable output");

  PcArgs ra;
  std::string result_file;
  bool expand = false;
  auto* reduce = app.add_subcommand("reduce", "reduce an image with nu = [1^n] to a two-colored thorn tree");
  add_pc_options(reduce, ra);
  reduce->add_option("--result", result_file, "theta JSON output to reduce (- for stdin)");
  reduce->add_flag("--expand", expand, "inverse: read {\"tree\", \"sigma\"} from --result");
  reduce->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*coeff) return run_coeff(ca, as_json);
    if (*verify) return run_verify(va, as_json);
    if (*th) return run_theta(ta, trace, as_json);
    if (*trees) {
      if (tra.validate_file.empty() && (tra.lambda.empty() || tra.mu.empty() || (!tra.bicolored && tra.nu.empty())))
        throw InvalidInput("give --lambda --mu [--nu], or --validate");
      return run_trees(tra, as_json);
    }
    if (*reduce) return run_reduce(ra, result_file, expand, as_json);
  } catch (const Refusal& e) {
    std::cerr << "cacti: " << e.what() << "\n";
    return kExitGuard;
  } catch (const InvalidInput& e) {
    std::cerr << "cacti: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const InternalInconsistency& e) {
    std::cerr << "cacti: internal inconsistency: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "cacti: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
