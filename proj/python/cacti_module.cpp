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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cacti/bijection.hpp"
#include "cacti/checks.hpp"
#include "cacti/enumeration.hpp"
#include "cacti/formulas.hpp"
#include "cacti/symfunc.hpp"

namespace py = pybind11;
using namespace cacti;

namespace {

// Big integers cross the boundary as decimal strings.
py::int_ to_py(const BigInt& v) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10))); }

py::object from_json(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }
nlohmann::json to_json(const py::object& o) {
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

IntegerPartition part(const std::vector<int>& parts) { return IntegerPartition(parts); }

PartitionedCactus pc_from(int n, const std::vector<std::vector<int>>& pi1, const std::vector<std::vector<int>>& pi2,
                          const std::vector<std::vector<int>>& pi3, const std::string& alpha1,
                          const std::string& alpha2) {
  PartitionedCactus pc{SetPartition(n, pi1), SetPartition(n, pi2), SetPartition(n, pi3),
                       parse_permutation(alpha1, n), parse_permutation(alpha2, n)};
  pc = canonical_indexing(pc);
  if (auto v = pc.violations(); !v.empty()) throw InvalidInput(v.front());
  return pc;
}

}  // namespace

PYBIND11_MODULE(_cacti, m) {
  m.doc() = "Exact counts of long-cycle factorizations, partitioned cacti and thorn cactus trees";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<Refusal>(m, "Refusal", PyExc_RuntimeError);
  py::register_exception<InternalInconsistency>(m, "InternalInconsistency", PyExc_AssertionError);

  m.def("k3_brute", [](const std::vector<int>& l, const std::vector<int>& u, const std::vector<int>& v) {
    return to_py(k3_brute(part(l), part(u), part(v)));
  }, py::arg("lam"), py::arg("mu"), py::arg("nu"));
  m.def("k3_closed", [](const std::vector<int>& l, const std::vector<int>& u, const std::vector<int>& v) {
    return to_py(k3_closed(part(l), part(u), part(v)));
  }, py::arg("lam"), py::arg("mu"), py::arg("nu"));
  m.def("k2_brute", [](const std::vector<int>& l, const std::vector<int>& u) { return to_py(k2_brute(part(l), part(u))); },
        py::arg("lam"), py::arg("mu"));
  m.def("k2_closed", [](const std::vector<int>& l, const std::vector<int>& u) { return to_py(k2_closed(part(l), part(u))); },
        py::arg("lam"), py::arg("mu"));
  m.def("c3_direct", [](const std::vector<int>& l, const std::vector<int>& u, const std::vector<int>& v) {
    return to_py(c3_direct(part(l), part(u), part(v)));
  }, py::arg("lam"), py::arg("mu"), py::arg("nu"));
  m.def("c3_closed", [](const std::vector<int>& l, const std::vector<int>& u, const std::vector<int>& v) {
    return to_py(c3_closed(part(l), part(u), part(v)));
  }, py::arg("lam"), py::arg("mu"), py::arg("nu"));
  m.def("c2_brute", [](const std::vector<int>& l, const std::vector<int>& u) { return to_py(c2_brute(part(l), part(u))); },
        py::arg("lam"), py::arg("mu"));
  m.def("c2_closed", [](const std::vector<int>& l, const std::vector<int>& u) { return to_py(c2_closed(part(l), part(u))); },
        py::arg("lam"), py::arg("mu"));
  m.def("m_coeff", [](int n, int l1, int l2, int l3) { return to_py(m_coeff(n, l1, l2, l3)); });

  m.def("thorn_cactus_count", [](const std::vector<int>& l, const std::vector<int>& u, const std::vector<int>& v,
                                 int g, int w, int b) {
    return to_py(thorn_cactus_count(part(l), part(u), part(v), g, w, b).value);
  }, py::arg("lam"), py::arg("mu"), py::arg("nu"), py::arg("g"), py::arg("w"), py::arg("b"));
  m.def("bicolored_tree_count", [](const std::vector<int>& l, const std::vector<int>& u) {
    return to_py(bicolored_tree_count(part(l), part(u)));
  }, py::arg("lam"), py::arg("mu"));
  m.def("prop3_identity", &prop3_identity, py::arg("n"), py::arg("l1"), py::arg("l2"), py::arg("l3"));

  m.def("power_to_monomial", [](const std::vector<int>& l) { return from_json(nlohmann::json::parse(power_to_monomial(part(l)).to_json())); },
        py::arg("lam"), "Coefficients of p_lam in the monomial basis, as the JSON table.");

  m.def("theta", [](int n, const std::vector<std::vector<int>>& pi1, const std::vector<std::vector<int>>& pi2,
                    const std::vector<std::vector<int>>& pi3, const std::string& alpha1, const std::string& alpha2) {
    return from_json(theta_to_json(theta(pc_from(n, pi1, pi2, pi3, alpha1, alpha2))));
  }, py::arg("n"), py::arg("pi1"), py::arg("pi2"), py::arg("pi3"), py::arg("alpha1"), py::arg("alpha2"),
        "Image (tree, sigma1, sigma2, chi) of a partitioned 3-cactus. Permutations use cycle or one-line notation.");
  m.def("reduce", [](const py::object& image) {
    const ThetaResult r = theta_from_json(to_json(image));
    const Reduced red = reduce_trivial_nu(r.tree, r.sigma1, r.sigma2, r.chi);
    py::dict d;
    d["tree"] = from_json(tree_to_json(red.tree));
    d["sigma"] = red.sigma.images();
    return d;
  }, py::arg("image"), "Two-colored thorn tree and permutation for an image with nu = [1^n].");

  m.def("verify", [](const std::string& suite, int nmax) {
    for (const auto& s : suites()) {
      if (s.name != suite) continue;
      if (nmax > s.max_nmax) throw Refusal("nmax exceeds the guard for " + suite);
      SuiteOptions o;
      o.nmax = nmax ? nmax : s.default_nmax;
      SuiteReport r;
      {
        py::gil_scoped_release release;
        r = s.run(o);
      }
      py::dict d;
      d["suite"] = r.suite;
      d["cases"] = r.cases;
      d["failures"] = r.failures;
      d["passed"] = r.passed();
      d["first_failure"] = r.first_failure;
      d["lines"] = r.lines;
      return d;
    }
    throw InvalidInput("unknown suite '" + suite + "'");
  }, py::arg("suite"), py::arg("nmax") = 0);
}
