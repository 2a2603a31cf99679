# Copyright 2026 The cacti Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import pytest

import cacti


def test_coefficients():
    assert cacti.k3_brute([2, 1, 1, 1], [2, 2, 1], [2, 1, 1, 1]) == 25
    assert cacti.k3_closed([2, 1, 1, 1], [2, 2, 1], [2, 1, 1, 1]) == 25
    assert cacti.k2_brute([2, 1], [2, 1]) == cacti.k2_closed([2, 1], [2, 1]) == 3
    assert cacti.c3_direct([2], [2], [2]) == cacti.c3_closed([2], [2], [2]) == 4
    assert cacti.c2_brute([2], [2]) == cacti.c2_closed([2], [2]) == 2
    assert cacti.m_coeff(5, 4, 3, 4) == 12


def test_big_integers_are_python_ints():
    v = cacti.c3_closed([30], [30], [30])
    assert isinstance(v, int)
    assert v == math.factorial(30) ** 2


def test_trees():
    assert cacti.thorn_cactus_count([2], [2], [2], 0, 0, 0) == 2
    assert cacti.thorn_cactus_count([1], [1], [1], 0, 1, 0) == 1
    assert cacti.bicolored_tree_count([2, 1], [2, 1]) == 3
    assert cacti.prop3_identity(5, 4, 3, 4)


def test_power_to_monomial():
    table = cacti.power_to_monomial([1, 1])
    assert {tuple(e["key"]): e["value"] for e in table} == {("1,1",): "2", ("2",): "1"}


def test_theta_and_reduce():
    image = cacti.theta(6, [[4, 5], [1, 2, 3, 6]], [[1, 3, 4, 5], [2, 6]], [[1, 3, 4, 6], [2], [5]],
                        "(1 2 3 6)", "(1 5 3)")
    assert image["chi"] == [3]
    assert image["sigma1"] == [2, 3, 1]
    assert image["sigma2"] == [2, 1]
    with pytest.raises(cacti.InvalidInput):
        cacti.reduce(image)

    ten = cacti.theta(10, [[3, 4, 6, 7], [1, 2, 5, 8, 9, 10]], [[1, 2, 4, 5, 7, 10], [3, 9], [6, 8]],
                      [[k] for k in range(1, 11)], "(1 8 9 10)(2 5)(3 4 6 7)", "(1 5 4 2 7)")
    red = cacti.reduce(ten)
    assert red["sigma"] == ten["chi"]
    assert red["tree"]["color"] == "white"


def test_errors():
    with pytest.raises(cacti.Refusal):
        cacti.k3_brute([8], [8], [8])
    with pytest.raises(ValueError):
        cacti.k3_closed([2], [3], [2])
    with pytest.raises(ValueError):
        cacti.verify("nosuchsuite")


def test_verify():
    report = cacti.verify("cor1", 5)
    assert report["passed"] and report["failures"] == 0 and report["cases"] > 0
