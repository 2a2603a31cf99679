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
"""Exit codes, output formats and determinism of the command-line tool."""

import json
import os
import subprocess

import pytest

CACTI = os.environ.get("CACTI_BIN", "cacti")

EXAMPLE = [
    "--pi1", "{4,5},{1,2,3,6}",
    "--pi2", "{1,3,4,5},{2,6}",
    "--pi3", "{1,3,4,6},{2},{5}",
    "--alpha1", "(1 2 3 6)(4)(5)",
    "--alpha2", "(1 5 3)(2)(4)(6)",
]
TEN = [
    "--pi1", "{3,4,6,7},{1,2,5,8,9,10}",
    "--pi2", "{1,2,4,5,7,10},{3,9},{6,8}",
    "--pi3", "{1},{2},{3},{4},{5},{6},{7},{8},{9},{10}",
    "--alpha1", "(1 8 9 10)(2 5)(3 4 6 7)",
    "--alpha2", "(1 5 4 2 7)",
]


def run(*args, stdin=None):
    env = dict(os.environ, NO_COLOR="1")
    return subprocess.run([CACTI, *args], input=stdin, capture_output=True, text=True, env=env)


def test_coeff_both_engines():
    r = run("coeff", "--kind", "k3", "--lambda", "2,1,1,1", "--mu", "2,2,1", "--nu", "2,1,1,1", "--mode", "both")
    assert r.returncode == 0
    assert r.stdout.strip() == "25 25 MATCH"


def test_coeff_closed_and_trivial():
    assert run("coeff", "--kind", "c2", "--lambda", "2,1", "--mu", "2,1", "--mode", "closed").stdout.strip() == "3"
    assert run("coeff", "--kind", "k3", "--lambda", "1", "--mu", "1", "--nu", "1").stdout.strip() == "1"


def test_coeff_json():
    r = run("coeff", "--json", "--kind", "c3", "--lambda", "2", "--mu", "2", "--nu", "2", "--mode", "both")
    out = json.loads(r.stdout)
    assert out["brute"] == out["closed"] == "4"
    assert out["match"] is True


def test_parse_errors_exit_2():
    assert run("coeff", "--kind", "k3", "--lambda", "2,x", "--mu", "2", "--nu", "2").returncode == 2
    assert run("coeff", "--kind", "k3", "--lambda", "2,1", "--mu", "2", "--nu", "3").returncode == 2
    assert run("coeff", "--kind", "k9", "--lambda", "1", "--mu", "1").returncode == 2
    assert run("nosuchcommand").returncode == 2
    assert run().returncode == 2


def test_guard_exit_3():
    r = run("coeff", "--kind", "k3", "--lambda", "8", "--mu", "8", "--nu", "8", "--mode", "brute")
    assert r.returncode == 3
    assert "guard" in r.stderr
    assert run("verify", "--suite", "thm1", "--nmax", "9").returncode == 3


def test_verify_passes():
    r = run("verify", "--suite", "thm1", "--nmax", "5")
    assert r.returncode == 0
    assert "all triples pass" in r.stdout
    r = run("verify", "--suite", "bijection", "--nmax", "4")
    assert r.returncode == 0
    assert "injective + counts match" in r.stdout
    assert run("verify", "--suite", "prop3", "--nmax", "12").returncode == 0


def test_verify_failure_exit_1_with_counterexample():
    r = run("verify", "--suite", "cor1", "--nmax", "3", "--inject-fault")
    assert r.returncode == 1
    assert "first counterexample" in r.stdout
    r = run("verify", "--json", "--suite", "thm1", "--nmax", "2", "--inject-fault")
    assert r.returncode == 1
    assert json.loads(r.stdout)["first_failure"]


def test_theta_example():
    r = run("theta", "--json", *EXAMPLE)
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["chi"] == [3]
    assert out["sigma1"] == [2, 3, 1]
    assert out["sigma2"] == [2, 1]
    assert out["params"]["lambda"] == [4, 2]


def test_theta_from_stdin_and_trace():
    doc = json.dumps({"n": 1, "pi1": [[1]], "pi2": [[1]], "pi3": [[1]], "alpha1": [1], "alpha2": "(1)"})
    r = run("theta", "--json", "--input", "-", stdin=doc)
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["chi"] == [] and out["sigma1"] == [] and out["sigma2"] == []
    assert out["tree"]["slots"][0]["tri_child"]["color"] == "black"
    r = run("theta", "--trace", *EXAMPLE)
    assert "theta1  [3,4,5,1,2,6]" in r.stdout


def test_theta_invalid_cactus_exit_2():
    bad = list(EXAMPLE)
    bad[1] = "{1,4},{2,3,5,6}"
    assert run("theta", *bad).returncode == 2
    assert run("theta", "--input", "-", stdin="{not json").returncode == 2


def test_trees():
    r = run("trees", "--lambda", "2", "--mu", "2", "--nu", "2")
    assert r.returncode == 0
    assert r.stdout.strip().splitlines()[-1] == "count 2 formula 2"
    r = run("trees", "--json", "--bicolored", "--lambda", "2,1", "--mu", "2,1")
    out = json.loads(r.stdout)
    assert out["count"] == 3 and out["formula"] == "3" and len(out["trees"]) == 3
    tree = json.dumps(out["trees"][0])
    assert run("trees", "--bicolored", "--validate", "-", stdin=tree).returncode == 0
    assert run("trees", "--validate", "-", stdin=tree).returncode == 2


def test_reduce_round_trip(tmp_path):
    image = run("theta", "--json", *TEN)
    assert image.returncode == 0
    (tmp_path / "image.json").write_text(image.stdout)
    reduced = run("reduce", "--json", "--result", str(tmp_path / "image.json"))
    assert reduced.returncode == 0
    (tmp_path / "reduced.json").write_text(reduced.stdout)
    back = run("reduce", "--expand", "--json", "--result", str(tmp_path / "reduced.json"))
    assert json.loads(back.stdout)["tree"] == json.loads(image.stdout)["tree"]
    assert json.loads(back.stdout)["chi"] == json.loads(image.stdout)["chi"]
    # nu is not [1^n] here.
    assert run("reduce", *EXAMPLE).returncode == 2


def test_no_color_and_determinism():
    args = ("verify", "--suite", "series", "--nmax", "3")
    a, b = run(*args), run(*args)
    assert a.stdout == b.stdout
    assert "\x1b[" not in a.stdout


@pytest.mark.parametrize("sub", ["coeff", "verify", "theta", "trees", "reduce"])
def test_help(sub):
    r = run(sub, "--help")
    assert r.returncode == 0
    assert "--json" in r.stdout
