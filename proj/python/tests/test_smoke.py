# Copyright 2026 The qsubctl Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os
import subprocess

import numpy as np
import pytest
import scipy.linalg

import qsubctl


def test_matrix_exp_matches_scipy():
    rng = np.random.default_rng(0)
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    np.testing.assert_allclose(qsubctl.matrix_exp(a), scipy.linalg.expm(a), atol=1e-10)


def test_hermitian_eig():
    x = np.array([[0, 1], [1, 0]], dtype=complex)
    values, vectors = qsubctl.hermitian_eig(x)
    np.testing.assert_allclose(values, [-1, 1], atol=1e-12)
    np.testing.assert_allclose(x @ vectors, vectors * values, atol=1e-12)


def test_evolve_piecewise():
    x = qsubctl.pauli_string("X")
    z = qsubctl.pauli_string("Z")
    u = qsubctl.evolve_piecewise([(x, 0.3), (z, 1.1)], 2)
    expected = scipy.linalg.expm(-1.1j * z) @ scipy.linalg.expm(-0.3j * x)
    np.testing.assert_allclose(u, expected, atol=1e-12)


def test_closures_and_commutant():
    gens = qsubctl.example1_generators()
    assert len(qsubctl.lie_closure(gens)) == 3
    assert len(qsubctl.associative_closure(gens)) == 5
    assert len(qsubctl.lie_closure(qsubctl.swap_generators(3))) == 4
    z2 = [np.eye(4, dtype=complex), qsubctl.pauli_string("ZZ")]
    assert len(qsubctl.commutant(z2)) == 8


def test_analyze_example():
    report = qsubctl.analyze(qsubctl.example1_generators(), seed=7)
    assert report["closure_dim"] == 3
    layout = sorted((c["d"], c["n"]) for c in report["components"])
    assert layout == [(1, 2), (2, 1)]
    code = next(c for c in report["components"] if c["d"] == 2)
    assert code["universal"] and code["deficiency"] == 0
    assert report["wedderburn"]["pass"]


def test_decompose_frames():
    comps = qsubctl.decompose(qsubctl.example1_generators())
    frames = [f for c in comps for f in c["frames"]]
    stacked = np.hstack(frames)
    np.testing.assert_allclose(stacked.conj().T @ stacked, np.eye(4), atol=1e-9)
    two = comps[0]["frames"][0]
    proj = two @ two.conj().T
    assert abs(proj[1, 1] + proj[2, 2] - 2) < 1e-9


def test_group_paths():
    r, p = qsubctl.dihedral_rep()
    g = qsubctl.group_closure([r, p])
    assert g["order"] == 6
    rep = qsubctl.group_algebra_analyze([r, p], seed=3)
    assert rep["group"]["order"] == 6
    assert rep["components"][0]["d"] == 2 and rep["components"][0]["universal"]
    f = qsubctl.dihedral_fourier_frame()
    np.testing.assert_allclose(f.conj().T @ p @ f, [[0, 1], [1, 0]], atol=1e-10)


def test_entangling():
    swap = np.eye(4)[[0, 2, 1, 3]].astype(complex)
    cnot = np.eye(4)[[0, 1, 3, 2]].astype(complex)
    assert qsubctl.schmidt_rank(swap, 2, 2) == 4
    assert qsubctl.schmidt_rank(cnot, 2, 2) == 2
    assert not qsubctl.is_entangling(swap, 2, 2)
    assert qsubctl.is_entangling(cnot, 2, 2)


def test_models():
    assert qsubctl.sector_dimension(3, 2) == 6
    assert len(qsubctl.boson_generators(2, 2)) == 4
    problem = qsubctl.catalog_problem("boson:3:2")
    assert problem["dimension"] == 6
    assert "example1" in qsubctl.catalog_names()


def test_errors_are_raised():
    with pytest.raises(qsubctl.Error):
        qsubctl.lie_closure([1j * qsubctl.pauli_string("X")])
    with pytest.raises(qsubctl.Error):
        qsubctl.catalog_problem("nope")
    with pytest.raises(qsubctl.Error):
        qsubctl.is_entangling(2 * np.eye(4, dtype=complex), 2, 2)


@pytest.mark.skipif("QSUBCTL_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_round_trip(tmp_path):
    cli = os.environ["QSUBCTL_CLI"]
    problem = tmp_path / "ex.json"
    subprocess.run([cli, "examples", "example1", "--out", str(problem)], check=True)
    out = subprocess.run([cli, "analyze", str(problem), "--format", "json"], check=True,
                         capture_output=True, text=True).stdout
    cli_report = json.loads(out)
    py_report = qsubctl.analyze(qsubctl.example1_generators())
    assert cli_report["components"] == py_report["components"]
