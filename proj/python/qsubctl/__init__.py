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

"""Python access to the qsubctl encoded-universality toolkit."""

import json as _json

from ._qsubctl import (
    Error,
    associative_closure,
    boson_generators,
    catalog_names,
    commutant,
    commutator,
    decompose,
    dihedral_fourier_frame,
    dihedral_rep,
    evolve_piecewise,
    example1_generators,
    example1_prime_generators,
    group_closure,
    hermitian_eig,
    is_entangling,
    lie_closure,
    matrix_exp,
    pauli_string,
    schmidt_rank,
    sector_dimension,
    swap_generators,
    traceless_dim,
)
from . import _qsubctl


def analyze(generators, seed=0, tol_rank=1e-9, tol_inv=1e-8, cluster_gap=1e-7):
    """Full pipeline on a list of Hermitian matrices; returns the report as a dict."""
    return _json.loads(_qsubctl._analyze_json(list(generators), seed, tol_rank, tol_inv, cluster_gap))


def group_algebra_analyze(group_generators, seed=0, samples=2):
    """Close the group, sample its algebra, and analyze; returns the report as a dict."""
    return _json.loads(_qsubctl._group_algebra_json(list(group_generators), seed, samples))


def catalog_problem(name):
    """Problem document for a catalog entry such as 'example1' or 'boson:2:2'."""
    return _json.loads(_qsubctl._catalog_json(name))


__all__ = [
    "Error",
    "analyze",
    "associative_closure",
    "boson_generators",
    "catalog_names",
    "catalog_problem",
    "commutant",
    "commutator",
    "decompose",
    "dihedral_fourier_frame",
    "dihedral_rep",
    "evolve_piecewise",
    "example1_generators",
    "example1_prime_generators",
    "group_closure",
    "hermitian_eig",
    "is_entangling",
    "lie_closure",
    "matrix_exp",
    "pauli_string",
    "group_algebra_analyze",
    "schmidt_rank",
    "sector_dimension",
    "swap_generators",
    "traceless_dim",
]
