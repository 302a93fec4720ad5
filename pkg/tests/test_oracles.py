"""Sanity checks for the independent oracles themselves.

Everything asserted here is a textbook fact, not a value computed by the
package; if these fail the oracles are wrong, not the library.
"""

import pytest

from oracles import (
    all_partitions,
    collapse_brute,
    dominates,
    gl_orbit_dim_matrix,
    invariant_form,
    iso_orbit_dim_matrix,
    jordan_matrix,
    parity_valid,
    _form_rows,
    _matrix_rank,
)


def test_jordan_matrix_shape():
    e = jordan_matrix((3, 2))
    assert len(e) == 5
    assert sum(sum(row) for row in e) == 3  # one 1 per non-terminal box


def test_gl_regular_and_zero():
    # commutant of a regular nilpotent is n-dimensional
    assert gl_orbit_dim_matrix((4,)) == 16 - 4
    assert gl_orbit_dim_matrix((1, 1, 1, 1)) == 0
    assert gl_orbit_dim_matrix((2, 1)) == 4


@pytest.mark.parametrize("kind,parts,n", [
    ("so", (5,), 5), ("so", (3, 1, 1), 5), ("so", (7, 1), 8),
    ("sp", (4,), 4), ("sp", (2, 2), 4), ("sp", (2, 2, 1, 1), 6),
])
def test_invariant_form_recovers_ambient_dim(kind, parts, n):
    g = invariant_form(kind, parts)
    ambient = n * n - _matrix_rank(_form_rows(g))
    want = n * (n - 1) // 2 if kind == "so" else n * (n + 1) // 2
    assert ambient == want


def test_iso_regular_orbits():
    # dim g minus rank for the regular orbit
    assert iso_orbit_dim_matrix("so", (5,)) == 10 - 2
    assert iso_orbit_dim_matrix("sp", (4,)) == 10 - 2
    assert iso_orbit_dim_matrix("so", (7, 1)) == 28 - 4


def test_partition_helpers():
    assert len(all_partitions(5)) == 7
    assert len(all_partitions(12)) == 77
    assert parity_valid("so", (2, 2, 1)) and not parity_valid("so", (2, 1))
    assert parity_valid("sp", (2, 1, 1)) and not parity_valid("sp", (3, 1))
    assert dominates((3, 1), (2, 2)) and not dominates((2, 2), (3, 1))


def test_collapse_brute_basics():
    assert collapse_brute("sp", (3, 1)) == (2, 2)
    assert collapse_brute("so", (4, 2)) == (3, 3)
    assert collapse_brute("so", (2, 2, 1)) == (2, 2, 1)
