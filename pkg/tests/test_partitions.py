from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilporb import partitions as pt
from oracles import collapse_brute, dominates as oracle_dominates, parity_valid

partitions_st = st.lists(st.integers(1, 8), min_size=0, max_size=6).map(pt.normalize)


def test_normalize():
    assert pt.normalize([1, 3, 2]) == (3, 2, 1)
    assert pt.normalize(()) == ()
    with pytest.raises(Exception):
        pt.normalize([0, 1])


@given(partitions_st)
def test_transpose_involution(p):
    assert pt.transpose(pt.transpose(p)) == p
    assert pt.size(pt.transpose(p)) == pt.size(p)


@given(partitions_st, partitions_st)
def test_dominance_matches_oracle(p, q):
    if pt.size(p) != pt.size(q):
        return
    assert pt.dominates(p, q) == oracle_dominates(p, q)


@given(partitions_st)
def test_transpose_reverses_dominance(p):
    q = pt.collapse("so", p) if pt.size(p) else ()
    if pt.size(p) == pt.size(q):
        assert pt.dominates(p, q)
        assert pt.dominates(pt.transpose(q), pt.transpose(p))


@given(partitions_st, st.sampled_from(["so", "sp"]))
@settings(max_examples=300)
def test_collapse_against_oracle(p, kind):
    if not p:
        return
    if kind == "sp" and pt.size(p) % 2:
        with pytest.raises(ValueError):
            pt.collapse(kind, p)
        return
    got = pt.collapse(kind, p)
    assert got == collapse_brute(kind, p)
    # idempotent and parity-valid
    assert pt.parity_ok(kind, got)
    assert pt.collapse(kind, got) == got


@given(partitions_st, st.sampled_from(["gl", "so", "sp"]))
def test_parity_ok_matches_oracle(p, kind):
    assert pt.parity_ok(kind, p) == parity_valid(kind, p)


def test_very_even():
    assert pt.is_very_even((2, 2, 2, 2))
    assert pt.is_very_even((4, 4))
    assert not pt.is_very_even((4, 4, 1, 1))
    assert not pt.is_very_even((3, 3))


def test_valid_partitions_counts():
    # B2/C2 orbit partitions
    assert len(pt.valid_partitions("so", 5)) == 4
    assert len(pt.valid_partitions("sp", 4)) == 4
    assert len(pt.valid_partitions("so", 8)) == 10  # D4's 12 orbits minus 2 tag twins


def test_algebra_dim():
    assert pt.algebra_dim("gl", 3) == 9
    assert pt.algebra_dim("so", 5) == 10
    assert pt.algebra_dim("sp", 4) == 10
    assert pt.algebra_dim("so", 8) == 28


def test_padded_sum():
    assert pt.padded_sum((2, 1), (1, 1, 1)) == (3, 2, 1)
    assert pt.padded_sum((2,), ()) == (2,)
