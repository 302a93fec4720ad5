from fractions import Fraction as F

import pytest

from nilporb.errors import InputError, XiError
from nilporb.induction import CentralParameter, TailOrbit, zero_datum
from nilporb.orbitmethod import (
    AdjointOrbitLabel,
    OrbitMethodLabel,
    adjoint_label_from_coords,
    label_to_orbit,
    labels_equal,
    orbit_to_label,
    validate_adjoint_label,
    verify_injectivity,
)
from nilporb.roots import LeviLabel, build_root_system, normalizer_action, parse_type


COORD_CASES = [
    # (type, coords, levi blocks, tail rank, dClass, ssParam, gl orbits, tail orbit)
    ("A2", (1, 1, -2), (2, 1), 0, None, (F(1), F(-2)), ((1, 1), (1,)), None),
    ("C3", (2, 2, 0), (2,), 1, None, (F(2),), ((1, 1),), TailOrbit((1, 1))),
    # opposite coordinates land in one eigengroup
    ("C2", (1, -1), (2,), 0, None, (F(1),), ((1, 1),), None),
    # a single zero coordinate in type D is a gl_1 block, not a tail
    ("D4", (2, 2, 1, 0), (2, 1, 1), 0, None, (F(2), F(1), F(0)),
     ((1, 1), (1,), (1,)), None),
    # odd sign count with every block even: minus orientation
    ("D4", (1, 1, 1, -1), (4,), 0, "minus", (F(1),), ((1, 1, 1, 1),), None),
    # odd sign count with an odd block: sign carried by the last odd block
    ("D4", (2, 2, 2, -1), (3, 1), 0, None, (F(2), F(-1)), ((1, 1, 1), (1,)), None),
    ("B3", (3, 1, 0), (1, 1), 1, None, (F(3), F(1)), ((1,), (1,)),
     TailOrbit((1, 1, 1))),
    # two zeros in type D form an so_4 tail which absorbs the sign
    ("D4", (F(1, 2), -2, 0, 0), (1, 1), 2, None, (F(2), F(1, 2)), ((1,), (1,)),
     TailOrbit((1, 1, 1, 1))),
]


@pytest.mark.parametrize(
    "name,coords,blocks,m,dclass,ss,gls,tail", COORD_CASES)
def test_adjoint_label_from_coords(name, coords, blocks, m, dclass, ss, gls, tail):
    adj = adjoint_label_from_coords(parse_type(name), coords)
    assert adj.centralizerLevi.glBlocks == blocks
    assert adj.centralizerLevi.tailRank == m
    assert adj.centralizerLevi.dClass == dclass
    assert adj.ssParam == ss
    assert adj.gl_orbits() == gls
    assert adj.tail_orbit() == tail


def test_adjoint_label_from_coords_factor_orbits():
    # one (partition, tag) pair per gl block, then one for the tail
    ct = parse_type("C3")
    adj = adjoint_label_from_coords(ct, (2, 2, 0), [((2,), None), ((2,), None)])
    assert adj.gl_orbits() == ((2,),)
    assert adj.tail_orbit() == TailOrbit((2,))


def test_adjoint_label_from_coords_rejects():
    with pytest.raises(InputError):
        adjoint_label_from_coords(parse_type("A2"), (1, 1, 1))  # trace not zero
    with pytest.raises(InputError):
        adjoint_label_from_coords(parse_type("C2"), (1, 2, 3))  # too many coords


def test_validate_adjoint_label_branches():
    ct = parse_type("C3")

    def adj(levi, ss, gls, tail=None):
        return AdjointOrbitLabel(ct, levi, ss, (gls, tail))

    ok = adj(LeviLabel((2,), 1), (F(2),), ((1, 1),), TailOrbit((1, 1)))
    validate_adjoint_label(ok)
    with pytest.raises(InputError, match="entries for"):
        validate_adjoint_label(
            adj(LeviLabel((2,), 1), (F(2), F(1)), ((1, 1),), TailOrbit((1, 1))))
    with pytest.raises(InputError, match="exact rationals"):
        validate_adjoint_label(
            adj(LeviLabel((2,), 1), (2.0,), ((1, 1),), TailOrbit((1, 1))))
    with pytest.raises(InputError, match="does not fit"):
        validate_adjoint_label(
            adj(LeviLabel((2,), 1), (F(2),), ((3,),), TailOrbit((1, 1))))
    with pytest.raises(InputError, match="positive in types B and C"):
        validate_adjoint_label(
            adj(LeviLabel((2,), 1), (F(-2),), ((1, 1),), TailOrbit((1, 1))))
    with pytest.raises(InputError, match="distinct absolute values"):
        validate_adjoint_label(
            adj(LeviLabel((2, 1), 0), (F(2), F(2)), ((1, 1), (1,))))
    with pytest.raises(InputError, match="tail orbit missing"):
        validate_adjoint_label(adj(LeviLabel((2,), 1), (F(2),), ((1, 1),)))
    # type A constraints
    ct_a = parse_type("A3")

    def adj_a(blocks, ss, gls):
        return AdjointOrbitLabel(ct_a, LeviLabel(blocks, 0), ss, (gls, None))

    validate_adjoint_label(adj_a((2, 2), (F(1), F(-1)), ((1, 1), (1, 1))))
    with pytest.raises(InputError, match="trace zero"):
        validate_adjoint_label(adj_a((2, 2), (F(2), F(1)), ((1, 1), (1, 1))))
    with pytest.raises(InputError, match="decreasing values"):
        validate_adjoint_label(adj_a((2, 2), (F(-1), F(1)), ((1, 1), (1, 1))))


def test_validate_adjoint_label_d_signs():
    ct = parse_type("D4")

    def adj(levi, ss, gls, tail=None):
        return AdjointOrbitLabel(ct, levi, ss, (gls, tail))

    validate_adjoint_label(
        adj(LeviLabel((3, 1), 0), (F(2), F(-1)), ((1, 1, 1), (1,))))
    with pytest.raises(InputError, match="last odd block"):
        validate_adjoint_label(
            adj(LeviLabel((3, 1), 0), (F(-2), F(1)), ((1, 1, 1), (1,))))
    with pytest.raises(InputError, match="absorbed by the tail"):
        validate_adjoint_label(
            adj(LeviLabel((1, 1), 2), (F(2), F(-1)), ((1,), (1,)),
                TailOrbit((1, 1, 1, 1))))
    with pytest.raises(InputError, match="at most one negative"):
        validate_adjoint_label(
            adj(LeviLabel((1, 1, 1, 1), 0),
                (F(4), F(3), F(-2), F(-1)),
                ((1,), (1,), (1,), (1,))))


def test_roundtrip_on_coord_cases():
    for name, coords, *_ in COORD_CASES:
        ct = parse_type(name)
        adj = adjoint_label_from_coords(ct, coords)
        lbl = orbit_to_label(adj)
        back = label_to_orbit(lbl)
        assert back == adj, (name, coords, adj, back)


def test_roundtrip_with_nilpotent_parts():
    ct = parse_type("C4")
    adj = adjoint_label_from_coords(
        ct, (3, 3, 0, 0), [((2,), None), ((2, 1, 1), None)])
    lbl = orbit_to_label(adj)
    assert label_to_orbit(lbl) == adj
    # D ambient with a very even tail orbit
    ct = parse_type("D5")
    adj = adjoint_label_from_coords(
        ct, (5, 0, 0, 0, 0), [((1,), None), ((2, 2, 2, 2), "I")])
    assert adj.tail_orbit() == TailOrbit((2, 2, 2, 2), "I")
    lbl = orbit_to_label(adj)
    assert label_to_orbit(lbl) == adj


def test_labels_equal_up_to_symmetry():
    ct = parse_type("C3")
    a = orbit_to_label(adjoint_label_from_coords(ct, (1, 2, 3)))
    b = orbit_to_label(adjoint_label_from_coords(ct, (2, 1, 3)))
    c = orbit_to_label(adjoint_label_from_coords(ct, (1, 2, 4)))
    assert labels_equal(a, b)
    assert not labels_equal(a, c)
    assert a.symmetry.order == 48  # full signed permutation group on the Cartan
    assert a.levi.glBlocks == (1, 1, 1)


def test_xi_regularity_error():
    ct = parse_type("B2")
    levi = LeviLabel((2,), 0)
    datum = zero_datum(ct, levi)
    act = normalizer_action(build_root_system(ct), levi)
    lbl = OrbitMethodLabel(ct, levi, datum, CentralParameter((F(0),)), act)
    with pytest.raises(XiError, match=r"xi-not-regular: inducing the zero part has degree 2"):
        label_to_orbit(lbl)


def test_xi_regular_when_degree_one():
    # same levi, nonzero parameter: the block stays in the centralizer
    ct = parse_type("B2")
    levi = LeviLabel((2,), 0)
    datum = zero_datum(ct, levi)
    act = normalizer_action(build_root_system(ct), levi)
    lbl = OrbitMethodLabel(ct, levi, datum, CentralParameter((F(1),)), act)
    adj = label_to_orbit(lbl)
    assert adj.centralizerLevi == levi and adj.ssParam == (F(1),)


@pytest.mark.parametrize("name", ["A2", "B2", "C2", "D4"])
def test_injectivity_sampled(name):
    count, failures = verify_injectivity(parse_type(name), samples=150, seed=7)
    assert count > 0 and failures == []


def test_injectivity_deterministic():
    ct = parse_type("C2")
    a = verify_injectivity(ct, samples=50, seed=3)
    b = verify_injectivity(ct, samples=50, seed=3)
    assert a == b
