"""Acceptance suite: one test per shipped guarantee, with timing output.

Run with `pytest tests/test_acceptance.py -v -s` to see one PASS line
per criterion.  Budgets are asserted where a criterion carries one.
"""

import itertools
import time

import nilporb as nb
import nilporb.partitions as pt
from nilporb.errors import InputError
from nilporb.induction import (
    InductionDatum,
    _birigid_tails,
    _tail_induce,
    birational_datum,
    collapse,
    dim_nilradical,
    induce_with_degree,
    is_birationally_rigid,
    is_rigid,
    levi_orbit_dim,
    tail_orbit_labels,
)
from nilporb.namikawa import check_weyl_match, namikawa_space, namikawa_weyl_order
from nilporb.orbits import is_very_even, orbit_dim
from nilporb.orbitmethod import verify_injectivity
from nilporb.roots import parse_type, weyl_elements
from nilporb.sheets import birational_sheets, verify_disjoint_cover

import oracles

RANK2TO4 = ["A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4"]
RANK_LE4 = ["A1"] + RANK2TO4
RANK_LE5 = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5",
            "C2", "C3", "C4", "C5", "D4", "D5"]


def report(num, description, t0, budget=None):
    dt = time.time() - t0
    if budget is not None:
        assert dt < budget, "criterion %d exceeded %.0f s budget (%.1f s)" % (
            num, budget, dt)
    print("PASS criterion %d: %s (%.1fs)" % (num, description, dt))


def all_data(ct):
    kind = ct.iso_kind
    for levi in nb.enumerate_levis(ct):
        if ct.family != "A" and levi.is_full(ct):
            continue
        choices = [pt.valid_partitions("gl", b) for b in levi.glBlocks]
        tails = (tail_orbit_labels(kind, levi.tail_size(ct))
                 if levi.tailRank else [None])
        for gls in itertools.product(*choices):
            for tail in tails:
                yield InductionDatum(ct, levi, gls, tail)


def test_criterion_01_nilcone_recovery():
    t0 = time.time()
    for name in RANK2TO4:
        ct = parse_type(name)
        top = nb.enumerate_orbits(ct)[0]
        data = namikawa_space(top)
        assert data.cartanDim == ct.rank, (name, data.cartanDim)
        assert namikawa_weyl_order(data) == len(weyl_elements(ct)), (
            name, data.weylGroup)
    report(1, "nilpotent cone recovers the Cartan and Weyl group, rank 2-4",
           t0, budget=10)


def test_criterion_02_unique_birational_datum():
    t0 = time.time()
    for name in RANK_LE5:
        ct = parse_type(name)
        kind = ct.iso_kind
        found = {}
        # exhaustive search: every Levi class, every birationally rigid
        # orbit on it (zero on each gl factor, pinned tail list)
        for levi in nb.enumerate_levis(ct):
            gls = tuple((1,) * b for b in levi.glBlocks)
            if ct.family != "A" and levi.tailRank:
                tails = list(_birigid_tails(kind, levi.tail_size(ct)))
            else:
                tails = [None]
            for tail in tails:
                d = InductionDatum(ct, levi, gls, tail)
                lbl, deg = induce_with_degree(d)
                if deg == 1:
                    found.setdefault(lbl, []).append(d)
        orbs = nb.enumerate_orbits(ct)
        assert set(found) == set(orbs), name
        for lbl, ds in found.items():
            assert len(ds) == 1, (name, lbl, [str(x.levi) for x in ds])
            want = birational_datum(lbl)
            got = ds[0]
            assert (got.levi, got.glOrbits, got.tailOrbit) == (
                want.levi, want.glOrbits, want.tailOrbit), (name, lbl)
    report(2, "exactly one birationally rigid datum per orbit, rank <= 5",
           t0, budget=300)


def test_criterion_03_weyl_match():
    t0 = time.time()
    for name in RANK_LE4:
        ct = parse_type(name)
        for o in nb.enumerate_orbits(ct):
            fails = check_weyl_match(o)
            assert fails == [], (name, o, fails)
    report(3, "Namikawa space matches the induction datum "
              "(center and stabilizer Weyl group), rank <= 4", t0, budget=300)


def test_criterion_04_disjoint_cover():
    t0 = time.time()
    for name in RANK_LE5:
        fails = verify_disjoint_cover(parse_type(name))
        assert fails == [], (name, fails)
    report(4, "birational sheets cover the algebra disjointly, rank <= 5",
           t0, budget=600)


def test_criterion_05_dimension_identity_and_stages():
    t0 = time.time()
    count = 0
    for name in RANK_LE5:
        ct = parse_type(name)
        for d in all_data(ct):
            lbl, _ = induce_with_degree(d)
            assert orbit_dim(lbl) == levi_orbit_dim(d) + 2 * dim_nilradical(d), (
                name, str(d.levi), d.glOrbits, d.tailOrbit)
            count += 1
    assert count > 500
    stages = 0
    for name in RANK_LE4:
        ct = parse_type(name)
        if ct.family == "A":
            # merge any two gl blocks first; padded sums are associative
            for d in all_data(ct):
                blocks, gls = d.levi.glBlocks, d.glOrbits
                if len(blocks) < 2:
                    continue
                direct, _ = induce_with_degree(d)
                for i, j in itertools.combinations(range(len(blocks)), 2):
                    merged_block = blocks[i] + blocks[j]
                    merged_orbit = pt.padded_sum(gls[i], gls[j])
                    rest = [(b, nu) for k, (b, nu) in enumerate(zip(blocks, gls))
                            if k not in (i, j)]
                    pairs = sorted(rest + [(merged_block, merged_orbit)],
                                   key=lambda bp: (-bp[0], bp[1]))
                    from nilporb.roots import LeviLabel
                    d2 = InductionDatum(
                        ct, LeviLabel(tuple(b for b, _ in pairs), 0),
                        tuple(nu for _, nu in pairs), None)
                    got, deg = induce_with_degree(d2)
                    assert got == direct and deg == 1, (name, str(d.levi), i, j)
                    stages += 1
            continue
        kind = ct.iso_kind
        ambient = ct.natural_dim
        for d in all_data(ct):
            levi = d.levi
            if levi.dClass is not None or not levi.glBlocks:
                continue
            t = levi.tail_size(ct)
            tau = d.tailOrbit.partition if d.tailOrbit else ()
            tag = d.tailOrbit.tag if d.tailOrbit else None
            blocks = levi.glBlocks
            direct = _tail_induce(kind, ambient, blocks, None, t, tau, tag,
                                  d.glOrbits)
            # move each gl block into the tail first, then the rest
            for i, b in enumerate(blocks):
                mid = t + 2 * b
                if kind == "so" and mid == 2:
                    continue
                pi1, tag1, deg1 = _tail_induce(
                    kind, mid, (b,), None, t, tau, tag, (d.glOrbits[i],))
                if kind == "so" and mid % 2 == 0 and is_very_even(pi1) \
                        and tag1 is None:
                    continue
                pi2, tag2, deg2 = _tail_induce(
                    kind, ambient, blocks[:i] + blocks[i + 1:], None,
                    mid, pi1, tag1, d.glOrbits[:i] + d.glOrbits[i + 1:])
                assert (pi2, tag2) == direct[:2], (name, str(levi), i)
                assert deg1 * deg2 == direct[2], (name, str(levi), i)
                stages += 1
    assert stages > 200
    report(5, "dim Ind = dim orbit + 2 dim nilradical (%d data, rank <= 5); "
              "induction in stages (%d chains, rank <= 4)" % (count, stages), t0)


def test_criterion_06_collapse_oracle():
    t0 = time.time()
    cases = 0
    for total in range(1, 13):
        for p in oracles.all_partitions(total):
            want = oracles.collapse_brute("so", p)
            assert collapse("B", p) == want and collapse("D", p) == want
            cases += 1
            if total % 2 == 0:
                assert collapse("C", p) == oracles.collapse_brute("sp", p)
                cases += 1
            else:
                try:
                    collapse("C", p)
                except InputError:
                    pass
                else:
                    raise AssertionError("odd sp size accepted: %r" % (p,))
    report(6, "collapse equals the unique dominance-maximal valid partition, "
              "size <= 12 (%d cases)" % cases, t0)


def test_criterion_07_rigidity_consistency():
    t0 = time.time()
    for name in RANK_LE5:
        ct = parse_type(name)
        for o in nb.enumerate_orbits(ct):
            rigid = is_rigid(o)
            birigid = is_birationally_rigid(o)
            if rigid:
                assert birigid, (name, o)
            assert birigid == (namikawa_space(o).cartanDim == 0), (name, o)
    report(7, "rigid implies birationally rigid; birationally rigid iff "
              "zero-dimensional Namikawa space, rank <= 5", t0)


def test_criterion_08_type_a_closed_forms():
    t0 = time.time()
    for name in ("A1", "A2", "A3", "A4", "A5"):
        ct = parse_type(name)
        for o in nb.enumerate_orbits(ct):
            d = birational_datum(o)
            assert d.levi.glBlocks == pt.transpose(o.partition), (name, o)
            assert d.glOrbits == tuple((1,) * b for b in d.levi.glBlocks)
            assert d.tailOrbit is None and d.levi.tailRank == 0
            assert namikawa_space(o).cartanDim == o.partition[0] - 1, (name, o)
    report(8, "type A: datum is the transposed-block Levi with zero orbits; "
              "Cartan dimension is the largest part minus one, rank <= 5", t0)


def test_criterion_09_orbit_method_injectivity():
    t0 = time.time()
    for name in RANK_LE4:
        count, failures = verify_injectivity(parse_type(name),
                                             samples=1000, seed=2026)
        assert count >= 1000, (name, count)
        assert failures == [], (name, failures)
    report(9, "orbit-method labels separate adjoint orbits "
              "(>= 1000 samples per type, rank <= 4)", t0, budget=120)


def test_criterion_10_regular_locus_stability():
    t0 = time.time()
    sheets = 0
    for name in RANK_LE4:
        ct = parse_type(name)
        for b in birational_sheets(ct):
            assert b.regularLocus.wStable is True, (name, str(b.levi))
            sheets += 1
    assert sheets > 50
    report(10, "regular locus of every birational sheet is stable under the "
               "sheet Weyl action, rank <= 4 (%d sheets)" % sheets, t0)
