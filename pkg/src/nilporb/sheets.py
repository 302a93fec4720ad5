"""Sheets and birational sheets of classical Lie algebras.

A sheet is indexed by a Levi class together with a rigid nilpotent orbit
of the Levi; it contains a unique nilpotent orbit (the induced one) and
has dimension dim(induced orbit) + dim z(levi).  Distinct sheets can
share their nilpotent member.

Birational sheets replace rigid data by birationally rigid data and keep
only the pairs whose zero-parameter induction is birational; those do
partition the nilpotent cone, one sheet per orbit, which
``verify_disjoint_cover`` checks directly.  Each birational sheet also
records the regular locus of its central parameters (central characters
whose partial induction stays birational), the finite Weyl-type group
acting on them, and the dimension of the quotient Cartan space.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import partitions as pt
from .induction import (
    InductionDatum,
    TailOrbit,
    _birigid_tails,
    _tail_induce,
    induce_with_degree,
    rigid_tail_orbits,
    zero_datum,
)
from .namikawa import namikawa_space
from .orbits import OrbitLabel, enumerate_orbits, orbit_dim
from .roots import (
    ClassicalType,
    FiniteLinearGroup,
    LeviLabel,
    build_root_system,
    enumerate_levis,
    normalizer_action,
    orbit_stabilizer_group,
)


@dataclass(frozen=True)
class SheetRecord:
    levi: LeviLabel
    rigidOrbit: InductionDatum
    containedNilpotent: OrbitLabel
    sheetDim: int


@dataclass(frozen=True)
class SubspaceArrangement:
    """Excluded locus in the centre of a Levi, as vanishing patterns.

    Each pattern lists the gl-block coordinates that vanish on one
    excluded subspace.  Coordinate coincidences (aligned or
    anti-aligned) only merge gl factors, and relative induction between
    gl Levis is always birational, so only vanishing patterns can cut
    the regular locus.
    """

    ambientDim: int
    patterns: tuple[tuple[int, ...], ...]
    wStable: bool


@dataclass(frozen=True)
class BirationalSheet:
    levi: LeviLabel
    birRigidOrbit: InductionDatum
    inducedNilpotent: OrbitLabel
    regularLocus: SubspaceArrangement
    weylAction: FiniteLinearGroup
    quotientDim: int


def _levi_data(ct: ClassicalType, levi: LeviLabel, tails) -> list[InductionDatum]:
    if ct.family == "A" or levi.tailRank == 0:
        return [zero_datum(ct, levi, None)]
    return [zero_datum(ct, levi, t) for t in tails]


def enumerate_sheets(ct: ClassicalType) -> list[SheetRecord]:
    """One sheet per (Levi class, rigid orbit of the Levi)."""
    out = []
    for levi in enumerate_levis(ct):
        if ct.family == "A" or levi.tailRank == 0:
            tails = [None]
        else:
            tails = rigid_tail_orbits(levi.tail_kind(ct), levi.tail_size(ct))
        for d in _levi_data(ct, levi, tails):
            orb, _ = induce_with_degree(d)
            out.append(
                SheetRecord(
                    levi=levi,
                    rigidOrbit=d,
                    containedNilpotent=orb,
                    sheetDim=orbit_dim(orb) + levi.z_dim(ct),
                )
            )
    out.sort(key=lambda s: (-s.sheetDim, s.containedNilpotent.key(), str(s.levi)))
    return out


def _pattern_degree(ct: ClassicalType, d: InductionDatum, zero_set) -> int:
    """Degree of inducing from the datum's Levi into the Levi obtained by
    pushing the given gl blocks into the tail (other blocks keep their
    own gl factors, which never contribute degree)."""
    kind = d.levi.tail_kind(ct)
    tail_n = d.levi.tail_size(ct) if d.levi.tailRank > 0 else (1 if ct.family == "B" else 0)
    tau = d.tailOrbit.partition if d.tailOrbit else ()
    tau_tag = d.tailOrbit.tag if d.tailOrbit else None
    idx = sorted(zero_set, key=lambda i: (-d.levi.glBlocks[i], d.glOrbits[i]))
    blocks = tuple(d.levi.glBlocks[i] for i in idx)
    gls = tuple(d.glOrbits[i] for i in idx)
    n_new = tail_n + 2 * sum(blocks)
    _, _, deg = _tail_induce(kind, n_new, blocks, None, tail_n, tau, tau_tag, gls)
    return deg


def regular_locus(d: InductionDatum, action: FiniteLinearGroup | None = None) -> SubspaceArrangement:
    """Vanishing patterns of central parameters excluded from the sheet.

    A pattern of vanishing coordinates moves the corresponding gl blocks
    into the isometry tail of a bigger Levi; the pattern is excluded
    exactly when inducing up to that Levi already fails to be
    birational.  In type A every relative induction is birational and
    the arrangement is empty.
    """
    ct = d.ambient
    k = len(d.levi.glBlocks)
    if ct.family == "A":
        return SubspaceArrangement(max(k - 1, 0), (), True)
    kind = d.levi.tail_kind(ct)
    bad = []
    for mask in range(1, 1 << k):
        zero_set = tuple(i for i in range(k) if mask >> i & 1)
        if (
            kind == "so"
            and d.levi.tailRank == 0
            and ct.family == "D"
            and len(zero_set) == 1
            and d.levi.glBlocks[zero_set[0]] == 1
        ):
            continue  # so_2 tail is the same Levi again, not a proper one
        if _pattern_degree(ct, d, zero_set) != 1:
            bad.append(zero_set)
    patterns = tuple(sorted(bad))
    stable = True
    if action is not None and patterns:
        pattern_set = set(patterns)
        for mat in action.elements:
            perm = {}
            for i in range(k):
                perm[i] = next(r for r in range(k) if mat[r][i] != 0)
            for z in patterns:
                image = tuple(sorted(perm[i] for i in z))
                if image not in pattern_set:
                    stable = False
    return SubspaceArrangement(k, patterns, stable)


@lru_cache(maxsize=None)
def birational_sheets(ct: ClassicalType) -> tuple[BirationalSheet, ...]:
    """All (Levi class, birationally rigid orbit) pairs whose
    zero-parameter induction is birational, one per nilpotent orbit."""
    rs = build_root_system(ct)
    out = []
    for levi in enumerate_levis(ct):
        if ct.family == "A" or levi.tailRank == 0:
            tails = [None]
        else:
            tails = _birigid_tails(levi.tail_kind(ct), levi.tail_size(ct))
        for d in _levi_data(ct, levi, tails):
            orb, deg = induce_with_degree(d)
            if deg != 1:
                continue
            action = normalizer_action(rs, levi)
            tail = None
            if d.tailOrbit is not None:
                tail = (d.tailOrbit.partition, d.tailOrbit.tag)
            stab = orbit_stabilizer_group(action, levi, d.glOrbits, tail, ct.family)
            locus = regular_locus(d, stab)
            out.append(
                BirationalSheet(
                    levi=levi,
                    birRigidOrbit=d,
                    inducedNilpotent=orb,
                    regularLocus=locus,
                    weylAction=stab,
                    quotientDim=namikawa_space(orb).cartanDim,
                )
            )
    out.sort(key=lambda s: (s.inducedNilpotent.key(), str(s.levi)))
    return tuple(out)


def verify_disjoint_cover(ct: ClassicalType) -> list[str]:
    """Check that birational sheets hit every nilpotent orbit exactly once.

    Returns a list of failure lines; empty means the cover is a
    partition of the orbit set.
    """
    counts = {label: 0 for label in enumerate_orbits(ct)}
    for sheet in birational_sheets(ct):
        if sheet.inducedNilpotent not in counts:
            return ["sheet induces unknown orbit %s" % (sheet.inducedNilpotent,)]
        counts[sheet.inducedNilpotent] += 1
    report = []
    for label, c in counts.items():
        if c != 1:
            report.append("orbit %s lies in %d birational sheets" % (label, c))
    return report
