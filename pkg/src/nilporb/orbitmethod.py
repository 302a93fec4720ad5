"""Labels for arbitrary adjoint orbits and the orbit-method label map.

An adjoint orbit of a classical Lie algebra is pinned down by a semisimple
part (a point of a Cartan up to the Weyl group) together with a nilpotent
orbit of its centralizer.  ``AdjointOrbitLabel`` stores that data in a
canonical form: the centralizer Levi, one exact rational per gl block, and
the nilpotent orbit factor by factor.

``orbit_to_label`` replaces the nilpotent part by its unique birational
datum inside the centralizer and extends the semisimple parameter by zeros,
producing an ``OrbitMethodLabel``: a Levi, a birationally rigid orbit on
it, and a central parameter known only up to the finite symmetry group of
the datum.  ``label_to_orbit`` inverts this by regrouping the blocks along
value coincidences and inducing inside the resulting centralizer; the
parameter is rejected when one of those inductions has degree above one,
since the label map is only well defined on such parameters.

Sign conventions in type D take care here.  Flipping an odd number of
coordinate signs is not a Weyl group element, so a leftover sign has to be
recorded somewhere: it is absorbed by a tail factor when one is present
(swapping a very-even tag if the tail orbit carries one), kept as a
negative value on the last odd-size block otherwise, and pushed into the
plus/minus class of an all-even Levi when there is no other carrier.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import partitions as pt
from .errors import ConsistencyError, InputError, XiError
from .induction import (
    CentralParameter,
    InductionDatum,
    TailOrbit,
    _birigid_tails,
    _tail_induce,
    tail_birational_datum,
    validate_datum,
)
from .roots import (
    ClassicalType,
    FiniteLinearGroup,
    LeviLabel,
    build_root_system,
    normalizer_action,
    orbit_stabilizer_group,
)

__all__ = [
    "AdjointOrbitLabel",
    "OrbitMethodLabel",
    "adjoint_label_from_coords",
    "validate_adjoint_label",
    "orbit_to_label",
    "label_to_orbit",
    "labels_equal",
    "verify_injectivity",
]


@dataclass(frozen=True)
class AdjointOrbitLabel:
    """Canonical record of an adjoint orbit.

    ssParam holds one exact rational per gl block of the centralizer Levi.
    nilpotentPart is a pair (gl_orbits, tail_orbit): one partition per gl
    block and a TailOrbit (or None when the tail rank is zero).
    """

    ambient: ClassicalType
    centralizerLevi: LeviLabel
    ssParam: tuple
    nilpotentPart: tuple

    def gl_orbits(self):
        return self.nilpotentPart[0]

    def tail_orbit(self):
        return self.nilpotentPart[1]


@dataclass(frozen=True)
class OrbitMethodLabel:
    """Orbit-method label: a birationally rigid datum plus a parameter class.

    xiClass is a representative; the honest invariant is its orbit under
    symmetry, which is the finite symmetry group of the datum acting on
    block coordinates.  Use labels_equal to compare.
    """

    ambient: ClassicalType
    levi: LeviLabel
    birRigidOrbit: InductionDatum
    xiClass: CentralParameter
    symmetry: FiniteLinearGroup


def _is_zero_block(ct: ClassicalType, levi: LeviLabel, i: int, value: Fraction) -> bool:
    return ct.family == "D" and value == 0 and levi.glBlocks[i] == 1


def validate_adjoint_label(lbl: AdjointOrbitLabel) -> None:
    ct = lbl.ambient
    levi = lbl.centralizerLevi
    levi.validate_for(ct)
    blocks = levi.glBlocks
    values = tuple(lbl.ssParam)
    if len(values) != len(blocks):
        raise InputError(
            "ssParam has %d entries for %d gl blocks" % (len(values), len(blocks))
        )
    for v in values:
        if not isinstance(v, Fraction):
            raise InputError("ssParam entries must be exact rationals")
    gl_orbits, tail = lbl.nilpotentPart
    if len(gl_orbits) != len(blocks):
        raise InputError("nilpotent part has %d gl factors for %d blocks"
                         % (len(gl_orbits), len(blocks)))
    for b, nu in zip(blocks, gl_orbits):
        nu = pt.normalize(nu)
        if pt.size(nu) != b:
            raise InputError("gl factor orbit %r does not fit block %d" % (nu, b))
    if ct.family == "A":
        if tail is not None:
            raise InputError("type A labels carry no tail factor")
        if len(set(values)) != len(values):
            raise InputError("ssParam values must be pairwise distinct across blocks")
        if sum(b * v for b, v in zip(blocks, values)) != 0:
            raise InputError("ssParam must have trace zero in type A")
        for i in range(len(blocks) - 1):
            if blocks[i] == blocks[i + 1] and values[i] <= values[i + 1]:
                raise InputError("equal-size blocks must carry decreasing values")
        return

    # B/C/D: group structure is by absolute value, zeros belong to the tail.
    zero_blocks = [i for i, v in enumerate(values) if v == 0]
    for i in zero_blocks:
        if not _is_zero_block(ct, levi, i, values[i]):
            raise InputError("zero ssParam value outside a type D size-1 block")
    if len(zero_blocks) > 1:
        raise InputError("at most one zero ssParam value is allowed")
    if zero_blocks and levi.tailRank:
        raise InputError("zero ssParam value next to a nonzero tail")
    abs_vals = [abs(v) for v in values if v != 0]
    if len(set(abs_vals)) != len(abs_vals):
        raise InputError("ssParam values must have pairwise distinct absolute values")
    negatives = [i for i, v in enumerate(values) if v < 0]
    if ct.family in ("B", "C"):
        if negatives:
            raise InputError("ssParam values must be positive in types B and C")
    else:
        if negatives and (levi.tailRank or zero_blocks):
            raise InputError("a sign is absorbed by the tail; values must be positive")
        if len(negatives) > 1:
            raise InputError("at most one negative ssParam value is allowed")
        if negatives:
            odd = [i for i, b in enumerate(blocks) if b % 2]
            if not odd or negatives[0] != odd[-1]:
                raise InputError("the negative value must sit on the last odd block")
    order = sorted(range(len(blocks)), key=lambda i: (-blocks[i], -abs(values[i])))
    if order != list(range(len(blocks))):
        raise InputError("blocks must be sorted by size then by absolute value")
    if tail is not None:
        if not levi.tailRank:
            raise InputError("tail orbit given but the tail rank is zero")
        from .induction import _validate_tail_orbit

        _validate_tail_orbit(levi.tail_kind(ct), levi.tail_size(ct), tail)
    elif levi.tailRank:
        raise InputError("tail orbit missing for a positive tail rank")


def adjoint_label_from_coords(ct: ClassicalType, coords, factor_orbits=None) -> AdjointOrbitLabel:
    """Build a canonical adjoint label from ambient Cartan coordinates.

    coords has rank entries (rank + 1 in type A, summing to zero).  The
    centralizer Levi is read off the coincidence pattern: equal values in
    type A, equal absolute values otherwise, with zeros going to the tail.
    factor_orbits optionally lists one (partition, tag) per gl block in the
    computed order, then one for the tail when its rank is positive; when
    omitted every factor carries the zero orbit.
    """
    coords = tuple(Fraction(c) for c in coords)
    want = ct.rank + 1 if ct.family == "A" else ct.rank
    if len(coords) != want:
        raise InputError("expected %d coordinates for %s%d, got %d"
                         % (want, ct.family, ct.rank, len(coords)))

    if ct.family == "A":
        if sum(coords) != 0:
            raise InputError("coordinates must sum to zero in type A")
        groups = {}
        for c in coords:
            groups[c] = groups.get(c, 0) + 1
        pairs = sorted(groups.items(), key=lambda kv: (-kv[1], -kv[0]))
        blocks = tuple(k for _, k in pairs)
        values = tuple(v for v, _ in pairs)
        levi = LeviLabel(blocks, 0)
        tail_rank = 0
    else:
        zeros = sum(1 for c in coords if c == 0)
        groups = {}
        for c in coords:
            if c != 0:
                groups[abs(c)] = groups.get(abs(c), 0) + 1
        pairs = sorted(groups.items(), key=lambda kv: (-kv[1], -kv[0]))
        blocks = [k for _, k in pairs]
        values = [v for v, _ in pairs]
        tail_rank = zeros
        if ct.family == "D" and zeros == 1:
            # so_2 is a torus: a single zero coordinate is a gl_1 block
            blocks.append(1)
            values.append(Fraction(0))
            tail_rank = 0
        if ct.family == "D":
            parity = sum(1 for c in coords if c < 0) % 2
            if parity and not tail_rank and not zeros:
                odd = [i for i, b in enumerate(blocks) if b % 2]
                if odd:
                    values[odd[-1]] = -values[odd[-1]]
                    parity = 0
        dclass = None
        if (ct.family == "D" and not tail_rank and blocks
                and all(b % 2 == 0 for b in blocks)):
            dclass = "minus" if parity else "plus"
        blocks = tuple(blocks)
        values = tuple(values)
        levi = LeviLabel(blocks, tail_rank, dclass)

    n_factors = len(blocks) + (1 if tail_rank else 0)
    if factor_orbits is None:
        factor_orbits = [((1,) * b, None) for b in blocks]
        if tail_rank:
            factor_orbits.append(((1,) * levi.tail_size(ct), None))
    if len(factor_orbits) != n_factors:
        raise InputError("expected %d factor orbits (gl blocks then tail), got %d"
                         % (n_factors, len(factor_orbits)))
    gl_orbits = []
    for (part, tag), b in zip(factor_orbits, blocks):
        if tag is not None:
            raise InputError("gl factor orbits carry no tag")
        gl_orbits.append(pt.normalize(part))
    tail = None
    if tail_rank:
        part, tag = factor_orbits[-1]
        tail = TailOrbit(pt.normalize(part), tag)

    lbl = AdjointOrbitLabel(ct, levi, values, (tuple(gl_orbits), tail))
    validate_adjoint_label(lbl)
    return lbl


def _datum_symmetry(ct: ClassicalType, datum: InductionDatum) -> FiniteLinearGroup:
    rs = build_root_system(ct)
    action = normalizer_action(rs, datum.levi)
    tail = None
    if datum.tailOrbit is not None:
        tail = (datum.tailOrbit.partition, datum.tailOrbit.tag)
    return orbit_stabilizer_group(action, datum.levi, datum.glOrbits, tail, ct.family)


def orbit_to_label(lbl: AdjointOrbitLabel) -> OrbitMethodLabel:
    """Unique birational datum of the nilpotent part, parameter extended by zeros."""
    validate_adjoint_label(lbl)
    ct = lbl.ambient
    levi = lbl.centralizerLevi
    gl_orbits, tail = lbl.nilpotentPart

    sub_blocks = []
    sub_values = []
    for b, nu, v in zip(levi.glBlocks, gl_orbits, lbl.ssParam):
        for part in pt.transpose(pt.normalize(nu)):
            sub_blocks.append(part)
            sub_values.append(v)
    tail_dclass = None
    tail_t = 0
    tail_orbit = None
    if ct.family != "A" and (levi.tailRank or ct.family == "B"):
        kind = levi.tail_kind(ct)
        n_t = levi.tail_size(ct)
        tau = tail.partition if tail else (1,) * n_t
        tag = tail.tag if tail else None
        tblocks, tail_dclass, tail_t, tail_orbit = tail_birational_datum(kind, n_t, tau, tag)
        for b in tblocks:
            sub_blocks.append(b)
            sub_values.append(Fraction(0))
    order = sorted(range(len(sub_blocks)), key=lambda i: (-sub_blocks[i], -abs(sub_values[i]), sub_values[i] < 0))
    blocks = tuple(sub_blocks[i] for i in order)
    xi = tuple(sub_values[i] for i in order)

    dclass = None
    pending = (levi.dClass == "minus") ^ (tail_dclass == "minus")
    if ct.family == "D" and tail_t == 0 and blocks and all(b % 2 == 0 for b in blocks):
        dclass = "minus" if pending else "plus"
    elif ct.family == "D" and pending:
        # the composite Levi has an odd block, so the leftover sign moves
        # onto the last one; a pending sign only arises with no tail factor
        # and even datum blocks, hence that block carries a nonzero value
        odd = [i for i, b in enumerate(blocks) if b % 2]
        xi = list(xi)
        xi[odd[-1]] = -xi[odd[-1]]
        xi = tuple(xi)
    out_levi = LeviLabel(blocks, _coord_rank(ct.family, tail_t), dclass)
    out_levi.validate_for(ct)
    datum = InductionDatum(
        ambient=ct,
        levi=out_levi,
        glOrbits=tuple((1,) * b for b in blocks),
        tailOrbit=tail_orbit if out_levi.tailRank else None,
    )
    validate_datum(datum)
    sym = _datum_symmetry(ct, datum)
    return OrbitMethodLabel(ct, out_levi, datum, CentralParameter(xi), sym)


def _coord_rank(family: str, tail_size: int) -> int:
    if family == "A" or tail_size == 0:
        return 0
    if family == "B":
        return (tail_size - 1) // 2
    return tail_size // 2


def label_to_orbit(lbl: OrbitMethodLabel) -> AdjointOrbitLabel:
    """Induce through the centralizer of the parameter; reject irregular ones."""
    ct = lbl.ambient
    levi = lbl.levi
    datum = lbl.birRigidOrbit
    validate_datum(datum)
    xi = tuple(lbl.xiClass.coords)
    if len(xi) != len(levi.glBlocks):
        raise InputError("parameter has %d coordinates for %d blocks"
                         % (len(xi), len(levi.glBlocks)))
    if ct.family == "A":
        return _label_to_orbit_a(ct, levi, xi)

    # Group blocks along coincident absolute values; signs only matter
    # through their total parity in type D.
    groups = {}
    parity = 0
    for i, v in enumerate(xi):
        if v < 0 and ct.family == "D":
            parity ^= levi.glBlocks[i] & 1
        groups.setdefault(abs(v), []).append(i)
    if ct.family == "D" and levi.dClass == "minus":
        parity ^= 1

    zero_idx = groups.pop(Fraction(0), [])
    kind = "so" if ct.family in ("B", "D") else "sp"
    t = levi.tail_size(ct)
    tau = ()
    tag = None
    if datum.tailOrbit is not None:
        tau, tag = datum.tailOrbit.partition, datum.tailOrbit.tag
    elif ct.family == "B":
        tau = (1,)
        t = 1
    zblocks = tuple(sorted((levi.glBlocks[i] for i in zero_idx), reverse=True))
    n_zero = t + 2 * sum(zblocks)

    out_blocks = []
    out_values = []
    out_orbits = []
    for v in sorted(groups, reverse=True):
        sizes = sorted((levi.glBlocks[i] for i in groups[v]), reverse=True)
        out_blocks.append(sum(sizes))
        out_values.append(v)
        out_orbits.append(pt.transpose(tuple(sizes)))

    tail_out = None
    if n_zero:
        pi, otag, deg = _tail_induce(kind, n_zero, zblocks, None, t, tau, tag, tuple((1,) * b for b in zblocks))
        if deg != 1:
            raise XiError(
                "xi-not-regular: inducing the zero part has degree %d" % deg
            )
        if parity and otag is not None:
            otag = "II" if otag == "I" else "I"
            parity = 0
        if parity and ct.family == "D" and n_zero >= 2:
            # a tail coordinate soaks up the sign with no visible effect
            parity = 0
        if ct.family == "D" and n_zero == 2:
            # so_2 is not a tail factor; record it as a gl_1 block at zero
            out_blocks.append(1)
            out_values.append(Fraction(0))
            out_orbits.append((1,))
            n_zero = 0
            tail_out = None
        elif ct.family == "B" and n_zero == 1:
            n_zero = 0
            tail_out = None
        else:
            tail_out = TailOrbit(pi, otag)
    order = sorted(range(len(out_blocks)), key=lambda i: (-out_blocks[i], -out_values[i]))
    out_blocks = [out_blocks[i] for i in order]
    out_values = [out_values[i] for i in order]
    out_orbits = [out_orbits[i] for i in order]

    dclass = None
    if parity:
        odd = [i for i, b in enumerate(out_blocks) if b % 2]
        if odd:
            out_values[odd[-1]] = -out_values[odd[-1]]
            parity = 0
    if ct.family == "D" and n_zero == 0 and out_blocks and all(b % 2 == 0 for b in out_blocks):
        dclass = "minus" if parity else "plus"
        parity = 0
    if parity:
        raise ConsistencyError("sign parity left without a carrier; canonical form failed")

    out_levi = LeviLabel(tuple(out_blocks), _coord_rank(ct.family, n_zero), dclass)
    out_levi.validate_for(ct)
    out = AdjointOrbitLabel(ct, out_levi, tuple(out_values), (tuple(out_orbits), tail_out))
    validate_adjoint_label(out)
    return out


def _label_to_orbit_a(ct: ClassicalType, levi: LeviLabel, xi) -> AdjointOrbitLabel:
    groups = {}
    for i, v in enumerate(xi):
        groups.setdefault(v, []).append(i)
    merged = []
    for v, idx in groups.items():
        sizes = tuple(sorted((levi.glBlocks[i] for i in idx), reverse=True))
        merged.append((sum(sizes), v, pt.transpose(sizes)))
    merged.sort(key=lambda r: (-r[0], -r[1]))
    out_levi = LeviLabel(tuple(r[0] for r in merged), 0, None)
    out_levi.validate_for(ct)
    out = AdjointOrbitLabel(
        ct,
        out_levi,
        tuple(r[1] for r in merged),
        (tuple(r[2] for r in merged), None),
    )
    validate_adjoint_label(out)
    return out


def labels_equal(a: OrbitMethodLabel, b: OrbitMethodLabel) -> bool:
    """Same datum and the parameters lie in one symmetry orbit."""
    if a.ambient != b.ambient or a.levi != b.levi:
        return False
    if (a.birRigidOrbit.glOrbits, a.birRigidOrbit.tailOrbit) != (
        b.birRigidOrbit.glOrbits,
        b.birRigidOrbit.tailOrbit,
    ):
        return False
    xa, xb = tuple(a.xiClass.coords), tuple(b.xiClass.coords)
    for mat in a.symmetry.elements:
        moved = tuple(
            sum(Fraction(mat[r][i]) * xa[i] for i in range(len(xa)))
            for r in range(len(xa))
        )
        if moved == xb:
            return True
    return False


def _random_parameter(rng: random.Random, ct: ClassicalType, levi: LeviLabel):
    k = len(levi.glBlocks)
    if ct.family == "A":
        # trace-zero over the blocks; last coordinate balances the rest
        while True:
            head = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(k - 1)]
            b = levi.glBlocks
            rest = -sum(bi * v for bi, v in zip(b[:-1], head))
            coords = head + [rest / b[-1]]
            return tuple(coords)
    coords = []
    for _ in range(k):
        num = rng.randint(-6, 6)
        coords.append(Fraction(num, rng.randint(1, 3)))
    return tuple(coords)


def _sample_labels(ct: ClassicalType, samples: int, seed: int):
    from .roots import enumerate_levis

    rng = random.Random(seed)
    levis = enumerate_levis(ct)
    out = []
    attempts = 0
    while len(out) < samples and attempts < samples * 20:
        attempts += 1
        levi = rng.choice(levis)
        tail = None
        if ct.family != "A" and levi.tailRank:
            kind = levi.tail_kind(ct)
            n_t = levi.tail_size(ct)
            tail = rng.choice(_birigid_tails(kind, n_t))
        datum = InductionDatum(
            ambient=ct,
            levi=levi,
            glOrbits=tuple((1,) * b for b in levi.glBlocks),
            tailOrbit=tail,
        )
        validate_datum(datum)
        xi = _random_parameter(rng, ct, levi)
        sym = _datum_symmetry(ct, datum)
        lbl = OrbitMethodLabel(ct, levi, datum, CentralParameter(xi), sym)
        try:
            adj = label_to_orbit(lbl)
        except XiError:
            continue
        out.append((lbl, adj))
    return out


def verify_injectivity(ct: ClassicalType, samples: int = 1000, seed: int = 2026):
    """Sample labels, map them to adjoint orbits, and check the map separates.

    Returns (number of labels checked, list of failure descriptions); an
    empty list means every collision was explained by the symmetry group
    and every label round-tripped.
    """
    pairs = _sample_labels(ct, samples, seed)
    failures = []
    by_orbit = {}
    for lbl, adj in pairs:
        by_orbit.setdefault(adj, []).append(lbl)
    for adj, lbls in by_orbit.items():
        base = lbls[0]
        for other in lbls[1:]:
            if not labels_equal(base, other):
                failures.append(
                    "distinct labels map to one orbit: %r vs %r (orbit %r)"
                    % (base.xiClass.coords, other.xiClass.coords, adj.ssParam)
                )
        back = orbit_to_label(adj)
        if not labels_equal(base, back):
            failures.append(
                "round trip changed the label for orbit with ssParam %r" % (adj.ssParam,)
            )
    return len(pairs), failures
