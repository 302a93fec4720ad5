"""Nilpotent orbits of the classical families, labelled by partitions.

Type A_n uses partitions of n+1; B_n/D_n use so-valid partitions of
2n+1/2n (even parts with even multiplicity); C_n uses sp-valid
partitions of 2n (odd parts with even multiplicity).  In type D a
partition with all parts even labels two orbits, distinguished by a
``veryEvenTag`` of "I" or "II".

Component groups are taken in the adjoint group throughout (PSp/PSO in
types C/D, SO in type B), which is where the quotient by the image of
-I matters.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from itertools import product

from .errors import ConsistencyError, InputError
from .partitions import (
    Partition,
    dominates,
    is_partition,
    is_very_even,
    orbit_dim_any,
    parity_ok,
    parity_violations,
    valid_partitions,
)
from .roots import ClassicalType


@dataclass(frozen=True)
class OrbitLabel:
    type: ClassicalType
    partition: Partition
    veryEvenTag: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "partition", tuple(int(x) for x in self.partition))

    def __str__(self):
        body = "%s:%s" % (self.type, ",".join(str(x) for x in self.partition))
        if self.veryEvenTag:
            body += ":" + self.veryEvenTag
        return body

    def key(self):
        return (self.type, self.partition, self.veryEvenTag or "")


def validate_label(label: OrbitLabel) -> None:
    """Raise InputError unless the label is a genuine orbit of its type."""
    ct = label.type
    p = label.partition
    if not is_partition(p):
        raise InputError("partition must be weakly decreasing positive ints: %r" % (p,))
    if sum(p) != ct.natural_dim:
        raise InputError(
            "partition of %d expected for %s, got %r summing to %d"
            % (ct.natural_dim, ct, p, sum(p))
        )
    kind = ct.iso_kind
    for part, m in parity_violations(kind, p):
        word = "even" if part % 2 == 0 else "odd"
        raise InputError("%s part %d has odd multiplicity" % (word, part))
    very_even = ct.family == "D" and is_very_even(p)
    if very_even and label.veryEvenTag not in ("I", "II"):
        raise InputError("very even partition requires tag")
    if not very_even and label.veryEvenTag is not None:
        raise InputError("veryEvenTag only applies to very even partitions in type D")


def orbit_dim(label: OrbitLabel) -> int:
    validate_label(label)
    ct = label.type
    if ct.family == "A":
        from .partitions import gl_orbit_dim

        return gl_orbit_dim(ct.natural_dim, label.partition)
    return orbit_dim_any(ct.iso_kind, ct.natural_dim, label.partition)


def enumerate_orbits(ct: ClassicalType) -> list[OrbitLabel]:
    """All orbits, largest dimension first, very even partitions doubled."""
    out = []
    for p in valid_partitions(ct.iso_kind, ct.natural_dim):
        if ct.family == "D" and is_very_even(p):
            out.append(OrbitLabel(ct, p, "I"))
            out.append(OrbitLabel(ct, p, "II"))
        else:
            out.append(OrbitLabel(ct, p))
    out.sort(key=lambda o: (-orbit_dim(o), tuple(-x for x in o.partition), o.veryEvenTag or ""))
    return out


def closure_leq(a: OrbitLabel, b: OrbitLabel) -> bool:
    """Is the closure of b's orbit containing a's orbit?

    Dominance order on partitions; two very even orbits with the same
    partition compare only when the tags agree.  For distinct very even
    partitions the comparison factors through any valid non-very-even
    partition strictly between (such an orbit's closure is stable under
    the full orthogonal group, hence contains both tags below); if none
    exists the answer is genuinely tag-sensitive and we refuse to guess.
    """
    if a.type != b.type:
        raise InputError("cannot compare orbits of different types")
    validate_label(a)
    validate_label(b)
    if a.partition == b.partition:
        return a.veryEvenTag == b.veryEvenTag
    if not dominates(b.partition, a.partition):
        return False
    if a.veryEvenTag is not None and b.veryEvenTag is not None:
        kind = a.type.iso_kind
        n = a.type.natural_dim
        between = [
            q
            for q in valid_partitions(kind, n)
            if q != a.partition
            and q != b.partition
            and not is_very_even(q)
            and dominates(b.partition, q)
            and dominates(q, a.partition)
        ]
        if not between:
            raise ConsistencyError(
                "very-even closure comparability undetermined for %s vs %s" % (a, b)
            )
    return True


@dataclass(frozen=True)
class CentralizerType:
    """Reductive centralizer of an orbit element, up to isogeny.

    One factor per distinct part d of multiplicity m: gl(m) in type A,
    o(m) at odd d / sp(m) at even d in so-ambient, sp(m) at odd d /
    o(m) at even d in sp-ambient.  ``torusRank`` is the rank of the
    central torus in the adjoint picture (only type A contributes one).
    """

    glFactors: tuple[int, ...]
    spFactors: tuple[int, ...]
    soFactors: tuple[int, ...]
    torusRank: int


def reductive_centralizer(label: OrbitLabel) -> CentralizerType:
    validate_label(label)
    mult = Counter(label.partition)
    ct = label.type
    if ct.family == "A":
        gl = tuple(sorted(mult.values(), reverse=True))
        return CentralizerType(gl, (), (), len(mult) - 1)
    sp, so = [], []
    ortho_parity = 1 if ct.iso_kind == "so" else 0  # parity of parts with o(m) factors
    for d, m in mult.items():
        if d % 2 == ortho_parity:
            so.append(m)
        else:
            sp.append(m)
    return CentralizerType((), tuple(sorted(sp, reverse=True)), tuple(sorted(so, reverse=True)), 0)


def h2_dim(label: OrbitLabel) -> int:
    """Dimension of the degree-2 cohomology of the orbit (adjoint form).

    Counts centralizer characters: type A gives one per distinct part
    minus one for the overall trace.  In so-ambient types the lone
    candidate torus is an o(2) factor, which survives the determinant
    constraint only when no second o-factor is available to absorb it;
    in sp-ambient types the O(2) sits inside Sp with no determinant
    condition, so its own reflection kills the character.
    """
    cent = reductive_centralizer(label)
    ct = label.type
    if ct.family == "A":
        return cent.torusRank
    if ct.iso_kind == "so" and cent.soFactors == (2,):
        return 1
    return 0


@dataclass(frozen=True)
class ComponentGroup:
    """Elementary-divisor style structure: list of cyclic factor orders."""

    structure: tuple[int, ...]

    @property
    def order(self) -> int:
        return math.prod(self.structure) if self.structure else 1


def component_basis(kind: str, p: Partition) -> tuple[int, ...]:
    """Distinct part values carrying O-factors (odd in so, even in sp)."""
    ortho_parity = 1 if kind == "so" else 0
    return tuple(sorted({d for d in p if d % 2 == ortho_parity}, reverse=True))


def component_tuples(kind: str, n: int, p: Partition):
    """Sign tuples presenting the orbit's component group in the adjoint group.

    Returns (basis, admissible, quotient) where basis lists the
    constrained part values, admissible the allowed sign tuples (the
    determinant kernel in so-ambient, everything in sp-ambient), and
    quotient the image of -I to be factored out (None when the adjoint
    group does not see -I, i.e. so-ambient of odd size).
    """
    if not parity_ok(kind, p) or sum(p) != n:
        raise InputError("invalid %s partition %r of %d" % (kind, p, n))
    basis = component_basis(kind, p)
    mult = Counter(p)
    tuples = []
    for signs in product((1, -1), repeat=len(basis)):
        if kind == "so":
            # each -1 at an odd part flips the determinant
            if math.prod(signs) != 1:
                continue
        tuples.append(signs)
    quotient = None
    if not (kind == "so" and n % 2 == 1):
        quotient = tuple(-1 if mult[d] % 2 else 1 for d in basis)
    return basis, tuple(tuples), quotient


def component_group(label: OrbitLabel) -> ComponentGroup:
    validate_label(label)
    ct = label.type
    p = label.partition
    if ct.family == "A":
        g = math.gcd(*p)
        return ComponentGroup((g,) if g > 1 else ())
    basis, tuples, quotient = component_tuples(ct.iso_kind, ct.natural_dim, p)
    # F2 rank of the admissible group, minus one if -I maps to a
    # nontrivial admissible tuple
    rank = 0 if len(tuples) <= 1 else int(round(math.log2(len(tuples))))
    if quotient is not None and any(s == -1 for s in quotient):
        if quotient not in tuples:
            raise ConsistencyError("image of -I fell outside the admissible tuples for %s" % label)
        rank -= 1
    return ComponentGroup((2,) * rank)
