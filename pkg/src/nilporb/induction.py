"""Lusztig-Spaltenstein induction, degrees, and birational rigidity.

An induction datum fixes a Levi class, one nilpotent orbit per gl block,
an orbit of the isometry tail, and optionally a central parameter.  The
induced orbit is computed by the classical recipe (doubled gl rows plus
the tail, then parity collapse); on top of that a staged engine tracks
the generic fiber cardinality of the associated moment map, one gl block
at a time:

  * nonzero gl orbits are first refined away (a gl orbit is itself
    induced from the transpose block sizes, birationally);
  * each stage peels one block into the current tail and solves for the
    unique row-removal pattern connecting the stage output to the stage
    tail: strings (one row drops by 2) and pairs (two equal rows drop by
    1 each);
  * a pair at a value whose multiplicity space is orthogonal and fully
    consumed contributes a two-fold isotropic choice ("bad" value);
  * in even orthogonal ambients the parabolic carries one extra binary
    choice (maximal isotropic family at rank-0 tails, tail tag
    otherwise) which halves the count unless the output orbit is very
    even and separates the two.

The quadratic classes, the halving rule, and the tag sources live in the
versioned criterion table; cases outside it raise TableGapError rather
than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import partitions as pt
from .errors import ConsistencyError, InputError
from .orbits import OrbitLabel, validate_label
from .partitions import Partition, is_very_even
from .roots import ClassicalType, LeviLabel, enumerate_levis
from .tables import load_table


@dataclass(frozen=True)
class TailOrbit:
    """Orbit of the isometry tail: partition plus very-even tag if needed."""

    partition: Partition
    tag: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "partition", tuple(int(x) for x in self.partition))


@dataclass(frozen=True)
class CentralParameter:
    """Exact rational coordinates on the centre of a Levi, one per gl block."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))


@dataclass(frozen=True)
class InductionDatum:
    ambient: ClassicalType
    levi: LeviLabel
    glOrbits: tuple[Partition, ...]
    tailOrbit: TailOrbit | None = None
    xi: CentralParameter | None = None

    def __post_init__(self):
        object.__setattr__(self, "glOrbits", tuple(tuple(int(x) for x in p) for p in self.glOrbits))


def zero_datum(ambient: ClassicalType, levi: LeviLabel, tail: TailOrbit | None = None) -> InductionDatum:
    """Datum with zero orbits on every gl block (and zero central parameter)."""
    gl = tuple((1,) * b for b in levi.glBlocks)
    xi = CentralParameter((Fraction(0),) * len(levi.glBlocks))
    return InductionDatum(ambient, levi, gl, tail, xi)


def validate_datum(d: InductionDatum) -> None:
    ct = d.ambient
    d.levi.validate_for(ct)
    if len(d.glOrbits) != len(d.levi.glBlocks):
        raise InputError("need one gl orbit per block")
    for b, nu in zip(d.levi.glBlocks, d.glOrbits):
        if not pt.is_partition(nu) or sum(nu) != b:
            raise InputError("gl orbit %r is not a partition of block size %d" % (nu, b))
    if ct.family == "A" or d.levi.tailRank == 0:
        # a rank-0 orthogonal tail in type B is so_1 and carries only the
        # zero orbit, so the record stays implicit
        if d.tailOrbit is not None:
            raise InputError("tail orbit given but tail rank is 0")
    else:
        tail_n = d.levi.tail_size(ct)
        if d.tailOrbit is None:
            raise InputError("tail orbit required (tail has size %d)" % tail_n)
        _validate_tail_orbit(d.levi.tail_kind(ct), tail_n, d.tailOrbit)
    if d.xi is not None:
        if len(d.xi.coords) != len(d.levi.glBlocks):
            raise InputError("central parameter needs one coordinate per gl block")
        if ct.family == "A":
            total = sum(b * c for b, c in zip(d.levi.glBlocks, d.xi.coords))
            if total != 0:
                raise InputError("type A central parameters satisfy sum(block*coord) = 0")


def _validate_tail_orbit(kind: str, n: int, tail: TailOrbit) -> None:
    p = tail.partition
    if not pt.is_partition(p) or sum(p) != n:
        raise InputError("tail orbit %r is not a partition of %d" % (p, n))
    viol = pt.parity_violations(kind, p)
    if viol:
        word = "even" if viol[0][0] % 2 == 0 else "odd"
        raise InputError("%s part %d has odd multiplicity" % (word, viol[0][0]))
    ve = kind == "so" and n % 2 == 0 and is_very_even(p) and n > 0
    if ve and tail.tag not in ("I", "II"):
        raise InputError("very even partition requires tag")
    if not ve and tail.tag is not None:
        raise InputError("tag only applies to very even tail orbits in even orthogonal tails")


# ---------------------------------------------------------------------------
# the staged degree engine (partition level)


def _removal_pattern(pi: Partition, tau: Partition, c: int):
    """Unique (strings, pairs) pattern taking pi down to tau by removing
    c columns' worth of boxes: k[v] rows drop v -> v-2, l[v] row pairs
    drop (v,v) -> (v-1,v-1)."""
    mpi = pt.mult(pi)
    mtau = pt.mult(tau)
    vmax = pi[0] if pi else 0
    solutions = []

    def descend(v, k, l):
        if v == 0:
            if sum(k.values()) + sum(l.values()) == c:
                solutions.append((dict(k), dict(l)))
            return
        s = mpi.get(v, 0) + k.get(v + 2, 0) + 2 * l.get(v + 1, 0) - mtau.get(v, 0)
        if s < 0 or s > mpi.get(v, 0):
            return
        max_l = s // 2
        for lv in range(max_l, -1, -1):
            kv = s - 2 * lv
            if v == 1 and kv:
                continue
            k[v], l[v] = kv, lv
            descend(v - 1, k, l)
        k.pop(v, None)
        l.pop(v, None)

    descend(vmax, {}, {})
    if len(solutions) != 1:
        raise ConsistencyError(
            "removal pattern between %r and %r (block %d) is not unique: %d solutions"
            % (pi, tau, c, len(solutions))
        )
    return solutions[0]


def _single_stage(kind, tail_n, tau, tau_tag, c, orientation):
    """Peel one zero gl_c block into the (kind, tail_n) tail.

    Returns (new_tail_n, pi, tag, stage_degree).
    """
    table = load_table()
    n_new = tail_n + 2 * c
    doubled = (2,) * c
    p = pt.padded_sum(doubled, tau)
    pi = pt.collapse(kind, p)
    k, l = _removal_pattern(pi, tau, c)
    bad = [
        v
        for v, lv in l.items()
        if lv >= 1 and table.is_orthogonal(kind, v) and pt.mult(pi).get(v, 0) == 2 * lv
    ]
    raw = 2 ** len(bad)
    tag = None
    deg = raw
    if kind == "so" and n_new % 2 == 0:
        if is_very_even(pi):
            if bad:
                raise ConsistencyError(
                    "very even stage output %r cannot carry isotropic choices" % (pi,)
                )
            if tail_n == 0:
                table.require_tag_source("orientation")
                tag = "I" if orientation == "plus" else "II"
            else:
                table.require_tag_source("tail-tag")
                if tau_tag is None:
                    raise ConsistencyError(
                        "very-even tag undetermined for stage output %r" % (pi,)
                    )
                tag = tau_tag
        elif is_very_even(tau):
            # tail tag / Lagrangian family selection cuts the fiber in half
            table.require_halving_rule()
            if not bad:
                raise ConsistencyError(
                    "halving expected a two-fold choice: pi=%r tau=%r" % (pi, tau)
                )
            deg = raw // 2
    return n_new, pi, tag, deg


def _run_stages(kind, tail_n, tau, tau_tag, peel_blocks, orientation):
    """Peel the given zero blocks (in order) into the tail; total degree."""
    deg = 1
    for c in peel_blocks:
        tail_n, tau, tau_tag, d = _single_stage(kind, tail_n, tau, tau_tag, c, orientation)
        deg *= d
        orientation = None  # only the first stage can consume it
    return tau, tau_tag, deg


def _refined_blocks(blocks, gl_orbits):
    """Replace each (block, orbit) by the transpose blocks of the orbit.

    A gl orbit is birationally induced from zero on its transpose block
    sizes, so this preserves both the induced orbit and the degree.
    """
    refined = []
    for nu in gl_orbits:
        refined.extend(pt.transpose(nu))
    refined.sort(reverse=True)
    return tuple(refined)


@lru_cache(maxsize=None)
def _staged_cached(kind, tail_n, tau, tau_tag, blocks, orientation):
    return _run_stages(kind, tail_n, tau, tau_tag, tuple(reversed(blocks)), orientation)


def _induce_partition(family, kind, tail_n, tau, tau_tag, blocks, gl_orbits, dclass):
    """Partition-level induction with degree; returns (partition, tag, degree)."""
    if family == "A":
        p = pt.padded_sum(*gl_orbits) if gl_orbits else ()
        return p, None, 1
    refined = _refined_blocks(blocks, gl_orbits)
    orientation = dclass or "plus"
    if family == "B" and tail_n == 1 and not tau:
        tau = (1,)
    pi, tag, deg = _staged_cached(kind, tail_n, tau, tau_tag, refined, orientation)
    if tag is not None and dclass is None and tail_n == 0 and any(b % 2 for b in refined):
        raise ConsistencyError("very-even tag undetermined for output %r" % (pi,))
    return pi, tag, deg


def induce_with_degree(d: InductionDatum) -> tuple[OrbitLabel, int]:
    """The induced orbit together with the generic fiber cardinality."""
    validate_datum(d)
    ct = d.ambient
    if ct.family == "A":
        p, _, deg = _induce_partition("A", "gl", 0, (), None, d.levi.glBlocks, d.glOrbits, None)
        return OrbitLabel(ct, p), deg
    kind = d.levi.tail_kind(ct)
    tail_n = d.levi.tail_size(ct)
    tau = d.tailOrbit.partition if d.tailOrbit else ()
    tau_tag = d.tailOrbit.tag if d.tailOrbit else None
    if d.levi.is_full(ct):
        return OrbitLabel(ct, tau, tau_tag), 1
    pi, tag, deg = _induce_partition(
        ct.family, kind, tail_n, tau, tau_tag, d.levi.glBlocks, d.glOrbits, d.levi.dClass
    )
    label = OrbitLabel(ct, pi, tag)
    validate_label(label)
    return label, deg


def induce(d: InductionDatum) -> OrbitLabel:
    return induce_with_degree(d)[0]


def induction_degree(d: InductionDatum) -> int:
    return induce_with_degree(d)[1]


def is_birational_induction(d: InductionDatum) -> bool:
    """Does the datum induce its orbit with generic fiber a single point?

    Always true in type A and for the full Levi.  Needs the criterion
    table; a case the table does not cover raises TableGapError with a
    criterion-not-transcribed message.
    """
    return induce_with_degree(d)[1] == 1


def collapse(family: str, p) -> Partition:
    """Largest family-valid partition dominated by p (B/C/D)."""
    kinds = {"B": "so", "C": "sp", "D": "so", "so": "so", "sp": "sp"}
    if family not in kinds:
        raise InputError("collapse needs a family in B/C/D, got %r" % family)
    try:
        return pt.collapse(kinds[family], pt.normalize(p))
    except ValueError as exc:
        raise InputError(str(exc))


def dim_nilradical(d: InductionDatum) -> int:
    validate_datum(d)
    diff = d.ambient.dim - d.levi.algebra_dim(d.ambient)
    assert diff % 2 == 0
    return diff // 2


def levi_orbit_dim(d: InductionDatum) -> int:
    """Dimension of the datum's orbit inside the Levi."""
    validate_datum(d)
    total = sum(pt.gl_orbit_dim(b, nu) for b, nu in zip(d.levi.glBlocks, d.glOrbits))
    if d.tailOrbit is not None:
        ct = d.ambient
        total += pt.iso_orbit_dim(d.levi.tail_kind(ct), d.levi.tail_size(ct), d.tailOrbit.partition)
    return total


# ---------------------------------------------------------------------------
# orbit enumeration and Levi classes at the partition level (for tails)


def tail_orbit_labels(kind: str, n: int) -> list[TailOrbit]:
    """All orbits of so_n / sp_n as TailOrbit records (tags included)."""
    if n == 0:
        return [TailOrbit(())]
    out = []
    for p in pt.valid_partitions(kind, n):
        if kind == "so" and n % 2 == 0 and is_very_even(p):
            out.append(TailOrbit(p, "I"))
            out.append(TailOrbit(p, "II"))
        else:
            out.append(TailOrbit(p))
    return out


def _tail_levi_classes(kind: str, n: int, maximal_only=False):
    """Levi classes of so_n / sp_n as (blocks, dclass, tail_size) triples.

    A rank-1 orthogonal tail (so_2) duplicates an extra gl_1 block and is
    skipped.  All-even pure-gl classes in even orthogonal algebras come
    in plus/minus pairs.
    """
    out = []
    parity = n % 2
    for t in range(parity, n + 1, 2):
        if kind == "so" and t == 2:
            continue
        rest = (n - t) // 2
        if maximal_only:
            if t == n:
                continue
            block_sets = [(rest,)] if rest else []
        else:
            block_sets = pt.valid_partitions("gl", rest) if rest else [()]
        for blocks in block_sets:
            if kind == "so" and parity == 0 and t == 0 and blocks and all(b % 2 == 0 for b in blocks):
                out.append((blocks, "plus", t))
                out.append((blocks, "minus", t))
            else:
                out.append((blocks, None, t))
    return out


@lru_cache(maxsize=None)
def _tail_induce(kind, n, blocks, dclass, tail_t, tau, tau_tag, gl_orbits):
    family = "B" if (kind == "so" and n % 2) else ("D" if kind == "so" else "C")
    return _induce_partition(family, kind, tail_t, tau, tau_tag, blocks, gl_orbits, dclass)


@lru_cache(maxsize=None)
def _birigid_tails(kind: str, n: int) -> tuple[TailOrbit, ...]:
    """Orbits of so_n / sp_n admitting no birational proper induction."""
    out = []
    for orb in tail_orbit_labels(kind, n):
        if not _tail_has_birational_proper_datum(kind, n, orb.partition, orb.tag):
            out.append(orb)
    return tuple(out)


@lru_cache(maxsize=None)
def tail_birational_datum(kind: str, n: int, tau, tag):
    """Unique birational datum of an iso-tail orbit, at the partition level.

    Returns (blocks, dclass, tail_size, tail_orbit_or_None); the trivial
    datum ((), None, n, the orbit itself) when the orbit is birationally
    rigid.  Raises ConsistencyError with a uniqueness-violated message
    if the datum is not unique.
    """
    tau = pt.normalize(tau)
    hits = []
    for blocks, dclass, t in _tail_levi_classes(kind, n):
        if not blocks:
            continue  # the full algebra (or a pure tail) is not proper here
        tails = _birigid_tails(kind, t) if t else [None]
        for sub in tails:
            sub_tau = sub.partition if sub else ()
            sub_tag = sub.tag if sub else None
            gl = tuple((1,) * b for b in blocks)
            pi, otag, deg = _tail_induce(kind, n, blocks, dclass, t, sub_tau, sub_tag, gl)
            if pi == tau and otag == tag and deg == 1:
                hits.append((blocks, dclass, t, sub))
    birigid = not _tail_has_birational_proper_datum(kind, n, tau, tag)
    if birigid:
        if hits:
            raise ConsistencyError(
                "uniqueness-violated: birationally rigid tail %r also induced" % (tau,)
            )
        return (), None, n, TailOrbit(tau, tag) if n else None
    if len(hits) != 1:
        raise ConsistencyError(
            "uniqueness-violated: tail orbit %r has %d birational data" % (tau, len(hits))
        )
    return hits[0]


@lru_cache(maxsize=None)
def rigid_tail_orbits(kind: str, n: int) -> tuple[TailOrbit, ...]:
    """Orbits of so_n / sp_n not induced (plainly) from any proper Levi."""
    out = []
    for orb in tail_orbit_labels(kind, n):
        if not _tail_has_birational_proper_datum(kind, n, orb.partition, orb.tag, rigid_sense=True):
            out.append(orb)
    return tuple(out)


def _tail_has_birational_proper_datum(kind, n, target, target_tag, rigid_sense=False):
    """Brute force over maximal Levi classes (transitivity makes this enough).

    With rigid_sense=True tests plain induction instead of birational.
    """
    for blocks, dclass, t in _tail_levi_classes(kind, n, maximal_only=True):
        a = blocks[0]
        for nu in pt.valid_partitions("gl", a):
            for tail_orb in tail_orbit_labels(kind, t) if t else [None]:
                tau = tail_orb.partition if tail_orb else ()
                tau_tag = tail_orb.tag if tail_orb else None
                pi, tag, deg = _tail_induce(
                    kind, n, blocks, dclass, t, tau, tau_tag, (nu,)
                )
                if pi == target and tag == target_tag and (rigid_sense or deg == 1):
                    return True
    return False


# ---------------------------------------------------------------------------
# rigidity and the canonical datum


def maximal_proper_levis(ct: ClassicalType) -> list[LeviLabel]:
    out = []
    n = ct.rank
    if ct.family == "A":
        seen = set()
        for a in range(1, n + 1):
            blocks = tuple(sorted((a, n + 1 - a), reverse=True))
            if blocks not in seen:
                seen.add(blocks)
                out.append(LeviLabel(blocks, 0))
        return out
    for a in range(1, n + 1):
        m = n - a
        if ct.family == "D":
            if m == 1:
                continue
            if m == 0:
                if a % 2 == 0:
                    out.append(LeviLabel((a,), 0, "plus"))
                    out.append(LeviLabel((a,), 0, "minus"))
                else:
                    # the two gl_a embeddings are conjugate for odd a
                    out.append(LeviLabel((a,), 0))
                continue
        out.append(LeviLabel((a,), m))
    return out


def _datum_candidates(ct: ClassicalType, levi: LeviLabel, all_gl_orbits=False):
    """Induction data over a Levi: zero gl parts (or all, on request) times
    tail orbits (birationally rigid ones only for datum searches)."""
    kind = levi.tail_kind(ct)
    has_tail = ct.family != "A" and levi.tailRank > 0
    tail_n = levi.tail_size(ct) if has_tail else 0
    if all_gl_orbits:
        from itertools import product

        gl_choices = list(product(*(pt.valid_partitions("gl", b) for b in levi.glBlocks)))
        tails = tail_orbit_labels(kind, tail_n) if has_tail else [None]
    else:
        gl_choices = [tuple((1,) * b for b in levi.glBlocks)]
        tails = list(_birigid_tails(kind, tail_n)) if has_tail else [None]
    for gl in gl_choices:
        for tail in tails:
            yield InductionDatum(ct, levi, gl, tail)


def is_rigid(label: OrbitLabel) -> bool:
    """Not induced (in the plain sense) from any proper Levi."""
    validate_label(label)
    ct = label.type
    for levi in maximal_proper_levis(ct):
        for d in _datum_candidates(ct, levi, all_gl_orbits=True):
            if induce(d) == label:
                return False
    return True


def _birigid_route_a(label: OrbitLabel) -> bool:
    ct = label.type
    for levi in maximal_proper_levis(ct):
        for d in _datum_candidates(ct, levi, all_gl_orbits=True):
            orb, deg = induce_with_degree(d)
            if orb == label and deg == 1:
                return False
    return True


def _birigid_route_b(label: OrbitLabel) -> bool:
    from .namikawa import codim2_leaves
    from .orbits import h2_dim

    return h2_dim(label) == 0 and not codim2_leaves(label)


@lru_cache(maxsize=None)
def is_birationally_rigid(label: OrbitLabel) -> bool:
    """No proper datum induces the orbit birationally.

    Computed two independent ways (brute force over maximal Levis, and
    vanishing of the adjustment space: no centralizer characters and no
    codim-2 boundary leaves); a disagreement raises ConsistencyError.
    """
    validate_label(label)
    a = _birigid_route_a(label)
    b = _birigid_route_b(label)
    if a != b:
        raise ConsistencyError(
            "inconsistent-birational-rigidity for %s: brute force says %s, "
            "adjustment space says %s" % (label, a, b)
        )
    return a


@lru_cache(maxsize=None)
def birational_datum(label: OrbitLabel) -> InductionDatum:
    """The unique (Levi class, birationally rigid orbit) inducing the orbit
    birationally; the orbit itself over the full Levi when it is
    birationally rigid.  Zero central parameter."""
    validate_label(label)
    ct = label.type
    hits = []
    for levi in enumerate_levis(ct):
        if levi.is_full(ct):
            continue
        for d in _datum_candidates(ct, levi):
            orb, deg = induce_with_degree(d)
            if orb == label and deg == 1:
                hits.append(d)
    if is_birationally_rigid(label):
        if hits:
            raise ConsistencyError(
                "uniqueness-violated: birationally rigid %s also induced from %s"
                % (label, hits[0].levi)
            )
        full = _full_levi(ct)
        tail = None
        if ct.family != "A":
            tail = TailOrbit(label.partition, label.veryEvenTag)
            return zero_datum(ct, full, tail)
        return InductionDatum(ct, full, (label.partition,), None, CentralParameter((Fraction(0),)))
    if len(hits) != 1:
        raise ConsistencyError(
            "uniqueness-violated: %s has %d birational data from birationally "
            "rigid orbits" % (label, len(hits))
        )
    return hits[0]


def _full_levi(ct: ClassicalType) -> LeviLabel:
    if ct.family == "A":
        return LeviLabel((ct.rank + 1,), 0)
    return LeviLabel((), ct.rank)
