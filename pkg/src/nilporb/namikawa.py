"""Codim-2 boundary leaves, Namikawa spaces, and their Weyl groups.

For an adjoint nilpotent orbit the affinization Spec of its ring of
functions has finitely many codim-2 symplectic leaves, each sitting over
a boundary orbit whose dimension drops by exactly 2.  The transverse
slice is a Kleinian singularity of type A or D; the fundamental group of
the leaf may act on the slice through a diagram involution, and the
Namikawa space glues the fixed parts of the slice Cartans onto the
character space of the orbit's centralizer.  The Namikawa Weyl group is
the product of the folded slice Weyl groups.

The slice type comes from row/column reduction of the partition pair
followed by a lookup in the criterion table; the monodromy is decided by
an explicit component-group functional (the "detector" column of the
table) transported through the reduction.  Reduced pairs the table does
not list raise TableGapError; situations where the combinatorial action
recipe is inconsistent raise ConsistencyError with an action-undetermined
message instead of defaulting.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as _product

from . import partitions as pt
from .errors import ConsistencyError
from .orbits import OrbitLabel, closure_leq, h2_dim, orbit_dim, validate_label
from .partitions import is_very_even
from .tables import load_table


@dataclass(frozen=True)
class KleinianLeaf:
    boundaryOrbit: OrbitLabel
    sliceType: str  # "A3", "D4", ... (normalized slice for glued pairs)
    pi1Action: str  # "trivial" or "order2"
    fixedSpaceDim: int
    foldedWeyl: str  # Weyl factor contributed: "A3", "C2", "B3", ...


@dataclass(frozen=True)
class NamikawaData:
    orbit: OrbitLabel
    h2dim: int
    leaves: tuple[KleinianLeaf, ...]
    cartanDim: int
    weylGroup: tuple[str, ...]  # sorted multiset of folded Weyl factors


def weyl_factor_order(name: str) -> int:
    """Order of the Weyl group of one irreducible factor like "C3"."""
    letter, rank = name[0], int(name[1:])
    if letter == "A":
        out = 1
        for i in range(2, rank + 2):
            out *= i
        return out
    fact = 1
    for i in range(2, rank + 1):
        fact *= i
    if letter in ("B", "C"):
        return 2**rank * fact
    if letter == "D":
        return 2 ** (rank - 1) * fact
    raise ValueError("unknown Weyl factor %r" % name)


def _reflection_count(name: str) -> int:
    letter, rank = name[0], int(name[1:])
    if letter == "A":
        return rank * (rank + 1) // 2
    if letter in ("B", "C"):
        return rank * rank
    if letter == "D":
        return rank * (rank - 1)
    raise ValueError("unknown Weyl factor %r" % name)


def namikawa_weyl_order(data: NamikawaData) -> int:
    out = 1
    for name in data.weylGroup:
        out *= weyl_factor_order(name)
    return out


# ---------------------------------------------------------------------------
# Kraft-Procesi style reduction of a degeneration pair


def _kp_reduce(kind: str, lam, mu):
    """Strip shared rows and full columns off a partition pair.

    Rows cancel while the first parts agree (ambient kind unchanged);
    a full first column cancels when both partitions have the same
    number of parts, flipping so<->sp and shifting part values by one.
    Returns (kind, top, bottom, column_shift).
    """
    lam, mu = list(lam), list(mu)
    t = 0
    flip = {"so": "sp", "sp": "so", "gl": "gl"}
    while True:
        if lam and mu and lam[0] == mu[0]:
            lam, mu = lam[1:], mu[1:]
        elif lam and mu and len(lam) == len(mu):
            lam = [x - 1 for x in lam if x > 1]
            mu = [x - 1 for x in mu if x > 1]
            kind = flip[kind]
            t += 1
        else:
            break
    return kind, tuple(lam), tuple(mu), t


# ---------------------------------------------------------------------------
# monodromy through the component group of the boundary orbit


def _component_basis(kind: str, mu):
    """Distinct part values of mu carrying a Z/2 component generator."""
    parity = 1 if kind == "so" else 0
    return tuple(sorted({v for v in mu if v % 2 == parity}, reverse=True))


def _admissible_tuples(kind: str, basis):
    tuples = list(_product((0, 1), repeat=len(basis)))
    if kind == "so":
        tuples = [a for a in tuples if sum(a) % 2 == 0]
    return tuples


def _phi(basis, bits, t, mu_reduced):
    """Transport a component tuple through the reduction: a generator at
    value v lands on value v - t of the reduced bottom if that value
    survives there, and dies otherwise."""
    mm = pt.mult(mu_reduced)
    out = {}
    for v, bit in zip(basis, bits):
        u = v - t
        if bit and u >= 1 and mm.get(u, 0) >= 1:
            out[u] = out.get(u, 0) ^ 1
    return out


def _leaf_actions(ct, lam_label, mu_part, kindE, lamE, muE, t, det_values, branches):
    """Leaf multiplicity and pi1 action for one boundary orbit.

    Returns a list (one entry per leaf of the affinization over this
    boundary orbit) of "trivial"/"order2" strings.
    """
    kind = ct.iso_kind
    basis = _component_basis(kind, mu_part)
    admissible = _admissible_tuples(kind, basis)
    mults = pt.mult(mu_part)
    # image of the isometry -1 in the component group; conjugation by a
    # central element is trivial, so everything must factor through it
    q = None
    if kind == "sp" or (kind == "so" and sum(mu_part) % 2 == 0):
        q = tuple(mults[v] % 2 for v in basis)
        if q not in [tuple(a) for a in admissible]:
            raise ConsistencyError(
                "action-undetermined: central class %r not admissible for %r" % (q, mu_part)
            )

    def chi(bits):
        img = _phi(basis, bits, t, muE)
        return sum(img.get(u, 0) for u in det_values) % 2 if det_values else 0

    def sigma(bits):
        img = _phi(basis, bits, t, muE)
        return sum(b for u, b in img.items() if u % 2 == 1) % 2

    groups = [admissible]
    if branches == 2:
        if q is not None and sigma(q) != 0:
            raise ConsistencyError(
                "action-undetermined: central class swaps branches over %r" % (mu_part,)
            )
        if lam_label.veryEvenTag is not None:
            # a tagged very even orbit sees exactly one of the two glued
            # branches; anything swapping them would be inconsistent
            if any(sigma(a) for a in admissible):
                raise ConsistencyError(
                    "action-undetermined: branch swap over %r under very even %s"
                    % (mu_part, lam_label)
                )
        else:
            kernel = [a for a in admissible if sigma(a) == 0]
            if len(kernel) == len(admissible):
                groups = [admissible, admissible]  # two separate leaves
            else:
                groups = [kernel]
    out = []
    for grp in groups:
        if det_values is None:
            out.append("trivial")
            continue
        if q is not None and chi(q) != 0:
            raise ConsistencyError(
                "action-undetermined: detector does not factor through the "
                "adjoint component group over %r" % (mu_part,)
            )
        out.append("order2" if any(chi(a) for a in grp) else "trivial")
    return out


def _fold(slice_letter: str, rank: int, action: str):
    """Fixed-space dimension and folded Weyl factor of one leaf."""
    if rank == 1:
        # an A_1 diagram has no involution; nothing to fold
        action = "trivial"
    if action == "trivial":
        return rank, "%s%d" % (slice_letter, rank), action
    if slice_letter == "A":
        if rank % 2 == 0:
            raise ConsistencyError("action-undetermined: involution on even A_%d slice" % rank)
        m = (rank + 1) // 2
        return m, "C%d" % m, action
    if slice_letter == "D":
        return rank - 1, "B%d" % (rank - 1), action
    raise ConsistencyError("action-undetermined: fold of %s_%d" % (slice_letter, rank))


# ---------------------------------------------------------------------------
# public entry points


@lru_cache(maxsize=None)
def codim2_leaves(label: OrbitLabel) -> tuple[KleinianLeaf, ...]:
    """The codim-2 leaves of the affinization of the orbit's closure."""
    validate_label(label)
    ct = label.type
    lam = label.partition
    kind = "gl" if ct.family == "A" else ct.iso_kind
    target = orbit_dim(label) - 2
    table = load_table()
    leaves = []
    candidates = pt.valid_partitions(kind, ct.natural_dim)
    for mu in candidates:
        if mu == lam or not pt.dominates(lam, mu):
            continue
        if pt.orbit_dim_any(kind, ct.natural_dim, mu) != target:
            continue
        kindE, lamE, muE, t = _kp_reduce(kind, lam, mu)
        fam, par, slice_type, det_values, branches = table.match_family(kindE, lamE, muE)
        letter, rank = slice_type
        if rank == 1:
            det_values = None  # no diagram involution exists on A_1
        tags = [None]
        if ct.family == "D" and is_very_even(mu):
            tags = ["I", "II"]
        for tag in tags:
            mu_label = OrbitLabel(ct, mu, tag)
            if not closure_leq(mu_label, label):
                continue
            if ct.family == "A":
                # inner automorphisms cannot flip the slice in type A
                actions = ["trivial"]
            else:
                actions = _leaf_actions(
                    ct, label, mu, kindE, lamE, muE, t, det_values, branches
                )
            for action in actions:
                fixed, folded, action = _fold(letter, rank, action)
                leaves.append(
                    KleinianLeaf(
                        boundaryOrbit=mu_label,
                        sliceType="%s%d" % (letter, rank),
                        pi1Action=action,
                        fixedSpaceDim=fixed,
                        foldedWeyl=folded,
                    )
                )
    leaves.sort(key=lambda lf: (lf.boundaryOrbit.key(), lf.foldedWeyl))
    return tuple(leaves)


@lru_cache(maxsize=None)
def namikawa_space(label: OrbitLabel) -> NamikawaData:
    leaves = codim2_leaves(label)
    h2 = h2_dim(label)
    cartan = h2 + sum(lf.fixedSpaceDim for lf in leaves)
    weyl = tuple(sorted(lf.foldedWeyl for lf in leaves))
    return NamikawaData(label, h2, leaves, cartan, weyl)


def _matrix_rank_minus_identity(mat) -> int:
    from fractions import Fraction

    n = len(mat)
    rows = [[Fraction(mat[i][j] - (1 if i == j else 0)) for j in range(n)] for i in range(n)]
    rank = 0
    col = 0
    for col in range(n):
        pivot = next((r for r in range(rank, n) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        for r in range(n):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / pr[col]
                rows[r] = [a - f * b for a, b in zip(rows[r], pr)]
        rank += 1
    return rank


def check_weyl_match(label: OrbitLabel) -> list[str]:
    """Cross-check the Namikawa data against the canonical datum.

    Three comparisons, each contributing a report line on failure: the
    Namikawa Cartan dimension must equal the dimension of the centre of
    the datum's Levi; the Namikawa Weyl group order must equal the order
    of the stabilizer of the datum inside the Levi's normalizer quotient;
    and the two groups must contain the same number of reflections.
    """
    from .induction import birational_datum
    from .roots import build_root_system, normalizer_action, orbit_stabilizer_group

    data = namikawa_space(label)
    datum = birational_datum(label)
    ct = label.type
    report = []
    zdim = datum.levi.z_dim(ct)
    if data.cartanDim != zdim:
        report.append(
            "cartan mismatch for %s: namikawa %d vs centre %d" % (label, data.cartanDim, zdim)
        )
    rs = build_root_system(ct)
    action = normalizer_action(rs, datum.levi)
    tail = None
    if datum.tailOrbit is not None:
        tail = (datum.tailOrbit.partition, datum.tailOrbit.tag)
    stab = orbit_stabilizer_group(action, datum.levi, datum.glOrbits, tail, ct.family)
    w_order = 1
    for name in data.weylGroup:
        w_order *= weyl_factor_order(name)
    if w_order != stab.order:
        report.append(
            "weyl order mismatch for %s: namikawa %d vs stabilizer %d"
            % (label, w_order, stab.order)
        )
    expected_refl = sum(_reflection_count(name) for name in data.weylGroup)
    found_refl = sum(
        1 for m in stab.elements if _matrix_rank_minus_identity(m) == 1
    )
    if expected_refl != found_refl:
        report.append(
            "reflection count mismatch for %s: namikawa %d vs stabilizer %d"
            % (label, expected_refl, found_refl)
        )
    return report
