"""Classical root systems, Levi classes, and Weyl-group actions.

Families A/B/C/D only, adjoint conventions.  Ranks below the classical
thresholds (B1, C1, D2, D3) are rejected as ambient types; they still
appear internally as tails of Levi subalgebras, handled at the partition
level elsewhere.

Weyl groups are enumerated breadth-first from the simple reflections and
cached per family; elements are signed permutations stored as image
tuples (entry ``+-j`` at slot i means e_i maps to ``+-e_{j-1}``,
1-based).  Enumeration refuses to run past a rank cap (default 7,
``NILPORB_RANK_CAP`` overrides) because the group order explodes.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import cached_property

from .errors import InputError, RankCapError
from .partitions import Partition, algebra_dim, is_partition

ENV_RANK_CAP = "NILPORB_RANK_CAP"
DEFAULT_RANK_CAP = 7

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}


def rank_cap() -> int:
    return int(os.environ.get(ENV_RANK_CAP, DEFAULT_RANK_CAP))


@dataclass(frozen=True, order=True)
class ClassicalType:
    """A classical simple type of adjoint kind: family in ABCD plus rank."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _MIN_RANK:
            raise InputError("family must be one of A, B, C, D, got %r" % (self.family,))
        if not isinstance(self.rank, int) or self.rank < _MIN_RANK[self.family]:
            raise InputError(
                "rank %r below the %s-family threshold %d (smaller ranks duplicate "
                "earlier families)" % (self.rank, self.family, _MIN_RANK[self.family])
            )

    @property
    def natural_dim(self) -> int:
        """Size of the defining matrix module (partitions of orbits sum to this)."""
        n = self.rank
        return {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[self.family]

    @property
    def iso_kind(self) -> str:
        """Partition parity regime: gl for A, so for B/D, sp for C."""
        return {"A": "gl", "B": "so", "C": "sp", "D": "so"}[self.family]

    @property
    def dim(self) -> int:
        if self.family == "A":
            return (self.rank + 1) ** 2 - 1
        return algebra_dim(self.iso_kind, self.natural_dim)

    @property
    def coord_count(self) -> int:
        """Number of coordinates the Weyl group permutes."""
        return self.rank + 1 if self.family == "A" else self.rank

    def weyl_order(self) -> int:
        n = self.rank
        if self.family == "A":
            return math.factorial(n + 1)
        if self.family in ("B", "C"):
            return 2**n * math.factorial(n)
        return 2 ** (n - 1) * math.factorial(n)

    def __str__(self):
        return "%s%d" % (self.family, self.rank)


def parse_type(text: str) -> ClassicalType:
    text = text.strip()
    if len(text) < 2 or text[0].upper() not in "ABCD" or not text[1:].isdigit():
        raise InputError("cannot parse type %r (expected e.g. B3)" % text)
    return ClassicalType(text[0].upper(), int(text[1:]))


@dataclass(frozen=True)
class RootSystem:
    type: ClassicalType
    roots: tuple[tuple[int, ...], ...]
    simpleRoots: tuple[tuple[int, ...], ...]


def _unit(n, i, c=1):
    v = [0] * n
    v[i] = c
    return tuple(v)


def _vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def build_root_system(ct: ClassicalType) -> RootSystem:
    """Roots in the standard coordinates, simple roots in Bourbaki order."""
    n = ct.rank
    fam = ct.family
    pos = []
    if fam == "A":
        m = n + 1
        for i in range(m):
            for j in range(i + 1, m):
                pos.append(_vsub(_unit(m, i), _unit(m, j)))
        simple = tuple(_vsub(_unit(m, i), _unit(m, i + 1)) for i in range(n))
    else:
        for i in range(n):
            for j in range(i + 1, n):
                pos.append(_vsub(_unit(n, i), _unit(n, j)))
                pos.append(_vadd(_unit(n, i), _unit(n, j)))
        if fam == "B":
            pos.extend(_unit(n, i) for i in range(n))
        elif fam == "C":
            pos.extend(_unit(n, i, 2) for i in range(n))
        chain = [_vsub(_unit(n, i), _unit(n, i + 1)) for i in range(n - 1)]
        if fam == "B":
            simple = tuple(chain + [_unit(n, n - 1)])
        elif fam == "C":
            simple = tuple(chain + [_unit(n, n - 1, 2)])
        else:
            simple = tuple(chain + [_vadd(_unit(n, n - 2), _unit(n, n - 1))])
    roots = tuple(pos + [tuple(-x for x in r) for r in pos])
    return RootSystem(ct, roots, simple)


# ---------------------------------------------------------------------------
# Weyl groups as signed permutations


def _compose(w, v):
    """Signed-permutation composition w after v, in image-tuple encoding."""
    out = []
    for x in v:
        y = w[abs(x) - 1]
        out.append(y if x > 0 else -y)
    return tuple(out)


def _simple_gens(ct: ClassicalType):
    k = ct.coord_count
    ident = tuple(range(1, k + 1))
    gens = []
    for i in range(k - 1):
        g = list(ident)
        g[i], g[i + 1] = g[i + 1], g[i]
        gens.append(tuple(g))
    if ct.family in ("B", "C"):
        g = list(ident)
        g[-1] = -g[-1]
        gens.append(tuple(g))
    elif ct.family == "D":
        g = list(ident)
        g[-2], g[-1] = -g[-1], -g[-2]
        gens.append(tuple(g))
    return gens


_weyl_cache: dict[tuple[str, int], tuple] = {}


def weyl_elements(ct: ClassicalType) -> tuple:
    """All Weyl group elements (BFS closure of the simple reflections)."""
    cap = rank_cap()
    if ct.rank > cap:
        raise RankCapError(
            "Weyl enumeration for %s exceeds the rank cap %d; raise %s to proceed"
            % (ct, cap, ENV_RANK_CAP)
        )
    key = ("BC" if ct.family in ("B", "C") else ct.family, ct.rank)
    if key in _weyl_cache:
        return _weyl_cache[key]
    gens = _simple_gens(ct)
    ident = tuple(range(1, ct.coord_count + 1))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                u = _compose(g, w)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    elements = tuple(sorted(seen))
    assert len(elements) == ct.weyl_order()
    _weyl_cache[key] = elements
    return elements


# ---------------------------------------------------------------------------
# Levi classes


@dataclass(frozen=True)
class LeviLabel:
    """Conjugacy class of a Levi subalgebra: gl blocks plus an isometry tail.

    ``glBlocks`` is weakly decreasing; ``tailRank`` is the rank of the
    so/sp tail (0 allowed).  ``dClass`` distinguishes the two classes of
    an all-even pure-gl Levi in type D ("plus"/"minus"); it is None in
    every other situation.  In type A the tail is always absent and the
    blocks sum to rank+1.
    """

    glBlocks: tuple[int, ...]
    tailRank: int
    dClass: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "glBlocks", tuple(int(b) for b in self.glBlocks))
        if not is_partition(self.glBlocks):
            raise InputError("glBlocks must be weakly decreasing positive ints: %r" % (self.glBlocks,))
        if self.tailRank < 0:
            raise InputError("tailRank must be >= 0")
        if self.dClass not in (None, "plus", "minus"):
            raise InputError("dClass must be 'plus' or 'minus' when present")

    def validate_for(self, ct: ClassicalType) -> None:
        total = sum(self.glBlocks) + self.tailRank
        if ct.family == "A":
            if self.tailRank != 0:
                raise InputError("type A Levis have no tail")
            if sum(self.glBlocks) != ct.rank + 1:
                raise InputError("type A blocks must sum to rank+1")
            if self.dClass is not None:
                raise InputError("dClass only applies in type D")
            return
        if total != ct.rank:
            raise InputError(
                "blocks plus tail rank must equal the ambient rank (%d != %d)" % (total, ct.rank)
            )
        tagged = ct.family == "D" and self.tailRank == 0 and all(b % 2 == 0 for b in self.glBlocks)
        if tagged and self.dClass is None:
            raise InputError("all-even pure-gl Levi in type D needs dClass")
        if not tagged and self.dClass is not None:
            raise InputError("dClass present but this Levi class is unambiguous")
        if ct.family == "D" and self.tailRank == 1:
            raise InputError("type D tail of rank 1 duplicates a gl_1 block; use blocks+(1,)")

    def z_dim(self, ct: ClassicalType) -> int:
        """Dimension of the centre of the Levi."""
        k = len(self.glBlocks)
        return k - 1 if ct.family == "A" else k

    def algebra_dim(self, ct: ClassicalType) -> int:
        d = sum(b * b for b in self.glBlocks)
        if ct.family == "A":
            return d - 1
        return d + algebra_dim(self.tail_kind(ct), self.tail_size(ct))

    def tail_kind(self, ct: ClassicalType) -> str:
        return "sp" if ct.family == "C" else "so"

    def tail_size(self, ct: ClassicalType) -> int:
        if ct.family == "A":
            return 0
        if ct.family == "B":
            return 2 * self.tailRank + 1
        return 2 * self.tailRank

    def is_full(self, ct: ClassicalType) -> bool:
        if ct.family == "A":
            return self.glBlocks == (ct.rank + 1,)
        return self.tailRank == ct.rank

    def __str__(self):
        blocks = ",".join(str(b) for b in self.glBlocks) or "-"
        tag = {"plus": ":+", "minus": ":-", None: ""}[self.dClass]
        if self.tailRank or not self.glBlocks:
            return "(%s|%d)%s" % (blocks, self.tailRank, tag)
        return "(%s)%s" % (blocks, tag)


def levi_weyl_order(ct: ClassicalType, levi: LeviLabel) -> int:
    """Order of the Weyl group of the Levi (tail included)."""
    order = 1
    for b in levi.glBlocks:
        order *= math.factorial(b)
    m = levi.tailRank
    if m:
        if ct.family == "D":
            order *= 2 ** (m - 1) * math.factorial(m)
        else:
            order *= 2**m * math.factorial(m)
    return order


def enumerate_levis(ct: ClassicalType) -> list[LeviLabel]:
    """One label per conjugacy class, full algebra first, Cartan last.

    In type D an all-even pure-gl block multiset yields the plus and
    minus classes back to back; a rank-1 tail is never emitted (it is
    the same class as an extra gl_1 block).
    """
    from .partitions import valid_partitions

    out = []
    if ct.family == "A":
        for blocks in valid_partitions("gl", ct.rank + 1):
            out.append(LeviLabel(blocks, 0))
    else:
        tails = [m for m in range(ct.rank + 1) if not (ct.family == "D" and m == 1)]
        for m in tails:
            for blocks in valid_partitions("gl", ct.rank - m):
                if ct.family == "D" and m == 0 and blocks and all(b % 2 == 0 for b in blocks):
                    out.append(LeviLabel(blocks, 0, "plus"))
                    out.append(LeviLabel(blocks, 0, "minus"))
                else:
                    out.append(LeviLabel(blocks, m))
    def sort_key(l: LeviLabel):
        return (-l.tailRank, tuple(-b for b in l.glBlocks), l.dClass or "")

    out.sort(key=sort_key)
    for l in out:
        l.validate_for(ct)
    return out


# ---------------------------------------------------------------------------
# Finite linear groups on the centre of a Levi


def mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def mat_identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class FiniteLinearGroup:
    """A finite group of exact integer matrices on block coordinates.

    ``degree`` is the matrix size (= number of gl blocks); in type A the
    matrices are permutations and the meaningful action is on the
    trace-zero subspace.  ``elements`` always holds the full group;
    ``generators`` extracts a small generating set lazily.
    """

    degree: int
    elements: frozenset

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def generators(self) -> tuple:
        if self.order == 1:
            return (mat_identity(self.degree),) if self.degree else ()
        gens = []
        closure = {mat_identity(self.degree)}
        for el in sorted(self.elements):
            if el in closure:
                continue
            gens.append(el)
            frontier = list(closure)
            closure.add(el)
            queue = [el]
            while queue:
                w = queue.pop()
                for g in gens + frontier:
                    for u in (mat_mul(w, g), mat_mul(g, w)):
                        if u not in closure:
                            closure.add(u)
                            queue.append(u)
            if len(closure) == self.order:
                break
        return tuple(gens)

    def __contains__(self, m):
        return m in self.elements


def _block_layout(ct: ClassicalType, levi: LeviLabel):
    """Coordinate slices and sign layout realizing the Levi class."""
    slices = []
    start = 0
    for b in levi.glBlocks:
        slices.append(tuple(range(start, start + b)))
        start += b
    tail = tuple(range(start, ct.coord_count))
    signs = [1] * ct.coord_count
    if levi.dClass == "minus":
        signs[slices[-1][-1]] = -1
    return slices, tail, signs


def _signed_block_sets(slices, signs):
    return [frozenset((signs[c], c) for c in blk) for blk in slices]


def normalizer_action(rs: RootSystem, levi: LeviLabel) -> FiniteLinearGroup:
    """Action of N_W(W_L)/W_L on the centre of the Levi, as matrices.

    Matrices are written in the block-coordinate basis (one coordinate
    per gl block); they are signed permutations, plain permutations in
    type A.
    """
    ct = rs.type
    levi.validate_for(ct)
    key = (ct, levi)
    if key in _normalizer_cache:
        return _normalizer_cache[key]
    slices, tail, signs = _block_layout(ct, levi)
    block_sets = _signed_block_sets(slices, signs)
    sizes = [len(s) for s in slices]
    tail_set = frozenset(tail)
    k = len(slices)
    mats = set()
    for w in weyl_elements(ct):
        # tail coordinates must stay tail coordinates
        ok = all(abs(w[c]) - 1 in tail_set for c in tail)
        if not ok:
            continue
        perm = [None] * k
        eps = [0] * k
        for i, blk in enumerate(slices):
            images = set()
            for c in blk:
                s = signs[c]
                x = w[c] if s > 0 else -w[c]
                images.add((1 if x > 0 else -1, abs(x) - 1))
            target = None
            for j, bs in enumerate(block_sets):
                if sizes[j] != sizes[i]:
                    continue
                if images == bs:
                    target, sign = j, 1
                    break
                if images == frozenset((-s, c) for s, c in bs):
                    target, sign = j, -1
                    break
            if target is None:
                ok = False
                break
            perm[i], eps[i] = target, sign
        if not ok or len(set(perm)) != k:
            continue
        mat = tuple(
            tuple(eps[i] if perm[i] == r else 0 for i in range(k)) for r in range(k)
        )
        mats.add(mat)
    group = FiniteLinearGroup(k, frozenset(mats))
    _normalizer_cache[key] = group
    return group


_normalizer_cache: dict = {}


def orbit_stabilizer_group(
    action: FiniteLinearGroup,
    levi: LeviLabel,
    glOrbits,
    tailOrbit=None,
    family: str = None,
) -> FiniteLinearGroup:
    """Subgroup of a normalizer action fixing the induction data.

    ``glOrbits`` lists one partition per gl block (of that block's
    size); ``tailOrbit`` is ``(partition, tag-or-None)`` or None when the
    tail is absent.  A block permutation is allowed only between equal
    blocks carrying equal partitions; block sign flips are free except
    that in type D a very-even-tagged tail orbit forbids flipping an odd
    total of odd-size coordinates (the lift would swap the tail tag).
    """
    blocks = levi.glBlocks
    k = len(blocks)
    orbs = [tuple(p) for p in glOrbits]
    if len(orbs) != k:
        raise InputError("need one gl orbit per block")
    tagged_tail = False
    if tailOrbit is not None:
        tail_parts, tail_tag = tailOrbit
        tagged_tail = tail_tag is not None
    kept = set()
    for mat in action.elements:
        ok = True
        flip_parity = 0
        for i in range(k):
            col = [mat[r][i] for r in range(k)]
            j = next(r for r, v in enumerate(col) if v)
            if blocks[j] != blocks[i] or orbs[j] != orbs[i]:
                ok = False
                break
            if col[j] < 0 and blocks[i] % 2 == 1:
                flip_parity ^= 1
        if not ok:
            continue
        if family == "D" and tagged_tail and flip_parity:
            continue
        kept.add(mat)
    return FiniteLinearGroup(action.degree, frozenset(kept))
