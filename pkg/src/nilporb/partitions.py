"""Partition combinatorics underlying nilpotent-orbit bookkeeping.

Partitions are tuples of positive ints, weakly decreasing.  Three parity
regimes matter here, keyed by a one-letter kind:

    "gl" -- no constraint
    "so" -- even parts occur with even multiplicity
    "sp" -- odd parts occur with even multiplicity
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations

Partition = tuple[int, ...]


def normalize(parts) -> Partition:
    p = tuple(sorted((int(x) for x in parts), reverse=True))
    if any(x <= 0 for x in p):
        raise ValueError("partition parts must be positive: %r" % (parts,))
    return p


def is_partition(p) -> bool:
    return all(isinstance(x, int) and x > 0 for x in p) and list(p) == sorted(p, reverse=True)


def size(p: Partition) -> int:
    return sum(p)


def transpose(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= i) for i in range(1, p[0] + 1))


def mult(p: Partition) -> Counter:
    return Counter(p)


def dominates(p: Partition, q: Partition) -> bool:
    """Partial sums of p bound those of q (p above q in the closure order)."""
    if sum(p) != sum(q):
        return False
    acc_p = acc_q = 0
    for i in range(max(len(p), len(q))):
        acc_p += p[i] if i < len(p) else 0
        acc_q += q[i] if i < len(q) else 0
        if acc_p < acc_q:
            return False
    return True


def parity_ok(kind: str, p: Partition) -> bool:
    """Multiplicity parity test for the given kind ('gl' is vacuous)."""
    if kind == "gl":
        return True
    bad_parity = 0 if kind == "so" else 1  # even parts in so, odd parts in sp
    for part, m in Counter(p).items():
        if part % 2 == bad_parity and m % 2 == 1:
            return False
    return True


def parity_violations(kind: str, p: Partition) -> list[tuple[int, int]]:
    """(part, multiplicity) pairs violating the parity rule, largest part first."""
    if kind == "gl":
        return []
    bad_parity = 0 if kind == "so" else 1
    out = [(part, m) for part, m in Counter(p).items() if part % 2 == bad_parity and m % 2 == 1]
    return sorted(out, reverse=True)


def is_very_even(p: Partition) -> bool:
    """All parts even (empty partition counts).  Only meaningful for so-kind."""
    return all(x % 2 == 0 for x in p)


def collapse(kind: str, p: Partition) -> Partition:
    """Dominance-largest kind-valid partition dominated by p.

    Greedy: repeatedly take the largest part value violating parity,
    shrink its last occurrence by one box, and drop that box onto the
    first later row that can take it (value <= q-2), else a new row.
    """
    if kind == "gl":
        return normalize(p)
    if kind == "sp" and sum(p) % 2:
        raise ValueError("no sp-valid partition of odd size %d" % sum(p))
    q = list(normalize(p))
    while True:
        viol = parity_violations(kind, tuple(q))
        if not viol:
            return tuple(q)
        v = viol[0][0]
        i = max(j for j, x in enumerate(q) if x == v)
        q[i] -= 1
        placed = False
        for j in range(i + 1, len(q)):
            if q[j] <= v - 2:
                q[j] += 1
                placed = True
                break
        if not placed:
            q.append(1)
        q = [x for x in q if x > 0]
        q.sort(reverse=True)


def valid_partitions(kind: str, n: int) -> list[Partition]:
    """All kind-valid partitions of n, dominance-descending-ish (no tags)."""
    out = []

    def rec(remaining, maxpart, acc):
        if remaining == 0:
            p = tuple(acc)
            if parity_ok(kind, p):
                out.append(p)
            return
        for part in range(min(maxpart, remaining), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(n, n, [])
    return out


def padded_sum(*ps: Partition) -> Partition:
    """Coordinatewise sum after padding with zeros; result re-sorted."""
    if not ps:
        return ()
    k = max((len(p) for p in ps), default=0)
    out = [sum(p[i] if i < len(p) else 0 for p in ps) for i in range(k)]
    return normalize([x for x in out if x > 0]) if any(out) else ()


def scale(p: Partition, c: int) -> Partition:
    return tuple(x * c for x in p)


def gl_orbit_dim(b: int, nu: Partition) -> int:
    """Dimension of the nilpotent orbit of shape nu inside gl_b."""
    if size(nu) != b:
        raise ValueError("partition %r does not have size %d" % (nu, b))
    return b * b - sum(x * x for x in transpose(nu))


def iso_orbit_dim(kind: str, n: int, p: Partition) -> int:
    """Orbit dimension in so_n / sp_n for a kind-valid partition of n."""
    if size(p) != n:
        raise ValueError("partition %r does not have size %d" % (p, n))
    sq = sum(x * x for x in transpose(p))
    odd = sum(1 for x in p if x % 2 == 1)
    if kind == "so":
        cent = (sq - odd) // 2
        return n * (n - 1) // 2 - cent
    if kind == "sp":
        cent = (sq + odd) // 2
        return n * (n + 1) // 2 - cent
    raise ValueError("kind must be so or sp, got %r" % kind)


def orbit_dim_any(kind: str, n: int, p: Partition) -> int:
    if kind == "gl":
        return gl_orbit_dim(n, p)
    return iso_orbit_dim(kind, n, p)


def algebra_dim(kind: str, n: int) -> int:
    """dim of gl_n / so_n / sp_n as a plain matrix algebra."""
    if kind == "gl":
        return n * n
    if kind == "so":
        return n * (n - 1) // 2
    if kind == "sp":
        return n * (n + 1) // 2
    raise ValueError(kind)


def subpartitions_summing(parts: Partition, target: int):
    """Index subsets of `parts` whose values sum to `target` (deduplicated by value multiset)."""
    seen = set()
    idx = range(len(parts))
    for r in range(len(parts) + 1):
        for comb in combinations(idx, r):
            vals = tuple(sorted((parts[i] for i in comb), reverse=True))
            if sum(vals) == target and (vals, comb) and vals not in seen:
                seen.add(vals)
                yield comb
