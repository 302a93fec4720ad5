"""Loader for the versioned criterion table.

The table lives in ``data/criterion_table.txt`` inside the package; the
environment variable ``NILPORB_TABLE_PATH`` overrides the location.  The
induction degree engine and the boundary-slice classifier consult it and
raise :class:`TableGapError` instead of guessing when a case is missing.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from importlib import resources

from .errors import TableGapError
from .partitions import Partition

ENV_TABLE_PATH = "NILPORB_TABLE_PATH"

_EXPR_RE = re.compile(r"^(?:(\d*)([kd]))?([+-]?\d+)?$")


@dataclass(frozen=True)
class LinExpr:
    """Linear expression c*var + a in the family parameter."""

    coeff: int
    const: int

    def eval(self, value: int) -> int:
        return self.coeff * value + self.const


def parse_expr(text: str) -> LinExpr:
    m = _EXPR_RE.match(text.strip())
    if not m or (m.group(1) is None and m.group(2) is None and m.group(3) is None):
        raise TableGapError("criterion-not-transcribed: bad expression %r" % text)
    coeff = 0
    if m.group(2):
        coeff = int(m.group(1)) if m.group(1) else 1
    const = int(m.group(3)) if m.group(3) else 0
    return LinExpr(coeff, const)


def _parse_shape(text: str) -> tuple[LinExpr, ...]:
    if not (text.startswith("[") and text.endswith("]")):
        raise TableGapError("criterion-not-transcribed: bad shape %r" % text)
    return tuple(parse_expr(tok) for tok in text[1:-1].split(","))


def _parse_detector(text: str):
    text = text.strip()
    if text == "none":
        return None
    m = re.match(r"^(single|sum)\((.*)\)$", text)
    if not m:
        raise TableGapError("criterion-not-transcribed: bad detector %r" % text)
    return tuple(parse_expr(tok) for tok in m.group(2).split(","))


@dataclass(frozen=True)
class Family:
    """One codim-2 degeneration family from the table."""

    name: str
    ambient: str
    top: tuple[LinExpr, ...]
    bottom: tuple[LinExpr, ...]
    slice_letter: str
    slice_rank: LinExpr
    branches: int
    detector: tuple[LinExpr, ...] | None
    merged: tuple[LinExpr, ...] | None


@dataclass(frozen=True)
class CriterionTable:
    version: int
    orthogonal: frozenset  # (kind, parity) pairs whose multiplicity space is orthogonal
    symplectic: frozenset
    halve_rule: bool  # even-orthogonal halving rule transcribed
    tag_sources: frozenset  # {"orientation", "tail-tag"}
    families: tuple[Family, ...]

    def is_orthogonal(self, kind: str, part: int) -> bool:
        parity = "odd" if part % 2 == 1 else "even"
        if (kind, parity) in self.orthogonal:
            return True
        if (kind, parity) in self.symplectic:
            return False
        raise TableGapError(
            "criterion-not-transcribed: no quadratic class for kind=%s parity=%s" % (kind, parity)
        )

    def require_halving_rule(self) -> None:
        if not self.halve_rule:
            raise TableGapError("criterion-not-transcribed: even-orthogonal halving rule missing")

    def require_tag_source(self, source: str) -> None:
        if source not in self.tag_sources:
            raise TableGapError("criterion-not-transcribed: very-even tag source %r missing" % source)

    def match_family(self, kind: str, top: Partition, bottom: Partition):
        """Match a reduced degeneration (top, bottom) against the table.

        Returns (family, parameter, slice_type, detector_values, branches)
        where slice_type is ("A"|"D", rank) before any aliasing and
        detector_values lists the bottom part values the functional reads.
        """
        for fam in self.families:
            if fam.ambient != kind:
                continue
            par = _solve_parameter(fam, top)
            if par is None:
                continue
            bot_vals = sorted((e.eval(par) for e in fam.bottom), reverse=True)
            if any(v <= 0 for v in bot_vals) or tuple(bot_vals) != tuple(bottom):
                continue
            slice_type = (fam.slice_letter, fam.slice_rank.eval(par))
            det = fam.detector
            if det is not None:
                vals = [e.eval(par) for e in det]
                if len(set(vals)) < len(vals) and fam.merged is not None:
                    vals = [e.eval(par) for e in fam.merged]
                det_values = tuple(vals)
            else:
                det_values = None
            return fam, par, slice_type, det_values, fam.branches
        raise TableGapError(
            "reduction-table-gap: no family for kind=%s top=%r bottom=%r" % (kind, top, bottom)
        )


def _solve_parameter(fam: Family, top: Partition):
    """Solve the family parameter from the top shape, or None if no fit."""
    if len(top) != len(fam.top):
        return None
    # find an expression with a variable to pin the parameter
    par = None
    for expr, value in zip(fam.top, top):
        if expr.coeff:
            if (value - expr.const) % expr.coeff:
                return None
            cand = (value - expr.const) // expr.coeff
            if par is not None and cand != par:
                return None
            par = cand
        elif expr.const != value:
            return None
    if par is None:
        par = 1  # constant shape; parameter unused
    if par < 1:
        return None
    return par


_cache: dict[str, CriterionTable] = {}


def table_path() -> str:
    override = os.environ.get(ENV_TABLE_PATH)
    if override:
        return override
    return str(resources.files("nilporb").joinpath("data/criterion_table.txt"))


def load_table(path: str | None = None) -> CriterionTable:
    path = path or table_path()
    if path in _cache:
        return _cache[path]
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    table = _parse_table(text)
    _cache[path] = table
    return table


def _parse_table(text: str) -> CriterionTable:
    version = None
    orthogonal, symplectic = set(), set()
    halve = False
    tag_sources = set()
    families = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        head = fields[0]
        if head == "version":
            version = int(fields[1])
        elif head == "badness":
            kind, parity, cls = fields[1], fields[2], fields[3]
            (orthogonal if cls == "orthogonal" else symplectic).add((kind, parity))
        elif head == "special":
            kv = dict(f.split("=", 1) for f in fields[2:] if "=" in f)
            if fields[1] == "halve":
                halve = True
            elif fields[1] == "tag":
                tag_sources.add(kv.get("source", ""))
        elif head == "family":
            kv = dict(f.split("=", 1) for f in fields[2:])
            slice_m = re.match(r"^([AD])\((.*)\)$", kv["slice"])
            if not slice_m:
                raise TableGapError("reduction-table-gap: bad slice spec %r" % kv["slice"])
            families.append(
                Family(
                    name=fields[1],
                    ambient=kv["ambient"],
                    top=_parse_shape(kv["top"]),
                    bottom=_parse_shape(kv["bottom"]),
                    slice_letter=slice_m.group(1),
                    slice_rank=parse_expr(slice_m.group(2)),
                    branches=int(kv["branches"]),
                    detector=_parse_detector(kv["detector"]),
                    merged=_parse_detector(kv["merged"]) if "merged" in kv else None,
                )
            )
        else:
            raise TableGapError("criterion-not-transcribed: unknown table row %r" % line)
    if version is None:
        raise TableGapError("criterion-not-transcribed: table has no version line")
    return CriterionTable(
        version=version,
        orthogonal=frozenset(orthogonal),
        symplectic=frozenset(symplectic),
        halve_rule=halve,
        tag_sources=frozenset(tag_sources),
        families=tuple(families),
    )
