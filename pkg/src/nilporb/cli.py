"""Command line interface.

Verbs:
  orbits TYPE             list nilpotent orbits with dimensions and flags
  induce TYPE --levi ...  induce an orbit from a datum, with its degree
  rigid ORBIT             test rigidity
  birigid ORBIT           test birational rigidity
  datum ORBIT             the unique birational induction datum
  namikawa ORBIT          Namikawa space and Namikawa-Weyl group
  sheets TYPE             sheets and birational sheets
  label TYPE --xi ...     orbit-method label of an adjoint orbit
  verify [TYPE] --suite S run a verification suite (--cache audits the cache)
  report TYPE --out DIR   write csv tables and the two figures

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success, 2 bad
input, 3 internal consistency failure, 4 criterion table gap.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__, cache
from . import partitions as pt
from . import report
from .errors import ConsistencyError, InputError, NilporbError
from .induction import (
    InductionDatum,
    TailOrbit,
    dim_nilradical,
    induce_with_degree,
    is_birationally_rigid,
    is_rigid,
    validate_datum,
)
from .namikawa import check_weyl_match, namikawa_space
from .orbits import OrbitLabel, enumerate_orbits, orbit_dim, validate_label
from .orbitmethod import adjoint_label_from_coords, label_to_orbit, orbit_to_label, verify_injectivity
from .roots import ClassicalType, LeviLabel, enumerate_levis, parse_type
from .sheets import birational_sheets, enumerate_sheets as enumerate_sheet_records, verify_disjoint_cover

SUITES = ("cover", "dims", "weyl", "datum", "birigid", "injectivity", "all")


# ---------------------------------------------------------------------------
# input parsing


def parse_orbit_spec(text: str) -> OrbitLabel:
    """Parse 'C2:2,2' or 'D4:2,2,2,2:I' with column-pointing diagnostics."""

    def fail(col: int, why: str):
        caret = " " * (col + 2) + "^"
        raise InputError("bad orbit spec (column %d): %s\n  %s\n%s" % (col + 1, why, text, caret))

    head, sep, rest = text.partition(":")
    if not sep:
        fail(len(text), "expected ':' followed by a partition")
    try:
        ct = parse_type(head.strip())
    except InputError as exc:
        fail(0, str(exc))
    parts_text, sep2, tag_text = rest.partition(":")
    base = len(head) + 1
    parts = []
    col = base
    for token in parts_text.split(","):
        stripped = token.strip()
        offset = token.index(stripped) if stripped else 0
        if not stripped.isdigit():
            fail(col + offset, "expected an integer partition part, got %r" % stripped)
        value = int(stripped)
        if value <= 0:
            fail(col + offset, "partition parts must be positive")
        parts.append(value)
        col += len(token) + 1
    tag = None
    if sep2:
        tag = tag_text.strip()
        if tag not in ("I", "II"):
            fail(base + len(parts_text) + 1, "tag must be I or II, got %r" % tag)
    label = OrbitLabel(ct, pt.normalize(parts), tag)
    validate_label(label)
    return label


def _parse_partition(text: str):
    body = text.strip()
    tag = None
    if ":" in body:
        body, tag = body.rsplit(":", 1)
        tag = tag.strip()
        if tag not in ("I", "II"):
            raise InputError("partition tag must be I or II, got %r" % tag)
        body = body.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    if not body.strip():
        return (), tag
    parts = []
    for token in body.split(","):
        token = token.strip()
        if not token.isdigit() or int(token) <= 0:
            raise InputError("bad partition part %r in %r" % (token, text))
        parts.append(int(token))
    return pt.normalize(parts), tag


def _parse_partition_list(text: str):
    if not text.strip():
        return []
    return [_parse_partition(tok) for tok in text.split(";")]


def _parse_levi(ct: ClassicalType, text: str) -> LeviLabel:
    """Parse '2,1|1', '2,2|0:-', or (type A / no tail) '2,1'."""
    body = text.strip()
    dclass = None
    for suffix, name in ((":+", "plus"), (":-", "minus"), (":plus", "plus"), (":minus", "minus")):
        if body.endswith(suffix):
            body = body[: -len(suffix)]
            dclass = name
            break
    blocks_text, sep, tail_text = body.partition("|")
    if sep:
        tail_text = tail_text.strip()
        if not tail_text.isdigit():
            raise InputError("bad tail rank %r in levi %r" % (tail_text, text))
        tail_rank = int(tail_text)
    else:
        tail_rank = 0
    blocks = []
    if blocks_text.strip():
        for token in blocks_text.split(","):
            token = token.strip()
            if not token.isdigit() or int(token) <= 0:
                raise InputError("bad gl block %r in levi %r" % (token, text))
            blocks.append(int(token))
    levi = LeviLabel(tuple(sorted(blocks, reverse=True)), tail_rank, dclass)
    levi.validate_for(ct)
    return levi


def _parse_fractions(text: str):
    out = []
    for token in text.split(";"):
        token = token.strip()
        try:
            out.append(Fraction(token))
        except (ValueError, ZeroDivisionError):
            raise InputError("bad rational %r in %r" % (token, text))
    return tuple(out)


def _build_datum(ct: ClassicalType, args) -> InductionDatum:
    levi = _parse_levi(ct, args.levi)
    gl = []
    for p, tag in _parse_partition_list(args.gl or ""):
        if tag is not None:
            raise InputError("gl factor orbits carry no tag")
        gl.append(p)
    if not gl:
        gl = [(1,) * b for b in levi.glBlocks]
    tail = None
    if args.tail is not None:
        part, tag = _parse_partition(args.tail)
        tail = TailOrbit(part, tag)
    elif levi.tailRank and ct.family != "A":
        tail = TailOrbit((1,) * levi.tail_size(ct), None)
    xi = None
    if getattr(args, "xi", None):
        from .induction import CentralParameter

        xi = CentralParameter(_parse_fractions(args.xi))
    d = InductionDatum(ct, levi, tuple(gl), tail, xi)
    validate_datum(d)
    return d


# ---------------------------------------------------------------------------
# output


def _emit_json(obj) -> None:
    # sorted keys so cache hits and fresh computations print identically
    print(json.dumps(obj, indent=2, sort_keys=True))


def _emit_table(rows: list[dict]) -> None:
    if not rows:
        return
    cols = list(rows[0].keys())
    cells = [[report._flat(r[c]) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    print("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip())
    print("  ".join("-" * w for w in widths))
    for row in cells:
        print("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip())


def _emit_csv(rows: list[dict]) -> None:
    import csv as _csv

    if not rows:
        return
    cols = list(rows[0].keys())
    w = _csv.writer(sys.stdout)
    w.writerow(cols)
    for r in rows:
        w.writerow([report._flat(r[c]) for c in cols])


def _kv_rows(record: dict) -> list[dict]:
    return [{"field": k, "value": report._flat(v)} for k, v in record.items()]


# ---------------------------------------------------------------------------
# cache plumbing


def _cached_records(ct: ClassicalType, operation: str, build, no_cache: bool):
    if no_cache:
        return build()
    entry = cache.load(__version__, ct.family, ct.rank, operation)
    if entry is not None:
        return entry.payload
    payload = build()
    cache.store(cache.make_entry(__version__, ct.family, ct.rank, operation, payload))
    return payload


def _orbit_operation(label: OrbitLabel, op: str) -> str:
    bits = [str(p) for p in label.partition]
    if label.veryEvenTag:
        bits.append(label.veryEvenTag)
    return "%s-%s" % (op, "-".join(bits))


# ---------------------------------------------------------------------------
# verbs


def cmd_orbits(args) -> int:
    ct = parse_type(args.type)
    records = _cached_records(
        ct, "orbits",
        lambda: [report.orbit_record(o) for o in enumerate_orbits(ct)],
        args.no_cache,
    )
    if args.format == "json":
        _emit_json(records)
        return 0
    rows = [
        {
            "spec": r["spec"],
            "dim": r["dim"],
            "h2dim": r["h2dim"],
            "rigid": r["rigid"],
            "birigid": r["birationallyRigid"],
            "componentGroup": r["componentGroup"] or "1",
        }
        for r in records
    ]
    if args.format == "csv":
        _emit_csv(rows)
    elif args.format == "table":
        _emit_table(rows)
    else:
        for r in rows:
            flags = [k for k in ("rigid", "birigid") if r[k]]
            print("%s  dim=%s h2=%s comp=%s%s"
                  % (r["spec"], r["dim"], r["h2dim"], report._flat(r["componentGroup"]),
                     ("  " + ",".join(flags)) if flags else ""))
    return 0


def cmd_induce(args) -> int:
    ct = parse_type(args.type)
    d = _build_datum(ct, args)
    induced, degree = induce_with_degree(d)
    rec = report.datum_record(d)
    rec["induced"] = report.orbit_spec(induced)
    rec["degree"] = degree
    rec["birational"] = degree == 1
    rec["nilradicalDim"] = dim_nilradical(d)
    if args.format == "json":
        _emit_json(rec)
    elif args.format == "table":
        _emit_table(_kv_rows(rec))
    else:
        print("induced orbit: %s" % rec["induced"])
        print("degree: %d%s" % (degree, " (birational)" if degree == 1 else ""))
    return 0


def _flag_verb(args, name: str, fn) -> int:
    label = parse_orbit_spec(args.orbit)
    value = fn(label)
    if args.format == "json":
        _emit_json({"orbit": report.orbit_spec(label), name: value})
    else:
        print("%s is %s%s" % (report.orbit_spec(label), "" if value else "not ",
                              "birationally rigid" if name == "birationallyRigid" else "rigid"))
    return 0


def cmd_rigid(args) -> int:
    return _flag_verb(args, "rigid", is_rigid)


def cmd_birigid(args) -> int:
    return _flag_verb(args, "birationallyRigid", is_birationally_rigid)


def cmd_datum(args) -> int:
    label = parse_orbit_spec(args.orbit)
    ct = label.type
    rec = _cached_records(
        ct, _orbit_operation(label, "datum"),
        lambda: report.datum_report(label),
        args.no_cache,
    )
    if args.format == "json":
        _emit_json(rec)
    elif args.format == "table":
        flat = {
            "orbit": rec["orbit"],
            "levi": rec["levi"]["text"],
            "glOrbits": "; ".join(report.ptext(p) for p in rec["glOrbits"]) or "-",
            "tailOrbit": report._flat(rec["tailOrbit"]) or "-",
            "degree": rec["degree"],
        }
        _emit_table(_kv_rows(flat))
    else:
        print("orbit: %s" % rec["orbit"])
        print("levi: %s" % rec["levi"]["text"])
        print("gl orbits: %s" % ("; ".join(report.ptext(p) for p in rec["glOrbits"]) or "-"))
        tail = rec["tailOrbit"]
        if tail:
            print("tail orbit: %s" % tail["text"])
        print("degree: %d" % rec["degree"])
    return 0


def cmd_namikawa(args) -> int:
    label = parse_orbit_spec(args.orbit)
    rec = _cached_records(
        label.type, _orbit_operation(label, "namikawa"),
        lambda: report.namikawa_record(label),
        args.no_cache,
    )
    if args.format == "json":
        _emit_json(rec)
        return 0
    if args.format == "table":
        flat = {
            "orbit": rec["orbit"],
            "h2dim": rec["h2dim"],
            "cartanDim": rec["cartanDim"],
            "weylGroup": " x ".join(rec["weylGroup"]) or "1",
            "weylOrder": rec["weylOrder"],
        }
        for i, leaf in enumerate(rec["leaves"], 1):
            flat["leaf %d" % i] = "%s slice=%s action=%s fixed=%d folded=%s" % (
                leaf["boundary"], leaf["sliceType"], leaf["pi1Action"],
                leaf["fixedSpaceDim"], leaf["foldedWeyl"] or "-")
        _emit_table(_kv_rows(flat))
        return 0
    print("orbit: %s" % rec["orbit"])
    print("h2 dim: %d" % rec["h2dim"])
    print("cartan dim: %d" % rec["cartanDim"])
    print("weyl group: %s (order %d)" % (" x ".join(rec["weylGroup"]) or "1", rec["weylOrder"]))
    for leaf in rec["leaves"]:
        print("leaf: boundary=%s slice=%s action=%s fixed=%d folded=%s" % (
            leaf["boundary"], leaf["sliceType"], leaf["pi1Action"],
            leaf["fixedSpaceDim"], leaf["foldedWeyl"] or "-"))
    return 0


def cmd_sheets(args) -> int:
    ct = parse_type(args.type)
    records = _cached_records(
        ct, "sheets",
        lambda: {
            "sheets": [report.sheet_record(s) for s in enumerate_sheet_records(ct)],
            "birational": [report.birational_sheet_record(b) for b in birational_sheets(ct)],
        },
        args.no_cache,
    )
    if args.format == "json":
        _emit_json(records)
        return 0
    rows = []
    for r in records["sheets"]:
        rows.append({
            "kind": "sheet",
            "levi": r["levi"]["text"],
            "rigidTail": report._flat(r["rigidTail"]) or "-",
            "orbit": r["orbit"],
            "dim": r["sheetDim"],
        })
    for r in records["birational"]:
        rows.append({
            "kind": "birational",
            "levi": r["levi"]["text"],
            "rigidTail": report._flat(r["tail"]) or "-",
            "orbit": r["orbit"],
            "dim": r["quotientDim"],
        })
    if args.format == "csv":
        _emit_csv(rows)
    elif args.format == "table":
        _emit_table(rows)
    else:
        for r in rows:
            print("%s  levi=%s tail=%s orbit=%s dim=%s"
                  % (r["kind"], r["levi"], r["rigidTail"], r["orbit"], r["dim"]))
    return 0


def cmd_label(args) -> int:
    ct = parse_type(args.type)
    coords = _parse_fractions(args.xi)
    factors = _parse_partition_list(args.nilp) if args.nilp else None
    adjoint = adjoint_label_from_coords(ct, coords, factors)
    lbl = orbit_to_label(adjoint)
    back = label_to_orbit(lbl)
    if back != adjoint:
        raise ConsistencyError("label map does not invert on this input")
    rec = {
        "ambient": "%s%d" % (ct.family, ct.rank),
        "adjoint": {
            "levi": report.levi_record(adjoint.centralizerLevi),
            "ssParam": [str(v) for v in adjoint.ssParam],
            "glOrbits": [list(p) for p in adjoint.gl_orbits()],
            "tailOrbit": report.tail_record(adjoint.tail_orbit()),
        },
        "label": {
            "levi": report.levi_record(lbl.levi),
            "glOrbits": [list(p) for p in lbl.birRigidOrbit.glOrbits],
            "tailOrbit": report.tail_record(lbl.birRigidOrbit.tailOrbit),
            "xi": [str(c) for c in lbl.xiClass.coords],
            "symmetryOrder": lbl.symmetry.order,
        },
    }
    if args.format == "json":
        _emit_json(rec)
    elif args.format == "table":
        flat = {
            "centralizer": rec["adjoint"]["levi"]["text"],
            "ssParam": "; ".join(rec["adjoint"]["ssParam"]),
            "label levi": rec["label"]["levi"]["text"],
            "label glOrbits": "; ".join(report.ptext(p) for p in rec["label"]["glOrbits"]) or "-",
            "label tail": report._flat(rec["label"]["tailOrbit"]) or "-",
            "xi": "; ".join(rec["label"]["xi"]),
            "symmetry order": rec["label"]["symmetryOrder"],
        }
        _emit_table(_kv_rows(flat))
    else:
        print("centralizer: %s with parameter (%s)"
              % (rec["adjoint"]["levi"]["text"], "; ".join(rec["adjoint"]["ssParam"])))
        print("label levi: %s" % rec["label"]["levi"]["text"])
        print("label gl orbits: %s"
              % ("; ".join(report.ptext(p) for p in rec["label"]["glOrbits"]) or "-"))
        print("label tail: %s" % (report._flat(rec["label"]["tailOrbit"]) or "-"))
        print("label xi: (%s)" % "; ".join(rec["label"]["xi"]))
        print("symmetry order: %d" % rec["label"]["symmetryOrder"])
    return 0


def cmd_report(args) -> int:
    ct = parse_type(args.type)
    outdir = Path(args.out) if args.out else Path("nilporb-report-%s%d" % (ct.family, ct.rank))
    for path in report.write_report(ct, outdir):
        print(path)
    return 0


# ---------------------------------------------------------------------------
# verify


def _all_data(ct: ClassicalType, levi: LeviLabel):
    gl_choices = [pt.valid_partitions("gl", b) for b in levi.glBlocks]
    tails = [None]
    if levi.tailRank and ct.family != "A":
        kind = levi.tail_kind(ct)
        tails = []
        for p in pt.valid_partitions(kind, levi.tail_size(ct)):
            if kind == "so" and pt.is_very_even(p):
                tails.append(TailOrbit(p, "I"))
                tails.append(TailOrbit(p, "II"))
            else:
                tails.append(TailOrbit(p, None))
    for combo in itertools.product(*gl_choices):
        for tail in tails:
            yield InductionDatum(ct, levi, tuple(combo), tail)


def _suite_cover(ct: ClassicalType) -> list[str]:
    return verify_disjoint_cover(ct)


def _suite_dims(ct: ClassicalType) -> list[str]:
    issues = []
    ambient = pt.algebra_dim(_kind_of(ct), _natural_size(ct))
    for levi in enumerate_levis(ct):
        nilrad = None
        for d in _all_data(ct, levi):
            if nilrad is None:
                nilrad = dim_nilradical(d)
            induced, _ = induce_with_degree(d)
            below = sum(pt.gl_orbit_dim(b, p) for b, p in zip(levi.glBlocks, d.glOrbits))
            if d.tailOrbit is not None:
                below += pt.iso_orbit_dim(levi.tail_kind(ct), levi.tail_size(ct),
                                          d.tailOrbit.partition)
            if orbit_dim(induced) != below + 2 * nilrad:
                issues.append("dimension identity fails for %s on %s" % (d, levi))
    return issues


def _kind_of(ct: ClassicalType) -> str:
    return {"A": "gl", "B": "so", "C": "sp", "D": "so"}[ct.family]


def _natural_size(ct: ClassicalType) -> int:
    n = ct.rank
    return {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[ct.family]


def _orbit_issues(suite: str, spec: str) -> list[str]:
    label = parse_orbit_spec(spec)
    issues = []
    if suite == "weyl":
        issues.extend("%s: %s" % (spec, line) for line in check_weyl_match(label))
    elif suite == "datum":
        from .induction import birational_datum

        d = birational_datum(label)
        induced, degree = induce_with_degree(d)
        if induced != label:
            issues.append("%s: birational datum induces %s" % (spec, report.orbit_spec(induced)))
        if degree != 1:
            issues.append("%s: birational datum has degree %d" % (spec, degree))
    elif suite == "birigid":
        birigid = is_birationally_rigid(label)
        if is_rigid(label) and not birigid:
            issues.append("%s: rigid but not birationally rigid" % spec)
        if birigid != (namikawa_space(label).cartanDim == 0):
            issues.append("%s: birational rigidity disagrees with the Namikawa space" % spec)
    return issues


def _run_orbit_suite(suite: str, ct: ClassicalType, jobs: int) -> list[str]:
    specs = [report.orbit_spec(o) for o in enumerate_orbits(ct)]
    if jobs > 1:
        import concurrent.futures as cf
        import functools

        with cf.ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = pool.map(functools.partial(_orbit_issues, suite), specs)
            return [line for chunk in chunks for line in chunk]
    return [line for spec in specs for line in _orbit_issues(suite, spec)]


def cmd_verify(args) -> int:
    if args.cache:
        root = cache.cache_dir()
        failures = cache.audit(root)
        count = len(list(root.glob("*.json"))) if root.is_dir() else 0
        for line in failures:
            print(line, file=sys.stderr)
        if failures:
            raise ConsistencyError("cache audit failed (%d bad entries)" % len(failures))
        print("cache ok (%d entries in %s)" % (count, root))
        return 0
    if not args.type:
        raise InputError("verify needs a type (or --cache)")
    ct = parse_type(args.type)
    suites = SUITES[:-1] if args.suite == "all" else (args.suite,)
    failed = 0
    for suite in suites:
        if suite == "cover":
            issues = _suite_cover(ct)
        elif suite == "dims":
            issues = _suite_dims(ct)
        elif suite == "injectivity":
            count, failures = verify_injectivity(ct, samples=args.samples, seed=args.seed)
            issues = failures
            if not issues:
                print("injectivity: ok (%d samples)" % count)
                continue
        else:
            issues = _run_orbit_suite(suite, ct, args.jobs)
        for line in issues:
            print(line, file=sys.stderr)
        failed += len(issues)
        if not issues:
            print("%s: ok" % suite)
    if failed:
        raise ConsistencyError("%d verification issue(s) in %s%d" % (failed, ct.family, ct.rank))
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilporb",
        description="nilpotent orbits, birational induction, Namikawa spaces and sheets "
                    "for classical Lie algebras",
    )
    parser.add_argument("--version", action="version", version="nilporb %s" % __version__)
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_format(p, choices=("text", "json", "table")):
        p.add_argument("--format", choices=choices, default="text")

    def add_cache_flag(p):
        p.add_argument("--no-cache", action="store_true", help="skip the disk cache")

    p = sub.add_parser("orbits", help="list nilpotent orbits")
    p.add_argument("type", help="ambient type, e.g. C2")
    add_format(p, ("text", "json", "table", "csv"))
    add_cache_flag(p)
    p.set_defaults(fn=cmd_orbits)

    p = sub.add_parser("induce", help="induce an orbit from a datum")
    p.add_argument("type")
    p.add_argument("--levi", required=True, help="gl blocks and tail rank, e.g. '2,1|1' or '2,2|0:-'")
    p.add_argument("--gl", help="gl factor orbits, e.g. '[2];[1,1]' (default: zero orbits)")
    p.add_argument("--tail", help="tail factor orbit, e.g. '[2,2]:I'")
    p.add_argument("--xi", help="central parameter, e.g. '1;1/2'")
    add_format(p)
    p.set_defaults(fn=cmd_induce)

    for name, fn, help_text in (
        ("rigid", cmd_rigid, "test rigidity of an orbit"),
        ("birigid", cmd_birigid, "test birational rigidity of an orbit"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("orbit", help="orbit spec, e.g. C2:2,2 or D4:2,2,2,2:I")
        add_format(p, ("text", "json"))
        p.set_defaults(fn=fn)

    p = sub.add_parser("datum", help="unique birational induction datum of an orbit")
    p.add_argument("orbit")
    add_format(p)
    add_cache_flag(p)
    p.set_defaults(fn=cmd_datum)

    p = sub.add_parser("namikawa", help="Namikawa space of an orbit closure")
    p.add_argument("orbit")
    add_format(p)
    add_cache_flag(p)
    p.set_defaults(fn=cmd_namikawa)

    p = sub.add_parser("sheets", help="sheets and birational sheets")
    p.add_argument("type")
    add_format(p, ("text", "json", "table", "csv"))
    add_cache_flag(p)
    p.set_defaults(fn=cmd_sheets)

    p = sub.add_parser("label", help="orbit-method label of an adjoint orbit")
    p.add_argument("type")
    p.add_argument("--xi", required=True,
                   help="Cartan coordinates, e.g. '2;2;0' (rank entries; rank+1 in type A)")
    p.add_argument("--nilp", help="factor orbits in block order then tail, e.g. '[2];[2]'")
    add_format(p)
    p.set_defaults(fn=cmd_label)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("type", nargs="?")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--cache", action="store_true", help="audit the disk cache instead")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--samples", type=int, default=1000, help="samples for the injectivity suite")
    p.add_argument("--seed", type=int, default=2026)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("report", help="write csv tables and figures")
    p.add_argument("type")
    p.add_argument("--out", help="output directory")
    p.set_defaults(fn=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except NilporbError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
