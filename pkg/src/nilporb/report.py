"""Record builders, delimited output, and figures for the CLI.

Every record is a plain dict of JSON-safe values so that text, json and
csv rendering all read from the same source and repeated runs serialize
byte-identically (insertion order is fixed here, and the cache layer
sorts keys on top of that).
"""

from __future__ import annotations

import csv
from pathlib import Path

from . import orbits as ob
from .induction import InductionDatum, birational_datum, induction_degree, is_birationally_rigid, is_rigid
from .namikawa import namikawa_space, namikawa_weyl_order
from .orbits import OrbitLabel, closure_leq, component_group, enumerate_orbits, h2_dim, orbit_dim
from .roots import ClassicalType
from .sheets import birational_sheets, enumerate_sheets


def ptext(parts) -> str:
    return "[%s]" % ",".join(str(p) for p in parts)


def orbit_spec(label: OrbitLabel) -> str:
    ct = label.type
    s = "%s%d:%s" % (ct.family, ct.rank, ",".join(str(p) for p in label.partition))
    if label.veryEvenTag:
        s += ":" + label.veryEvenTag
    return s


def levi_record(levi) -> dict:
    return {
        "blocks": list(levi.glBlocks),
        "tailRank": levi.tailRank,
        "dClass": levi.dClass,
        "text": str(levi),
    }


def tail_record(tail) -> dict | None:
    if tail is None:
        return None
    text = "[%s]" % ",".join(str(p) for p in tail.partition)
    rec = {"partition": list(tail.partition)}
    if tail.tag:
        rec["tag"] = tail.tag
        text += ":" + tail.tag
    rec["text"] = text
    return rec


def datum_record(d: InductionDatum) -> dict:
    rec = {
        "type": "%s%d" % (d.ambient.family, d.ambient.rank),
        "levi": levi_record(d.levi),
        "glOrbits": [list(p) for p in d.glOrbits],
        "tailOrbit": tail_record(d.tailOrbit),
    }
    if d.xi is not None:
        rec["xi"] = [str(c) for c in d.xi.coords]
    return rec


def orbit_record(label: OrbitLabel) -> dict:
    g = component_group(label)
    return {
        "spec": orbit_spec(label),
        "type": "%s%d" % (label.type.family, label.type.rank),
        "partition": list(label.partition),
        "veryEvenTag": label.veryEvenTag,
        "dim": orbit_dim(label),
        "h2dim": h2_dim(label),
        "rigid": is_rigid(label),
        "birationallyRigid": is_birationally_rigid(label),
        "componentGroup": list(g.structure),
    }


def namikawa_record(label: OrbitLabel) -> dict:
    data = namikawa_space(label)
    return {
        "orbit": orbit_spec(label),
        "h2dim": data.h2dim,
        "cartanDim": data.cartanDim,
        "weylGroup": list(data.weylGroup),
        "weylOrder": namikawa_weyl_order(data),
        "leaves": [
            {
                "boundary": orbit_spec(leaf.boundaryOrbit),
                "sliceType": leaf.sliceType,
                "pi1Action": leaf.pi1Action,
                "fixedSpaceDim": leaf.fixedSpaceDim,
                "foldedWeyl": leaf.foldedWeyl,
            }
            for leaf in data.leaves
        ],
    }


def sheet_record(s) -> dict:
    return {
        "levi": levi_record(s.levi),
        "rigidGlOrbits": [list(p) for p in s.rigidOrbit.glOrbits],
        "rigidTail": tail_record(s.rigidOrbit.tailOrbit),
        "orbit": orbit_spec(s.containedNilpotent),
        "sheetDim": s.sheetDim,
    }


def birational_sheet_record(b) -> dict:
    return {
        "levi": levi_record(b.levi),
        "tail": tail_record(b.birRigidOrbit.tailOrbit),
        "orbit": orbit_spec(b.inducedNilpotent),
        "quotientDim": b.quotientDim,
        "weylOrder": b.weylAction.order,
        "badPatterns": [list(p) for p in b.regularLocus.patterns],
        "wStable": b.regularLocus.wStable,
    }


def datum_report(label: OrbitLabel) -> dict:
    d = birational_datum(label)
    rec = datum_record(d)
    rec["orbit"] = orbit_spec(label)
    rec["degree"] = induction_degree(d)
    return rec


# ---------------------------------------------------------------------------
# csv + figures (the `report` verb)


def _write_csv(path: Path, rows: list[dict], columns: list[str]) -> None:
    with path.open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(columns)
        for row in rows:
            w.writerow([row[c] for c in columns])


def _flat(value) -> str:
    if value is None:
        return ""
    if isinstance(value, dict):
        return value.get("text") or str(value)
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    return str(value)


def write_report(ct: ClassicalType, outdir: Path) -> list[Path]:
    """Write orbit/sheet/namikawa tables plus the two figures; returns paths."""
    outdir.mkdir(parents=True, exist_ok=True)
    written = []

    labels = enumerate_orbits(ct)
    orecs = [orbit_record(o) for o in labels]
    rows = [
        {
            "spec": r["spec"],
            "partition": _flat(r["partition"]),
            "tag": r["veryEvenTag"] or "",
            "dim": r["dim"],
            "h2dim": r["h2dim"],
            "rigid": r["rigid"],
            "birationallyRigid": r["birationallyRigid"],
            "componentGroup": _flat(r["componentGroup"]),
        }
        for r in orecs
    ]
    p = outdir / "orbits.csv"
    _write_csv(p, rows, ["spec", "partition", "tag", "dim", "h2dim", "rigid",
                         "birationallyRigid", "componentGroup"])
    written.append(p)

    rows = []
    for s in enumerate_sheets(ct):
        r = sheet_record(s)
        rows.append({
            "levi": r["levi"]["text"],
            "rigidTail": _flat(r["rigidTail"]),
            "orbit": r["orbit"],
            "sheetDim": r["sheetDim"],
            "kind": "sheet",
            "quotientDim": "",
        })
    for b in birational_sheets(ct):
        r = birational_sheet_record(b)
        rows.append({
            "levi": r["levi"]["text"],
            "rigidTail": _flat(r["tail"]),
            "orbit": r["orbit"],
            "sheetDim": "",
            "kind": "birational",
            "quotientDim": r["quotientDim"],
        })
    p = outdir / "sheets.csv"
    _write_csv(p, rows, ["kind", "levi", "rigidTail", "orbit", "sheetDim", "quotientDim"])
    written.append(p)

    rows = []
    for o in labels:
        r = namikawa_record(o)
        rows.append({
            "orbit": r["orbit"],
            "h2dim": r["h2dim"],
            "cartanDim": r["cartanDim"],
            "weylGroup": " x ".join(r["weylGroup"]) or "1",
            "weylOrder": r["weylOrder"],
            "leaves": "; ".join(
                "%s %s %s" % (l["boundary"], l["sliceType"], l["pi1Action"]) for l in r["leaves"]
            ),
        })
    p = outdir / "namikawa.csv"
    _write_csv(p, rows, ["orbit", "h2dim", "cartanDim", "weylGroup", "weylOrder", "leaves"])
    written.append(p)

    written.append(_hasse_figure(ct, labels, outdir / "hasse.png"))
    written.append(_dimension_figure(ct, labels, outdir / "dimensions.png"))
    return written


def _covers(labels):
    leq = {(a, b): closure_leq(a, b) for a in labels for b in labels}
    edges = []
    for a in labels:
        for b in labels:
            if a is b or not leq[(a, b)]:
                continue
            if any(c is not a and c is not b and leq[(a, c)] and leq[(c, b)] for c in labels):
                continue
            edges.append((a, b))
    return edges


def _hasse_figure(ct, labels, path: Path) -> Path:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    dims = sorted({orbit_dim(o) for o in labels})
    by_dim = {d: [o for o in labels if orbit_dim(o) == d] for d in dims}
    pos = {}
    for d in dims:
        row = by_dim[d]
        for i, o in enumerate(row):
            pos[o] = (i - (len(row) - 1) / 2.0, d)
    fig, ax = plt.subplots(figsize=(7, 0.45 * len(dims) + 2))
    for a, b in _covers(labels):
        xa, ya = pos[a]
        xb, yb = pos[b]
        ax.plot([xa, xb], [ya, yb], color="0.6", lw=1, zorder=1)
    for o, (x, y) in pos.items():
        ax.scatter([x], [y], s=24, color="tab:blue", zorder=2)
        txt = ",".join(str(p) for p in o.partition)
        if o.veryEvenTag:
            txt += ":" + o.veryEvenTag
        ax.annotate(txt, (x, y), textcoords="offset points", xytext=(4, 4), fontsize=7)
    ax.set_ylabel("orbit dimension")
    ax.set_xticks([])
    ax.set_title("closure order, %s%d" % (ct.family, ct.rank))
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def _dimension_figure(ct, labels, path: Path) -> Path:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    names = []
    dims = []
    quots = []
    for o in labels:
        txt = ",".join(str(p) for p in o.partition)
        if o.veryEvenTag:
            txt += ":" + o.veryEvenTag
        names.append(txt)
        dims.append(orbit_dim(o))
        quots.append(namikawa_space(o).cartanDim)
    x = range(len(names))
    fig, ax = plt.subplots(figsize=(max(6, 0.5 * len(names) + 2), 4))
    ax.bar([i - 0.2 for i in x], dims, width=0.4, label="orbit dim")
    ax.bar([i + 0.2 for i in x], quots, width=0.4, label="Namikawa space dim")
    ax.set_xticks(list(x))
    ax.set_xticklabels(names, rotation=60, ha="right", fontsize=7)
    ax.legend()
    ax.set_title("dimensions, %s%d" % (ct.family, ct.rank))
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
