"""Serialising ZeroReports: JSON (lossless, exact rationals as strings), CSV and text."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter

from gmpy2 import mpq

from .certifier import Certificate, Outcome, Region, Witness, ZeroReport
from .grid import Box, GridId
from .interval import RationalInterval

_OUTCOME = {Outcome.CERTIFIED: "Certified", Outcome.INCONCLUSIVE: "Inconclusive"}
_OUTCOME_BACK = {v: k for k, v in _OUTCOME.items()}


def _q(s) -> mpq:
    return mpq(s)


def box_to_dict(b: Box) -> dict:
    return {"center": [str(c) for c in b.center], "half_side": str(b.half_side)}


def box_from_dict(obj) -> Box:
    h = _q(obj["half_side"])
    n = int(1 / (2 * h))
    coords = tuple(int(_q(c) * n - mpq(1, 2)) for c in obj["center"])
    return Box(GridId(n, coords))


def _grid(g: GridId) -> dict:
    return {"n": g.n, "coords": list(g.coords)}


def _grid_back(obj) -> GridId:
    return GridId(obj["n"], tuple(obj["coords"]))


def certificate_to_dict(c: Certificate) -> dict:
    w = c.witness
    return {
        "cell": _grid(c.cell),
        "witness": {
            "point": [str(v) for v in w.point],
            "theta": str(w.theta),
            "d_lower": str(w.d_lower),
            "residual_upper": str(w.residual_upper),
            "depth": w.depth,
        },
        "floor": str(c.floor),
        "floor_exponent": c.floor_exponent,
        "radius": str(c.radius),
        "jacobian_det": [str(c.jacobian_det.lo), str(c.jacobian_det.hi)],
    }


def certificate_from_dict(obj) -> Certificate:
    w = obj["witness"]
    return Certificate(
        _grid_back(obj["cell"]),
        Witness(
            tuple(_q(v) for v in w["point"]),
            _q(w["theta"]),
            _q(w["d_lower"]),
            _q(w["residual_upper"]),
            w["depth"],
        ),
        _q(obj["floor"]),
        obj["floor_exponent"],
        _q(obj["radius"]),
        RationalInterval(_q(obj["jacobian_det"][0]), _q(obj["jacobian_det"][1])),
    )


def trace_summary(report: ZeroReport) -> dict:
    events = Counter(e["event"] for e in report.trace)
    reasons = Counter(e["reason"] for e in report.trace if e["event"] == "restart")
    return {
        "restarts": events.get("restart", 0),
        "restart_reasons": dict(sorted(reasons.items())),
        "candidates": events.get("candidate", 0),
        "events": len(report.trace),
    }


def to_dict(report: ZeroReport, wall_time: float | None = None) -> dict:
    out = {
        "outcome": _OUTCOME[report.outcome],
        "n": report.n,
        "count": report.count,
        "n_tilde": report.n_tilde,
        "regions": [[box_to_dict(b) for b in r.boxes] for r in report.regions],
        "certificates": [certificate_to_dict(c) for c in report.certificates],
        "reason": report.reason,
        "trace_summary": trace_summary(report),
        "trace": list(report.trace),
    }
    if wall_time is not None:
        out["wall_time"] = wall_time
    return out


def from_dict(obj) -> ZeroReport:
    regions = []
    for boxes in obj["regions"]:
        bs = tuple(box_from_dict(b) for b in boxes)
        regions.append(Region(bs[len(bs) // 2].id, bs))
    return ZeroReport(
        _OUTCOME_BACK[obj["outcome"]],
        obj["n"],
        obj["count"],
        tuple(regions),
        obj.get("n_tilde"),
        tuple(certificate_from_dict(c) for c in obj.get("certificates", [])),
        tuple(obj.get("trace", [])),
        obj.get("reason"),
    )


def to_json(report: ZeroReport, wall_time: float | None = None) -> str:
    return json.dumps(to_dict(report, wall_time), indent=2, sort_keys=True)


def from_json(text: str) -> ZeroReport:
    return from_dict(json.loads(text))


def to_csv(report: ZeroReport) -> str:
    """One row per n~-cell of every region: region id, box id, centre per axis, half-side."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    d = report.regions[0].cell.dim if report.regions else 0
    w.writerow(["region", "box"] + [f"center_{i}" for i in range(d)] + ["half_side"])
    for r, region in enumerate(report.regions):
        for b, box in enumerate(region.boxes):
            w.writerow([r, b] + [str(c) for c in box.center] + [str(box.half_side)])
    return buf.getvalue()


def to_text(report: ZeroReport, wall_time: float | None = None) -> str:
    lines = [f"outcome: {_OUTCOME[report.outcome]}", f"n: {report.n}"]
    if report.outcome is Outcome.CERTIFIED:
        lines.append(f"zeros: {report.count}")
        if report.n_tilde is not None:
            lines.append(f"n_tilde: {report.n_tilde}")
        for i, region in enumerate(report.regions):
            lo = ", ".join(str(v) for v in region.lo)
            hi = ", ".join(str(v) for v in region.hi)
            lines.append(f"  region {i}: [{lo}] .. [{hi}]")
    else:
        lines.append(f"reason: {report.reason}")
    s = trace_summary(report)
    lines.append(f"restarts: {s['restarts']}")
    if wall_time is not None:
        lines.append(f"wall time: {wall_time:.3f}s")
    return "\n".join(lines) + "\n"
