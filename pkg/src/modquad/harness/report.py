"""Human and JSON reports.

JSON reports are key-sorted and carry every integer as a decimal string so
that nothing is lost to float conversion by downstream readers.  Runtimes
are left out of JSON unless asked for, which keeps reports of identical
runs byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .config import Config

SCHEMA = "modquad-report/1"
GLYPH = {"pass": "+", "fail": "x", "inconclusive": "?"}


def plain(v):
    """Exact values to JSON-safe data (ints and rationals become strings)."""
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, str):
        return v
    if isinstance(v, dict):
        return {str(k): plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [plain(x) for x in v]
    if isinstance(v, (set, frozenset)):
        return sorted((plain(x) for x in v), key=repr)
    if isinstance(v, float):
        return repr(v)
    return str(v)


def summary(results) -> dict:
    out = {s: 0 for s in GLYPH}
    for r in results:
        out[r.status] += 1
    return out


def report_dict(results, cfg: Config | None = None, timings: bool = False) -> dict:
    cfg = cfg or Config()
    rows = []
    for r in sorted(results, key=lambda r: r.name):
        row = {"name": r.name, "status": r.status, "kind": r.kind,
               "claims": list(r.claims), "details": plain(r.details)}
        if timings:
            row["runtime_ms"] = f"{r.runtime_ms:.1f}"
        rows.append(row)
    cfgd = {k: v for k, v in cfg.as_dict().items() if k not in ("report_path", "jobs")}
    return {"schema": SCHEMA, "seed": str(cfg.seed), "config": plain(cfgd),
            "summary": plain(summary(results)), "results": rows}


def emit_report(results, fmt: str = "human", cfg: Config | None = None, path=None,
                timings: bool = False) -> bytes:
    if fmt == "json":
        data = json.dumps(report_dict(results, cfg, timings), sort_keys=True, indent=2) + "\n"
    elif fmt == "human":
        lines = []
        for r in sorted(results, key=lambda r: r.name):
            cited = "  [cited input]" if r.kind != "computation" else ""
            lines.append(f"[{GLYPH[r.status]}] {r.status:<12} {r.name}  ({r.runtime_ms:.0f} ms){cited}")
            if r.status != "pass":
                for k, v in sorted(r.details.items()):
                    lines.append(f"      {k}: {plain(v)}")
        s = summary(results)
        lines.append(f"{len(results)} checks: {s['pass']} pass, {s['fail']} fail, {s['inconclusive']} inconclusive")
        data = "\n".join(lines) + "\n"
    else:
        raise ValueError(f"unknown format {fmt!r}")
    out = data.encode("utf-8")
    if path is not None:
        with open(path, "wb") as fh:
            fh.write(out)
    return out
