"""Check registry and runner."""

from __future__ import annotations

import time
import zlib
from importlib import resources
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from random import Random

from .config import Config

TAGS = ("group-theory", "genus1", "genus2", "quartic", "torsion", "identity")
STATUSES = ("pass", "fail", "inconclusive")
KINDS = ("computation", "consistency-with-cited-input")


class UnknownCheck(KeyError):
    def __init__(self, names, valid):
        self.names = list(names)
        self.valid = list(valid)
        super().__init__(f"unknown check(s) {', '.join(self.names)}; valid names: {', '.join(self.valid)}")

    def __str__(self):
        return self.args[0]


@dataclass(frozen=True)
class Check:
    name: str
    claims: tuple  # claim ids from the coverage manifest
    statement: str
    tags: frozenset
    run: object = field(repr=False, compare=False)
    kind: str = "computation"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    details: dict
    runtime_ms: float = 0.0
    kind: str = "computation"
    claims: tuple = ()

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")


class Outcome(Exception):
    """Raised inside a check body to stop early with a status."""

    def __init__(self, status, **details):
        super().__init__(status)
        self.status = status
        self.details = details


REGISTRY: dict = {}


def check(name, claims, statement, tags, kind="computation"):
    tags = frozenset([tags] if isinstance(tags, str) else tags)
    if not tags <= set(TAGS):
        raise ValueError(f"unknown tags {sorted(tags - set(TAGS))}")
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")

    def deco(fn):
        if name in REGISTRY:
            raise ValueError(f"duplicate check name {name!r}")
        REGISTRY[name] = Check(name, tuple([claims] if isinstance(claims, str) else claims),
                               statement, tags, fn, kind)
        return fn
    return deco


def registry() -> dict:
    from . import checks  # noqa: F401  populates REGISTRY
    return REGISTRY


def resolve(names=None, tags=None) -> list[str]:
    reg = registry()
    if not names and not tags:
        return sorted(reg)
    out = set()
    if names:
        bad = [n for n in names if n not in reg]
        if bad:
            raise UnknownCheck(bad, sorted(reg))
        out.update(names)
    if tags:
        bad = [t for t in tags if t not in TAGS]
        if bad:
            raise ValueError(f"unknown tag(s) {', '.join(bad)}; valid tags: {', '.join(TAGS)}")
        out.update(n for n, c in reg.items() if c.tags & set(tags))
    if not out:
        raise ValueError("selection is empty")
    return sorted(out)


def claim_manifest() -> dict:
    """Claim id -> statement, from the shipped ``data/coverage.txt``."""
    text = resources.files("modquad.harness").joinpath("data/coverage.txt").read_text()
    out = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        cid, _, statement = line.partition("|")
        out[cid.strip()] = statement.strip()
    return out


def coverage_gaps() -> tuple[list, list]:
    """(manifest claims with no check, check claims missing from the manifest)."""
    manifest = claim_manifest()
    named = {cid for c in registry().values() for cid in c.claims}
    return sorted(set(manifest) - named), sorted(named - set(manifest))


def rng_for(name: str, cfg: Config) -> Random:
    return Random((cfg.seed << 32) ^ zlib.crc32(name.encode()))


def run_one(name: str, cfg: Config) -> CheckResult:
    c = registry()[name]
    t0 = time.perf_counter()
    try:
        status, details = "pass", c.run(cfg, rng_for(name, cfg))
        if isinstance(details, tuple):
            status, details = details
    except Outcome as o:
        status, details = o.status, o.details
    except AssertionError as e:
        status, details = "fail", {"error": str(e)}
    ms = (time.perf_counter() - t0) * 1000
    return CheckResult(name, status, dict(details or {}), ms, c.kind, c.claims)


def run_checks(selection=None, cfg: Config | None = None, tags=None, jobs=None) -> list[CheckResult]:
    """Run the selected checks (all by default); results sorted by name."""
    cfg = cfg or Config()
    names = resolve(selection, tags)
    jobs = cfg.jobs if jobs is None else jobs
    if jobs <= 1 or len(names) == 1:
        results = [run_one(n, cfg) for n in names]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(run_one, names, [cfg] * len(names)))
    return sorted(results, key=lambda r: r.name)


def exit_status(results) -> int:
    return 1 if any(r.status == "fail" for r in results) else 0
