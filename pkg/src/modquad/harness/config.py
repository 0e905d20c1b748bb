"""Run configuration, read from a ``key = value`` text file.

Recognised keys (all optional)::

    primes            = 7, 11, 13     # good primes for Jacobian order bounds
    sieve_prime       = 43
    ext_cap           = 3             # largest extension degree for point counts
    genus2_height     = 6             # x-height of rational points in the genus 2 search
    genus2_quad_height = 3            # coefficient height of quadratic x-polynomials
    quadratic_height  = 6             # coefficient height for the genus 1 quadratic point search
    class_order_cap   = 60
    twist_bound       = 30
    oracle_samples    = 20
    seed              = 20240601
    jobs              = 1
    report_path       = report.json

Lines starting with ``#`` are comments.  The environment variable
``MODQUAD_REPORT`` overrides ``report_path`` and nothing else.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

from ..arith.finite import is_prime

REPORT_ENV = "MODQUAD_REPORT"


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class Config:
    primes: tuple = (7, 11, 13)
    sieve_prime: int = 43
    ext_cap: int = 3
    genus2_height: int = 6
    genus2_quad_height: int = 3
    quadratic_height: int = 6
    class_order_cap: int = 60
    twist_bound: int = 30
    oracle_samples: int = 20
    seed: int = 20240601
    jobs: int = 1
    report_path: str | None = None

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if f.name in ("report_path", "seed"):
                continue
            if f.name == "primes":
                if not v or any(not is_prime(p) for p in v):
                    raise ConfigError(f"primes must be a nonempty list of primes, got {v}")
                continue
            if not isinstance(v, int) or v <= 0:
                raise ConfigError(f"{f.name} must be a positive integer, got {v!r}")
        if not is_prime(self.sieve_prime):
            raise ConfigError(f"sieve_prime {self.sieve_prime} is not prime")
        if self.ext_cap > 3:
            raise ConfigError("ext_cap is at most 3")

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def _coerce(name: str, text: str):
    if name == "primes":
        return tuple(int(t) for t in text.replace(",", " ").split())
    if name == "report_path":
        return text or None
    return int(text)


def parse_config(text: str, base: Config | None = None) -> Config:
    known = {f.name for f in fields(Config)}
    kw = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value")
        key, val = (s.strip() for s in line.split("=", 1))
        if key not in known:
            raise ConfigError(f"line {lineno}: unknown key {key!r}; known keys: {', '.join(sorted(known))}")
        try:
            kw[key] = _coerce(key, val)
        except ValueError:
            raise ConfigError(f"line {lineno}: bad value {val!r} for {key}") from None
    return replace(base or Config(), **kw)


def load_config(path=None, env=None) -> Config:
    cfg = Config()
    if path is not None:
        with open(path, encoding="utf-8") as fh:
            cfg = parse_config(fh.read(), cfg)
    env = os.environ if env is None else env
    if env.get(REPORT_ENV):
        cfg = replace(cfg, report_path=env[REPORT_ENV])
    return cfg
