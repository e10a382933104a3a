"""Command-line harness: ``supercong verify <check> [options]``.

Every check runs per prime (or per index ``n``) as an independent task.
Tasks go to a process pool when ``--workers`` exceeds one; reports are
sorted by ``(check, index)`` before they are written, so the output does
not depend on scheduling.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

from . import qseries
from .apery import apery, check_AD_mod_p, check_apery_recurrence, check_lemma_AC, check_prop_C6
from .gaussian import check_fop
from .harmonic import EXPANSION_IDS, check_expansion_congruence, check_wolstenholme
from .hypergeom import check_lemma51, check_lemma52, check_osmain, lhs_wt4, lhs_wt6
from .identities import identity_reports
from .exact_arith import PrimePowerModulus, odd_primes
from .report import (
    Claim,
    CongruenceReport,
    Verdict,
    compare,
    flatten,
    sort_reports,
    to_csv,
    to_human,
    to_json,
)

__all__ = [
    "ConfigError",
    "RunConfig",
    "CHECKS",
    "build_tasks",
    "run_task",
    "run",
    "verify_wt6",
    "verify_wt4",
    "verify_beukers",
    "verify_all",
    "summarize",
    "render",
    "main",
]

OBSERVATION_LABEL = "Mortenson observation"

# check name -> task kinds it expands to
CHECKS = {
    "wt6": ("wt6",),
    "wt4": ("wt4",),
    "beukers": ("beukers",),
    "sequences": ("recurrence", "prop_C6", "lemma_AC", "AD"),
    "expansions": ("expansion", "wolstenholme"),
    "lemmas": ("lemma51", "lemma52"),
    "osmain": ("osmain",),
    "identities": ("identities",),
    "eta": ("eta", "hecke"),
    "fop": ("fop",),
}
CHECKS["all"] = tuple(kind for name in CHECKS for kind in CHECKS[name])


class ConfigError(ValueError):
    """Invalid run configuration; raised before any computation."""


@dataclass(frozen=True)
class RunConfig:
    """Settings for one harness run.

    ``power`` overrides the modulus exponent of the wt6/wt4 checks
    (default 3). ``nmax`` bounds the index range of the identity and
    sequence checks.
    """

    check: str = "all"
    lo: int = 3
    hi: int = 199
    power: int | None = None
    backend: str = "float"
    cache: str | None = None
    fmt: str = "human"
    workers: int = 1
    nmax: int = 50
    timing: bool = True

    def __post_init__(self):
        if self.check not in CHECKS:
            raise ConfigError(f"unknown check {self.check!r}; choose from {sorted(CHECKS)}")
        if self.lo < 3:
            raise ConfigError(f"prime range must start at 3 or above, got {self.lo}")
        if self.hi < self.lo:
            raise ConfigError(f"empty prime range {self.lo}..{self.hi}")
        if self.power is not None:
            if self.power < 1:
                raise ConfigError(f"power must be at least 1, got {self.power}")
            if self.check in ("wt6", "all") and self.power > 5:
                raise ConfigError(f"wt6 supports powers 1..5, got {self.power}")
        if self.backend not in ("float", "exact"):
            raise ConfigError(f"unknown backend {self.backend!r}")
        if self.fmt not in ("human", "json", "csv"):
            raise ConfigError(f"unknown format {self.fmt!r}")
        if self.workers < 1:
            raise ConfigError(f"workers must be at least 1, got {self.workers}")
        if self.nmax < 2:
            raise ConfigError(f"nmax must be at least 2, got {self.nmax}")

    @property
    def primes(self) -> list[int]:
        return odd_primes(self.lo, self.hi)

    @property
    def r(self) -> int:
        return 3 if self.power is None else self.power


def parse_range(text: str) -> tuple[int, int]:
    """``"LO..HI"`` (or a single number) as a pair of ints."""
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise ConfigError(f"bad range {text!r}; expected LO..HI") from None


# Task runners. Each takes plain arguments and returns report rows, so tasks
# can be pickled to worker processes.

def _wt6(p: int, r: int, b_p: int) -> list[CongruenceReport]:
    claim, detail = Claim.THEOREM, ""
    if r > 3:
        claim, detail = Claim.OBSERVATION, OBSERVATION_LABEL
    mod = PrimePowerModulus(p, r)
    left = lhs_wt6(p, r).value
    return [compare("wt6", p, left, b_p, mod.modulus, str(mod), claim=claim, detail=detail)]


def _wt4(p: int, r: int, a_p: int) -> list[CongruenceReport]:
    claim, detail = Claim.THEOREM, ""
    if r > 3:
        claim, detail = Claim.OBSERVATION, "beyond the proven power 3"
    mod = PrimePowerModulus(p, r)
    left = lhs_wt4(p, r).value
    return [compare("wt4", p, left, a_p, mod.modulus, str(mod), claim=claim, detail=detail)]


def _beukers(p: int, a_p: int) -> list[CongruenceReport]:
    A = apery((p - 1) // 2)
    sq = compare("beukers:p^2", p, A, a_p, p * p, str(PrimePowerModulus(p, 2)))
    return [compare("beukers", p, A, a_p, p, str(p), parts=(sq,))]


def _expansions(p: int) -> list[CongruenceReport]:
    return [check_expansion_congruence(e, p) for e in EXPANSION_IDS]


def _lambdas(p: int) -> dict[int, str]:
    """``lambda -> name``; coinciding values at small ``p`` keep the first name."""
    out: dict[int, str] = {}
    for lam, name in ((1, "1"), (2 % p, "2"), ((p - 1) // 2, "m")):
        out.setdefault(lam, name)
    return out


def _osmain(p: int, backend: str) -> list[CongruenceReport]:
    rows = []
    for ell in (2, 3):
        for lam, name in _lambdas(p).items():
            r = check_osmain(ell, p, lam, backend)
            rows.append(replace(r, check=f"osmain:l={ell}:lam={name}", detail=f"lambda = {lam}"))
    return rows


def _fop(p: int, b_p: int, backend: str) -> list[CongruenceReport]:
    return [check_fop(p, {p: b_p}, backend)]


def _eta(N: int, cache) -> list[CongruenceReport]:
    return [qseries.check_eta_consistency(N, cache)]


def _hecke(N: int, cache) -> list[CongruenceReport]:
    return qseries.check_hecke_sanity(N, cache)


_RUNNERS = {
    "wt6": _wt6,
    "wt4": _wt4,
    "beukers": _beukers,
    "recurrence": lambda N: [check_apery_recurrence(N)],
    "prop_C6": lambda n: [check_prop_C6(n)],
    "lemma_AC": lambda p: [check_lemma_AC(p)],
    "AD": lambda p: [check_AD_mod_p(p)],
    "expansion": _expansions,
    "wolstenholme": lambda p: [check_wolstenholme(p)],
    "lemma51": lambda p: [check_lemma51(p)],
    "lemma52": lambda p: [check_lemma52(p)],
    "osmain": _osmain,
    "identities": lambda n: identity_reports(n),
    "eta": _eta,
    "hecke": _hecke,
    "fop": _fop,
}


def run_task(task: tuple) -> list[CongruenceReport]:
    """Run one ``(kind, *args)`` task; the elapsed time goes on every row."""
    kind, *args = task
    start = time.perf_counter()
    rows = _RUNNERS[kind](*args)
    elapsed = time.perf_counter() - start
    return [r.with_timing(elapsed / len(rows)) for r in rows]


def build_tasks(config: RunConfig) -> list[tuple]:
    """Expand a configuration into independent tasks.

    Eta coefficients needed by the per-prime tasks are computed here, once.
    """
    kinds = CHECKS[config.check]
    primes = config.primes
    hi = max(primes) if primes else config.hi
    a = qseries.fourier_a(hi, config.cache) if {"wt4", "beukers"} & set(kinds) else None
    b = qseries.fourier_b(hi, cache=config.cache) if {"wt6", "fop"} & set(kinds) else None
    tasks: list[tuple] = []
    for kind in kinds:
        if kind == "wt6":
            tasks += [("wt6", p, config.r, b[p]) for p in primes]
        elif kind == "wt4":
            tasks += [("wt4", p, config.r, a[p]) for p in primes]
        elif kind == "beukers":
            tasks += [("beukers", p, a[p]) for p in primes]
        elif kind == "fop":
            tasks += [("fop", p, b[p], config.backend) for p in primes]
        elif kind == "osmain":
            tasks += [("osmain", p, config.backend) for p in primes]
        elif kind in ("eta", "hecke"):
            tasks.append((kind, config.hi, config.cache))
        elif kind == "recurrence":
            tasks.append(("recurrence", config.nmax))
        elif kind in ("prop_C6", "identities"):
            tasks += [(kind, n) for n in range(config.nmax + 1)]
        else:
            tasks += [(kind, p) for p in primes]
    return tasks


def run(config: RunConfig) -> list[CongruenceReport]:
    """All reports for ``config``, sorted by ``(check, index)``."""
    tasks = build_tasks(config)
    if config.workers == 1 or len(tasks) < 2:
        chunks = map(run_task, tasks)
        rows = [r for chunk in chunks for r in chunk]
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            rows = [r for chunk in pool.map(run_task, tasks, chunksize=4) for r in chunk]
    return sort_reports(rows)


def verify_wt6(lo: int, hi: int, power: int = 3, **kw) -> list[CongruenceReport]:
    return run(RunConfig(check="wt6", lo=lo, hi=hi, power=power, **kw))


def verify_wt4(lo: int, hi: int, power: int = 3, **kw) -> list[CongruenceReport]:
    return run(RunConfig(check="wt4", lo=lo, hi=hi, power=power, **kw))


def verify_beukers(lo: int, hi: int, **kw) -> list[CongruenceReport]:
    return run(RunConfig(check="beukers", lo=lo, hi=hi, **kw))


def verify_all(config: RunConfig | None = None) -> tuple[int, list[CongruenceReport]]:
    """Run the full suite; returns ``(exit status, reports)``."""
    config = replace(config, check="all") if config else RunConfig()
    reports = run(config)
    return (0 if all(r.ok for r in reports) else 1), reports


def summarize(reports: list[CongruenceReport]) -> str:
    """One line per check name with verdict counts, parts included."""
    counts: dict[str, dict[Verdict, int]] = {}
    for r in flatten(reports):
        c = counts.setdefault(r.check, {v: 0 for v in Verdict})
        c[r.verdict] += 1
    lines = []
    for name in sorted(counts):
        c = counts[name]
        lines.append(f"{name:<32} pass {c[Verdict.PASS]:>5}  fail {c[Verdict.FAIL]:>4}"
                     f"  expected-negative {c[Verdict.EXPECTED_NEGATIVE]:>4}")
    return "\n".join(lines) + "\n"


def render(reports: list[CongruenceReport], fmt: str, timing: bool = True) -> str:
    if fmt == "json":
        return to_json(reports, timing)
    if fmt == "csv":
        return to_csv(reports, timing)
    bad = sum(not r.ok for r in reports)
    return (to_human(reports) + "\nsummary\n" + summarize(reports)
            + f"\n{len(reports)} reports, {bad} with counted failures\n")


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="supercong",
                                     description="Verify supercongruences over ranges of primes.")
    sub = parser.add_subparsers(dest="command", required=True)
    verify = sub.add_parser("verify", help="run a check over a prime range")
    verify.add_argument("check", choices=list(CHECKS))
    verify.add_argument("--primes", default="3..199", metavar="LO..HI",
                        help="inclusive prime range (default 3..199)")
    verify.add_argument("--power", type=int, default=None, metavar="R",
                        help="modulus exponent for wt6/wt4 (default 3)")
    verify.add_argument("--format", dest="fmt", default="human",
                        choices=("human", "json", "csv"))
    verify.add_argument("--cache", default=None, metavar="DIR",
                        help=f"eta table cache (default ${qseries.CACHE_ENV})")
    verify.add_argument("--backend", default="float", choices=("float", "exact"),
                        help="Gaussian series backend")
    verify.add_argument("--workers", type=int, default=1, metavar="N")
    verify.add_argument("--nmax", type=int, default=50, metavar="N",
                        help="index range 0..N for identity and sequence checks")
    verify.add_argument("--no-timing", dest="timing", action="store_false",
                        help="omit timing fields from JSON/CSV")
    return parser


def config_from_args(argv: list[str] | None = None) -> RunConfig:
    args = _parser().parse_args(argv)
    lo, hi = parse_range(args.primes)
    return RunConfig(check=args.check, lo=lo, hi=hi, power=args.power,
                     backend=args.backend, cache=args.cache or os.environ.get(qseries.CACHE_ENV),
                     fmt=args.fmt, workers=args.workers, nmax=args.nmax, timing=args.timing)


def main(argv: list[str] | None = None) -> int:
    try:
        config = config_from_args(argv)
    except ConfigError as exc:
        print(f"supercong: configuration error: {exc}", file=sys.stderr)
        return 2
    reports = run(config)
    sys.stdout.write(render(reports, config.fmt, config.timing))
    return 0 if all(r.ok for r in reports) else 1

