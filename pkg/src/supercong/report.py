"""Structured outcomes of congruence and identity checks."""

from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Verdict",
    "Claim",
    "CongruenceReport",
    "compare",
    "compare_each",
    "flatten",
    "failing",
    "to_json",
    "from_json",
    "to_csv",
    "to_human",
    "sort_reports",
]


class Verdict(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    EXPECTED_NEGATIVE = "expected-negative"


class Claim(str, enum.Enum):
    """How a failing row should count towards the exit status."""

    THEOREM = "theorem"
    OBSERVATION = "observation"  # numerically observed, not proved
    SANITY = "sanity"


@dataclass(frozen=True)
class CongruenceReport:
    """One verified statement, possibly with constituent sub-checks.

    ``index`` is the prime ``p`` for congruences, or ``n`` for identities.
    ``modulus`` is a human label such as ``"5^3"`` or ``"exact"``. ``left``
    and ``right`` hold the two sides (residues or exact integers); for
    per-``k`` checks they are tuples indexed by ``k``. ``verdict`` reflects
    this row's own comparison only; ``ok`` also accounts for the parts.
    """

    check: str
    index: int
    modulus: str
    left: object
    right: object
    verdict: Verdict
    claim: Claim = Claim.THEOREM
    detail: str = ""
    timing: float = 0.0
    parts: tuple["CongruenceReport", ...] = ()

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    @property
    def ok(self) -> bool:
        """True unless this row (or a part) is a counted failure."""
        return not any(
            r.verdict is Verdict.FAIL and r.claim is not Claim.OBSERVATION
            for r in flatten([self])
        )

    def with_timing(self, seconds: float) -> "CongruenceReport":
        return replace(self, timing=seconds)

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "check": self.check,
            "index": self.index,
            "modulus": self.modulus,
            "left": _encode(self.left),
            "right": _encode(self.right),
            "verdict": self.verdict.value,
            "claim": self.claim.value,
            "detail": self.detail,
        }
        if timing:
            d["timing"] = round(self.timing, 6)
        d["parts"] = [p.to_dict(timing) for p in self.parts]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "CongruenceReport":
        return cls(
            check=d["check"],
            index=int(d["index"]),
            modulus=d["modulus"],
            left=_decode(d["left"]),
            right=_decode(d["right"]),
            verdict=Verdict(d["verdict"]),
            claim=Claim(d.get("claim", "theorem")),
            detail=d.get("detail", ""),
            timing=float(d.get("timing", 0.0)),
            parts=tuple(cls.from_dict(p) for p in d.get("parts", [])),
        )


def _encode(v):
    if v is None:
        return None
    if isinstance(v, (tuple, list)):
        return [_encode(x) for x in v]
    if isinstance(v, bool):
        return v
    return str(v)


def _decode(v):
    if v is None:
        return None
    if isinstance(v, list):
        return tuple(_decode(x) for x in v)
    if isinstance(v, bool):
        return v
    try:
        return int(v)
    except ValueError:
        return Fraction(v)


def compare(
    check: str,
    index: int,
    left,
    right,
    modulus: int | None,
    label: str | None = None,
    *,
    claim: Claim = Claim.THEOREM,
    negative_expected: bool = False,
    detail: str = "",
    parts: Sequence[CongruenceReport] = (),
) -> CongruenceReport:
    """Build a report comparing ``left`` and ``right``.

    With ``modulus=None`` the comparison is exact equality. Otherwise both
    sides must be integers and are reduced to ``[0, modulus)``.
    With ``negative_expected`` a mismatch is recorded as expected-negative.
    """
    if modulus is None:
        same = left == right
        label = label or "exact"
    else:
        left, right = left % modulus, right % modulus
        same = left == right
        label = label or str(modulus)
    if same:
        verdict = Verdict.PASS
    elif negative_expected:
        verdict = Verdict.EXPECTED_NEGATIVE
    else:
        verdict = Verdict.FAIL
    return CongruenceReport(
        check, index, label, left, right, verdict, claim, detail, 0.0, tuple(parts)
    )


def compare_each(
    check: str,
    index: int,
    lefts: Sequence[int],
    rights: Sequence[int],
    modulus: int,
    label: str | None = None,
    *,
    claim: Claim = Claim.THEOREM,
) -> CongruenceReport:
    """Compare two equal-length sequences entrywise modulo ``modulus``.

    Failing positions are listed in ``detail``.
    """
    lefts = tuple(x % modulus for x in lefts)
    rights = tuple(x % modulus for x in rights)
    bad = [k for k, (a, b) in enumerate(zip(lefts, rights)) if a != b]
    verdict = Verdict.FAIL if bad else Verdict.PASS
    detail = f"failing k: {bad}" if bad else ""
    return CongruenceReport(
        check, index, label or str(modulus), lefts, rights, verdict, claim, detail
    )


def flatten(reports: Iterable[CongruenceReport]) -> list[CongruenceReport]:
    out = []
    for r in reports:
        out.append(r)
        out.extend(flatten(r.parts))
    return out


def failing(reports: Iterable[CongruenceReport]) -> list[CongruenceReport]:
    return [r for r in flatten(reports) if r.verdict is Verdict.FAIL]


def sort_reports(reports: Iterable[CongruenceReport]) -> list[CongruenceReport]:
    return sorted(reports, key=lambda r: (r.check, r.index, r.modulus))


def to_json(reports: Sequence[CongruenceReport], timing: bool = True) -> str:
    return json.dumps([r.to_dict(timing) for r in reports], indent=1) + "\n"


def from_json(text: str) -> list[CongruenceReport]:
    return [CongruenceReport.from_dict(d) for d in json.loads(text)]


_CSV_FIELDS = ["check", "index", "modulus", "left", "right", "verdict", "claim", "detail"]


def to_csv(reports: Sequence[CongruenceReport], timing: bool = True) -> str:
    buf = io.StringIO()
    fields = _CSV_FIELDS + (["timing"] if timing else [])
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in flatten(reports):
        d = r.to_dict(timing)
        del d["parts"]
        for key in ("left", "right"):
            if isinstance(d[key], list):
                d[key] = " ".join(map(str, d[key]))
        w.writerow(d)
    return buf.getvalue()


def _short(v, width=40) -> str:
    if isinstance(v, tuple):
        s = "(" + ", ".join(map(str, v)) + ")"
    else:
        s = str(v)
    return s if len(s) <= width else s[: width - 3] + "..."


def to_human(reports: Sequence[CongruenceReport]) -> str:
    lines = []

    def emit(r, depth):
        pad = "  " * depth
        tag = r.verdict.value.upper()
        extra = f"  [{r.claim.value}]" if r.claim is not Claim.THEOREM else ""
        note = f"  {r.detail}" if r.detail else ""
        lines.append(
            f"{pad}{tag:<18}{r.check:<22} {r.index:>6}  mod {r.modulus:<10}"
            f" {_short(r.left)} vs {_short(r.right)}{extra}{note}"
        )
        for p in r.parts:
            emit(p, depth + 1)

    for r in reports:
        emit(r, 0)
    return "\n".join(lines) + ("\n" if lines else "")
