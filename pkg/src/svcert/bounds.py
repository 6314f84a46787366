"""Closed-form identifiability bounds and classifications for Segre-Veronese varieties.

Every bound is returned as the largest certified value (inclusive).  Statements
that assume ``n_1 <= ... <= n_r`` are applied after sorting the factors; the
permutation used is kept in the report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, prod
from typing import Optional

from .errors import DegenerateLinearSpace, ShapeNotCovered
from .multiindex import Format

WD_BOUND = "WD_bound"
TWD_BOUND = "TWD_bound"
ONE_WD_CLASS = "OneWD_class"
ONE_S_THRESHOLD = "OneS_threshold"


@dataclass
class BoundReport:
    kind: str
    bound: int
    branch: str
    assumptions_ok: bool
    permutation: tuple[int, ...] = ()
    semantics: str = "sufficient"
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "bound": str(self.bound),
            "branch": self.branch,
            "semantics": self.semantics,
            "assumptions_ok": self.assumptions_ok,
            "permutation": [str(i) for i in self.permutation],
            "extra": {k: str(v) for k, v in self.extra.items()},
        }


def h_m(m: int, k: int) -> int:
    """Number of tangent spaces that degenerate into one order-``k`` osculating space.

    Writing ``k + 1 = 2^l_1 + ... + 2^l_a + eps`` with ``l_1 > ... > l_a >= 1``
    and ``eps`` in ``{0, 1}``, the value is ``m^(l_1 - 1) + ... + m^(l_a - 1)``.
    """
    if m < 0 or k < 0:
        raise ValueError("h_m needs m >= 0 and k >= 0")
    if k == 0:
        return 0
    rest = (k + 1) & ~1
    total = 0
    lam = 1
    while rest >> lam:
        if (rest >> lam) & 1:
            total += m ** (lam - 1)
        lam += 1
    return total


def sorted_format(fmt: Format) -> tuple[Format, tuple[int, ...]]:
    """Sort factors by dimension, breaking ties by degree."""
    perm = tuple(sorted(range(fmt.r), key=lambda i: (fmt.n[i], fmt.d[i])))
    return Format(tuple(fmt.n[i] for i in perm), tuple(fmt.d[i] for i in perm)), perm


def wd_bound(fmt: Format) -> BoundReport:
    """Largest ``h`` for which the variety is certified not h-weakly defective."""
    sf, perm = sorted_format(fmt)
    m = sf.n[0] + 1
    d = min(sf.d)
    candidates = {"d-1 osculating": m * h_m(m, d - 1)}
    branch2 = sf.d[0] == d and all(di >= d + 2 for di in sf.d[1:]) and sf.r >= 2
    if branch2:
        candidates["d osculating, d_1 <= d_i - 2"] = m * h_m(m, d)
    # on a tie the sharper hypothesis (branch 2) is the one reported
    branch = max(candidates, key=lambda b: (candidates[b], b != "d-1 osculating"))
    return BoundReport(
        kind=WD_BOUND,
        bound=candidates[branch],
        branch=branch,
        assumptions_ok=sf.total_degree >= 3,
        permutation=perm,
        extra={"asymptotic": m ** (d.bit_length() - 1), "branch1": candidates["d-1 osculating"],
               "branch2": candidates.get("d osculating, d_1 <= d_i - 2", "n/a")},
    )


def one_wd_classify(fmt: Format) -> bool:
    """True iff some degree-1 factor has dimension above the sum of the others."""
    if fmt.r == 1:
        if fmt.d[0] == 1:
            raise DegenerateLinearSpace(f"{fmt} is a linear space")
        return False
    total = fmt.dim
    return any(d == 1 and n > total - n for n, d in zip(fmt.n, fmt.d))


def _linear_factor(fmt: Format) -> Optional[int]:
    """Index of a degree-1 factor exceeding the sum of the others, if any."""
    total = fmt.dim
    for i, (n, d) in enumerate(zip(fmt.n, fmt.d)):
        if d == 1 and n > total - n:
            return i
    return None


def one_s_threshold(fmt: Format, which: str = "auto") -> BoundReport:
    """Largest ``s`` with no (1, s)-tangential weak defectiveness.

    ``which="exact"`` applies to ``P^1 x P^n`` embedded by ``(d, 1)`` and is
    sharp; ``which="sufficient"`` applies whenever a linear factor dominates
    and is only one-sided.  ``"auto"`` prefers the exact statement.
    """
    if which not in ("auto", "exact", "sufficient"):
        raise ValueError(f"unknown threshold kind {which!r}")
    if which in ("auto", "exact") and fmt.r == 2:
        for a, b in ((0, 1), (1, 0)):
            if fmt.n[a] == 1 and fmt.d[b] == 1:
                n, d = fmt.n[b], fmt.d[a]
                return BoundReport(ONE_S_THRESHOLD, d * (n + 1), "P^1 x P^n, degrees (d, 1)",
                                   True, (a, b), semantics="iff")
    if which in ("auto", "sufficient"):
        last = _linear_factor(fmt)
        if last is not None:
            perm = tuple(sorted((i for i in range(fmt.r) if i != last),
                                key=lambda i: (fmt.n[i], fmt.d[i]))) + (last,)
            n = [fmt.n[i] for i in perm]
            d = [fmt.d[i] for i in perm]
            value = prod(comb(n[i] + d[i], n[i]) for i in range(1, fmt.r)) - n[-1] * sum(n[:-1])
            return BoundReport(ONE_S_THRESHOLD, max(value, 0), "dominant linear factor", True,
                               perm, semantics="sufficient", extra={"raw": value})
    raise ShapeNotCovered(f"no (1, s) threshold statement covers {fmt}")


def twd_bound_linear_factor(fmt: Format) -> BoundReport:
    """Largest ``h`` certified not h-tangentially weakly defective for a linear ``P^1`` factor.

    The degree ``d = min{d_i} - 1`` is taken over the factors other than the
    linear ``P^1``; including it would make every bound vacuous.
    """
    lead = next((i for i in range(fmt.r) if fmt.n[i] == 1 and fmt.d[i] == 1), None)
    if lead is None or fmt.r < 2:
        raise ShapeNotCovered(f"{fmt} has no linearly embedded P^1 factor next to others")
    rest = sorted((i for i in range(fmt.r) if i != lead), key=lambda i: (fmt.n[i], fmt.d[i]))
    perm = (lead,) + tuple(rest)
    n2 = fmt.n[rest[0]]
    d = min(fmt.d[i] for i in rest) - 1
    value = h_m(n2 + 1, d)
    return BoundReport(TWD_BOUND, max(value - 1, 0), "linear P^1 factor", True, perm,
                       extra={"h_threshold": value, "d": d, "d_min_over": "i>=2"})


def applicable_bounds(fmt: Format) -> dict:
    """Every statement that applies to ``fmt``; missing shapes are skipped."""
    out = {"wd_bound": wd_bound(fmt)}
    try:
        out["one_wd_classify"] = one_wd_classify(fmt)
    except DegenerateLinearSpace:
        out["one_wd_classify"] = None
    for kind in ("exact", "sufficient"):
        try:
            out[f"one_s_threshold_{kind}"] = one_s_threshold(fmt, kind)
        except ShapeNotCovered:
            pass
    try:
        out["twd_bound"] = twd_bound_linear_factor(fmt)
    except ShapeNotCovered:
        pass
    return out
