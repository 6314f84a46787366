"""Contact-locus tests for (h, s)-tangential weak defectiveness.

A linear space ``Pi`` is given by integer linear forms ``L_1, ..., L_k``.  It is
tangent to ``X`` at ``x`` when every pullback ``F = L . phi`` vanishes at ``x``
together with its gradient, so near a sampled point the contact locus is the
zero set of the ideal generated by all ``F`` and ``dF``.

Two local tests bound the dimension of that zero set at a sampled point:

* order 0: the common kernel of the Hessians of the ``F``.  It is the Zariski
  tangent space of the contact scheme, so an empty kernel means the point is
  isolated.
* order ``t >= 1``: if ``dim R/(I + m^{t+1}) == dim R/(I + m^{t+2})`` then
  ``m^{t+1}`` lies in ``I`` after localizing (Nakayama), so the point is
  isolated, with local multiplicity equal to that common value.  This matters
  when ``Pi`` contains higher osculating spaces and every Hessian vanishes.

Only isolated contact certifies anything.  Random points and forms are special
members of the family, and by semicontinuity an isolated special contact
forces isolated general contact.  Positive kernels are reported as evidence
and never as a proof of defectiveness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .bounds import h_m
from .embedding import (
    AffinePoint,
    ambient_dim,
    coordinate_point,
    hessian_from_taylor,
    multi_exponents,
    osculating_cone_basis,
    taylor_rows,
)
from .errors import InvalidDimension, NotTangent, SpanFillsSpace
from .exactla import Span, echelon, rank
from .multiindex import Format
from .terracini import (
    DEFAULT_BOX,
    DEFAULT_RETRIES,
    PointConfig,
    attempt_seeds,
    sample_points,
    terracini_matrix,
)

NOT_TWD = "NotTWDCertified"
INCONCLUSIVE = "Inconclusive"

DEFAULT_OSC_ORDER = 6


@dataclass
class LocalContact:
    hessian_kernel: int
    isolated: bool
    order: Optional[int] = None
    multiplicity: Optional[int] = None

    @property
    def bound(self) -> int:
        """Upper bound for the dimension of the contact locus through the point."""
        return 0 if self.isolated else self.hessian_kernel


@dataclass
class ContactAttempt:
    seed: int
    config: PointConfig
    s: int
    span_dim: int
    n_forms: int
    local: list[LocalContact]

    @property
    def kernel_dims(self) -> list[int]:
        return [c.bound for c in self.local]

    @property
    def certified(self) -> bool:
        return all(c.isolated for c in self.local)


@dataclass
class ContactReport:
    kind: str
    s: int
    span_dim: int
    kernel_dims: list[int]
    status: str
    seed: int
    attempts: int
    history: list[ContactAttempt] = field(default_factory=list)
    certified_h: Optional[int] = None

    @property
    def hessian_kernel_dims(self) -> list[int]:
        return [c.hessian_kernel for c in self.history[-1].local]

    @property
    def multiplicities(self) -> list[Optional[int]]:
        return [c.multiplicity for c in self.history[-1].local]


def tangent_span(fmt: Format, cfg: PointConfig) -> Span:
    return Span.from_rows(terracini_matrix(fmt, cfg), ambient_dim(fmt) + 1)


def _rng(seed_or_rng) -> random.Random:
    if isinstance(seed_or_rng, random.Random):
        return seed_or_rng
    return random.Random(seed_or_rng)


def random_containing_space(T: Span, s: int, seed=0, bound: int = DEFAULT_BOX) -> Span:
    """A random projective ``s``-space containing ``T``, described by ``N - s`` forms."""
    N = T.ncols - 1
    if not T.rank - 1 <= s <= N:
        raise InvalidDimension(f"s={s} outside [{T.rank - 1}, {N}]")
    rng = _rng(seed)
    k = N - s
    A = T.annihilator
    if k == 0:
        return Span.from_annihilator([], T.ncols)
    while True:
        R = [[rng.randint(-bound, bound) for _ in A] for _ in range(k)]
        if rank(R, len(A)) == k:
            break
    forms = [[sum(r * a[j] for r, a in zip(row, A) if r) for j in range(T.ncols)] for row in R]
    return Span.from_annihilator(forms, T.ncols)


def _series_derivative(series: dict, a: int, nvars: int) -> dict:
    out = {}
    for alpha, c in series.items():
        if c and alpha[a]:
            beta = list(alpha)
            beta[a] -= 1
            out[tuple(beta)] = alpha[a] * c
    return out


def _is_stable(generators: list[dict], nvars: int, t: int):
    """Compare ``dim R/(I + m^{t+1})`` and ``dim R/(I + m^{t+2})``.

    Returns ``(stable, H(t))``.  Columns are graded, so the pivots falling in
    the degree ``<= t`` block count the rank of the truncation to ``m^{t+1}``.
    """
    monos = multi_exponents(nvars, t + 1)
    col = {m: i for i, m in enumerate(monos)}
    n_low = sum(1 for m in monos if sum(m) <= t)
    rows = []
    for g in generators:
        terms = {a: c for a, c in g.items() if c and sum(a) <= t + 1}
        if not terms:
            continue
        order = min(sum(a) for a in terms)
        for gamma in multi_exponents(nvars, t + 1 - order):
            row = [0] * len(monos)
            for a, c in terms.items():
                m = tuple(x + y for x, y in zip(a, gamma))
                if sum(m) <= t + 1:
                    row[col[m]] = c
            rows.append(row)
    if rows:
        _, pivots = echelon(rows, len(monos))
    else:
        pivots = []
    low = sum(1 for c in pivots if c < n_low)
    high = len(pivots) - low
    return high == len(monos) - n_low, n_low - low


def local_contact(fmt: Format, p: AffinePoint, forms: Sequence[Sequence[int]],
                  max_order: int = 0) -> LocalContact:
    """Bound the contact locus of the forms' common zero space at ``p``."""
    nvars = fmt.dim
    alphas, rows = taylor_rows(fmt, p, max(2, max_order + 2))
    series = []
    for L in forms:
        support = [(j, c) for j, c in enumerate(L) if c]
        coeffs = {alpha: sum(c * row[j] for j, c in support) for alpha, row in zip(alphas, rows)}
        if any(coeffs[a] for a in alphas if sum(a) <= 1):
            raise NotTangent(f"a defining form is not tangent to X at {p.coords}")
        series.append(coeffs)
    stacked = []
    for coeffs in series:
        stacked.extend(hessian_from_taylor(coeffs, nvars))
    kernel = nvars - (rank(stacked, nvars) if stacked else 0)
    if kernel == 0:
        return LocalContact(0, True, 0, 1)
    if not series:
        return LocalContact(kernel, False)
    generators = list(series)
    for coeffs in series:
        generators.extend(_series_derivative(coeffs, a, nvars) for a in range(nvars))
    for t in range(1, max_order + 1):
        stable, hilbert = _is_stable(generators, nvars, t)
        if stable:
            return LocalContact(kernel, True, t, hilbert)
    return LocalContact(kernel, False)


def contact_kernel_dims(fmt: Format, cfg: PointConfig, pi_annihilator) -> list[int]:
    """Dimension of the common Hessian kernel at every configuration point."""
    return [local_contact(fmt, p, pi_annihilator).hessian_kernel for p in cfg.points]


def _run(fmt, kind, make_points, make_span, choose_s, seed, retries, bound, max_order,
         certified_h=None) -> ContactReport:
    if retries < 1:
        raise ValueError("retries must be at least 1")
    N = ambient_dim(fmt)
    history = []
    for a_seed in attempt_seeds(seed, retries):
        rng = random.Random(a_seed)
        cfg = PointConfig(make_points(rng), a_seed, bound)
        T = make_span(cfg)
        span_dim = T.rank - 1
        s = choose_s(span_dim, N)
        Pi = random_containing_space(T, s, rng, bound)
        local = [local_contact(fmt, p, Pi.annihilator, max_order) for p in cfg.points]
        history.append(ContactAttempt(a_seed, cfg, s, span_dim, len(Pi.annihilator), local))
        if history[-1].certified:
            break
    last = history[-1]
    ok = last.certified
    return ContactReport(
        kind=kind,
        s=last.s,
        span_dim=last.span_dim,
        kernel_dims=last.kernel_dims,
        status=NOT_TWD if ok else INCONCLUSIVE,
        seed=seed,
        attempts=len(history),
        history=history,
        certified_h=certified_h if ok else None,
    )


def _random_points(fmt, h, bound):
    if h < 1:
        raise ValueError("h must be at least 1")
    return lambda rng: sample_points(fmt, h, rng, bound)


def _tangents(fmt):
    return lambda cfg: Span.from_rows(terracini_matrix(fmt, cfg), ambient_dim(fmt) + 1)


def hs_twd_check(fmt: Format, h: int, s: int, seed: int = 0, retries: int = DEFAULT_RETRIES,
                 bound: int = DEFAULT_BOX, max_order: int = 0) -> ContactReport:
    """Test (h, s)-tangential weak defectiveness with a random ``Pi`` of dimension ``s``."""
    def choose(span_dim, N):
        if s >= N:
            raise InvalidDimension(f"s={s} leaves no defining forms (N={N}); nothing to certify")
        if s < span_dim:
            raise InvalidDimension(f"s={s} is below the tangent span dimension {span_dim}")
        return s

    return _run(fmt, "hstwd", _random_points(fmt, h, bound), _tangents(fmt), choose,
                seed, retries, bound, max_order)


def wd_check(fmt: Format, h: int, seed: int = 0, retries: int = DEFAULT_RETRIES,
             bound: int = DEFAULT_BOX, max_order: int = 0) -> ContactReport:
    """h-weak defectiveness: ``Pi`` is a general tangent hyperplane."""
    def choose(span_dim, N):
        if span_dim >= N:
            raise SpanFillsSpace(f"the span of {h} tangent spaces is all of P^{N}")
        return N - 1

    return _run(fmt, "wd", _random_points(fmt, h, bound), _tangents(fmt), choose,
                seed, retries, bound, max_order)


def twd_check(fmt: Format, h: int, seed: int = 0, retries: int = DEFAULT_RETRIES,
              bound: int = DEFAULT_BOX, max_order: int = 0) -> ContactReport:
    """h-tangential weak defectiveness: ``Pi`` is the tangent span itself."""
    return _run(fmt, "twd", _random_points(fmt, h, bound), _tangents(fmt),
                lambda span_dim, N: span_dim, seed, retries, bound, max_order)


def osculating_hypothesis_check(fmt: Format, orders: Sequence[int], s: Optional[int] = None,
                                seed: int = 0, retries: int = DEFAULT_RETRIES,
                                bound: int = DEFAULT_BOX, placement: str = "random",
                                max_order: int = DEFAULT_OSC_ORDER) -> ContactReport:
    """Check that a random ``s``-space through osculating spaces has isolated contact.

    ``orders[j]`` is the osculating order at the ``j``-th point; ``s=None``
    means ``N - 1``.  Points are random integer points; with
    ``placement="coordinate"`` they are the diagonal coordinate points instead,
    which any ``len(orders) <= min(n) + 1`` general points can be moved to by a
    projectivity of each factor.  On success ``certified_h = sum h_m(k_j)``
    with ``m = min(n) + 1``.
    """
    orders = [int(k) for k in orders]
    if not orders or any(k < 1 for k in orders):
        raise ValueError("orders must be a non-empty list of positive integers")
    n_min = min(fmt.n)
    if placement == "coordinate":
        if len(orders) > n_min + 1:
            raise ValueError(f"only {n_min + 1} diagonal coordinate points exist on {fmt}")
        fixed = [coordinate_point(fmt, i) for i in range(len(orders))]
        make_points = lambda rng: list(fixed)  # noqa: E731
    elif placement == "random":
        make_points = _random_points(fmt, len(orders), bound)
    else:
        raise ValueError(f"unknown placement {placement!r}")

    def make_span(cfg):
        rows = []
        for p, k in zip(cfg.points, orders):
            rows.extend(osculating_cone_basis(fmt, p, k).rows)
        return Span.from_rows(rows, ambient_dim(fmt) + 1)

    def choose(span_dim, N):
        target = N - 1 if s is None else s
        if not span_dim <= target <= N - 1:
            raise InvalidDimension(f"s={target} outside [{span_dim}, {N - 1}]")
        return target

    certified_h = sum(h_m(n_min + 1, k) for k in orders)
    return _run(fmt, "osc", make_points, make_span, choose, seed, retries, bound, max_order,
                certified_h)
