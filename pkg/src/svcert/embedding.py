"""The Segre-Veronese monomial map, its exact jets, and osculating spaces.

Points are given by one integer vector per factor together with a chart: for
each factor, the index of a coordinate known to be non-zero.  The local
parametrization at ``p`` moves the remaining ``sum(n)`` coordinates,
``phi(t) = embed(p + t)``, and all derivatives are taken with respect to these
``t`` variables.  Derivatives are computed on exponent vectors, so every jet is
an exact integer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, prod
from typing import Sequence

from .errors import ShapeMismatch
from .exactla import Span
from .multiindex import (
    Format,
    _enumerate,
    ball,
    coordinate_position,
    is_diagonal,
    lattice_size,
)


@dataclass(frozen=True)
class AffinePoint:
    coords: tuple[tuple[int, ...], ...]
    chart: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(tuple(int(x) for x in v) for v in self.coords))
        object.__setattr__(self, "chart", tuple(int(c) for c in self.chart))
        if len(self.coords) != len(self.chart):
            raise ShapeMismatch("one chart index per factor is required")
        for v, c in zip(self.coords, self.chart):
            if not 0 <= c < len(v) or v[c] == 0:
                raise ValueError(f"chart coordinate {c} of {v} must be non-zero")

    @classmethod
    def from_coords(cls, coords: Sequence[Sequence[int]], chart=None) -> "AffinePoint":
        """Build a point; the default chart pivot is the largest coordinate in absolute value."""
        if chart is None:
            chart = tuple(max(range(len(v)), key=lambda a: (abs(v[a]), -a)) for v in coords)
        return cls(tuple(tuple(v) for v in coords), tuple(chart))

    def check(self, fmt: Format) -> None:
        if tuple(len(v) - 1 for v in self.coords) != fmt.n:
            raise ShapeMismatch(f"point with factor lengths {[len(v) for v in self.coords]} "
                                f"does not lie on {fmt}")

    def variables(self) -> list[tuple[int, int]]:
        """The ``(factor, coordinate)`` pairs moved by the local parametrization."""
        return [(i, a) for i, (v, c) in enumerate(zip(self.coords, self.chart))
                for a in range(len(v)) if a != c]

    def to_json(self) -> dict:
        return {"coords": [[str(x) for x in v] for v in self.coords],
                "chart": [str(c) for c in self.chart]}


def coordinate_point(fmt: Format, i: int) -> AffinePoint:
    """The point ``e_{({i..i},...,{i..i})}``: every factor is the ``i``-th unit vector."""
    if not 0 <= i <= min(fmt.n):
        raise ValueError(f"no diagonal coordinate point {i} on {fmt}")
    return AffinePoint(tuple(tuple(int(a == i) for a in range(n + 1)) for n in fmt.n),
                       (i,) * fmt.r)


def ambient_dim(fmt: Format) -> int:
    """``N = prod binom(n_i + d_i, d_i) - 1``; exact, so there is no overflow to wrap."""
    return lattice_size(fmt) - 1


def _part_values(v: Sequence[int], n: int, d: int) -> list[int]:
    return [prod(v[a] for a in K.entries) for K in _enumerate(n, d)]


def embed(fmt: Format, p: AffinePoint) -> list[int]:
    p.check(fmt)
    parts = [_part_values(v, n, d) for v, n, d in zip(p.coords, fmt.n, fmt.d)]
    return [prod(c) for c in itertools.product(*parts)]


@lru_cache(maxsize=None)
def multi_exponents(nvars: int, order: int) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors of total degree ``<= order`` in ``nvars`` variables, graded."""
    out = []
    for deg in range(order + 1):
        for combo in itertools.combinations_with_replacement(range(nvars), deg):
            e = [0] * nvars
            for a in combo:
                e[a] += 1
            out.append(tuple(e))
    return tuple(out)


def _factor_taylor(v, chart, n, d, beta) -> list[int]:
    """Taylor coefficient of ``t^beta`` in every degree-``d`` monomial of factor ``v + t``."""
    others = [a for a in range(n + 1) if a != chart]
    out = []
    for K in _enumerate(n, d):
        mult = K.multiplicities
        coef = v[chart] ** mult[chart]
        for a, b in zip(others, beta):
            e = mult[a]
            if b > e:
                coef = 0
                break
            if b:
                coef *= comb(e, b)
            if e - b:
                coef *= v[a] ** (e - b)
        out.append(coef)
    return out


def taylor_rows(fmt: Format, p: AffinePoint, order: int):
    """Taylor coefficients of every coordinate of ``phi`` at ``p`` up to ``order``.

    Returns ``(alphas, rows)`` where ``rows[k][J]`` is the coefficient of
    ``t^alphas[k]`` in the coordinate ``J`` of ``embed(p + t)``.
    """
    p.check(fmt)
    nv = [n for n in fmt.n]
    alphas = multi_exponents(fmt.dim, order)
    cache: dict = {}
    rows = []
    for alpha in alphas:
        parts = []
        off = 0
        for i, (v, c, n, d) in enumerate(zip(p.coords, p.chart, fmt.n, fmt.d)):
            beta = alpha[off:off + nv[i]]
            off += nv[i]
            key = (i, beta)
            if key not in cache:
                cache[key] = _factor_taylor(v, c, n, d, beta)
            parts.append(cache[key])
        rows.append([prod(x) for x in itertools.product(*parts)])
    return alphas, rows


def jet_rows(fmt: Format, p: AffinePoint, order: int) -> list[list[int]]:
    """All partial derivatives of ``phi`` of order ``<= order`` at ``p``."""
    alphas, rows = taylor_rows(fmt, p, order)
    return [[prod(factorial(a) for a in alpha) * x for x in row]
            for alpha, row in zip(alphas, rows)]


def osculating_cone_basis(fmt: Format, p: AffinePoint, s: int) -> Span:
    """Affine cone over the ``s``-th osculating space at ``p``."""
    if s < 0:
        raise ValueError("osculating order must be non-negative")
    return Span.from_rows(jet_rows(fmt, p, s), ambient_dim(fmt) + 1)


def tangent_cone_basis(fmt: Format, p: AffinePoint) -> Span:
    return osculating_cone_basis(fmt, p, 1)


def coordinate_osculating_span(fmt: Format, center, s: int) -> Span:
    """``<e_J : d(center, J) <= s>`` for a diagonal coordinate tuple ``center``."""
    if not is_diagonal(center):
        raise ValueError("the combinatorial osculating span needs a diagonal center")
    pos = coordinate_position(fmt)
    size = ambient_dim(fmt) + 1
    rows = []
    for J in ball(center, s, fmt):
        e = [0] * size
        e[pos[J]] = 1
        rows.append(e)
    return Span.from_rows(rows, size)


def form_taylor(fmt: Format, p: AffinePoint, form, order: int) -> dict:
    """Taylor coefficients ``alpha -> c`` of the pullback ``form . phi`` at ``p``."""
    alphas, rows = taylor_rows(fmt, p, order)
    if len(form) != len(rows[0]):
        raise ShapeMismatch(f"form of length {len(form)} on a space of {len(rows[0])} coordinates")
    support = [(j, c) for j, c in enumerate(form) if c]
    return {alpha: sum(c * row[j] for j, c in support) for alpha, row in zip(alphas, rows)}


def hessian_from_taylor(coeffs: dict, nvars: int) -> list[list]:
    H = [[0] * nvars for _ in range(nvars)]
    for a in range(nvars):
        for b in range(a, nvars):
            alpha = [0] * nvars
            alpha[a] += 1
            alpha[b] += 1
            c = coeffs.get(tuple(alpha), 0)
            H[a][b] = H[b][a] = 2 * c if a == b else c
    return H


def hessian_of_form(fmt: Format, p: AffinePoint, form) -> list[list]:
    """Exact Hessian of ``form . phi`` at ``p`` in the ``sum(n)`` chart variables."""
    return hessian_from_taylor(form_taylor(fmt, p, form, 2), fmt.dim)
