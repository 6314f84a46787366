"""Coordinate index sets of Segre-Veronese embeddings and their Hamming distance.

A coordinate of the ambient space of ``P^{n_1} x ... x P^{n_r}`` embedded by
``O(d_1, ..., d_r)`` is labelled by a tuple ``(I^1, ..., I^r)`` where ``I^k`` is
a non-decreasing sequence of ``d_k`` integers in ``[0, n_k]``.  The lexicographic
order produced by :func:`enumerate_indices` / :func:`lattice` is the ambient
coordinate order used everywhere else in the package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb, prod

from .errors import DegenerateDegree, ShapeMismatch


@dataclass(frozen=True, order=True)
class MultiIndex:
    entries: tuple[int, ...]
    n: int
    d: int

    def __post_init__(self):
        if len(self.entries) != self.d:
            raise ShapeMismatch(f"expected {self.d} entries, got {len(self.entries)}")
        if any(b < a for a, b in zip(self.entries, self.entries[1:])):
            raise ValueError(f"entries must be non-decreasing: {self.entries}")
        if self.entries and not (0 <= self.entries[0] and self.entries[-1] <= self.n):
            raise ValueError(f"entries must lie in [0, {self.n}]: {self.entries}")

    @classmethod
    def of(cls, entries, n: int) -> "MultiIndex":
        entries = tuple(sorted(entries))
        return cls(entries, n, len(entries))

    @property
    def multiplicities(self) -> tuple[int, ...]:
        counts = [0] * (self.n + 1)
        for i in self.entries:
            counts[i] += 1
        return tuple(counts)

    def __str__(self):
        return "{" + ",".join(map(str, self.entries)) + "}"


MultiIndexTuple = tuple  # tuple[MultiIndex, ...], one part per factor


@dataclass(frozen=True)
class Format:
    """Factor dimensions ``n`` and degrees ``d`` of a Segre-Veronese variety."""

    n: tuple[int, ...]
    d: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "n", tuple(int(x) for x in self.n))
        object.__setattr__(self, "d", tuple(int(x) for x in self.d))
        if len(self.n) != len(self.d) or not self.n:
            raise ShapeMismatch(f"n and d must have equal positive length: {self.n}, {self.d}")
        if any(x < 1 for x in self.n):
            raise ValueError(f"factor dimensions must be positive: {self.n}")
        if any(x < 1 for x in self.d):
            raise DegenerateDegree(f"factor degrees must be positive: {self.d}")

    @classmethod
    def parse(cls, n: str, d: str) -> "Format":
        return cls(tuple(int(x) for x in n.split(",")), tuple(int(x) for x in d.split(",")))

    @property
    def r(self) -> int:
        return len(self.n)

    @property
    def dim(self) -> int:
        """Dimension of the variety, ``sum(n)``."""
        return sum(self.n)

    @property
    def total_degree(self) -> int:
        return sum(self.d)

    def __str__(self):
        return f"n={','.join(map(str, self.n))} d={','.join(map(str, self.d))}"


def enumerate_indices(n: int, d: int) -> list[MultiIndex]:
    """All of ``Lambda_{n,d}`` in lexicographic order; ``binom(n+d, d)`` elements."""
    if d < 1:
        raise DegenerateDegree(f"degree must be at least 1, got {d}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return list(_enumerate(n, d))


@lru_cache(maxsize=None)
def _enumerate(n: int, d: int) -> tuple[MultiIndex, ...]:
    return tuple(
        MultiIndex(c, n, d) for c in itertools.combinations_with_replacement(range(n + 1), d)
    )


@lru_cache(maxsize=None)
def lattice(fmt: Format) -> tuple[tuple[MultiIndex, ...], ...]:
    """The full index set ``Lambda`` of ``fmt`` in ambient coordinate order."""
    return tuple(itertools.product(*(_enumerate(n, d) for n, d in zip(fmt.n, fmt.d))))


@lru_cache(maxsize=None)
def coordinate_position(fmt: Format) -> dict:
    return {J: pos for pos, J in enumerate(lattice(fmt))}


def lattice_size(fmt: Format) -> int:
    return prod(comb(n + d, d) for n, d in zip(fmt.n, fmt.d))


def distance(I: MultiIndex, J: MultiIndex) -> int:
    """Number of unmatched entries between two multi-indices of the same shape."""
    if (I.n, I.d) != (J.n, J.d):
        raise ShapeMismatch(f"cannot compare {I!r} and {J!r}")
    matched = sum(min(a, b) for a, b in zip(I.multiplicities, J.multiplicities))
    return I.d - matched


def tuple_distance(I, J) -> int:
    if len(I) != len(J):
        raise ShapeMismatch("index tuples have different numbers of factors")
    return sum(distance(a, b) for a, b in zip(I, J))


def _check_member(fmt: Format, J) -> None:
    if len(J) != fmt.r or any((p.n, p.d) != (n, d) for p, n, d in zip(J, fmt.n, fmt.d)):
        raise ShapeMismatch(f"index tuple {tuple(map(str, J))} does not match {fmt}")


def ball(center, radius: int, fmt: Format) -> list:
    """Every ``J`` in ``Lambda`` with ``d(center, J) <= radius``, in coordinate order."""
    _check_member(fmt, center)
    if radius < 0:
        raise ValueError("radius must be non-negative")
    return [J for J in lattice(fmt) if tuple_distance(center, J) <= radius]


def diagonal_index(fmt: Format, i: int) -> tuple:
    """The tuple ``({i,...,i}, ..., {i,...,i})`` labelling a coordinate point."""
    if not 0 <= i <= min(fmt.n):
        raise ValueError(f"diagonal index {i} out of range for {fmt}")
    return tuple(MultiIndex((i,) * d, n, d) for n, d in zip(fmt.n, fmt.d))


def is_diagonal(J) -> bool:
    values = {e for part in J for e in part.entries}
    return len(values) == 1
