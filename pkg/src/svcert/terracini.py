"""Secant dimensions through Terracini's lemma.

The cone over ``<T_{x_1}X, ..., T_{x_h}X>`` is the row space of the stacked
first-order jets at the sampled points; its rank minus one bounds
``dim Sec_h(X)`` from below.  A sample reaching the expected value therefore
certifies non-defectiveness, while a smaller rank only suggests a defect.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .embedding import AffinePoint, ambient_dim, embed, jet_rows
from .exactla import rank
from .multiindex import Format

DEFAULT_BOX = 50
DEFAULT_RETRIES = 3

NON_DEFECTIVE = "NonDefectiveCertified"
DEFECT_SUGGESTED = "DefectSuggested"


@dataclass
class PointConfig:
    points: list[AffinePoint]
    seed: int
    bound: int = DEFAULT_BOX

    @property
    def h(self) -> int:
        return len(self.points)

    def to_json(self) -> list:
        return [p.to_json() for p in self.points]


@dataclass
class SecantVerdict:
    expected: int
    computed_lower_bound: int
    status: str
    defect: int
    attempts: int
    ranks: list[int] = field(default_factory=list)
    configs: list[PointConfig] = field(default_factory=list)


def expected_secant_dim(fmt: Format, h: int) -> int:
    if h < 1:
        raise ValueError("h must be at least 1")
    return min(fmt.dim * h + h - 1, ambient_dim(fmt))


def attempt_seeds(seed: int, retries: int) -> list[int]:
    """Independent 64-bit seeds for each attempt, drawn up front from ``seed``."""
    rng = random.Random(seed)
    return [rng.getrandbits(64) for _ in range(retries)]


def random_point(fmt: Format, rng: random.Random, bound: int = DEFAULT_BOX) -> AffinePoint:
    coords = []
    for n in fmt.n:
        while True:
            v = [rng.randint(-bound, bound) for _ in range(n + 1)]
            if any(v):
                break
        coords.append(v)
    return AffinePoint.from_coords(coords)


def _independent(u, v) -> bool:
    return rank([u, v]) == 2


def sample_points(fmt: Format, h: int, rng: random.Random, bound: int = DEFAULT_BOX):
    points: list[AffinePoint] = []
    images: list[list[int]] = []
    while len(points) < h:
        p = random_point(fmt, rng, bound)
        img = embed(fmt, p)
        if all(_independent(img, other) for other in images):
            points.append(p)
            images.append(img)
    return points


def sample_config(fmt: Format, h: int, seed: int, bound: int = DEFAULT_BOX) -> PointConfig:
    """``h`` pairwise distinct integer points with coordinates in ``[-bound, bound]``."""
    if h < 1:
        raise ValueError("h must be at least 1")
    return PointConfig(sample_points(fmt, h, random.Random(seed), bound), seed, bound)


def terracini_matrix(fmt: Format, cfg: PointConfig) -> list[list[int]]:
    rows = []
    for p in cfg.points:
        rows.extend(jet_rows(fmt, p, 1))
    return rows


def terracini_rank(fmt: Format, cfg: PointConfig) -> int:
    """Rank of the stacked tangent cones; ``rank - 1 <= dim Sec_h(X)``."""
    return rank(terracini_matrix(fmt, cfg), ambient_dim(fmt) + 1)


def secant_defect_check(fmt: Format, h: int, seed: int = 0, retries: int = DEFAULT_RETRIES,
                        bound: int = DEFAULT_BOX) -> SecantVerdict:
    if retries < 1:
        raise ValueError("retries must be at least 1")
    expected = expected_secant_dim(fmt, h)
    ranks, configs = [], []
    for s in attempt_seeds(seed, retries):
        cfg = sample_config(fmt, h, s, bound)
        ranks.append(terracini_rank(fmt, cfg))
        configs.append(cfg)
        if ranks[-1] == expected + 1:
            break
    best = max(ranks)
    defect = expected + 1 - best
    return SecantVerdict(
        expected=expected,
        computed_lower_bound=best - 1,
        status=NON_DEFECTIVE if defect == 0 else DEFECT_SUGGESTED,
        defect=defect,
        attempts=len(ranks),
        ranks=ranks,
        configs=configs,
    )
