"""The published fixed-seed corpus used by identity checks and CI.

Each seed deterministically generates one small rational arrangement:
ambient dimension up to 4, up to 6 hyperplanes, integer normals in [-3, 3]
(never all zero) and integer offsets in [-2, 2], redrawing any hyperplane
that collides with an earlier one after canonicalization.
"""

from __future__ import annotations

import random
from typing import Iterator

from .arrangement import Arrangement, Hyperplane
from .exactalg import QQ

SEEDS: tuple[int, ...] = tuple(range(1001, 1241))  # 240 arrangements

MAX_DIM = 4
MAX_HYPERPLANES = 6
NORMAL_BOUND = 3
OFFSET_BOUND = 2


def corpus_arrangement(seed: int) -> Arrangement:
    rng = random.Random(seed)
    n = rng.randint(1, MAX_DIM)
    m = rng.randint(1, MAX_HYPERPLANES)
    hps: list[Hyperplane] = []
    while len(hps) < m:
        normal = tuple(
            QQ(rng.randint(-NORMAL_BOUND, NORMAL_BOUND)) for _ in range(n)
        )
        if not any(normal):
            continue
        h = Hyperplane(normal, QQ(rng.randint(-OFFSET_BOUND, OFFSET_BOUND)))
        if h not in hps:
            hps.append(h)
    return Arrangement(n, tuple(hps))


def corpus() -> Iterator[tuple[int, Arrangement]]:
    for seed in SEEDS:
        yield seed, corpus_arrangement(seed)
