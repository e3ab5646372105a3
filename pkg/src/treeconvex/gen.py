"""Random collections in the <m, n, r1, r2> model.

Each of the m sets draws its size uniformly from [r1, r2] and its elements
uniformly without replacement from 1..n. Randomness comes from numpy's
PCG64 bit generator seeded with a 64-bit integer, so an instance is a pure
function of its config.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, replace

import numpy as np

from treeconvex.core import SetCollection, intern
from treeconvex.errors import BadConfigError

SEED_BITS = 64
INSTANCES_PER_BATCH = 100


@dataclass(frozen=True)
class GenConfig:
    m: int
    n: int
    r1: int
    r2: int
    seed: int = 0

    def __post_init__(self) -> None:
        if self.m < 1:
            raise BadConfigError(f"m must be >= 1, got {self.m}")
        if not 1 <= self.r1 <= self.r2 <= self.n:
            raise BadConfigError(
                f"need 1 <= r1 <= r2 <= n, got r1={self.r1} r2={self.r2} n={self.n}"
            )
        if not 0 <= self.seed < 1 << SEED_BITS:
            raise BadConfigError(f"seed must fit in {SEED_BITS} unsigned bits")

    def __str__(self) -> str:
        return f"<{self.m},{self.n},{self.r1},{self.r2}>"


def random_label_sets(c: GenConfig) -> list[list[int]]:
    rng = np.random.Generator(np.random.PCG64(c.seed))
    sizes = rng.integers(c.r1, c.r2, endpoint=True, size=c.m)
    return [
        (rng.choice(c.n, size=int(k), replace=False) + 1).tolist() for k in sizes
    ]


def random_collection(c: GenConfig) -> SetCollection:
    return intern(random_label_sets(c))


def derive_seed(base_seed: int, *position: int) -> int:
    """Deterministic child seed for the instance at ``position`` of a sweep."""
    ss = np.random.SeedSequence([base_seed, *position])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def batch(base: GenConfig, instances: int, position: int = 0) -> Iterator[GenConfig]:
    """Configs for ``instances`` instances sharing ``base`` parameters."""
    for i in range(instances):
        yield replace(base, seed=derive_seed(base.seed, position, i))


def scaling_sweep(
    base: GenConfig,
    vary: str,
    values: Sequence[int],
    instances: int = INSTANCES_PER_BATCH,
) -> Iterator[tuple[GenConfig, SetCollection]]:
    """Vary ``m`` or ``r2`` over ``values``, ``instances`` collections per value.

    Seeds derive from ``base.seed`` and (value position, instance index).
    """
    if vary not in ("m", "r2"):
        raise BadConfigError(f"can only vary 'm' or 'r2', not {vary!r}")
    for pos, value in enumerate(values):
        point = replace(base, **{vary: value})
        for cfg in batch(point, instances, pos):
            yield cfg, random_collection(cfg)


def interval_collection(n: int, m: int, rng: np.random.Generator) -> list[list[int]]:
    """m random integer intervals [lo, hi] over 0..n-1 (consecutive-ones rows)."""
    out = []
    for _ in range(m):
        lo, hi = sorted(rng.integers(0, n, size=2).tolist())
        out.append(list(range(lo, hi + 1)))
    return out
