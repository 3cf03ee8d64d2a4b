"""Generic engine for 3-uniform configurations (every point on 3 lines).

Any point-line incidence structure with lines of size three and all point
degrees equal to three can be put through the same pipeline as the Fano
plane: enumerate the distinct labelings (the orbit of the block set under
all n! point permutations), then record the ordinary-line count, order
profile and defective-fragment kind of each labeling.

The orbit sweep is deliberately plain brute force over all n! permutations
with a deduplicating set; n <= 12 keeps that at desk scale, and the
built-ins (8_3, 9_3, 10_3) need at most 10! ~ 3.6e6 permutations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources
from itertools import permutations
from pathlib import Path

from .core import Triple, is_ordinary, order_profile, triple
from .fragments import classify_fragment, fragment

MAX_POINTS = 12

BUILTIN_NAMES: tuple[str, ...] = ("fano", "mobius-kantor", "pappus", "desargues")

_BUILTIN_FILES = {
    "fano": "fano.txt",
    "mobius-kantor": "mobius_kantor.txt",
    "pappus": "pappus.txt",
    "desargues": "desargues.txt",
}


class InvalidConfigurationError(ValueError):
    """Raised when a block list is not a valid 3-uniform configuration."""


@dataclass(frozen=True)
class Configuration:
    name: str
    n: int
    blocks: tuple[Triple, ...]


def validate_configuration(blocks, name: str = "", n: int | None = None) -> Configuration:
    """Canonicalize and check the every-point-on-exactly-3-blocks property."""
    canon = tuple(sorted(triple(*b) for b in blocks))
    if len(set(canon)) != len(canon):
        raise InvalidConfigurationError("duplicate blocks")
    points = sorted({x for b in canon for x in b})
    if not points or points[0] < 1:
        raise InvalidConfigurationError("points must be positive integers")
    inferred = max(points)
    if n is None:
        n = inferred
    elif inferred > n:
        raise InvalidConfigurationError(f"point {inferred} exceeds declared n={n}")
    if n > MAX_POINTS:
        raise InvalidConfigurationError(f"n={n} exceeds the supported bound {MAX_POINTS}")
    degree = {x: 0 for x in range(1, n + 1)}
    for b in canon:
        for x in b:
            degree[x] += 1
    bad = [x for x, d in degree.items() if d != 3]
    if bad:
        raise InvalidConfigurationError(
            f"point {bad[0]} lies on {degree[bad[0]]} blocks, expected 3"
        )
    return Configuration(name=name or f"({n}_3)", n=n, blocks=canon)


def _parse_block_lines(text: str):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) == 1 and len(toks[0]) == 3 and toks[0].isdigit():
            yield tuple(int(ch) for ch in toks[0])
        elif len(toks) == 3:
            yield tuple(int(tok) for tok in toks)
        else:
            raise InvalidConfigurationError(f"cannot parse block line {raw!r}")


def load_configuration(path) -> Configuration:
    """Read a configuration from a text file (one block per line)."""
    path = Path(path)
    return validate_configuration(_parse_block_lines(path.read_text()), name=path.stem)


def load_builtin(name: str) -> Configuration:
    if name not in _BUILTIN_FILES:
        raise InvalidConfigurationError(
            f"unknown configuration {name!r}; built-ins: {', '.join(BUILTIN_NAMES)}"
        )
    text = resources.files("fanoplanes.data").joinpath(_BUILTIN_FILES[name]).read_text()
    return validate_configuration(_parse_block_lines(text), name=name)


def automorphism_order(config: Configuration) -> int:
    """Number of point permutations mapping the block set onto itself.

    Backtracks over images point by point; a block is checked as soon as
    its last point receives an image, which prunes hard enough that even
    n = 10 finishes in milliseconds.
    """
    n = config.n
    block_set = frozenset(config.blocks)
    finish_at: dict[int, list[Triple]] = {v: [] for v in range(1, n + 1)}
    for b in config.blocks:
        finish_at[max(b)].append(b)

    image = [0] * (n + 1)
    used = [False] * (n + 1)

    def rec(v: int) -> int:
        if v > n:
            return 1
        total = 0
        for w in range(1, n + 1):
            if used[w]:
                continue
            image[v] = w
            used[w] = True
            if all(
                tuple(sorted((image[a], image[b], image[c]))) in block_set
                for a, b, c in finish_at[v]
            ):
                total += rec(v + 1)
            used[w] = False
        return total

    return rec(1)


@dataclass(frozen=True)
class LabelingCensus:
    """The orbit of a configuration under point relabeling, fully analyzed."""

    configuration: Configuration
    automorphisms: int
    labelings: tuple[tuple[Triple, ...], ...]
    ordinary_counts: tuple[int, ...]
    profiles: tuple[tuple[int, int, int, int], ...]
    fragment_kinds: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.labelings)


def _unpack(code: int) -> Triple:
    return (code >> 8, (code >> 4) & 15, code & 15)


def enumerate_labelings(config: Configuration) -> LabelingCensus:
    """Sweep all n! permutations, deduplicate the images, analyze each.

    Each mapped block is packed into one small integer (4 bits per point,
    enough for n <= 12), so a labeling is hashed as a short int tuple.
    """
    n = config.n
    if n > MAX_POINTS:
        raise InvalidConfigurationError(f"n={n} exceeds the supported bound {MAX_POINTS}")
    idx = [(a - 1, b - 1, c - 1) for a, b, c in config.blocks]
    seen: set[tuple[int, ...]] = set()
    for p in permutations(range(1, n + 1)):
        row = []
        for i, j, k in idx:
            x = p[i]
            y = p[j]
            z = p[k]
            if x > y:
                x, y = y, x
            if y > z:
                y, z = z, y
            if x > y:
                x, y = y, x
            row.append((x << 8) | (y << 4) | z)
        row.sort()
        seen.add(tuple(row))

    labelings = tuple(sorted(tuple(_unpack(code) for code in row) for row in sorted(seen)))
    ordinary_counts = []
    profiles = []
    kinds = []
    for blocks in labelings:
        ordinary_counts.append(sum(1 for b in blocks if is_ordinary(b)))
        profiles.append(order_profile(blocks, n=n))
        kinds.append(classify_fragment(fragment(b for b in blocks if not is_ordinary(b))))

    return LabelingCensus(
        configuration=config,
        automorphisms=automorphism_order(config),
        labelings=labelings,
        ordinary_counts=tuple(ordinary_counts),
        profiles=tuple(profiles),
        fragment_kinds=tuple(kinds),
    )


def census_summary(census: LabelingCensus) -> dict:
    """Histograms over the census, with deterministic key ordering."""
    def hist(values):
        out: dict = {}
        for v in values:
            out[v] = out.get(v, 0) + 1
        return dict(sorted(out.items()))

    cfg = census.configuration
    return {
        "configuration": cfg.name,
        "points": cfg.n,
        "blocks": len(cfg.blocks),
        "labelings": len(census),
        "automorphisms": census.automorphisms,
        "labelings_times_automorphisms": len(census) * census.automorphisms,
        "point_factorial": math.factorial(cfg.n),
        "ordinary_count_histogram": hist(census.ordinary_counts),
        "profile_histogram": hist(census.profiles),
        "fragment_histogram": hist(census.fragment_kinds),
    }
