"""Exhaustive generation of the 30 labeled Fano planes and their A/B split.

The search is a first-principles pair-coverage backtracker over the 35
canonical triples: it repeatedly completes the lexicographically smallest
uncovered point pair, so every plane is reached exactly once.  The result
is cross-checked elsewhere against an independent orbit enumeration.

The bundled listing (``data/polster_planes.txt``) fixes the tag A1..B15 of
every plane; it is reference data and is never consulted by the search.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import combinations

from .core import (
    FANO_POINTS,
    Plane,
    Triple,
    is_ordinary,
    parse_triple,
    validate_plane,
)

ALL_TAGS: tuple[str, ...] = tuple(f"{s}{i}" for s in "AB" for i in range(1, 16))


class FixtureError(ValueError):
    """Raised when the bundled listing is unreadable or inconsistent."""


def enumerate_planes() -> tuple[Plane, ...]:
    """All labeled Fano planes on {1..7}, sorted lexicographically.

    Depth-first search: take the smallest uncovered pair {a, b}, branch on
    the completing point z (the pairs {a, z} and {b, z} must be free), and
    recurse until all 21 pairs are covered.
    """
    all_pairs = list(combinations(FANO_POINTS, 2))
    found: list[Plane] = []

    def extend(lines: list[Triple], covered: set[tuple[int, int]]) -> None:
        if len(covered) == 21:
            found.append(tuple(sorted(lines)))
            return
        a, b = next(p for p in all_pairs if p not in covered)
        for z in FANO_POINTS:
            if z == a or z == b:
                continue
            az = (a, z) if a < z else (z, a)
            bz = (b, z) if b < z else (z, b)
            if az in covered or bz in covered:
                continue
            lines.append(tuple(sorted((a, b, z))))
            covered.update(((a, b), az, bz))
            extend(lines, covered)
            lines.pop()
            covered.difference_update(((a, b), az, bz))

    extend([], set())
    return tuple(sorted(found))


def common_lines(p: Plane, q: Plane) -> int:
    """Number of shared lines (0, 1 or 3 for distinct planes; 7 for p = q)."""
    return len(set(p) & set(q))


@dataclass(frozen=True)
class ListingEntry:
    tag: str
    plane: Plane
    starred: frozenset[Triple]


def load_reference_listing() -> tuple[ListingEntry, ...]:
    """Parse the bundled 30-plane listing.

    Format: one plane per line, ``TAG: abc abc abc abc abc abc abc`` with a
    trailing ``*`` marking ordinary lines; ``#`` starts a comment.  The star
    markup is cross-checked against :func:`is_ordinary` on load.
    """
    text = resources.files("fanoplanes.data").joinpath("polster_planes.txt").read_text()
    entries = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            tag, body = line.split(":", 1)
        except ValueError:
            raise FixtureError(f"listing line has no tag: {raw!r}") from None
        tag = tag.strip()
        triples = []
        starred = set()
        for tok in body.split():
            star = tok.endswith("*")
            t = parse_triple(tok.rstrip("*"))
            triples.append(t)
            if star:
                starred.add(t)
        plane = validate_plane(triples)
        if frozenset(starred) != frozenset(t for t in plane if is_ordinary(t)):
            raise FixtureError(f"star markup of {tag} disagrees with the a+b=c rule")
        entries.append(ListingEntry(tag, plane, frozenset(starred)))
    if tuple(sorted(e.tag for e in entries)) != tuple(sorted(ALL_TAGS)):
        raise FixtureError("listing does not carry exactly the tags A1..B15")
    return tuple(entries)


def match_fixture_labels(planes) -> dict[Plane, str]:
    """Match each enumerated plane to its listing tag (must be a bijection)."""
    by_plane = {e.plane: e.tag for e in load_reference_listing()}
    labels: dict[Plane, str] = {}
    for p in planes:
        if p not in by_plane:
            raise FixtureError(f"enumerated plane {p} is absent from the listing")
        labels[p] = by_plane.pop(p)
    if by_plane:
        raise FixtureError(f"listing planes never enumerated: {sorted(by_plane.values())}")
    return labels


def _tag_key(tag: str) -> tuple[str, int]:
    return (tag[0], int(tag[1:]))


@dataclass(frozen=True)
class Catalog:
    """The 30 planes with their tags, ordered A1..A15, B1..B15."""

    planes: tuple[Plane, ...]
    tags: tuple[str, ...]

    def plane(self, tag: str) -> Plane:
        return self.planes[self.tags.index(tag)]

    def tag_of(self, plane: Plane) -> str:
        return self.tags[self.planes.index(plane)]

    def items(self):
        return zip(self.tags, self.planes)

    def side(self, letter: str) -> tuple[Plane, ...]:
        return tuple(p for t, p in self.items() if t.startswith(letter))


@lru_cache(maxsize=1)
def build_catalog() -> Catalog:
    """Enumerate from scratch, then adopt the tags of the bundled listing."""
    planes = enumerate_planes()
    labels = match_fixture_labels(planes)
    ordered = sorted(planes, key=lambda p: _tag_key(labels[p]))
    return Catalog(planes=tuple(ordered), tags=tuple(labels[p] for p in ordered))


def planes_through(t: Triple, catalog: Catalog) -> tuple[str, ...]:
    """Tags of the (always six) planes containing the line ``t``."""
    return tuple(tag for tag, p in catalog.items() if t in p)


def compute_ab_partition(planes, seed: int = 0) -> tuple[frozenset[Plane], frozenset[Plane]]:
    """Split the 30 planes into the two 15-sets with pairwise one common line.

    Grow one side from ``planes[seed]`` by the share-exactly-one-line
    relation, then verify both sides are 15-cliques of that relation and
    that cross pairs share 0 or 3 lines.  The side containing the
    lexicographically smallest plane is returned first (it is the A side
    of the bundled listing).
    """
    planes = tuple(planes)
    if len(planes) != 30:
        raise ValueError(f"expected the full 30-plane catalog, got {len(planes)}")
    p0 = planes[seed]
    one = frozenset(q for q in planes if q == p0 or common_lines(p0, q) == 1)
    rest = frozenset(planes) - one
    for side in (one, rest):
        if len(side) != 15:
            raise ValueError(f"partition side has {len(side)} planes, expected 15")
        for p, q in combinations(sorted(side), 2):
            if common_lines(p, q) != 1:
                raise ValueError(f"same-side planes share {common_lines(p, q)} lines")
    for p in one:
        for q in rest:
            if common_lines(p, q) not in (0, 3):
                raise ValueError(f"cross-side planes share {common_lines(p, q)} lines")
    smallest = min(planes)
    return (one, rest) if smallest in one else (rest, one)
