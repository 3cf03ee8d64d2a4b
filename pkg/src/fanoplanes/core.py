"""Triples, the ordinary/defective line test, and Fano plane validation.

Points are plain integers.  A line is a canonical ``Triple`` (ascending
3-tuple) and a labeled Fano plane is a sorted 7-tuple of such triples on
the points 1..7.  Everything here is a pure function of immutable values.
"""

from __future__ import annotations

from itertools import combinations

Triple = tuple[int, int, int]
Plane = tuple[Triple, ...]
OrderProfile = tuple[int, int, int, int]

#: Points of a labeled Fano plane.
FANO_POINTS: tuple[int, ...] = tuple(range(1, 8))

#: The 35 canonical triples on {1..7}, in lexicographic order.
TRIPLES7: tuple[Triple, ...] = tuple(combinations(FANO_POINTS, 3))

#: Lexicographic index of each of the 35 triples (123 -> 0, ..., 567 -> 34).
TRIPLE_INDEX: dict[Triple, int] = {t: i for i, t in enumerate(TRIPLES7)}


class InvalidPlaneError(ValueError):
    """Raised when a set of triples violates the Steiner axioms."""


def triple(a: int, b: int, c: int) -> Triple:
    """Canonical (ascending) triple of three distinct points."""
    if len({a, b, c}) != 3:
        raise ValueError(f"triple needs three distinct points, got {(a, b, c)}")
    return tuple(sorted((a, b, c)))  # type: ignore[return-value]


def parse_triple(token: str) -> Triple:
    """Parse the compact shorthand ``'abc'`` used for single-digit points."""
    if len(token) != 3 or not token.isdigit():
        raise ValueError(f"expected a 3-digit triple token, got {token!r}")
    a, b, c = (int(ch) for ch in token)
    if not a < b < c:
        raise ValueError(f"triple token must be strictly ascending, got {token!r}")
    if a < 1:
        raise ValueError(f"points are 1-based, got {token!r}")
    return (a, b, c)


def triple_str(t: Triple) -> str:
    """Compact ``'abc'`` form (single-digit points only)."""
    if t[2] > 9:
        raise ValueError(f"compact form needs single-digit points, got {t}")
    return "".join(map(str, t))


def is_ordinary(t: Triple) -> bool:
    """True iff the two smaller points sum to the largest (a + b = c)."""
    return t[0] + t[1] == t[2]


def ordinary_lines(lines: Plane) -> tuple[Triple, ...]:
    return tuple(t for t in lines if is_ordinary(t))


def defective_lines(lines: Plane) -> tuple[Triple, ...]:
    return tuple(t for t in lines if not is_ordinary(t))


def validate_plane(lines) -> Plane:
    """Check the Steiner axioms and return the plane in canonical form.

    A valid labeled Fano plane has exactly 7 lines on the points 1..7 and
    covers every unordered pair of points exactly once (which forces each
    point onto exactly 3 lines and any two lines to meet in one point).

    Raises:
        InvalidPlaneError: describing the first violated axiom.
    """
    canon = tuple(sorted(triple(*t) for t in lines))
    if len(canon) != 7:
        raise InvalidPlaneError(f"expected 7 distinct lines, got {len(canon)}")
    for t in canon:
        if t[0] < 1 or t[2] > 7:
            raise InvalidPlaneError(f"line {t} uses points outside 1..7")

    coverage: dict[tuple[int, int], int] = {}
    for t in canon:
        for pair in combinations(t, 2):
            coverage[pair] = coverage.get(pair, 0) + 1
            if coverage[pair] > 1:
                times = sum(1 for u in canon if pair[0] in u and pair[1] in u)
                raise InvalidPlaneError(f"pair {set(pair)} covered {times} times")
    for pair in combinations(FANO_POINTS, 2):
        if pair not in coverage:
            raise InvalidPlaneError(f"pair {set(pair)} not covered by any line")

    # 21 pairs covered once by 7 triples forces 3 lines per point; tripwire.
    for x in FANO_POINTS:
        deg = sum(1 for t in canon if x in t)
        if deg != 3:
            raise InvalidPlaneError(f"point {x} lies on {deg} lines, expected 3")
    return canon


def point_order(plane: Plane, x: int) -> int:
    """Number of defective lines of ``plane`` through the point ``x``."""
    return sum(1 for t in plane if x in t and not is_ordinary(t))


def order_profile(lines: Plane, n: int = 7) -> OrderProfile:
    """Counts (n0, n1, n2, n3) of points of order 0..3 over the points 1..n.

    Works for any block list in which every point lies on at most 3 lines,
    so the generic configuration engine reuses it with its own ``n``.
    """
    orders = [0] * (n + 1)
    for t in lines:
        if not is_ordinary(t):
            for x in t:
                orders[x] += 1
    counts = [0, 0, 0, 0]
    for x in range(1, n + 1):
        counts[orders[x]] += 1
    return tuple(counts)  # type: ignore[return-value]
