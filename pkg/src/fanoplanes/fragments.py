"""Sub-geometries formed by a plane's defective (or ordinary) lines.

A fragment keeps the chosen lines together with the incidence degrees of
the points still lying on at least one of them.  For sub-geometries of a
single Fano plane the pair (line count, sorted degree multiset) is a
complete isomorphism invariant, so recognition is a table lookup; anything
outside the named table is reported as ``unnamed(...)`` rather than an
error, which is what the generic configuration engine relies on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Plane, Triple, defective_lines, ordinary_lines
from .enumeration import Catalog
from .classification import classify_plane


@dataclass(frozen=True)
class Fragment:
    lines: tuple[Triple, ...]
    degrees: tuple[int, ...]  # ascending, one entry per incident point


#: (line count, degree multiset) -> traditional name.  star3 and
#: single-line carry no traditional name; the labels are ours.
KIND_SIGNATURES: dict[tuple[int, tuple[int, ...]], str] = {
    (0, ()): "empty",
    (1, (1, 1, 1)): "single-line",
    (3, (1, 1, 1, 2, 2, 2)): "triangle",
    (3, (1, 1, 1, 1, 1, 1, 3)): "star3",
    (4, (2, 2, 2, 2, 2, 2)): "pasch",
    (4, (1, 1, 1, 2, 2, 2, 3)): "sail",
    (5, (1, 2, 2, 2, 2, 3, 3)): "mia",
    (6, (2, 2, 2, 3, 3, 3, 3)): "semihead",
    (7, (3, 3, 3, 3, 3, 3, 3)): "fano",
}

FRAGMENT_KINDS: tuple[str, ...] = (
    "empty", "single-line", "triangle", "star3", "pasch",
    "sail", "mia", "semihead", "fano",
)


def fragment(lines) -> Fragment:
    """Build a fragment from any collection of canonical triples."""
    lines = tuple(sorted(lines))
    degree: dict[int, int] = {}
    for t in lines:
        for x in t:
            degree[x] = degree.get(x, 0) + 1
    return Fragment(lines=lines, degrees=tuple(sorted(degree.values())))


def defective_fragment(p: Plane) -> Fragment:
    return fragment(defective_lines(p))


def ordinary_fragment(p: Plane) -> Fragment:
    return fragment(ordinary_lines(p))


def classify_fragment(f: Fragment) -> str:
    """Named kind of the fragment, or ``unnamed(k:ddd...)`` outside the table.

    The unnamed form concatenates the sorted degrees (each is 1..3), so it
    stays a single comma-free token in every output format.
    """
    key = (len(f.lines), f.degrees)
    try:
        return KIND_SIGNATURES[key]
    except KeyError:
        degrees = "".join(map(str, f.degrees))
        return f"unnamed({len(f.lines)}:{degrees})"


def type_fragment_correspondence(catalog: Catalog) -> dict[str, str]:
    """plane type -> kind of its defective fragment, over the whole catalog.

    The kind is constant on each type (the defective fragment's degree
    multiset is exactly the multiset of nonzero point orders); a
    non-constant type would mean a classification bug.
    """
    seen: dict[str, str] = {}
    for tag, p in catalog.items():
        ty = classify_plane(p)
        kind = classify_fragment(defective_fragment(p))
        if ty in seen and seen[ty] != kind:
            raise AssertionError(
                f"type {ty} yields both {seen[ty]} and {kind} (plane {tag})"
            )
        seen[ty] = kind
    return dict(sorted(seen.items()))
