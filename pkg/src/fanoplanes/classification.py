"""Plane types, censuses, and line-type signatures.

A plane's type is determined by its order profile alone; the vocabulary is
the fixed ten-name table below (two of which, alpha and gamma, admit no
labeled Fano plane at all and are kept only so censuses can report their
zero counts).  Lines are classified by the multiset of types of the six
planes through them.
"""

from __future__ import annotations

from .core import OrderProfile, Plane, TRIPLES7, Triple, is_ordinary, order_profile
from .enumeration import Catalog, planes_through

#: Census/table column order.
TYPE_NAMES: tuple[str, ...] = (
    "alpha", "beta", "gamma", "delta1", "delta2",
    "alphaP", "betaP", "gammaP", "delta1P", "delta2P",
)

#: Complementary-pair order used by the profile table.
TYPE_PAIR_ORDER: tuple[str, ...] = (
    "alpha", "alphaP", "beta", "betaP", "gamma", "gammaP",
    "delta1", "delta1P", "delta2", "delta2P",
)

#: Unicode display names (the trailing P transliterates a prime).
GREEK: dict[str, str] = {
    "alpha": "α", "beta": "β", "gamma": "γ",
    "delta1": "δ₁", "delta2": "δ₂",
    "alphaP": "α′", "betaP": "β′", "gammaP": "γ′",
    "delta1P": "δ₁′", "delta2P": "δ₂′",
}

#: type -> (n0, n1, n2, n3).  Primed profiles are the reversals of their
#: unprimed partners.
TYPE_PROFILES: dict[str, OrderProfile] = {
    "alpha": (7, 0, 0, 0),
    "alphaP": (0, 0, 0, 7),
    "beta": (4, 3, 0, 0),
    "betaP": (0, 0, 3, 4),
    "gamma": (2, 4, 1, 0),
    "gammaP": (0, 1, 4, 2),
    "delta1": (1, 3, 3, 0),
    "delta1P": (0, 3, 3, 1),
    "delta2": (0, 6, 0, 1),
    "delta2P": (1, 0, 6, 0),
}

PROFILE_TO_TYPE: dict[OrderProfile, str] = {v: k for k, v in TYPE_PROFILES.items()}

#: Types with no realizing labeled Fano plane.
NONEXISTENT_TYPES: frozenset[str] = frozenset({"alpha", "gamma"})

LineSignature = tuple[int, int, int, int, int, int, int, int, int, int]


class UnknownProfileError(ValueError):
    """Raised when a profile falls outside the ten-name table (a bug tripwire)."""


def classify_plane(p: Plane) -> str:
    profile = order_profile(p)
    try:
        return PROFILE_TO_TYPE[profile]
    except KeyError:
        raise UnknownProfileError(f"profile {profile} matches no known plane type") from None


def catalog_types(catalog: Catalog) -> dict[str, str]:
    """tag -> type name for every plane of the catalog."""
    return {tag: classify_plane(p) for tag, p in catalog.items()}


def verify_nonexistence(catalog: Catalog) -> dict:
    """Confirm by exhaustion that no plane has 7 or 5 ordinary lines.

    Returns the observed distribution of ordinary-line counts (a plane of
    type alpha would show count 7, one of type gamma count 5; neither occurs).
    """
    histogram: dict[int, int] = {}
    types = catalog_types(catalog)
    for p in catalog.planes:
        k = sum(1 for t in p if is_ordinary(t))
        histogram[k] = histogram.get(k, 0) + 1
    return {
        "alpha_planes": sum(1 for ty in types.values() if ty == "alpha"),
        "gamma_planes": sum(1 for ty in types.values() if ty == "gamma"),
        "ordinary_count_histogram": dict(sorted(histogram.items())),
    }


def census_by_type(catalog: Catalog, side: str = "total") -> dict[str, int]:
    """Counts per type for side ``'A'``, ``'B'`` or ``'total'`` (all ten names)."""
    if side not in ("A", "B", "total"):
        raise ValueError(f"side must be 'A', 'B' or 'total', got {side!r}")
    counts = dict.fromkeys(TYPE_NAMES, 0)
    for tag, p in catalog.items():
        if side != "total" and not tag.startswith(side):
            continue
        counts[classify_plane(p)] += 1
    return counts


def line_signature(t: Triple, catalog: Catalog) -> LineSignature:
    """Type counts, in column order, of the six planes through ``t``."""
    counts = dict.fromkeys(TYPE_NAMES, 0)
    for tag in planes_through(t, catalog):
        counts[classify_plane(catalog.plane(tag))] += 1
    return tuple(counts[name] for name in TYPE_NAMES)  # type: ignore[return-value]


def all_line_signatures(catalog: Catalog) -> dict[Triple, LineSignature]:
    """Signature of every one of the 35 lines, computed in one catalog sweep."""
    types = {tag: classify_plane(p) for tag, p in catalog.items()}
    col = {name: i for i, name in enumerate(TYPE_NAMES)}
    sigs = {t: [0] * len(TYPE_NAMES) for t in TRIPLES7}
    for tag, p in catalog.items():
        for t in p:
            sigs[t][col[types[tag]]] += 1
    return {t: tuple(v) for t, v in sigs.items()}  # type: ignore[return-value]


def group_lines_by_signature(catalog: Catalog) -> tuple[tuple[tuple[Triple, ...], ...], tuple[tuple[Triple, ...], ...]]:
    """Partition the 35 lines into signature classes.

    Returns (ordinary groups, defective groups); each group is sorted and
    the groups are ordered by their lexicographically smallest member.
    """
    sigs = all_line_signatures(catalog)
    buckets: dict[tuple[bool, LineSignature], list[Triple]] = {}
    for t in TRIPLES7:
        buckets.setdefault((is_ordinary(t), sigs[t]), []).append(t)
    groups = sorted((tuple(sorted(g)) for g in buckets.values()), key=lambda g: g[0])
    ordinary = tuple(g for g in groups if is_ordinary(g[0]))
    defective = tuple(g for g in groups if not is_ordinary(g[0]))
    return ordinary, defective


def special_observations(catalog: Catalog) -> dict:
    """The distinguished small facts of the classification.

    Computes (i) the defective lines whose signature features a type-beta
    plane and (ii) per side, the planes devoid of ordinary lines (type
    alphaP), plus the signature-class counts.
    """
    sigs = all_line_signatures(catalog)
    beta_col = TYPE_NAMES.index("beta")
    types = catalog_types(catalog)
    ordinary_groups, defective_groups = group_lines_by_signature(catalog)
    return {
        "beta_defective_lines": tuple(
            t for t in TRIPLES7 if not is_ordinary(t) and sigs[t][beta_col] >= 1
        ),
        "planes_without_ordinary_lines": {
            side: tuple(tag for tag in catalog.tags
                        if tag.startswith(side) and types[tag] == "alphaP")
            for side in ("A", "B")
        },
        "ordinary_kind_count": len(ordinary_groups),
        "defective_kind_count": len(defective_groups),
    }
