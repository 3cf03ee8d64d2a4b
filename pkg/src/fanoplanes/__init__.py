"""fanoplanes: exhaustive enumeration and structural classification of the
30 labeled Fano planes, their line types and defective sub-geometries, and
the same pipeline for arbitrary small 3-uniform configurations."""

__version__ = "0.1.0"

from .core import (
    FANO_POINTS,
    TRIPLES7,
    TRIPLE_INDEX,
    InvalidPlaneError,
    OrderProfile,
    Plane,
    Triple,
    defective_lines,
    is_ordinary,
    order_profile,
    ordinary_lines,
    parse_triple,
    point_order,
    triple,
    triple_str,
    validate_plane,
)
from .enumeration import (
    ALL_TAGS,
    Catalog,
    FixtureError,
    build_catalog,
    common_lines,
    compute_ab_partition,
    enumerate_planes,
    load_reference_listing,
    match_fixture_labels,
    planes_through,
)
from .classification import (
    GREEK,
    NONEXISTENT_TYPES,
    PROFILE_TO_TYPE,
    TYPE_NAMES,
    TYPE_PAIR_ORDER,
    TYPE_PROFILES,
    UnknownProfileError,
    all_line_signatures,
    catalog_types,
    census_by_type,
    classify_plane,
    group_lines_by_signature,
    line_signature,
    special_observations,
    verify_nonexistence,
)
from .fragments import (
    FRAGMENT_KINDS,
    Fragment,
    classify_fragment,
    defective_fragment,
    fragment,
    ordinary_fragment,
    type_fragment_correspondence,
)
from .configs import (
    BUILTIN_NAMES,
    Configuration,
    InvalidConfigurationError,
    LabelingCensus,
    automorphism_order,
    census_summary,
    enumerate_labelings,
    load_builtin,
    load_configuration,
    validate_configuration,
)

__all__ = [
    "__version__",
    # core
    "FANO_POINTS", "TRIPLES7", "TRIPLE_INDEX", "InvalidPlaneError",
    "OrderProfile", "Plane", "Triple", "defective_lines", "is_ordinary",
    "order_profile", "ordinary_lines", "parse_triple", "point_order",
    "triple", "triple_str", "validate_plane",
    # enumeration
    "ALL_TAGS", "Catalog", "FixtureError", "build_catalog", "common_lines",
    "compute_ab_partition", "enumerate_planes", "load_reference_listing",
    "match_fixture_labels", "planes_through",
    # classification
    "GREEK", "NONEXISTENT_TYPES", "PROFILE_TO_TYPE", "TYPE_NAMES",
    "TYPE_PAIR_ORDER", "TYPE_PROFILES", "UnknownProfileError",
    "all_line_signatures", "catalog_types", "census_by_type",
    "classify_plane", "group_lines_by_signature", "line_signature",
    "special_observations", "verify_nonexistence",
    # fragments
    "FRAGMENT_KINDS", "Fragment", "classify_fragment", "defective_fragment",
    "fragment", "ordinary_fragment", "type_fragment_correspondence",
    # configs
    "BUILTIN_NAMES", "Configuration", "InvalidConfigurationError",
    "LabelingCensus", "automorphism_order", "census_summary",
    "enumerate_labelings", "load_builtin", "load_configuration",
    "validate_configuration",
]
