"""Penrose kite/dart substitution tilings with exact cyclotomic coordinates.

The package generates half-tile patches by deflation, extracts the separated
net of tile reference points, and measures how far point counts in aligned
squares drift from a common density, certifying the hypotheses of the
biLipschitz equivalence criterion for the net.
"""

from .discrepancy import (
    DensityModel,
    DiscrepancyReport,
    RatioTrace,
    RegionCounts,
    build_report,
    check_prop21,
    check_prop22,
    check_prop23,
    compute_rho,
    dart_area,
    decay_bound,
    default_density,
    e_rho,
    estimate_E_rho,
    iterate_ratio_map,
    kite_area,
    partial_product,
    ratio_bound,
    ratio_map,
    region_analysis,
    report_to_csv,
    report_to_json,
)
from .golden import (
    CycloPoint,
    GoldenNum,
    INV_PHI,
    PHI,
    PHI_FLOAT,
    cross_s72,
    dot,
    embed,
    golden_compare,
    orientation,
    squared_length,
)
from .net import (
    COVERING_RADIUS_BOUND,
    Net,
    NetPoint,
    count_in_square,
    export_net,
    extract_net,
    load_net,
)
from .render import render_svg
from .tiling import (
    HALF_DART,
    HALF_KITE,
    LEFT,
    PENROSE_SUBSTITUTION,
    RIGHT,
    HalfTile,
    Patch,
    Square,
    SubstitutionRule,
    TileCapError,
    TileCensus,
    census,
    deflate_patch,
    deflate_tile,
    generate_patch_covering,
    generic_substitution_counts,
    load_patch,
    save_patch,
    substitution_counts,
)

__all__ = [
    "COVERING_RADIUS_BOUND",
    "CycloPoint",
    "DensityModel",
    "DiscrepancyReport",
    "GoldenNum",
    "HALF_DART",
    "HALF_KITE",
    "HalfTile",
    "INV_PHI",
    "LEFT",
    "Net",
    "NetPoint",
    "PENROSE_SUBSTITUTION",
    "PHI",
    "PHI_FLOAT",
    "Patch",
    "RIGHT",
    "RatioTrace",
    "RegionCounts",
    "Square",
    "SubstitutionRule",
    "TileCapError",
    "TileCensus",
    "build_report",
    "census",
    "check_prop21",
    "check_prop22",
    "check_prop23",
    "compute_rho",
    "count_in_square",
    "cross_s72",
    "dart_area",
    "decay_bound",
    "default_density",
    "deflate_patch",
    "deflate_tile",
    "dot",
    "e_rho",
    "embed",
    "estimate_E_rho",
    "export_net",
    "extract_net",
    "generate_patch_covering",
    "generic_substitution_counts",
    "golden_compare",
    "iterate_ratio_map",
    "kite_area",
    "load_net",
    "load_patch",
    "orientation",
    "partial_product",
    "ratio_bound",
    "ratio_map",
    "region_analysis",
    "render_svg",
    "report_to_csv",
    "report_to_json",
    "save_patch",
    "squared_length",
    "substitution_counts",
]

__version__ = "0.1.0"
