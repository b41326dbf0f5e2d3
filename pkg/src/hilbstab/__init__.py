"""Stable birationality of Hilbert schemes of points on surfaces, by arithmetic.

Given the intersection numbers of a polarized irregularity-zero
surface, this package computes the exact integer ranges of n for which
Hilb^n and Hilb^(n+d) are stably birational (conditionally on a
non-effective power threshold), closes those relations into an
eventually periodic partition with an honest certificate, and produces
the certified rational form of the class-counting series mod the
affine-line class.
"""

from .errors import (
    HilbstabError,
    HorizonError,
    MethodInapplicableError,
    ParityError,
    PeriodicityError,
    ValidationError,
)
from .surfaces import (
    BrauerSeveriData,
    ConicBundleData,
    LineBundleClass,
    PolarizedSurface,
    SurfaceData,
    blow_up,
    catalog,
    tensor_power,
)
from .intervals import (
    AssumptionReport,
    CoverageThreshold,
    CoverageVerdict,
    IntInterval,
    adjunction_genus,
    blowup_fill_start,
    blowup_interval,
    check_assumptions,
    conic_interval,
    conic_twist_bound,
    coverage_threshold,
    equivalence_interval,
    exact_half,
    first_uncovered,
    gap_count_formula,
    gap_coverage,
    gap_filled_by_blowup,
    gap_interval,
    infinitely_nonempty,
    merge_intervals,
    nonempty_witness,
    riemann_roch_h0,
)
from .equivalence import (
    ClassPartition,
    ConicPipelineResult,
    IndexResult,
    KodairaVerdict,
    Relation,
    brauer_severi_classes,
    conic_bundle_classes,
    conic_pipeline,
    del_pezzo_classes,
    index,
    interval_class_partition,
    kodaira_guard,
    partition,
    relations_from_intervals,
)
from .motivic import (
    ClassPoly,
    LabeledSeries,
    RationalSeries,
    goettsche_class,
    partitions,
    rationalize,
    reduce_mod_L,
    verify_rational,
    zeta_series,
)
from .cli import main, parse_surface_spec

__version__ = "0.1.0"

__all__ = [
    "HilbstabError",
    "HorizonError",
    "MethodInapplicableError",
    "ParityError",
    "PeriodicityError",
    "ValidationError",
    "BrauerSeveriData",
    "ConicBundleData",
    "LineBundleClass",
    "PolarizedSurface",
    "SurfaceData",
    "blow_up",
    "catalog",
    "tensor_power",
    "AssumptionReport",
    "CoverageThreshold",
    "CoverageVerdict",
    "IntInterval",
    "adjunction_genus",
    "blowup_fill_start",
    "blowup_interval",
    "check_assumptions",
    "conic_interval",
    "conic_twist_bound",
    "coverage_threshold",
    "equivalence_interval",
    "exact_half",
    "first_uncovered",
    "gap_count_formula",
    "gap_coverage",
    "gap_filled_by_blowup",
    "gap_interval",
    "infinitely_nonempty",
    "merge_intervals",
    "nonempty_witness",
    "riemann_roch_h0",
    "ClassPartition",
    "ConicPipelineResult",
    "IndexResult",
    "KodairaVerdict",
    "Relation",
    "brauer_severi_classes",
    "conic_bundle_classes",
    "conic_pipeline",
    "del_pezzo_classes",
    "index",
    "interval_class_partition",
    "kodaira_guard",
    "partition",
    "relations_from_intervals",
    "ClassPoly",
    "LabeledSeries",
    "RationalSeries",
    "goettsche_class",
    "partitions",
    "rationalize",
    "reduce_mod_L",
    "verify_rational",
    "zeta_series",
    "main",
    "parse_surface_spec",
    "__version__",
]
