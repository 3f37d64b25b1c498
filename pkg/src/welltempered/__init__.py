"""Exact molds of numerical semigroups and their discretizations.

Molds are increasing real sequences, starting at zero and closed under
addition, whose rounded multiples yield numerical semigroups.  The
package provides exact arithmetic for the two number families involved
(integer combinations of the golden ratio's fractional part, and integer
log2 values), the mold constructions, threshold discretization with
certificates, semigroup verification, exhaustive feasibility searches,
and a byte-deterministic command-line interface.
"""

from .discretize import (
    AlphaInterval,
    Discretization,
    TruncationCertificate,
    alpha_sweep,
    discretize,
    interval_for_alpha,
    truncation_certificate,
)
from .exactnum import (
    CertifiedApprox,
    GoldenNumber,
    LogValue,
    cross_compare,
    exact_ceil,
    exact_floor,
    exact_frac,
    exact_is_integer,
    floor_alpha,
    rational_between,
)
from .molds import (
    FractalMold,
    GoldenFractalMold,
    HalvingStepMold,
    MetricMold,
    Mold,
    PerfectFractalMold,
    PeriodSpec,
    PropertyReport,
    SpacingCertificateError,
    check_even_filterable_mold,
    check_fractal,
    check_metric,
    check_mold_axioms,
    fractal_mold,
    generic_fractal_mold,
    golden_fractal_mold,
    golden_period_spec,
    metric_mold,
    mold_d,
    mold_q,
    perfect_fractal_mold,
    period_uniqueness_scan,
    uniqueness_certificate,
)
from .render import render_compact, render_decimal, render_exact
from .semigroups import (
    CollapseRecord,
    NumericalSemigroup,
    collapse,
    even_filterable_semigroup,
    from_discretization,
    genus_multiplicity,
    numerical_semigroup,
    verify_semigroup,
)
from .theorems import (
    EVEN_FILTERABLE_MULTIPLICITIES,
    FEASIBLE_MULTIPLICITIES,
    REFERENCE_MATCHES,
    WELL_TEMPERED_H,
    SimultaneousMatch,
    TailCertificate,
    UniquenessReport,
    h_uniqueness,
    multiplicity_census,
    even_filterable_census,
    simultaneous_search,
    tail_certificate,
)

__all__ = [
    "AlphaInterval",
    "CertifiedApprox",
    "CollapseRecord",
    "Discretization",
    "EVEN_FILTERABLE_MULTIPLICITIES",
    "FEASIBLE_MULTIPLICITIES",
    "FractalMold",
    "GoldenFractalMold",
    "GoldenNumber",
    "HalvingStepMold",
    "LogValue",
    "MetricMold",
    "Mold",
    "NumericalSemigroup",
    "PerfectFractalMold",
    "PeriodSpec",
    "PropertyReport",
    "REFERENCE_MATCHES",
    "SimultaneousMatch",
    "SpacingCertificateError",
    "TailCertificate",
    "TruncationCertificate",
    "UniquenessReport",
    "WELL_TEMPERED_H",
    "alpha_sweep",
    "check_even_filterable_mold",
    "check_fractal",
    "check_metric",
    "check_mold_axioms",
    "collapse",
    "cross_compare",
    "discretize",
    "even_filterable_census",
    "even_filterable_semigroup",
    "exact_ceil",
    "exact_floor",
    "exact_frac",
    "exact_is_integer",
    "floor_alpha",
    "fractal_mold",
    "from_discretization",
    "generic_fractal_mold",
    "genus_multiplicity",
    "golden_fractal_mold",
    "golden_period_spec",
    "h_uniqueness",
    "interval_for_alpha",
    "metric_mold",
    "mold_d",
    "mold_q",
    "multiplicity_census",
    "numerical_semigroup",
    "perfect_fractal_mold",
    "period_uniqueness_scan",
    "rational_between",
    "render_compact",
    "render_decimal",
    "render_exact",
    "simultaneous_search",
    "tail_certificate",
    "truncation_certificate",
    "uniqueness_certificate",
    "verify_semigroup",
]
