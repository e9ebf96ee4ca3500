"""relperc: all-terminal network reliability via exact polynomials,
percolation thresholds, and Monte Carlo simulation.

The exact route enumerates (or factors) small graphs; the percolation route
assesses large random graphs by comparing the operational-edge count against
the critical cutoff M_c = floor(p_c N) implied by a bond percolation
threshold; the simulation route cross-checks both.
"""

__version__ = "0.1.0"

from .assessment import (
    AssessmentConfig,
    critical_edge_count,
    le_cam_bound,
    node_voting_reliability,
    rel_c_heterogeneous,
    rel_c_homogeneous,
    rel_c_poisson_approx,
)
from .degree import (
    DivergenceError,
    Empirical,
    Moments,
    Poisson,
    PowerLawCutoff,
    TruncatedPowerLaw,
    Zeta,
    distribution_from_spec,
    excess_degree_pmf,
    moments,
    pmf,
    polylog,
    zeta,
)
from .exact import (
    EnumerationCapError,
    FCoefficients,
    f_coefficients,
    reliability_factoring,
    reliability_heterogeneous,
    reliability_homogeneous,
)
from .graph import (
    Graph,
    GraphError,
    ParsedEdgeList,
    complete_graph,
    component_sizes,
    degree_sequence,
    format_edge_list,
    is_connected,
    parse_edge_list,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .lifetime import (
    ConstantProfile,
    CrossingResult,
    ExponentialDecayProfile,
    FailureDensity,
    IntegralResult,
    NoCrossingError,
    ReliabilityCurve,
    evaluate_profile,
    failure_density,
    lifetime_integral,
    lifetime_threshold_crossing,
    reliability_curve,
    time_grid,
)
from .percolation import (
    FixedPointError,
    FixedPointResult,
    NoGiantComponentError,
    ThresholdReport,
    bond_threshold,
    solve_fixed_point,
    threshold_power_cutoff,
    threshold_truncated,
    threshold_zeta,
)
from .simulation import (
    RNG_ALGORITHM,
    PercolationSweep,
    SimulationResult,
    degrees_for_target_edges,
    estimate_reliability,
    generate_configuration_model,
    generate_inhomogeneous,
    inverse_percolation_sweep,
    sample_degrees,
    uniform_pair_probs,
)

__all__ = [
    "__version__",
    "KERNEL_BACKEND",
    "RNG_ALGORITHM",
    # graphs
    "Graph",
    "GraphError",
    "ParsedEdgeList",
    "complete_graph",
    "component_sizes",
    "degree_sequence",
    "format_edge_list",
    "is_connected",
    "parse_edge_list",
    # exact reliability
    "EnumerationCapError",
    "FCoefficients",
    "f_coefficients",
    "reliability_factoring",
    "reliability_heterogeneous",
    "reliability_homogeneous",
    # degree distributions
    "DivergenceError",
    "Empirical",
    "Moments",
    "Poisson",
    "PowerLawCutoff",
    "TruncatedPowerLaw",
    "Zeta",
    "distribution_from_spec",
    "excess_degree_pmf",
    "moments",
    "pmf",
    "polylog",
    "zeta",
    # percolation
    "FixedPointError",
    "FixedPointResult",
    "NoGiantComponentError",
    "ThresholdReport",
    "bond_threshold",
    "solve_fixed_point",
    "threshold_power_cutoff",
    "threshold_truncated",
    "threshold_zeta",
    # assessment
    "AssessmentConfig",
    "critical_edge_count",
    "le_cam_bound",
    "node_voting_reliability",
    "rel_c_heterogeneous",
    "rel_c_homogeneous",
    "rel_c_poisson_approx",
    # lifetime
    "ConstantProfile",
    "CrossingResult",
    "ExponentialDecayProfile",
    "FailureDensity",
    "IntegralResult",
    "NoCrossingError",
    "ReliabilityCurve",
    "evaluate_profile",
    "failure_density",
    "lifetime_integral",
    "lifetime_threshold_crossing",
    "reliability_curve",
    "time_grid",
    # simulation
    "PercolationSweep",
    "SimulationResult",
    "degrees_for_target_edges",
    "estimate_reliability",
    "generate_configuration_model",
    "generate_inhomogeneous",
    "inverse_percolation_sweep",
    "sample_degrees",
    "uniform_pair_probs",
]
