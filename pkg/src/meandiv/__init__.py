"""Mean divergence measures, Csiszar f-divergences and numerical audits of their inequalities."""

from .chains import ChainReport, ChainSpec, ChainTerm, Xi, builtin_chains, evaluate_chain, parse_chains, sweep_chains
from .csiszar import Generator, audit_generator, csiszar_divergence, dragomir_upper_bound, xi_gap
from .distributions import (
    Distribution,
    binary_symmetric_pair,
    make_distribution,
    pair_sweep,
    random_distribution,
    random_pair,
)
from .divergences import MeasureId, divergence, generator_of, parse_measure, xi_closed_form
from .errors import (
    ArityError,
    ConfigurationError,
    DomainError,
    MeanDivError,
    NormalizationError,
    NumericError,
    PositivityError,
    SingularityError,
    UnsupportedError,
)
from .inequalities import ExtremumReport, crossing_scan, curvature_ratio, ratio_extremum, sigma_sg_i
from .means import MeanKind, MeanPair, classical_mean, mean_difference, power_mean
from .refinement import RefinementId, refinement_divergence, refinement_generator
from .tables import OutputTable, table1, table2

__version__ = "0.1.0"
