"""Monogenizations of quartic orders Z[xi] via cubic and quartic Thue equations."""

from .estimator import MonogenizationEnumerator
from .forms import QuarticGenerator, ReducibleGeneratorError, cubic_resolvent, quadratic_pair
from .monogenize import PipelineConfig, PipelineReport, enumerate_monogenizations
from .oracle import oracle_monogenizers, oracle_thue
from .report import from_json, to_json
from .thue import SolutionSet, ThueProblem, solve_bounded

__all__ = [
    "MonogenizationEnumerator",
    "PipelineConfig",
    "PipelineReport",
    "QuarticGenerator",
    "ReducibleGeneratorError",
    "SolutionSet",
    "ThueProblem",
    "cubic_resolvent",
    "enumerate_monogenizations",
    "from_json",
    "oracle_monogenizers",
    "oracle_thue",
    "quadratic_pair",
    "solve_bounded",
    "to_json",
]
