"""kylesim: a simulation and verification lab for path-dependent
insider-trading equilibria.

The package simulates an order-driven market in which a single informed
trader drives the aggregate demand toward a private terminal target while
market makers price through a path functional of the demand.  Numerical
functional calculus on discretized paths, pricing-rule residual checkers,
bridge strategies, a reproducible Monte Carlo engine and a statistical
certification layer are the main components.
"""

__version__ = "0.1.0"

from .paths import TimeGrid, SamplePath, PathBundle
from .funcalc import DerivativeConfig

__all__ = [
    "TimeGrid",
    "SamplePath",
    "PathBundle",
    "DerivativeConfig",
    "__version__",
]
