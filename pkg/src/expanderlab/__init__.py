"""Threshold color dynamics, spectral expansion, and monopoly construction
on graphs."""

__version__ = "0.1.0"

from .graph import Graph, mask_of, nodes_of, iter_nodes  # noqa: F401
from .dynamics import (RThreshold, AlphaThreshold, parse_rule, step, run,  # noqa: F401
                       ball_coloring, RunResult)
from .spectral import normalized_spectrum, sigma, gamma, SpectralProfile  # noqa: F401
