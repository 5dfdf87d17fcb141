"""Extremal graph toolkit for theta-free, non-bipartite graphs."""

from .graph import Graph, build
from .graph6 import decode, encode
from .theta import ThetaPattern, contains_theta, is_theta_free

__all__ = ["Graph", "build", "decode", "encode", "ThetaPattern", "contains_theta", "is_theta_free"]
__version__ = "0.1.0"
