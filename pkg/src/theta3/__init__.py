"""Dynamics of x -> x + 1/x on the projective line over F_{3^n}.

Closed-form predictions of the iteration graph (:mod:`theta3.predictor`)
and a brute-force enumeration that checks them (:mod:`theta3.enumerator`).
"""

from .dynamics import INF, orbit, preimages, psi, s_map, sqrt_in_field, theta
from .enumerator import analyze, build_successor_table, verify
from .field import FieldCtx, FieldElement, ctx_new, discrete_log, find_generator, inv, mul, mult_order, power
from .poly3 import find_irreducible
from .predictor import GraphPrediction, divisor_table, predict

__version__ = "0.1.0"

__all__ = [
    "INF", "orbit", "preimages", "psi", "s_map", "sqrt_in_field", "theta",
    "analyze", "build_successor_table", "verify",
    "FieldCtx", "FieldElement", "ctx_new", "discrete_log", "find_generator", "inv", "mul", "mult_order", "power",
    "find_irreducible", "GraphPrediction", "divisor_table", "predict",
]
