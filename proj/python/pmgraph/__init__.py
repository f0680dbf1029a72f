"""Invariants of polarized metrized graphs.

Exact mode returns ``fractions.Fraction`` values, machine mode ``float`` and
bigfloat mode ``decimal.Decimal`` carrying the requested digits.
"""

from decimal import Decimal
from fractions import Fraction

from . import _core
from ._core import Graph, NumericError, ParseError, PmgError, ValidationError

__all__ = [
    "Graph",
    "PmgError",
    "ValidationError",
    "ParseError",
    "NumericError",
    "ladder",
    "complete_graph",
    "bouquet",
    "circle",
    "example3",
    "compute",
    "laplacian",
    "pseudo_inverse",
    "tau",
    "INVARIANTS",
]

INVARIANTS = ("tau", "theta", "phi", "lambda", "epsilon", "z")


def _length(x):
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _digits(mode, digits):
    if digits is not None:
        return digits
    return 30 if mode == "bigfloat" else 17


def _convert(mode):
    if mode == "exact":
        return Fraction
    if mode == "machine":
        return float
    return Decimal


def ladder(n, a=1, b=1):
    return _core.ladder(n, _length(a), _length(b))


def complete_graph(n, lengths, q=None):
    if not isinstance(lengths, (list, tuple)):
        lengths = [lengths] * (n * (n - 1) // 2)
    return _core.complete_graph(n, [_length(x) for x in lengths], list(q or []))


def bouquet(loops, q=0):
    return _core.bouquet([_length(x) for x in loops], q)


def circle(length=1):
    return _core.circle(_length(length))


def example3(a=1, b=1, c=1, d=1, e=1):
    return _core.example3([_length(x) for x in (a, b, c, d, e)])


def compute(graph, mode="exact", digits=None, loop_strategy="analytic", inverse="minus-j", measures=False,
            strict=False):
    """Invariant report as a dict: ``length``, the six invariants, ``ratios``,
    ``g``, ``gbar``, ``warnings`` and (optionally) ``measures``."""
    raw = _core.compute(graph, mode, _digits(mode, digits), loop_strategy, inverse, measures, strict)
    conv = _convert(mode)
    out = {name: conv(value) for name, value in raw["values"].items()}
    out["ratios"] = {name: conv(value) for name, value in raw["ratios"].items()}
    out["g"] = raw["g"]
    out["gbar"] = raw["gbar"]
    out["mode"] = raw["mode"]
    out["warnings"] = list(raw["warnings"])
    if measures:
        out["measures"] = {
            kind: {
                "point_masses": {p: conv(m) for p, m in entry["point_masses"].items()},
                "edge_densities": [(u, v, Fraction(length), conv(d)) for u, v, length, d in entry["edge_densities"]],
            }
            for kind, entry in raw["measures"].items()
        }
    return out


def _matrices(graph, mode, digits, inverse):
    ordering, lap, pinv = _core.matrices(graph, mode, _digits(mode, digits), inverse)
    conv = _convert(mode)
    return ordering, [[conv(x) for x in row] for row in lap], [[conv(x) for x in row] for row in pinv]


def laplacian(graph, mode="exact", digits=None):
    """Discrete Laplacian of an adequate graph as a list of rows."""
    return _matrices(graph, mode, digits, "minus-j")[1]


def pseudo_inverse(graph, mode="exact", digits=None, inverse="minus-j"):
    return _matrices(graph, mode, digits, inverse)[2]


def tau(graph, mode="exact", digits=None):
    """Tau constant of any metrized graph; polarization is ignored."""
    return _convert(mode)(_core.tau(graph, mode, _digits(mode, digits)))
