"""Point labels and Graphviz DOT export of a successor table."""

from __future__ import annotations

import numpy as np

from .dynamics import INF, ProjPoint
from .errors import BudgetExceeded, LabelModeUnavailable
from .field import DLOG_MAX_N, FieldCtx

EXPORT_MAX_NODES = 10 ** 4
LABEL_MODES = ("coeff", "exponent")
INF_LABEL = "∞"
# exponent labels use "0" for the generator's zeroth power, so zero gets quotes
ZERO_EXP_LABEL = "'0'"


def check_label_mode(ctx: FieldCtx, mode: str) -> None:
    if mode not in LABEL_MODES:
        raise ValueError(f"unknown label mode {mode!r}")
    if mode == "exponent" and ctx.n > DLOG_MAX_N:
        raise LabelModeUnavailable(f"exponent labels need n <= {DLOG_MAX_N}")


def point_label(x: ProjPoint, ctx: FieldCtx, mode: str = "coeff") -> str:
    check_label_mode(ctx, mode)
    if x is INF:
        return INF_LABEL
    if mode == "coeff":
        return x.to_str()
    if not x:
        return ZERO_EXP_LABEL
    return str(int(ctx.tables[1][x.index]))


def all_labels(ctx: FieldCtx, mode: str = "coeff") -> list[str]:
    """Labels of every point, in index order."""
    check_label_mode(ctx, mode)
    if mode == "exponent":
        log = ctx.tables[1]
        labels = [str(v) for v in log.tolist()]
        labels[0] = ZERO_EXP_LABEL
    else:
        n = ctx.n
        digits = np.arange(ctx.size)[:, None] // 3 ** np.arange(n)[None, :] % 3
        labels = [",".join(map(str, row)) for row in digits.tolist()]
    labels.append(INF_LABEL)
    return labels


def to_dot(table, labels: list[str], max_nodes: int = EXPORT_MAX_NODES) -> str:
    """``digraph theta { ... }`` with one edge per node, in index order."""
    if len(table) > max_nodes:
        raise BudgetExceeded(f"{len(table)} nodes exceed the export limit of {max_nodes}")
    lines = ["digraph theta {"]
    for i, j in enumerate(np.asarray(table).tolist()):
        lines.append(f'  "{labels[i]}" -> "{labels[j]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
