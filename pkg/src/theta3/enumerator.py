"""Brute-force construction and analysis of the theta graph.

Points are addressed by their index (finite elements by base-3 coefficient
value, infinity as 3^n), and the graph is a flat successor array
``table[i] = index(theta(point i))``. Analysis works on the array alone and
never consults the closed-form predictions, so it can serve as their oracle.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import poly3
from .dynamics import decode, encode, orbit, preimages, psi
from .errors import BudgetExceeded
from .field import DLOG_MAX_N, FieldCtx, build_log_tables, ctx_new, mult_order, order_two_adic
from .numtheory import ord_mod
from .predictor import GraphPrediction, predict

MAX_POINTS = 3 ** 16 + 1
REPORT_BOUND = 10 ** 6
VERIFY_MAX_POINTS = 3 ** 11 + 1
CHUNK = 1 << 18

# indices of the special points, valid for every n
IDX_ZERO, IDX_ONE, IDX_MINUS_ONE = 0, 1, 2


def index_dtype(n: int):
    return np.int32 if 3 ** n + 1 < 2 ** 31 else np.int64


def _add_indices(a: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    """Index of the field sum, digit by digit in base 3."""
    a = a.astype(np.int64)
    b = b.astype(np.int64)
    out = np.zeros_like(a)
    w = 1
    for _ in range(n):
        out += (a % 3 + b % 3) % 3 * w
        a //= 3
        b //= 3
        w *= 3
    return out


def build_successor_table(ctx: FieldCtx, workers: int = 1, max_points: int = MAX_POINTS) -> np.ndarray:
    """Successor array of theta over all 3^n + 1 points.

    Inverses come from exponent/logarithm tables; the finite index range is
    split into chunks that can be filled by ``workers`` threads.
    """
    q = ctx.size
    if q + 1 > max_points:
        raise BudgetExceeded(f"3^{ctx.n} + 1 points exceed the enumeration limit of {max_points}")
    exp, log = ctx.tables if ctx.n <= DLOG_MAX_N else build_log_tables(ctx, ctx.generator)
    q1 = ctx.group_order
    table = np.empty(q + 1, dtype=index_dtype(ctx.n))
    table[IDX_ZERO] = q
    table[q] = q

    def fill(lo: int, hi: int) -> None:
        idx = np.arange(lo, hi, dtype=np.int64)
        inverse = exp[(-log[idx]) % q1]
        table[lo:hi] = _add_indices(idx, inverse, ctx.n)

    chunks = [(lo, min(lo + CHUNK, q)) for lo in range(1, q, CHUNK)]
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            list(pool.map(lambda c: fill(*c), chunks))
    else:
        for c in chunks:
            fill(*c)
    return table


@dataclass
class Structure:
    """Per-node arrays describing a functional graph."""

    cyclic: np.ndarray  # bool
    cycle_label: np.ndarray  # min index on the node's cycle (cyclic nodes), else -1
    root: np.ndarray  # cyclic node the tail runs into
    depth: np.ndarray  # steps to reach the cycle (level in the tree)
    children: np.ndarray  # number of non-cyclic predecessors


def classify(table: np.ndarray) -> Structure:
    """Cycle membership, roots, depths and tree child counts of a successor array."""
    table = np.asarray(table, dtype=np.int64)
    size = len(table)
    if table.min() < 0 or table.max() >= size:
        raise ValueError("successor table points outside the vertex set")
    # peel vertices of in-degree zero until only cycles remain
    indeg = np.bincount(table, minlength=size)
    cyclic = np.ones(size, dtype=bool)
    frontier = np.flatnonzero(indeg == 0)
    while frontier.size:
        cyclic[frontier] = False
        succ, cnt = np.unique(table[frontier], return_counts=True)
        indeg[succ] -= cnt
        frontier = succ[indeg[succ] == 0]

    # label each cycle by its smallest index, via pointer doubling
    nodes = np.flatnonzero(cyclic)
    pos = np.full(size, -1, dtype=np.int64)
    pos[nodes] = np.arange(nodes.size)
    f = pos[table[nodes]]
    lab = nodes.copy()
    span = 1
    while span < nodes.size:
        lab = np.minimum(lab, lab[f])
        f = f[f]
        span *= 2
    cycle_label = np.full(size, -1, dtype=np.int64)
    cycle_label[nodes] = lab

    root = np.arange(size, dtype=np.int64)
    depth = np.zeros(size, dtype=np.int64)
    active = np.flatnonzero(~cyclic)
    while active.size:
        root[active] = table[root[active]]
        depth[active] += 1
        active = active[~cyclic[root[active]]]

    children = np.bincount(table[~cyclic], minlength=size)
    return Structure(cyclic, cycle_label, root, depth, children)


def classify_by_traversal(table) -> tuple[list, list]:
    """Reference classification by three-colour traversal, in plain Python.

    Returns ``(cycle_length, tail_length)`` per node, with cycle_length the
    length of the cycle the node eventually enters. Linear time but slow;
    meant for cross-checking :func:`classify` on small graphs.
    """
    table = [int(v) for v in table]
    size = len(table)
    WHITE, GREY, BLACK = 0, 1, 2
    color = [WHITE] * size
    cyc_len = [0] * size
    tail = [0] * size
    for start in range(size):
        if color[start] != WHITE:
            continue
        path = []
        v = start
        while color[v] == WHITE:
            color[v] = GREY
            path.append(v)
            v = table[v]
        if color[v] == GREY:
            # closed a new cycle inside the current path
            k = path.index(v)
            cycle = path[k:]
            for u in cycle:
                cyc_len[u] = len(cycle)
                tail[u] = 0
                color[u] = BLACK
            path = path[:k]
        for u in reversed(path):
            w = table[u]
            cyc_len[u] = cyc_len[w]
            tail[u] = tail[w] + 1
            color[u] = BLACK
    return cyc_len, tail


@dataclass
class GraphReport:
    n: int
    modulus: Optional[tuple]
    cycle_census: dict
    component_count: int
    tree_depth: int
    level_populations: Optional[list]
    root_profiles: dict  # level-count tuple -> number of roots with it
    parity_report: dict
    cycle_reps: list  # (min index, length) per cycle, ascending
    component: Optional[np.ndarray] = None
    tail_length: Optional[np.ndarray] = None
    level: Optional[np.ndarray] = None
    children: Optional[np.ndarray] = None

    @property
    def point_count(self) -> int:
        return 3 ** self.n + 1

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "modulus": poly3.format_coeffs(self.modulus) if self.modulus is not None else None,
            "cycle_census": [[k, v] for k, v in sorted(self.cycle_census.items())],
            "component_count": self.component_count,
            "tree_depth": self.tree_depth,
            "level_populations": self.level_populations,
            "parity_report": self.parity_report,
        }


def _degree_of(size: int) -> int:
    n, q = 0, 1
    while q + 1 < size:
        q *= 3
        n += 1
    if q + 1 != size:
        raise ValueError(f"table of length {size} is not 3^n + 1")
    return n


def analyze(table: np.ndarray, modulus: Optional[tuple] = None, report_bound: int = REPORT_BOUND,
            structure: Optional[Structure] = None) -> GraphReport:
    size = len(table)
    n = _degree_of(size)
    st = structure if structure is not None else classify(table)
    inf_idx = size - 1

    labels, lengths = np.unique(st.cycle_label[st.cyclic], return_counts=True)
    census = dict(sorted(Counter(lengths.tolist()).items()))
    special = {inf_idx, IDX_ONE, IDX_MINUS_ONE}
    ordinary = [int(L) for lab, L in zip(labels.tolist(), lengths.tolist()) if lab not in special]
    # cycle {1, -1} is labelled 1; the cycle of infinity by infinity itself
    parity = {
        "cycle_lengths": [[k, v] for k, v in sorted(Counter(ordinary).items())],
        "odd": sum(1 for L in ordinary if L % 2),
        "even": sum(1 for L in ordinary if L % 2 == 0),
        "even_lengths": sorted({L for L in ordinary if L % 2 == 0}),
    }

    # level populations of every tree, one row per cyclic node
    roots = np.flatnonzero(st.cyclic)
    max_depth = int(st.depth.max()) if size else 0
    row = np.full(size, -1, dtype=np.int64)
    row[roots] = np.arange(roots.size)
    tree = ~st.cyclic
    counts = np.zeros((roots.size, max(max_depth, 1)), dtype=np.int64)
    np.add.at(counts, (row[st.root[tree]], st.depth[tree] - 1), 1)
    if max_depth == 0:
        counts = counts[:, :0]
    profiles, multiplicity = np.unique(counts, axis=0, return_counts=True)
    root_profiles = {}
    for prof, m in zip(profiles.tolist(), multiplicity.tolist()):
        key = tuple(v for v in prof if v)  # levels are contiguous from 1
        root_profiles[key] = root_profiles.get(key, 0) + m

    pm_rows = row[[IDX_ONE, IDX_MINUS_ONE]]
    ordinary_rows = np.setdiff1d(np.arange(roots.size), pm_rows[pm_rows >= 0])
    ordinary_profiles ={tuple(v for v in p if v) for p in np.unique(counts[ordinary_rows], axis=0).tolist()}
    level_pops = list(next(iter(ordinary_profiles))) if len(ordinary_profiles) == 1 else None

    report = GraphReport(
        n=n,
        modulus=modulus,
        cycle_census=census,
        component_count=int(labels.size),
        tree_depth=max_depth,
        level_populations=level_pops,
        root_profiles=root_profiles,
        parity_report=parity,
        cycle_reps=list(zip(labels.tolist(), lengths.tolist())),
    )
    if size <= report_bound:
        comp_of_label = np.full(size, -1, dtype=np.int64)
        comp_of_label[labels] = np.arange(labels.size)
        report.component = comp_of_label[st.cycle_label[st.root]]
        report.tail_length = st.depth
        report.level = st.depth
        report.children = st.children
    return report


def enumerate_graph(n: int, modulus=None, workers: int = 1, max_points: int = MAX_POINTS) -> GraphReport:
    ctx = ctx_new(n, modulus)
    table = build_successor_table(ctx, workers=workers, max_points=max_points)
    return analyze(table, ctx.modulus)


def cycle_from(table: np.ndarray, start: int) -> list[int]:
    """Indices along the cycle through the cyclic node ``start``."""
    out = [int(start)]
    v = int(table[start])
    while v != start:
        out.append(v)
        v = int(table[v])
    return out


@dataclass
class Claim:
    name: str
    status: str  # PASS, FAIL or INFO
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class VerificationOutcome:
    prediction: GraphPrediction
    report: GraphReport
    claims: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != "FAIL" for c in self.claims)

    def claim(self, name: str) -> Claim:
        return next(c for c in self.claims if c.name == name)

    def to_dict(self) -> dict:
        d = self.report.to_dict()
        d["claims"] = [c.to_dict() for c in self.claims]
        return d


def _compare(name: str, predicted, measured) -> Claim:
    if predicted == measured:
        return Claim(name, "PASS", f"{measured}")
    return Claim(name, "FAIL", f"predicted {predicted}, measured {measured}")


def _first_failure(name: str, failures: list, checked: int) -> Claim:
    if failures:
        return Claim(name, "FAIL", f"{len(failures)} of {checked} failed; first: {failures[0]}")
    return Claim(name, "PASS", f"{checked} checked")


def verify(n: int, modulus=None, max_points: int = VERIFY_MAX_POINTS, workers: int = 1) -> VerificationOutcome:
    """Enumerate the graph and check every closed-form claim against it.

    The enumeration is ground truth; mismatches are reported as FAIL claims.
    Period parity is reported as INFO only.
    """
    ctx = ctx_new(n, modulus)
    if ctx.size + 1 > max_points:
        raise BudgetExceeded(f"verify is limited to {max_points} points")
    table = build_successor_table(ctx, workers=workers)
    st = classify(table)
    report = analyze(table, ctx.modulus, structure=st)
    pred = predict(n)
    e = pred.tree_depth
    inf_idx = ctx.size
    claims = [
        _compare("cycle_census", pred.cycle_census, report.cycle_census),
        _compare("component_count", pred.component_count, report.component_count),
        _compare("tree_depth", pred.tree_depth, report.tree_depth),
        _compare("level_populations", pred.level_populations, report.level_populations),
    ]

    special_ok = (table[inf_idx] == inf_idx and table[IDX_ONE] == IDX_MINUS_ONE
                  and table[IDX_MINUS_ONE] == IDX_ONE)
    claims.append(Claim("special_cycles", "PASS" if special_ok else "FAIL",
                        "infinity fixed, {1, -1} a 2-cycle"))

    allowed = {length for _, _, length in pred.divisor_rows}
    stray = sorted(set(report.cycle_census) - allowed - {1, 2})
    clash = sorted(allowed & {1, 2})
    if stray or clash:
        claims.append(Claim("cycle_lengths_allowed", "FAIL", f"outside L+{{1,2}}: {stray}; L meets {{1,2}}: {clash}"))
    else:
        claims.append(Claim("cycle_lengths_allowed", "PASS", f"L = {sorted(allowed)}"))

    failures = []
    reps = [(r, L) for r, L in report.cycle_reps if r not in (inf_idx, IDX_ONE, IDX_MINUS_ONE)]
    for rep, length in reps:
        x = ctx.from_index(rep)
        d = mult_order(psi(x))
        if d % 2 == 0 or ord_mod(-2, d) != length or orbit(x).cycle_length != length:
            failures.append(f"point {rep}: ord(psi)={d}, cycle length {length}")
    claims.append(_first_failure("period_formula", failures, len(reps)))

    # exhaustive preimages against the table
    order = np.argsort(table, kind="stable")
    starts = np.searchsorted(table[order], np.arange(ctx.size + 2))
    failures = []
    for g in range(ctx.size + 1):
        gamma = decode(g, ctx)
        algebraic = sorted(encode(x, ctx) for x in preimages(gamma, ctx))
        brute = sorted(order[starts[g]:starts[g + 1]].tolist())
        if algebraic != brute:
            failures.append(f"gamma {g}: algebraic {algebraic}, table {brute}")
            continue
        if g in (inf_idx, IDX_ONE, IDX_MINUS_ONE) or st.cyclic[g]:
            continue
        expect = 2 if order_two_adic(psi(gamma)) < e else 0
        if len(brute) != expect:
            failures.append(f"gamma {g}: {len(brute)} preimages, expected {expect}")
    claims.append(_first_failure("preimage_count", failures, ctx.size + 1))

    failures = []
    tree_nodes = np.flatnonzero(~st.cyclic)
    for b in tree_nodes.tolist():
        v = order_two_adic(psi(ctx.from_index(b)))
        if v != st.depth[b]:
            failures.append(f"point {b} at level {st.depth[b]}: v2(ord(psi)) = {v}")
    claims.append(_first_failure("two_adic_levels", failures, tree_nodes.size))

    failures = []
    roots = [r for r in np.flatnonzero(st.cyclic).tolist() if r not in (IDX_ONE, IDX_MINUS_ONE)]
    for r in roots:
        if st.children[r] != 1:
            failures.append(f"root {r} has {st.children[r]} tree children")
    for b in tree_nodes.tolist():
        want = 2 if st.depth[b] < e else 0
        if st.children[b] != want:
            failures.append(f"node {b} at level {st.depth[b]} has {st.children[b]} children")
    for prof, cnt in report.root_profiles.items():
        if prof and list(prof) != pred.level_populations:
            failures.append(f"{cnt} trees with level populations {list(prof)}")
    claims.append(_first_failure("tree_shape", failures, len(roots) + tree_nodes.size))

    pm = [int(st.children[IDX_ONE]), int(st.children[IDX_MINUS_ONE])]
    claims.append(Claim("pm1_no_tree", "PASS" if pm == [0, 0] else "FAIL", f"tree children of 1, -1: {pm}"))

    even = report.parity_report["even_lengths"]
    detail = f"even cycle lengths observed: {even}" if even else "all non-special cycle lengths odd"
    claims.append(Claim("period_parity", "INFO", detail))

    return VerificationOutcome(pred, report, claims)
