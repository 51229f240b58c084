"""Exit criteria for the package, one test per criterion.

A summary line per criterion is printed at the end of the pytest run.
"""

import json
import time
from fractions import Fraction

import numpy as np
import pytest

from theta3.cli import main
from theta3.dynamics import decode, encode, points, preimages, psi, s_map, theta
from theta3.enumerator import analyze, build_successor_table, classify, cycle_from
from theta3.export import all_labels
from theta3.field import ctx_new, mult_order
from theta3.numtheory import two_adic_valuation
from theta3.predictor import divisor_table, predict

CONWAY_27 = (1, 2, 0, 1)


@pytest.mark.criterion(1, "F_27 golden test")
def test_f27_golden():
    t0 = time.perf_counter()
    ctx = ctx_new(3, CONWAY_27)
    table = build_successor_table(ctx)
    report = analyze(table, ctx.modulus)
    labels = all_labels(ctx, "exponent")
    elapsed = time.perf_counter() - t0

    assert report.component_count == 3
    assert report.cycle_census == {1: 1, 2: 1, 12: 1}
    start = labels.index("1")
    assert [labels[i] for i in cycle_from(table, start)] == \
        "1 20 22 11 3 8 14 7 9 24 16 21".split()
    assert table[labels.index("0")] == labels.index("13")  # alpha^0 = 1 -> alpha^13 = -1
    cyclic = np.flatnonzero(report.tail_length == 0).tolist()
    for v in cyclic:
        want = 0 if labels[v] in ("0", "13") else 1
        assert report.children[v] == want, labels[v]
    trees = report.tail_length[report.tail_length > 0]
    assert trees.size and set(trees.tolist()) == {1}
    assert report.tree_depth == 1
    assert elapsed < 1.0


@pytest.mark.criterion(2, "predictor-oracle equivalence, n = 1..10")
def test_predictor_oracle_equivalence():
    t0 = time.perf_counter()
    for n in range(1, 11):
        ctx = ctx_new(n)
        r = analyze(build_successor_table(ctx), ctx.modulus)
        p = predict(n)
        assert r.cycle_census == p.cycle_census, n
        assert r.component_count == p.component_count, n
        assert r.tree_depth == p.tree_depth, n
        assert r.level_populations == p.level_populations, n
    assert time.perf_counter() - t0 < 60


@pytest.mark.criterion(3, "conjugation suite, n = 1..8")
@pytest.mark.parametrize("n", range(1, 9))
def test_conjugation(n):
    ctx = ctx_new(n)
    for x in points(ctx):
        assert theta(x, ctx) == psi(s_map(psi(x, ctx), ctx), ctx)
        assert psi(psi(x, ctx), ctx) == x


@pytest.mark.criterion(4, "preimage suite, n = 1..8")
@pytest.mark.parametrize("n", range(1, 9))
def test_preimages(n):
    ctx = ctx_new(n)
    table = build_successor_table(ctx)
    cyclic = classify(table).cyclic
    e = two_adic_valuation(3 ** n - 1)
    by_target = [[] for _ in range(len(table))]
    for x, y in enumerate(table.tolist()):
        by_target[y].append(x)
    for g in range(len(table)):
        gamma = decode(g, ctx)
        assert sorted(encode(x, ctx) for x in preimages(gamma, ctx)) == by_target[g]
        if g in (1, 2, 3 ** n) or cyclic[g]:
            continue
        assert len(by_target[g]) == (2 if mult_order(psi(gamma)) % 2 ** e else 0)


@pytest.mark.criterion(5, "tree stratification, n = 1..8")
@pytest.mark.parametrize("n", range(1, 9))
def test_stratification(n):
    ctx = ctx_new(n)
    table = build_successor_table(ctx)
    st = classify(table)
    e = two_adic_valuation(3 ** n - 1)
    for b in np.flatnonzero(~st.cyclic).tolist():
        k = int(st.depth[b])
        assert two_adic_valuation(mult_order(psi(ctx.from_index(b)))) == k
        assert st.children[b] == (2 if k < e else 0)
    roots = [r for r in np.flatnonzero(st.cyclic).tolist() if r not in (1, 2)]
    tree = ~st.cyclic
    for r in roots:
        levels = np.bincount(st.depth[tree & (st.root == r)], minlength=e + 1)[1:]
        assert levels.tolist() == [2 ** (k - 1) for k in range(1, e + 1)]
        assert st.children[r] == 1


@pytest.mark.criterion(6, "conservation identity, n = 1..20")
def test_conservation():
    for n in range(1, 21):
        p = predict(n)
        assert (p.periodic_point_count - 2) * 2 ** p.tree_depth + 2 == 3 ** n + 1, n


@pytest.mark.criterion(7, "erratum regression: verify 4")
def test_verify_4(capsys):
    code = main(["verify", "4", "--format", "json"])
    out = json.loads(capsys.readouterr().out)
    assert code == 0
    census = {k: v for k, v in out["cycle_census"]}
    assert census == predict(4).cycle_census
    assert 4 in out["parity_report"]["even_lengths"]
    statuses = {c["name"]: c["status"] for c in out["claims"]}
    assert statuses["period_parity"] == "INFO"
    assert statuses["cycle_census"] == "PASS"


@pytest.mark.criterion(8, "integer cycle counts, n = 1..20")
def test_integer_cycle_counts():
    for n in range(1, 21):
        rows = divisor_table(n)
        census = predict(n).cycle_census
        for length in {L for _, _, L in rows}:
            c = Fraction(sum(phi for _, phi, L in rows if L == length), length)
            assert c.denominator == 1 and c > 0, (n, length)
            assert census[length] == c
