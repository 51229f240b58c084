"""The maps theta(x) = x + 1/x, s(x) = x^-2 and psi(x) = (x+1)/(x-1) on P^1(F_{3^n}).

A point of the projective line is either a :class:`FieldElement` or the
singleton :data:`INF`. The three maps satisfy theta = psi . s . psi, and psi
is an involution.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from .errors import ZeroInput
from .field import DLOG_MAX_N, FieldCtx, FieldElement, inv, mul, power


class Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "∞"

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()

ProjPoint = Union[FieldElement, Infinity]


def _ctx_of(x: ProjPoint, ctx: Optional[FieldCtx]) -> FieldCtx:
    if isinstance(x, FieldElement):
        return x.ctx
    if ctx is None:
        raise TypeError("a FieldCtx is required when the point is infinity")
    return ctx


def encode(x: ProjPoint, ctx: FieldCtx) -> int:
    """Point index: finite elements by base-3 coefficients, infinity as 3^n."""
    return ctx.size if x is INF else x.index


def decode(idx: int, ctx: FieldCtx) -> ProjPoint:
    return INF if idx == ctx.size else ctx.from_index(idx)


def points(ctx: FieldCtx):
    """Every point of P^1 in index order."""
    yield from ctx.elements()
    yield INF


def theta(x: ProjPoint, ctx: Optional[FieldCtx] = None) -> ProjPoint:
    if x is INF or not x:
        return INF
    return x + inv(x)


def s_map(x: ProjPoint, ctx: Optional[FieldCtx] = None) -> ProjPoint:
    if x is INF:
        return _ctx_of(x, ctx).zero
    if not x:
        return INF
    y = inv(x)
    return mul(y, y)


def psi(x: ProjPoint, ctx: Optional[FieldCtx] = None) -> ProjPoint:
    if x is INF:
        return _ctx_of(x, ctx).one
    d = x - 1
    if not d:
        return INF
    return mul(x + 1, inv(d))


@dataclass
class OrbitRecord:
    start: ProjPoint
    tail_length: int
    cycle_length: int
    trajectory: Optional[list] = None


def _brent(x0: ProjPoint) -> tuple[int, int]:
    power_, lam = 1, 1
    tortoise, hare = x0, theta(x0)
    while tortoise != hare:
        if power_ == lam:
            tortoise = hare
            power_ *= 2
            lam = 0
        hare = theta(hare)
        lam += 1
    tortoise = hare = x0
    for _ in range(lam):
        hare = theta(hare)
    mu = 0
    while tortoise != hare:
        tortoise, hare = theta(tortoise), theta(hare)
        mu += 1
    return mu, lam


def orbit(x: ProjPoint, record_trajectory: bool = False) -> OrbitRecord:
    """Tail length and minimal cycle length of the theta-orbit of ``x``.

    With ``record_trajectory`` the first tail + cycle points are returned too
    (found by remembering visited points instead of Brent's method).
    """
    if not record_trajectory:
        mu, lam = _brent(x)
        return OrbitRecord(x, mu, lam)
    seen: dict = {}
    traj = []
    cur = x
    while cur not in seen:
        seen[cur] = len(traj)
        traj.append(cur)
        cur = theta(cur)
    mu = seen[cur]
    return OrbitRecord(x, mu, len(traj) - mu, traj)


@lru_cache(maxsize=None)
def _non_residue(ctx: FieldCtx) -> FieldElement:
    half = ctx.group_order // 2
    for idx in range(2, ctx.size):
        z = ctx.from_index(idx)
        if power(z, half) != ctx.one:
            return z
    raise AssertionError("no quadratic non-residue found")  # unreachable


def _tonelli_shanks(a: FieldElement) -> FieldElement:
    ctx = a.ctx
    q1 = ctx.group_order
    e = 0
    m = q1
    while m % 2 == 0:
        m //= 2
        e += 1
    c = power(_non_residue(ctx), m)
    t = power(a, m)
    r = power(a, (m + 1) // 2)
    one = ctx.one
    while t != one:
        i, t2 = 0, t
        while t2 != one:
            t2 = mul(t2, t2)
            i += 1
        b = c
        for _ in range(e - i - 1):
            b = mul(b, b)
        e = i
        c = mul(b, b)
        t = mul(t, c)
        r = mul(r, b)
    return r


def _table_sqrt(a: FieldElement) -> Optional[FieldElement]:
    exp, log = a.ctx.tables
    k = int(log[a.index])
    if k % 2:
        return None
    return a.ctx.from_index(int(exp[k // 2]))


def sqrt_in_field(a: FieldElement, method: str = "auto") -> Optional[tuple[FieldElement, FieldElement]]:
    """Both square roots ``(r, -r)`` of a nonzero ``a``, or None for a non-residue.

    ``method`` is ``"table"`` (discrete-log tables), ``"tonelli-shanks"`` or
    ``"auto"``, which uses tables while n <= DLOG_MAX_N. Roots are ordered by index.
    """
    if not a:
        raise ZeroInput("sqrt_in_field excludes 0")
    if method == "auto":
        method = "table" if a.ctx.n <= DLOG_MAX_N else "tonelli-shanks"
    if method == "table":
        r = _table_sqrt(a)
        if r is None:
            return None
    elif method == "tonelli-shanks":
        if power(a, a.ctx.group_order // 2) != a.ctx.one:
            return None
        r = _tonelli_shanks(a)
    else:
        raise ValueError(f"unknown square-root method {method!r}")
    return tuple(sorted((r, -r), key=lambda v: v.index))


def preimages(gamma: ProjPoint, ctx: Optional[FieldCtx] = None, method: str = "auto") -> set:
    """All x in P^1 with theta(x) = gamma, computed algebraically.

    Away from infinity and +-1, theta(x) = gamma iff psi(x)^2 = psi(gamma)^-1,
    so the preimages are psi of the square roots of psi(gamma)^-1.
    """
    ctx = _ctx_of(gamma, ctx)
    if gamma is INF:
        return {ctx.zero, INF}
    one = ctx.one
    if gamma == one:
        return {-one}
    if gamma == -one:
        return {one}
    roots = sqrt_in_field(inv(psi(gamma)), method)
    if roots is None:
        return set()
    return {psi(r) for r in roots}
