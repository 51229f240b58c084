"""Arithmetic in F_{3^n} = GF(3)[x] / (modulus).

Elements are canonical :mod:`poly3` tuples of degree < n bound to a
:class:`FieldCtx`. Every element also has an integer index
``sum(c_i * 3^i)`` used by the enumerator; the point at infinity takes
index ``3^n`` (see :mod:`theta3.dynamics`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, isqrt

import numpy as np

from . import poly3
from .errors import (
    CtxMismatch,
    CtxTooLarge,
    DegreeMismatch,
    ReducibleModulus,
    ZeroInverse,
    ZeroLog,
    ZeroOrder,
)
from .numtheory import factorize

# discrete logs and table square roots are only offered up to this degree
DLOG_MAX_N = 12


@dataclass(frozen=True)
class FieldCtx:
    n: int
    modulus: tuple
    group_order: int
    factorization: dict = field(compare=False, hash=False, repr=False)

    @property
    def size(self) -> int:
        return self.group_order + 1

    @cached_property
    def zero(self) -> FieldElement:
        return FieldElement(self, ())

    @cached_property
    def one(self) -> FieldElement:
        return FieldElement(self, poly3.ONE)

    def __call__(self, coeffs) -> FieldElement:
        """Element from a coefficient sequence or a small integer."""
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        return FieldElement(self, poly3.mod(poly3.trim(coeffs), self.modulus))

    def from_index(self, idx: int) -> FieldElement:
        if not 0 <= idx < self.size:
            raise ValueError(f"index {idx} out of range for F_{self.size}")
        c = []
        while idx:
            c.append(idx % 3)
            idx //= 3
        return FieldElement(self, tuple(c))

    def elements(self):
        """All field elements in index order."""
        for i in range(self.size):
            yield self.from_index(i)

    @cached_property
    def generator(self) -> FieldElement:
        return find_generator(self)

    @cached_property
    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        """``(exp, log)`` arrays for the default generator.

        ``exp[i]`` is the index of g^i for 0 <= i < 3^n - 1; ``log[idx]`` is the
        exponent of the element with that index (``-1`` for zero). Built lazily.
        """
        return build_log_tables(self, self.generator)


def ctx_new(n: int, modulus=None) -> FieldCtx:
    """Field context for F_{3^n}; the modulus defaults to ``find_irreducible(n)``."""
    if n < 1:
        raise ValueError("extension degree must be positive")
    if modulus is None:
        modulus = poly3.find_irreducible(n)
    else:
        if isinstance(modulus, str):
            modulus = poly3.parse(modulus)
        modulus = poly3.trim(modulus)
        if poly3.degree(modulus) != n:
            raise DegreeMismatch(f"modulus has degree {poly3.degree(modulus)}, expected {n}")
        if modulus[-1] != 1:
            raise ReducibleModulus("modulus must be monic")
        if not poly3.is_irreducible(modulus):
            raise ReducibleModulus(f"{poly3.to_str(modulus)} is reducible over GF(3)")
    order = 3 ** n - 1
    return FieldCtx(n, modulus, order, factorize(order))


class FieldElement:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: tuple):
        self.ctx = ctx
        self.coeffs = coeffs

    def _check(self, other) -> FieldElement:
        if isinstance(other, int):
            return self.ctx(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.ctx is not self.ctx and other.ctx != self.ctx:
            raise CtxMismatch("elements belong to different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.ctx, poly3.add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.ctx, poly3.sub(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return FieldElement(self.ctx, poly3.neg(self.coeffs))

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return mul(self, inv(other))

    def __pow__(self, k: int):
        return power(self, k)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.coeffs == other.coeffs and self.ctx == other.ctx

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"FieldElement({poly3.to_str(self.coeffs)})"

    @property
    def index(self) -> int:
        idx = 0
        for c in reversed(self.coeffs):
            idx = idx * 3 + c
        return idx

    def to_str(self) -> str:
        """Coefficient string padded to the extension degree, e.g. ``"1,2,0"``."""
        return poly3.format_coeffs(self.coeffs, self.ctx.n)


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    if a.ctx is not b.ctx and a.ctx != b.ctx:
        raise CtxMismatch("elements belong to different fields")
    return FieldElement(a.ctx, poly3.mulmod(a.coeffs, b.coeffs, a.ctx.modulus))


def inv(a: FieldElement) -> FieldElement:
    """Inverse by the extended Euclidean algorithm on polynomials."""
    if not a.coeffs:
        raise ZeroInverse("0 has no inverse")
    r0, r1 = a.ctx.modulus, a.coeffs
    s0, s1 = poly3.ZERO, poly3.ONE
    while poly3.degree(r1) > 0:
        q, r = poly3.divmod3(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly3.sub(s0, poly3.mul(q, s1))
    # r1 is a nonzero constant c, and s1 * a = c
    return FieldElement(a.ctx, poly3.mod(poly3.scale(s1, r1[0]), a.ctx.modulus))


def power(a: FieldElement, k: int) -> FieldElement:
    """a^k by square-and-multiply; negative k goes through :func:`inv`.

    Follows the convention 0^0 = 1.
    """
    if k < 0:
        return power(inv(a), -k)
    return FieldElement(a.ctx, poly3.powmod(a.coeffs, k, a.ctx.modulus))


def mult_order(a: FieldElement) -> int:
    """Multiplicative order, by stripping primes from the factored group order."""
    if not a.coeffs:
        raise ZeroOrder("0 has no multiplicative order")
    m = a.ctx.modulus
    k = a.ctx.group_order
    for p in a.ctx.factorization:
        while k % p == 0 and poly3.powmod(a.coeffs, k // p, m) == poly3.ONE:
            k //= p
    return k


def find_generator(ctx: FieldCtx) -> FieldElement:
    """First element in index order whose order is 3^n - 1."""
    for idx in range(1, ctx.size):
        g = ctx.from_index(idx)
        if mult_order(g) == ctx.group_order:
            return g
    raise AssertionError("no generator found")  # unreachable


def _mul_matrix(h: FieldElement) -> np.ndarray:
    """Matrix M with coeffs(h * c) = M @ c (mod 3) for coefficient columns c."""
    n = h.ctx.n
    cols = []
    xj = poly3.ONE
    for _ in range(n):
        prod = poly3.mulmod(h.coeffs, xj, h.ctx.modulus)
        cols.append(list(prod) + [0] * (n - len(prod)))
        xj = poly3.mulmod(xj, poly3.X, h.ctx.modulus)
    return np.array(cols, dtype=np.float64).T


def build_log_tables(ctx: FieldCtx, g: FieldElement) -> tuple[np.ndarray, np.ndarray]:
    """Exponent and logarithm tables for the generator ``g``, as index arrays.

    Powers are produced a block at a time: the first block by repeated
    multiplication, later blocks by applying the linear map "multiply by g^B"
    to the previous block's coefficient vectors.
    """
    n, q1 = ctx.n, ctx.group_order
    block = min(q1, isqrt(q1) + 1)
    weights = 3 ** np.arange(n, dtype=np.int64)
    first = np.zeros((block, n), dtype=np.float64)
    cur = ctx.one
    for i in range(block):
        first[i, : len(cur.coeffs)] = cur.coeffs
        cur = mul(cur, g)
    step = _mul_matrix(cur).T  # cur == g^block; rows are coefficient vectors
    exp = np.empty(q1, dtype=np.int64)
    coeffs = first
    for start in range(0, q1, block):
        stop = min(start + block, q1)
        exp[start:stop] = coeffs[: stop - start].astype(np.int64) @ weights
        coeffs = np.mod(coeffs @ step, 3)
    log = np.full(q1 + 1, -1, dtype=np.int64)
    log[exp] = np.arange(q1, dtype=np.int64)
    return exp, log


def discrete_log(g: FieldElement, a: FieldElement, max_n: int = DLOG_MAX_N) -> int:
    """Least i >= 0 with g^i = a, for a generator ``g`` of a table-sized field."""
    ctx = a.ctx
    if not a.coeffs:
        raise ZeroLog("0 has no discrete logarithm")
    if ctx.n > max_n:
        raise CtxTooLarge(f"discrete_log table limited to n <= {max_n}")
    _, log = ctx.tables
    la, lg = int(log[a.index]), int(log[g.index])
    q1 = ctx.group_order
    if gcd(lg, q1) != 1:
        raise ValueError("base of discrete_log is not a generator")
    return la * pow(lg, -1, q1) % q1


def order_two_adic(a: FieldElement) -> int:
    """The 2-adic valuation of ``mult_order(a)``, without computing the full order."""
    if not a.coeffs:
        raise ZeroOrder("0 has no multiplicative order")
    m = a.ctx.group_order
    while m % 2 == 0:
        m //= 2
    b = poly3.powmod(a.coeffs, m, a.ctx.modulus)
    v = 0
    while b != poly3.ONE:
        b = poly3.mulmod(b, b, a.ctx.modulus)
        v += 1
    return v
