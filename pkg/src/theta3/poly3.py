"""Polynomials over GF(3).

A polynomial is a tuple of ints in {0, 1, 2}, little-endian: ``p[i]`` is the
coefficient of x^i. Canonical form has a nonzero last entry; the zero
polynomial is the empty tuple. All functions accept and return canonical
tuples.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ParseError

Poly3 = tuple  # tuple[int, ...]

ZERO: Poly3 = ()
ONE: Poly3 = (1,)
X: Poly3 = (0, 1)

# inverses in GF(3): 1 -> 1, 2 -> 2
_INV3 = (0, 1, 2)


def trim(coeffs: Iterable[int]) -> Poly3:
    c = [int(v) % 3 for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(p: Poly3) -> int:
    """Degree of ``p``; -1 for the zero polynomial."""
    return len(p) - 1


def add(a: Poly3, b: Poly3) -> Poly3:
    if len(a) < len(b):
        a, b = b, a
    c = list(a)
    for i, v in enumerate(b):
        c[i] = (c[i] + v) % 3
    return trim(c) if len(a) == len(b) else tuple(c)


def neg(a: Poly3) -> Poly3:
    return tuple((3 - v) % 3 for v in a)


def sub(a: Poly3, b: Poly3) -> Poly3:
    return add(a, neg(b))


def scale(a: Poly3, k: int) -> Poly3:
    k %= 3
    if k == 0:
        return ZERO
    return tuple(v * k % 3 for v in a)


def mul_schoolbook(a: Poly3, b: Poly3) -> Poly3:
    if not a or not b:
        return ZERO
    c = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                c[i + j] += ai * bj
    # product of two nonzero leading coefficients is nonzero mod 3
    return tuple(v % 3 for v in c)


# Fast path: one byte per coefficient, so a polynomial product is one integer
# product as long as no coefficient sum reaches 256 (true for degree < 60).
_MOD3 = bytes(i % 3 for i in range(256))
_PACK_LIMIT = 60


def _pack(p: Poly3) -> int:
    return int.from_bytes(bytes(p), "little")


def _unpack(v: int, length: int) -> Poly3:
    return tuple(v.to_bytes(length, "little").translate(_MOD3).rstrip(b"\0"))


def mul(a: Poly3, b: Poly3) -> Poly3:
    if not a or not b:
        return ZERO
    if len(a) > _PACK_LIMIT or len(b) > _PACK_LIMIT:
        return mul_schoolbook(a, b)
    return _unpack(_pack(a) * _pack(b), len(a) + len(b) - 1)


def divmod3(a: Poly3, b: Poly3) -> tuple[Poly3, Poly3]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) <= db:
        return ZERO, tuple(r)
    lead_inv = _INV3[b[-1]]
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        coef = r[k] * lead_inv % 3
        if coef:
            q[k - db] = coef
            off = k - db
            for j in range(db + 1):
                r[off + j] = (r[off + j] - coef * b[j]) % 3
    return trim(q), trim(r[:db])


def mod_schoolbook(a: Poly3, m: Poly3) -> Poly3:
    """Remainder of ``a`` modulo a monic ``m`` by long division."""
    dm = len(m) - 1
    if len(a) <= dm:
        return a
    r = list(a)
    for k in range(len(r) - 1, dm - 1, -1):
        coef = r[k]
        if coef:
            off = k - dm
            for j in range(dm):
                r[off + j] = (r[off + j] - coef * m[j]) % 3
    return trim(r[:dm])


@lru_cache(maxsize=64)
def _reduction_rows(m: Poly3) -> tuple:
    """Packed x^k mod m for k = deg m, ..., 2 deg m - 2."""
    dm = len(m) - 1
    rows = []
    r = trim(neg(m[:dm]))  # x^dm mod m
    for _ in range(max(dm - 1, 1)):
        rows.append(_pack(r))
        r = mod_schoolbook((0,) + r, m)
    return tuple(rows)


def mod(a: Poly3, m: Poly3) -> Poly3:
    """Remainder of ``a`` modulo a monic ``m``."""
    dm = len(m) - 1
    if len(a) <= dm:
        return a
    if dm > _PACK_LIMIT or len(a) > 2 * dm - 1 + (dm == 1):
        return mod_schoolbook(a, m)
    rows = _reduction_rows(m)
    acc = _pack(a[:dm])
    for k in range(dm, len(a)):
        c = a[k]
        if c:
            acc += c * rows[k - dm]
    return _unpack(acc, dm)


def gcd(a: Poly3, b: Poly3) -> Poly3:
    """Monic gcd of ``a`` and ``b`` (zero if both are zero)."""
    while b:
        a, b = b, divmod3(a, b)[1]
    return monic(a)


def monic(a: Poly3) -> Poly3:
    if not a:
        return a
    return scale(a, _INV3[a[-1]])


def mulmod(a: Poly3, b: Poly3, m: Poly3) -> Poly3:
    return mod(mul(a, b), m)


def powmod(a: Poly3, k: int, m: Poly3) -> Poly3:
    """a^k mod m for k >= 0, by square-and-multiply."""
    result = mod(ONE, m)
    base = mod(a, m)
    while k:
        if k & 1:
            result = mulmod(result, base, m)
        k >>= 1
        if k:
            base = mulmod(base, base, m)
    return result


def is_irreducible(f: Poly3) -> bool:
    """Rabin's test for a monic ``f`` of degree >= 1 over GF(3).

    f of degree n is irreducible iff x^(3^n) = x mod f and
    gcd(x^(3^(n/p)) - x, f) = 1 for every prime p dividing n.
    """
    n = degree(f)
    if n < 1:
        return False
    if n == 1:
        return True
    prime_divisors = [p for p in range(2, n + 1) if n % p == 0 and all(p % r for r in range(2, p))]
    x = mod(X, f)
    for p in prime_divisors:
        h = x
        for _ in range(n // p):
            h = powmod(h, 3, f)
        if degree(gcd(sub(h, x), f)) != 0:
            return False
    h = x
    for _ in range(n):
        h = powmod(h, 3, f)
    return h == x


def monic_of_degree(n: int, k: int) -> Poly3:
    """The monic degree-n polynomial whose lower coefficients encode ``k`` in base 3."""
    coeffs = []
    for _ in range(n):
        coeffs.append(k % 3)
        k //= 3
    coeffs.append(1)
    return tuple(coeffs)


def find_irreducible(n: int) -> Poly3:
    """First monic irreducible polynomial of degree ``n``.

    Candidates are scanned by the base-3 integer value of their non-leading
    coefficients, ascending, so the result is reproducible.
    """
    if n < 1:
        raise ValueError("degree must be positive")
    for k in range(3 ** n):
        f = monic_of_degree(n, k)
        if is_irreducible(f):
            return f
    raise AssertionError("no irreducible polynomial found")  # unreachable


def parse(text: str) -> Poly3:
    """Parse a comma-separated little-endian coefficient string like ``"1,2,0,1"``."""
    text = text.strip()
    if not text:
        raise ParseError("empty coefficient string")
    coeffs = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok not in ("0", "1", "2"):
            raise ParseError(f"coefficient {tok!r} is not one of 0, 1, 2")
        coeffs.append(int(tok))
    return trim(coeffs)


def format_coeffs(p: Sequence[int], width: int | None = None) -> str:
    """Render coefficients as ``"c0,c1,..."``, zero-padded to ``width`` if given."""
    c = list(p)
    if width is not None:
        c += [0] * (width - len(c))
    if not c:
        c = [0]
    return ",".join(str(v) for v in c)


def to_str(p: Poly3) -> str:
    """Human-readable form, e.g. ``x^3 + 2x + 1``."""
    if not p:
        return "0"
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if not c:
            continue
        coef = "" if (c == 1 and i) else str(c)
        var = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        terms.append(coef + var)
    return " + ".join(terms)
