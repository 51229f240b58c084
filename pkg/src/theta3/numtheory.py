"""Integer machinery: factorization, totients, orders modulo d, 2-adic valuations."""

from __future__ import annotations

from itertools import count
from math import gcd, prod

from .errors import NotCoprime

Factorization = dict  # prime -> exponent, primes ascending

TRIAL_BOUND = 1000

# deterministic Miller-Rabin witnesses, valid for every n < 3.3e24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

_SMALL_PRIMES = [p for p in range(2, TRIAL_BOUND) if all(p % q for q in range(2, int(p ** 0.5) + 1))]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES[:13]:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of the odd composite ``n``.

    Uses Brent's variant with x -> x^2 + c, trying c = 1, 2, 3, ... in order.
    """
    for c in count(1):
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise AssertionError("unreachable")


def factorize(m: int) -> Factorization:
    """Prime factorization of ``m >= 1`` as ``{prime: exponent}``, primes ascending."""
    if m < 1:
        raise ValueError("factorize needs m >= 1")
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > m:
            break
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
    stack = [m] if m > 1 else []
    while stack:
        k = stack.pop()
        if is_prime(k):
            out[k] = out.get(k, 0) + 1
        else:
            f = _pollard_rho(k)
            stack += [f, k // f]
    return dict(sorted(out.items()))


def divisors(f: Factorization) -> list[int]:
    divs = [1]
    for p, e in f.items():
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return sorted(divs)


def odd_divisors_gt1(f: Factorization) -> list[int]:
    """All divisors of the odd part of the factored number, except 1, ascending."""
    odd = {p: e for p, e in f.items() if p != 2}
    return divisors(odd)[1:]


def euler_phi(d: int) -> int:
    if d < 1:
        raise ValueError("euler_phi needs d >= 1")
    return prod(p ** (e - 1) * (p - 1) for p, e in factorize(d).items())


def ord_mod(a: int, d: int) -> int:
    """Multiplicative order of ``a`` modulo ``d``.

    Starts from phi(d) and strips prime factors while a^k stays 1.
    """
    if d < 1:
        raise ValueError("modulus must be positive")
    if d == 1:
        return 1
    a %= d
    if gcd(a, d) != 1:
        raise NotCoprime(f"gcd({a}, {d}) != 1")
    k = euler_phi(d)
    for p in factorize(k):
        while k % p == 0 and pow(a, k // p, d) == 1:
            k //= p
    return k


def two_adic_valuation(m: int) -> int:
    if m < 1:
        raise ValueError("two_adic_valuation needs m >= 1")
    return (m & -m).bit_length() - 1
