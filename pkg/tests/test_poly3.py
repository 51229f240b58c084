import itertools
import random

import pytest
from hypothesis import given, strategies as st

from theta3 import poly3
from theta3.errors import ParseError


def monic_polys(deg):
    for low in itertools.product(range(3), repeat=deg):
        yield tuple(low) + (1,)


def irreducible_by_search(f):
    """Oracle: no monic factor of degree 1..deg(f)//2 divides f."""
    n = poly3.degree(f)
    for d in range(1, n // 2 + 1):
        for g in monic_polys(d):
            if poly3.divmod3(f, g)[1] == ():
                return False
    return True


coeff_lists = st.lists(st.integers(0, 2), max_size=24).map(poly3.trim)


def test_trim_and_degree():
    assert poly3.trim([1, 2, 0, 0]) == (1, 2)
    assert poly3.trim([0, 0]) == ()
    assert poly3.degree(()) == -1
    assert poly3.degree((1, 2, 0, 1)) == 3


@given(coeff_lists, coeff_lists)
def test_packed_mul_matches_schoolbook(a, b):
    assert poly3.mul(a, b) == poly3.mul_schoolbook(a, b)


@given(coeff_lists, coeff_lists, st.integers(1, 12), st.randoms(use_true_random=False))
def test_packed_mod_matches_division(a, b, n, rnd):
    m = poly3.monic_of_degree(n, rnd.randrange(3 ** n))
    c = poly3.mul(a, b)
    assert poly3.mod(c, m) == poly3.mod_schoolbook(c, m) == poly3.divmod3(c, m)[1]


@given(coeff_lists, coeff_lists.filter(bool))
def test_divmod_reconstructs(a, b):
    q, r = poly3.divmod3(a, b)
    assert poly3.degree(r) < poly3.degree(b)
    assert poly3.add(poly3.mul(q, b), r) == a


@pytest.mark.parametrize("deg", range(1, 6))
def test_irreducibility_test_matches_search(deg):
    for f in monic_polys(deg):
        assert poly3.is_irreducible(f) == irreducible_by_search(f), f


@pytest.mark.parametrize("n", range(1, 9))
def test_find_irreducible_passes_oracle(n):
    f = poly3.find_irreducible(n)
    assert poly3.degree(f) == n and f[-1] == 1
    assert irreducible_by_search(f)
    # nothing earlier in the scan order is irreducible
    k = sum(c * 3 ** i for i, c in enumerate(f[:-1]))
    assert not any(irreducible_by_search(poly3.monic_of_degree(n, j)) for j in range(k))


def test_find_irreducible_small_degrees():
    assert poly3.find_irreducible(1) == (0, 1)  # x
    assert poly3.find_irreducible(2) == (1, 0, 1)  # x^2 + 1
    assert all((v * v + 1) % 3 for v in range(3))


def test_gcd_is_monic_common_divisor():
    rnd = random.Random(7)
    for _ in range(200):
        a = poly3.trim(rnd.randrange(3) for _ in range(6))
        b = poly3.trim(rnd.randrange(3) for _ in range(5))
        g = poly3.gcd(a, b)
        if not a and not b:
            assert g == ()
            continue
        assert g[-1] == 1
        assert poly3.divmod3(a, g)[1] == () and poly3.divmod3(b, g)[1] == ()


def test_parse_and_format():
    assert poly3.parse("1,2,0,1") == (1, 2, 0, 1)
    assert poly3.parse(" 0, 1 ") == (0, 1)
    assert poly3.format_coeffs((1, 2), 3) == "1,2,0"
    assert poly3.format_coeffs((), 2) == "0,0"
    assert poly3.to_str((1, 2, 0, 1)) == "x^3 + 2x + 1"
    for bad in ("", "1,3", "a,b", "1,,2"):
        with pytest.raises(ParseError):
            poly3.parse(bad)
