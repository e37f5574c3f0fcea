import random
from fractions import Fraction

import pytest

from st3.cyclo import CycloNum, root_of_unity as e
from st3.laurent import LaurentPoly


def u(rank=1, i=0, power=1):
    return LaurentPoly.variable(rank, i, power)


def rand_poly(rng, rank):
    p = LaurentPoly.zero(rank)
    for _ in range(rng.randint(1, 5)):
        exp = tuple(rng.randint(-3, 3) for _ in range(rank))
        n = rng.choice([1, 3, 4])
        coef = CycloNum.rational(rng.randint(-2, 2)) * e(rng.randint(0, n - 1), n)
        p = p + LaurentPoly.monomial(exp, coef)
    return p


def test_basic_arithmetic():
    x = u()
    xi = u(power=-1)
    assert (x + xi) * (x + xi) == x ** 2 + 2 + xi ** 2
    p = rand_poly(random.Random(0), 2)
    assert p + LaurentPoly.zero(2) == p
    v = LaurentPoly.variable(2, 0) * LaurentPoly.variable(2, 1)
    vi = LaurentPoly.variable(2, 0, -1) * LaurentPoly.variable(2, 1, -1)
    assert v * vi == LaurentPoly.one(2)


def test_rank_mismatch():
    with pytest.raises(ValueError):
        u(1) * u(2)


def test_mul_commutative_associative():
    rng = random.Random(4)
    for _ in range(15):
        rank = rng.choice([1, 2, 3])
        p, q, r = (rand_poly(rng, rank) for _ in range(3))
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)


def test_coeff_slice():
    x = u()
    p = x + 3 + u(power=-1)
    assert p.coeff_slice(0, 0) == LaurentPoly.const(0, 3)
    q = (u() + u(power=-1)) ** 2
    assert q.coeff_slice(0, 2) == LaurentPoly.one(0)
    # (uw)(vw)(u^-1 v^-1 w) = w^3 has no w^0 term
    w3 = LaurentPoly.monomial((0, 0, 3))
    assert w3.coeff_slice(2, 0).is_zero()


def test_slice_convolution_identity():
    rng = random.Random(9)
    for _ in range(10):
        p, q = rand_poly(rng, 2), rand_poly(rng, 2)
        k = rng.randint(-3, 3)
        lhs = (p * q).coeff_slice(1, k)
        rhs = LaurentPoly.zero(1)
        for j in range(-8, 9):
            rhs = rhs + p.coeff_slice(1, j) * q.coeff_slice(1, k - j)
        assert lhs == rhs


def test_substitute_u3():
    m = LaurentPoly.monomial((1, 1, 1))
    assert m.substitute_u3() == LaurentPoly.monomial((0, 0, 3))
    r = LaurentPoly.monomial((1, -1, 0))
    assert r.substitute_u3() == LaurentPoly.monomial((1, -1, 0))
    s = LaurentPoly.monomial((1, 0, 0)) + LaurentPoly.monomial((0, 1, 0)) \
        + LaurentPoly.monomial((0, 0, 1))
    expect = (LaurentPoly.monomial((1, 0, 1)) + LaurentPoly.monomial((0, 1, 1))
              + LaurentPoly.monomial((-1, -1, 1)))
    assert s.substitute_u3() == expect


def test_apply_weyl():
    p = LaurentPoly.monomial((2, 1, 0))
    swap = ((1, 0, 2), (1, 1, 1))
    assert p.apply_weyl(swap) == LaurentPoly.monomial((1, 2, 0))
    q = u() + 2
    inv = ((0,), (-1,))
    assert q.apply_weyl(inv) == u(power=-1) + 2
    ident = ((0, 1, 2), (1, 1, 1))
    r = rand_poly(random.Random(2), 3)
    assert r.apply_weyl(ident) == r


def test_weyl_involution():
    rng = random.Random(8)
    for _ in range(10):
        p = rand_poly(rng, 3)
        w = ((2, 0, 1), (1, -1, 1))
        winv = ((1, 2, 0), (-1, 1, 1))
        assert p.apply_weyl(w).apply_weyl(winv) == p
