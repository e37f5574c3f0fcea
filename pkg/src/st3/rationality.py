"""Root-of-unity triple classification and the rationality filters.

A diagonal element of SU(3) is a triple of roots of unity (a, b, c) with
abc = 1, recorded here as a triple of rationals mod 1 (fractions of a
turn).  The two classification lists are:

  * single_integrality_classes: |a+b+c|^2 is an integer (16 classes,
    plus the degenerate continuum where (a+b)(b+c)(c+a) = 0);
  * cyclic_integrality_classes: |a^n+b^n+c^n|^2 is an integer for all
    n > 0 (23 classes).

`beukers_smyth_check` re-derives the first list independently via
resultants and cyclotomic-factor extraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import gcd

from .cyclo import CycloNum, from_fraction_of_turn, root_of_unity


def _mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


@dataclass(frozen=True, order=True)
class UnityTriple:
    """Triple (u, v, w) of rationals mod 1 with u + v + w an integer."""

    u: Fraction
    v: Fraction
    w: Fraction

    @staticmethod
    def make(u, v, w) -> "UnityTriple":
        u, v, w = _mod1(Fraction(u)), _mod1(Fraction(v)), _mod1(Fraction(w))
        if (u + v + w).denominator != 1:
            raise ValueError(f"u+v+w not an integer: {(u, v, w)}")
        return UnityTriple(u, v, w)

    def entries(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.u, self.v, self.w)

    @property
    def order(self) -> int:
        """Multiplicative order of the triple (lcm of denominators)."""
        n = 1
        for x in self.entries():
            n = n // gcd(n, x.denominator) * x.denominator
        return n

    def power(self, k: int) -> "UnityTriple":
        return UnityTriple.make(k * self.u, k * self.v, k * self.w)

    def is_degenerate(self) -> bool:
        """(a+b)(b+c)(c+a) = 0, i.e. some two entries differ by 1/2."""
        h = Fraction(1, 2)
        u, v, w = self.entries()
        return _mod1(u - v) == h or _mod1(v - w) == h or _mod1(w - u) == h

    def abs_square_sum(self) -> CycloNum:
        z = from_fraction_of_turn(self.u) + from_fraction_of_turn(self.v) \
            + from_fraction_of_turn(self.w)
        return z.abs_square()

    def canonicalize(self) -> "UnityTriple":
        """Lexicographically first member of the Galois-and-permutation
        equivalence class."""
        n = self.order
        best = None
        for m in range(1, n + 1):
            if gcd(m, n) != 1:
                continue
            img = tuple(sorted(_mod1(m * x) for x in self.entries()))
            if best is None or img < best:
                best = img
        return UnityTriple(*best)

    def __str__(self):
        return ",".join(str(x) for x in self.entries())


def canonicalize(t: UnityTriple) -> UnityTriple:
    return t.canonicalize()


# ---------------------------------------------------------------------------
# Conway-Jones case families -> the 16 single-integrality classes

_E_TURNS = [Fraction(0), Fraction(1, 2), Fraction(1, 4), Fraction(3, 4),
            Fraction(1, 3), Fraction(2, 3), Fraction(1, 6), Fraction(5, 6)]


def _solve_abc(x: Fraction, y: Fraction) -> list[UnityTriple]:
    """All (a, b, c), abc = 1, with a/b = e(x), b/c = e(y): a^3 = x^2*y."""
    out = []
    t = _mod1(2 * x + y)
    for k in range(3):
        a = _mod1(Fraction(t + k, 3))
        b = _mod1(a - x)
        c = _mod1(b - y)
        out.append(UnityTriple.make(a, b, c))
    return out


def _case_triples() -> list[tuple[Fraction, Fraction, Fraction]]:
    """(x, y, z) candidates with xyz = 1 from the five case families of the
    vanishing-sums lemma (x = a/b, y = b/c, z = c/a as fractions of a turn)."""
    seen = set()
    out = []

    def push(x, y, z):
        x, y, z = _mod1(x), _mod1(y), _mod1(z)
        if _mod1(x + y + z) != 0:
            return
        if (x, y, z) not in seen:
            seen.add((x, y, z))
            out.append((x, y, z))

    # (i) all three summands rational: x, y, z are 4th or 6th roots
    for x in _E_TURNS:
        for y in _E_TURNS:
            z = _mod1(-x - y)
            if z in _E_TURNS:
                push(x, y, z)
    # (ii) two summands cancel: z = y + 1/2 up to inversion; then
    # x + 2y + 1/2 must be an integer.  (The inverted branch z = -y + 1/2
    # forces x = 1/2 and yields only the degenerate continuum.)
    for x in _E_TURNS:
        for k in range(2):
            y = _mod1(Fraction(k - x - Fraction(1, 2), 2))
            push(x, y, _mod1(y + Fraction(1, 2)))
    # (iii) one summand rational, pair from the e(1/5), e(2/5) family:
    # no solutions with xyz = 1 (5 does not divide the denominator of x)
    half = Fraction(1, 2)
    for x in _E_TURNS:
        for y0, z0 in [(Fraction(1, 5), Fraction(2, 5))]:
            for sy, sz in product((1, -1), repeat=2):
                for h in (0, half):
                    for y, z in ((sy * y0, sz * z0), (sy * z0, sz * y0)):
                        push(x, _mod1(y + h), _mod1(z + h))
    # (iv) (x, x+1/3, x+2/3) with zero sum: forces 3x integral, already in (i)
    for j in range(3):
        x = Fraction(j, 3)
        push(x, _mod1(x + Fraction(1, 3)), _mod1(x + Fraction(2, 3)))
    # (v) the three sporadic families, closed under permutations, inversion
    # of single entries (turn negation) and negation of all values at once
    # (adding 1/2 to every turn)
    sporadic = [
        (Fraction(1, 7), Fraction(2, 7), Fraction(4, 7)),
        (Fraction(1, 15), Fraction(4, 15), Fraction(3, 10)),
        (Fraction(1, 10), Fraction(2, 15), Fraction(7, 15)),
    ]
    for base in sporadic:
        for perm in permutations(base):
            for signs in product((1, -1), repeat=3):
                for h in (0, half):
                    push(*[_mod1(s * t + h) for s, t in zip(signs, perm)])
    return out


@lru_cache(maxsize=1)
def single_integrality_classes() -> tuple[UnityTriple, ...]:
    """The 16 equivalence classes with |a+b+c|^2 an integer (nondegenerate)."""
    found = set()
    for x, y, _z in _case_triples():
        for t in _solve_abc(x, y):
            if not t.is_degenerate():
                found.add(t.canonicalize())
    for t in found:
        q = t.abs_square_sum().try_rational()
        assert q is not None and q.denominator == 1, f"spurious class {t}"
    return tuple(sorted(found, key=lambda t: (t.order, t.entries())))


def single_integrality_holds(t: UnityTriple) -> bool:
    """|a+b+c|^2 integral: degenerate, or in one of the 16 classes."""
    return t.is_degenerate() or t.canonicalize() in set(single_integrality_classes())


@lru_cache(maxsize=1)
def cyclic_integrality_classes() -> tuple[UnityTriple, ...]:
    """The 23 classes whose every power has integral |a^n+b^n+c^n|^2."""
    found = set()
    # two entries equal: (1/n, 1/n, (n-2)/n); e(3/n) must be a 4th/6th root
    for n in (1, 2, 3, 4, 6, 9, 12, 18):
        found.add(UnityTriple.make(Fraction(1, n), Fraction(1, n),
                                   Fraction(n - 2, n)).canonicalize())
    # two entries differing by 1/2: (1/2n, (n+1)/2n, (n-2)/2n)
    for n in (1, 2, 3, 4, 6, 9, 12, 18):
        found.add(UnityTriple.make(Fraction(1, 2 * n), Fraction(n + 1, 2 * n),
                                   Fraction(n - 2, 2 * n)).canonicalize())
    # remaining candidates come from the single-integrality list; all powers
    # must stay integral
    singles = set(single_integrality_classes())
    for t in single_integrality_classes():
        entries = t.entries()
        if len(set(entries)) < 3:
            continue
        if t.is_degenerate():
            continue
        n = t.order
        ok = True
        for k in range(2, n):
            p = t.power(k)
            if not (p.is_degenerate() or p.canonicalize() in singles):
                ok = False
                break
        if ok:
            found.add(t.canonicalize())
    # the defining property, rechecked exactly for every power
    for t in found:
        n = t.order
        for k in range(1, n + 1):
            q = t.power(k).abs_square_sum().try_rational()
            assert q is not None and q.denominator == 1, f"power {k} of {t}"
    return tuple(sorted(found, key=lambda t: (t.order, t.entries())))


def cyclic_integrality_holds(t: UnityTriple) -> bool:
    for k in range(1, t.order + 1):
        p = t.power(k)
        if not (p.is_degenerate() or p.canonicalize() in set(single_integrality_classes())):
            return False
    return True


# ---------------------------------------------------------------------------
# integer/rational polynomial helpers (dense, univariate)


def _pmul(f: list, g: list) -> list:
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if not a:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] += a * b
    return _ptrim(out)


def _padd(f: list, g: list) -> list:
    n = max(len(f), len(g))
    out = [Fraction(0)] * n
    for i, a in enumerate(f):
        out[i] += a
    for i, b in enumerate(g):
        out[i] += b
    return _ptrim(out)


def _pscale(f: list, c) -> list:
    return _ptrim([a * c for a in f])


def _ptrim(f: list) -> list:
    while f and not f[-1]:
        f.pop()
    return f


def _pdivmod(f: list, g: list) -> tuple[list, list]:
    f = list(f)
    q = [Fraction(0)] * max(1, len(f) - len(g) + 1)
    while len(f) >= len(g) and f:
        c = Fraction(f[-1]) / Fraction(g[-1])
        d = len(f) - len(g)
        q[d] = c
        for i, b in enumerate(g):
            f[i + d] -= c * b
        _ptrim(f)
    return _ptrim(q), f


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> tuple:
    """Coefficients of the d-th cyclotomic polynomial, ascending order."""
    f = [Fraction(-1)] + [Fraction(0)] * (d - 1) + [Fraction(1)]  # x^d - 1
    for e in range(1, d):
        if d % e == 0:
            q, r = _pdivmod(f, list(cyclotomic_poly(e)))
            assert not r
            f = q
    return tuple(f)


def _euler_phi(d: int) -> int:
    out = d
    m = d
    p = 2
    while p * p <= m:
        if m % p == 0:
            out -= out // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out -= out // m
    return out


def roots_of_unity_orders(f: list, bound: int | None = None) -> list[int]:
    """Orders d such that every primitive d-th root of unity is a root of f.

    A root-of-unity root of order d forces the full cyclotomic factor
    Phi_d | f, so only d with phi(d) <= deg f can occur (the standard
    degree bound); `bound` can extend the scan window.
    """
    f = _ptrim([Fraction(x) for x in f])
    if not f:
        raise ValueError("zero polynomial has all roots of unity as roots")
    deg = len(f) - 1
    limit = max(bound or 0, 6 * deg + 30)
    out = []
    for d in range(1, limit + 1):
        if _euler_phi(d) > deg:
            continue
        _q, r = _pdivmod(list(f), list(cyclotomic_poly(d)))
        if not r:
            out.append(d)
    return out


# ---------------------------------------------------------------------------
# Beukers-Smyth verification of the single-integrality list


def _bipoly_mul(f: dict, g: dict) -> dict:
    out: dict[tuple[int, int], int] = {}
    for (i, j), a in f.items():
        for (k, l), b in g.items():
            e = (i + k, j + l)
            w = out.get(e, 0) + a * b
            if w:
                out[e] = w
            else:
                out.pop(e, None)
    return out


def _f_n(n: int) -> dict:
    p1 = {(2, 1): 1, (1, 2): 1, (0, 0): 1}
    p2 = {(1, 0): 1, (0, 1): 1, (2, 2): 1}
    f = _bipoly_mul(p1, p2)
    f[(2, 2)] = f.get((2, 2), 0) - n
    if not f[(2, 2)]:
        del f[(2, 2)]
    return f


def _substituted(f: dict, s1: int, s2: int, e: int) -> dict:
    out: dict[tuple[int, int], int] = {}
    for (i, j), a in f.items():
        sign = (s1 ** i) * (s2 ** j)
        key = (i * e, j * e)
        w = out.get(key, 0) + sign * a
        if w:
            out[key] = w
        else:
            out.pop(key, None)
    return out


def _as_y_poly(f: dict) -> list[list]:
    """Bivariate dict -> dense list over y of dense lists over x."""
    dy = max(j for (_i, j) in f)
    dx = max(i for (i, _j) in f)
    out = [[Fraction(0)] * (dx + 1) for _ in range(dy + 1)]
    for (i, j), a in f.items():
        out[j][i] = Fraction(a)
    return [_ptrim(c) for c in out]


def _resultant_y(f: dict, g: dict) -> list:
    """Resultant of two bivariate integer polynomials w.r.t. y, in Z[x],
    via fraction-free Gaussian elimination of the Sylvester matrix."""
    fy = _as_y_poly(f)
    gy = _as_y_poly(g)
    m, n = len(fy) - 1, len(gy) - 1
    size = m + n
    M = [[[] for _ in range(size)] for _ in range(size)]
    for r in range(n):
        for k, c in enumerate(reversed(fy)):
            M[r][r + k] = list(c)
    for r in range(m):
        for k, c in enumerate(reversed(gy)):
            M[n + r][r + k] = list(c)
    sign = 1
    prev = [Fraction(1)]
    for k in range(size - 1):
        if not M[k][k]:
            for i in range(k + 1, size):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return []
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = _padd(_pmul(M[i][j], M[k][k]), _pscale(_pmul(M[i][k], M[k][j]), -1))
                if num:
                    q, r = _pdivmod(num, prev)
                    assert not r, "Bareiss division not exact"
                    M[i][j] = q
                else:
                    M[i][j] = []
            M[i][k] = []
        prev = M[k][k]
    out = _pscale(M[size - 1][size - 1], sign)
    return out


def _eval_bipoly(f: dict, a: CycloNum, b: CycloNum) -> CycloNum:
    total = CycloNum.zero()
    pa: dict[int, CycloNum] = {0: CycloNum.one()}
    pb: dict[int, CycloNum] = {0: CycloNum.one()}

    def power(cache, base, k):
        if k not in cache:
            cache[k] = power(cache, base, k - 1) * base
        return cache[k]

    for (i, j), c in f.items():
        total = total + power(pa, a, i) * power(pb, b, j) * CycloNum.rational(c)
    return total


def beukers_smyth_check() -> dict:
    """Independent re-derivation of the single-integrality classes.

    For each n in {0, 2..9} and each sign/exponent variant g of f_n,
    eliminate y by a resultant against f_n and pick out the root-of-unity
    roots by cyclotomic-factor extraction; the union over variants gives
    the candidate orders of a.  Since the solution set is Galois-stable
    and the check only has to recover equivalence classes, it suffices to
    back-substitute x0 = e(1/d) and scan y over the same candidate orders
    (f_n is symmetric in x and y).  The canonicalized nondegenerate
    triples must reproduce the 16 classes.
    """
    recovered: set[UnityTriple] = set()
    variants = [(s1, s2, e) for s1 in (1, -1) for s2 in (1, -1) for e in (1, 2)
                if (s1, s2, e) != (1, 1, 1)]
    for n in [0] + list(range(2, 10)):
        fn = _f_n(n)
        orders: set[int] = set()
        for s1, s2, e in variants:
            g = _substituted(fn, s1, s2, e)
            res = _resultant_y(fn, g)
            if not res:
                # degenerate elimination; scan a safe window instead
                orders.update(range(1, 121))
            else:
                orders.update(roots_of_unity_orders(res))
        for d in sorted(orders):
            x0 = root_of_unity(1, d)
            ypoly = _y_poly_at(fn, x0)
            if all(c.is_zero() for c in ypoly):
                continue
            for dy in sorted(orders):
                for k in range(dy):
                    if gcd(k, dy) != 1:
                        continue
                    if not _eval_poly_list(ypoly, root_of_unity(k, dy)).is_zero():
                        continue
                    a = Fraction(1, d)
                    b = Fraction(k, dy)
                    t = UnityTriple.make(a, b, _mod1(-a - b))
                    q = t.abs_square_sum().try_rational()
                    if q is None or q != n:
                        continue
                    if not t.is_degenerate():
                        recovered.add(t.canonicalize())
    expected = set(single_integrality_classes())
    return {
        "recovered": tuple(sorted(recovered, key=lambda t: (t.order, t.entries()))),
        "missing": tuple(sorted(expected - recovered, key=lambda t: (t.order, t.entries()))),
        "extra": tuple(sorted(recovered - expected, key=lambda t: (t.order, t.entries()))),
        "ok": recovered == expected,
    }


def _y_poly_at(f: dict, x0: CycloNum) -> list[CycloNum]:
    dy = max(j for (_i, j) in f)
    out = [CycloNum.zero()] * (dy + 1)
    powers: dict[int, CycloNum] = {0: CycloNum.one()}

    def power(k):
        if k not in powers:
            powers[k] = power(k - 1) * x0
        return powers[k]

    for (i, j), c in f.items():
        out[j] = out[j] + power(i) * CycloNum.rational(c)
    return out


def _eval_poly_list(coeffs: list[CycloNum], y0: CycloNum) -> CycloNum:
    total = CycloNum.zero()
    for c in reversed(coeffs):
        total = total * y0 + c
    return total


# ---------------------------------------------------------------------------
# restricted rationality for matrix groups in the SU(3) picture


def restricted_rationality(elements) -> bool:
    """|Trace(A)|^2 integral for every 3x3 matrix A in the group."""
    for a in elements:
        tr = a[0][0] + a[1][1] + a[2][2]
        q = tr.abs_square().try_rational()
        if q is None or q.denominator != 1:
            return False
    return True
