"""Exact arithmetic in cyclotomic fields Q(zeta_n) of arbitrary conductor.

Elements are stored as rational linear combinations of roots of unity
e(k/n) = exp(2*pi*i*k/n), with exponents restricted to a fixed integral
(Zumbroich-style) basis of Q(zeta_n) over Q, so that equality and
zero-testing are term-wise.  The conductor is always minimal and never
congruent to 2 mod 4, hence the canonical form of an element is unique.

Basis convention, per prime power q = p^a dividing n (digits via CRT):
  * p odd:  digit in [0, (p-1)*p^(a-1));  the relation
            sum_{t=0..p-1} e((c + t*p^(a-1))/q) = 0 rewrites the rest.
  * p = 2, a = 1: digit 0 only (e(1/2) = -1).
  * p = 2, a >= 2: digit in [0, 2^(a-1)); e(c/q) = -e((c - 2^(a-1))/q).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
import cmath
import re


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


@lru_cache(maxsize=None)
def _factorize(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, d**e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, n))
    return tuple(out)


@lru_cache(maxsize=None)
def _expand_table(n: int) -> dict[int, tuple[tuple[int, int], ...]]:
    """e(k/n) as a signed sum of basis exponents, for every k mod n.

    The digit of k at a prime power q || n is c = k*(n/q)^(-1) mod q;
    shifting that digit by d replaces k with k + d*(n/q) mod n and leaves
    the digits at all other primes unchanged.
    """
    if n == 1:
        return {0: ((0, 1),)}
    table: dict[int, tuple[tuple[int, int], ...]] = {}
    factors = []
    for p, q in _factorize(n):
        m = n // q
        factors.append((p, q, m, pow(m, -1, q) if m > 1 else 1 % q))
    for k in range(n):
        terms = {k: 1}
        for p, q, m, u in factors:
            step = q // p
            new_terms: dict[int, int] = {}
            for kk, s in terms.items():
                c = (kk * u) % q
                if p == 2:
                    if c < step:
                        new_terms[kk] = new_terms.get(kk, 0) + s
                    else:
                        kk2 = (kk - step * m) % n
                        new_terms[kk2] = new_terms.get(kk2, 0) - s
                else:
                    if c // step < p - 1:
                        new_terms[kk] = new_terms.get(kk, 0) + s
                    else:
                        base = c - (p - 1) * step
                        for t in range(p - 1):
                            kk2 = (kk + (base + t * step - c) * m) % n
                            new_terms[kk2] = new_terms.get(kk2, 0) - s
            terms = {kk: s for kk, s in new_terms.items() if s}
        table[k] = tuple(sorted(terms.items()))
    return table


class CycloNum:
    """An exact element of a cyclotomic field, canonical and immutable."""

    __slots__ = ("n", "c", "_hash")

    def __init__(self, n: int, c: dict[int, Fraction], _canonical: bool = False):
        if _canonical:
            self.n = n
            self.c = c
        else:
            m, cc = _canonicalize(n, c)
            self.n = m
            self.c = cc
        self._hash = None

    # -- constructors ------------------------------------------------

    @staticmethod
    def rational(q) -> "CycloNum":
        q = Fraction(q)
        return CycloNum(1, {0: q} if q else {}, _canonical=True)

    @staticmethod
    def zero() -> "CycloNum":
        return _ZERO

    @staticmethod
    def one() -> "CycloNum":
        return _ONE

    # -- canonical accessors ------------------------------------------

    @property
    def conductor(self) -> int:
        return self.n

    def is_zero(self) -> bool:
        return not self.c

    def is_rational(self) -> bool:
        return self.n == 1

    def try_rational(self):
        """The exact rational value, or None when the element is irrational."""
        if self.n != 1:
            return None
        return self.c.get(0, Fraction(0))

    def is_integer(self) -> bool:
        q = self.try_rational()
        return q is not None and q.denominator == 1

    # -- arithmetic ----------------------------------------------------

    def _lift(self, m: int) -> dict[int, Fraction]:
        r = m // self.n
        return {k * r: v for k, v in self.c.items()}

    def __add__(self, other) -> "CycloNum":
        if not isinstance(other, CycloNum):
            other = CycloNum.rational(other)
        if self.n == other.n:
            c = dict(self.c)
            for k, v in other.c.items():
                w = c.get(k)
                if w is None:
                    c[k] = v
                else:
                    w = w + v
                    if w:
                        c[k] = w
                    else:
                        del c[k]
            if self.n == 1:
                return CycloNum(1, c, _canonical=True)
            return CycloNum(self.n, c)
        m = _lcm(self.n, other.n)
        c = self._lift(m)
        for k, v in other._lift(m).items():
            w = c.get(k)
            if w is None:
                c[k] = v
            else:
                w = w + v
                if w:
                    c[k] = w
                else:
                    del c[k]
        return CycloNum(m, c)

    __radd__ = __add__

    def __neg__(self) -> "CycloNum":
        return CycloNum(self.n, {k: -v for k, v in self.c.items()}, _canonical=True)

    def __sub__(self, other) -> "CycloNum":
        if not isinstance(other, CycloNum):
            other = CycloNum.rational(other)
        return self + (-other)

    def __rsub__(self, other) -> "CycloNum":
        return CycloNum.rational(other) + (-self)

    def __mul__(self, other) -> "CycloNum":
        if not isinstance(other, CycloNum):
            other = CycloNum.rational(other)
        if self.n == 1:
            q = self.c.get(0)
            if q is None:
                return _ZERO
            return CycloNum(other.n, {k: q * v for k, v in other.c.items()}, _canonical=True)
        if other.n == 1:
            q = other.c.get(0)
            if q is None:
                return _ZERO
            return CycloNum(self.n, {k: q * v for k, v in self.c.items()}, _canonical=True)
        m = _lcm(self.n, other.n)
        a = self._lift(m) if m != self.n else self.c
        b = other._lift(m) if m != other.n else other.c
        c: dict[int, Fraction] = {}
        for k1, v1 in a.items():
            for k2, v2 in b.items():
                k = k1 + k2
                if k >= m:
                    k -= m
                w = c.get(k)
                if w is None:
                    c[k] = v1 * v2
                else:
                    w = w + v1 * v2
                    if w:
                        c[k] = w
                    else:
                        del c[k]
        return CycloNum(m, c)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "CycloNum":
        if isinstance(other, CycloNum):
            return self * other.inverse()
        return self * CycloNum.rational(Fraction(1, 1) / Fraction(other))

    def conj(self) -> "CycloNum":
        return CycloNum(self.n, {(-k) % self.n: v for k, v in self.c.items()})

    def galois(self, m: int) -> "CycloNum":
        """Apply e(k/n) -> e(m*k/n); m must be coprime to the conductor."""
        if gcd(m, self.n) != 1:
            raise ValueError(f"galois multiplier {m} not coprime to conductor {self.n}")
        return CycloNum(self.n, {(m * k) % self.n: v for k, v in self.c.items()})

    def abs_square(self) -> "CycloNum":
        return self * self.conj()

    def inverse(self) -> "CycloNum":
        """Multiplicative inverse via the product of Galois conjugates."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        if self.n == 1:
            return CycloNum.rational(Fraction(1, 1) / self.c[0])
        prod = _ONE
        for m in range(2, self.n):
            if gcd(m, self.n) == 1:
                prod = prod * self.galois(m)
        norm = (self * prod).try_rational()
        if norm is None or norm == 0:
            raise ZeroDivisionError("norm computation failed; element not invertible")
        return prod * CycloNum.rational(Fraction(1, 1) / norm)

    # -- comparisons and hashing ---------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.n == 1 and self.c.get(0, Fraction(0)) == other
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self.n == other.n and self.c == other.c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.c.items())))
        return self._hash

    def sort_key(self):
        return (self.n, tuple(sorted((k, v.numerator, v.denominator) for k, v in self.c.items())))

    # -- conversions ----------------------------------------------------

    def to_complex(self) -> complex:
        return sum(
            complex(v) * cmath.exp(2j * cmath.pi * k / self.n) for k, v in self.c.items()
        )

    def to_literal(self) -> str:
        """Serialize in the text grammar: q, e(a/b), q*e(a/b), joined by +/-."""
        if not self.c:
            return "0"
        parts = []
        for k in sorted(self.c):
            v = self.c[k]
            sign = "-" if v < 0 else "+"
            av = -v if v < 0 else v
            if k == 0:
                body = str(av)
            elif av == 1:
                body = f"e({Fraction(k, self.n)})"
            else:
                body = f"{av}*e({Fraction(k, self.n)})"
            parts.append((sign, body))
        s0, b0 = parts[0]
        out = ("-" if s0 == "-" else "") + b0
        for s, b in parts[1:]:
            out += s + b
        return out

    def __repr__(self):
        return f"CycloNum({self.to_literal()})"


def _canonicalize(n: int, c: dict[int, Fraction]) -> tuple[int, dict[int, Fraction]]:
    if n < 1:
        raise ValueError("conductor must be positive")
    table = _expand_table(n)
    out: dict[int, Fraction] = {}
    for k, v in c.items():
        if not v:
            continue
        for j, s in table[k % n]:
            w = out.get(j)
            if w is None:
                out[j] = v if s == 1 else v * s
            else:
                w = w + (v if s == 1 else v * s)
                if w:
                    out[j] = w
                else:
                    del out[j]
    if not out:
        return 1, {}
    # conductor reduction; dividing exponents may leave the lower basis,
    # so recurse (depth is bounded by the number of prime factors of n)
    for p, _q in _factorize(n):
        if all(k % p == 0 for k in out):
            return _canonicalize(n // p, {k // p: v for k, v in out.items()})
    if n > 1 and n % 4 == 2:
        raise AssertionError("canonical conductor 2 mod 4 should have been reduced")
    return n, out


_ZERO = CycloNum(1, {}, _canonical=True)
_ONE = CycloNum(1, {0: Fraction(1)}, _canonical=True)


def root_of_unity(num: int, den: int) -> CycloNum:
    """e(num/den) in canonical form; den reduced by gcd with num."""
    if den < 1:
        raise ValueError("denominator must be >= 1")
    num %= den
    g = gcd(num, den)
    if g > 1:
        num //= g
        den //= g
    return CycloNum(den, {num: Fraction(1)})


def from_fraction_of_turn(x: Fraction) -> CycloNum:
    x = Fraction(x)
    return root_of_unity(x.numerator % x.denominator, x.denominator)


_TOKEN = re.compile(r"\s*([+-]|\d+/\d+|\d+|e\(|\)|\*)")


def parse_literal(s: str) -> CycloNum:
    """Parse the grammar emitted by ``to_literal`` (bit-exact round trip)."""
    pos = 0
    total = CycloNum.zero()
    sign = 1
    coef = None
    s = s.strip()
    if s == "0":
        return total
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            raise ValueError(f"bad cyclotomic literal at {s[pos:]!r}")
        tok = m.group(1)
        pos = m.end()
        if tok in "+-":
            if coef is not None:
                total = total + CycloNum.rational(sign * coef)
                coef = None
            sign = 1 if tok == "+" else -1
        elif tok == "*":
            continue
        elif tok == "e(":
            m2 = re.match(r"\s*(\d+)\s*/\s*(\d+)\s*\)", s[pos:]) or re.match(
                r"\s*(\d+)\s*\)", s[pos:]
            )
            if not m2:
                raise ValueError(f"bad root-of-unity literal at {s[pos:]!r}")
            if m2.lastindex == 2:
                num, den = int(m2.group(1)), int(m2.group(2))
            else:
                num, den = int(m2.group(1)), 1
            pos += m2.end()
            q = coef if coef is not None else Fraction(1)
            total = total + CycloNum.rational(sign * q) * root_of_unity(num, den)
            coef = None
            sign = 1
        else:
            coef = Fraction(tok)
    if coef is not None:
        total = total + CycloNum.rational(sign * coef)
    return total
