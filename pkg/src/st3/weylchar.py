"""Weyl groups, the Weyl character formula, and trivial-multiplicity
extraction for the connected pieces used by Sato-Tate groups of abelian
threefolds: U(1), SU(2), U(3), USp(4) and USp(6), with diagonal
multiplicities.

The central operation is `trivial_multiplicity`: given the restriction of
a virtual character to the maximal torus of a connected group (a Weyl
invariant Laurent polynomial), compute the multiplicity of the trivial
representation.  U(1) factors are removed by taking the constant slice,
SU(2) factors by the [u^0] - [u^2] rule, U(3) is reduced to SU(3) by a
monomial substitution, and the remaining simple factor is handled by
peeling off highest-weight characters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from .cyclo import CycloNum
from .laurent import LaurentPoly


# ---------------------------------------------------------------------------
# partitions


class Partition3(tuple):
    """Partition l1 >= l2 >= l3 >= 0 indexing an irreducible USp(6) character."""

    def __new__(cls, l1, l2=0, l3=0):
        if isinstance(l1, (tuple, list)):
            l1, l2, l3 = (tuple(l1) + (0, 0, 0))[:3]
        if not (l1 >= l2 >= l3 >= 0):
            raise ValueError(f"not a partition: {(l1, l2, l3)}")
        return tuple.__new__(cls, (l1, l2, l3))

    @property
    def weight(self) -> int:
        return sum(self)


def subpartitions(m: int) -> list[Partition3]:
    """All partitions fitting inside the cube (m, m, m), 20 of them for m=3."""
    out = []
    for l1 in range(m + 1):
        for l2 in range(l1 + 1):
            for l3 in range(l2 + 1):
                out.append(Partition3(l1, l2, l3))
    return out


# ---------------------------------------------------------------------------
# Weyl groups as signed permutations


def _signed_perms(r: int):
    for perm in permutations(range(r)):
        inv = 0
        for i in range(r):
            for j in range(i + 1, r):
                if perm[i] > perm[j]:
                    inv += 1
        psign = -1 if inv % 2 else 1
        for signs in product((1, -1), repeat=r):
            s = 1
            for x in signs:
                s *= x
            yield (perm, signs), psign * s


def _alternant(mu: tuple[int, ...], group) -> LaurentPoly:
    r = len(mu)
    terms: dict[tuple[int, ...], CycloNum] = {}
    for (perm, signs), sgn in group:
        e = tuple(signs[i] * mu[perm[i]] for i in range(r))
        c = terms.get(e, CycloNum.zero()) + CycloNum.rational(sgn)
        if c.is_zero():
            terms.pop(e, None)
        else:
            terms[e] = c
    return LaurentPoly(r, terms, _clean=True)


def _su3_orbit(mu: tuple[int, int]):
    """S3 orbit of an SU(3) weight in 2-variable coordinates, with signs."""
    c = (mu[0], mu[1], 0)
    for perm in permutations(range(3)):
        inv = sum(1 for i in range(3) for j in range(i + 1, 3) if perm[i] > perm[j])
        p = (c[perm[0]], c[perm[1]], c[perm[2]])
        yield (p[0] - p[2], p[1] - p[2]), (-1 if inv % 2 else 1)


def _su3_alternant(mu: tuple[int, int]) -> LaurentPoly:
    terms: dict[tuple[int, ...], CycloNum] = {}
    for e, sgn in _su3_orbit(mu):
        c = terms.get(e, CycloNum.zero()) + CycloNum.rational(sgn)
        if c.is_zero():
            terms.pop(e, None)
        else:
            terms[e] = c
    return LaurentPoly(2, terms, _clean=True)


_W_USP6 = None
_W_USP4 = None


def _weyl_usp6():
    global _W_USP6
    if _W_USP6 is None:
        _W_USP6 = list(_signed_perms(3))
    return _W_USP6


def _weyl_usp4():
    global _W_USP4
    if _W_USP4 is None:
        _W_USP4 = list(_signed_perms(2))
    return _W_USP4


def _divide_alternants(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact division in the Laurent ring using the lex leading term.

    A nonzero remainder is an internal error, not a data condition.
    """
    lead = max(den.terms)
    lc = den.terms[lead]
    rem = dict(num.terms)
    quot: dict[tuple[int, ...], CycloNum] = {}
    prev = None
    while rem:
        e = max(rem)
        if prev is not None and not e < prev:
            raise AssertionError("alternant division failed to make progress")
        prev = e
        c = rem[e] / lc if lc != CycloNum.one() else rem[e]
        shift = tuple(a - b for a, b in zip(e, lead))
        quot[shift] = c
        for e2, c2 in den.terms.items():
            tgt = tuple(a + b for a, b in zip(shift, e2))
            w = rem.get(tgt, CycloNum.zero()) - c * c2
            if w.is_zero():
                rem.pop(tgt, None)
            else:
                rem[tgt] = w
    return LaurentPoly(num.rank, quot, _clean=True)


# ---------------------------------------------------------------------------
# characters of the simple factors (memoized)


@lru_cache(maxsize=None)
def char_usp6(lam: tuple[int, int, int]) -> LaurentPoly:
    l1, l2, l3 = lam
    if not (l1 >= l2 >= l3 >= 0):
        raise ValueError(f"non-dominant weight for USp(6): {lam}")
    rho = (3, 2, 1)
    num = _alternant((l1 + 3, l2 + 2, l3 + 1), _weyl_usp6())
    den = _alternant(rho, _weyl_usp6())
    return _divide_alternants(num, den)


@lru_cache(maxsize=None)
def char_usp4(lam: tuple[int, int]) -> LaurentPoly:
    l1, l2 = lam
    if not (l1 >= l2 >= 0):
        raise ValueError(f"non-dominant weight for USp(4): {lam}")
    num = _alternant((l1 + 2, l2 + 1), _weyl_usp4())
    den = _alternant((2, 1), _weyl_usp4())
    return _divide_alternants(num, den)


@lru_cache(maxsize=None)
def char_su3(lam: tuple[int, int]) -> LaurentPoly:
    a, b = lam
    if not (a >= b >= 0):
        raise ValueError(f"non-dominant weight for SU(3): {lam}")
    num = _su3_alternant((a + 2, b + 1))
    den = _su3_alternant((2, 1))
    return _divide_alternants(num, den)


@lru_cache(maxsize=None)
def char_su2(m: int) -> LaurentPoly:
    if m < 0:
        raise ValueError("non-dominant weight for SU(2)")
    return LaurentPoly(1, {(k,): CycloNum.one() for k in range(-m, m + 1, 2)}, _clean=True)


def character(kind: str, lam) -> LaurentPoly:
    """Irreducible character of a simple/classical factor on its torus."""
    if kind == "USp6":
        return char_usp6(tuple(lam))
    if kind == "USp4":
        return char_usp4(tuple(lam))
    if kind == "SU3":
        return char_su3(tuple(lam))
    if kind == "SU2":
        return char_su2(int(lam))
    raise ValueError(f"no character formula for factor kind {kind!r}")


# ---------------------------------------------------------------------------
# peeling


def _peel(F: LaurentPoly, char_fn, shift_to_weight) -> dict:
    """Decompose a Weyl-invariant Laurent polynomial into irreducible
    characters by repeatedly removing the lexicographically greatest
    dominant term.  Returns {dominant weight: coefficient}."""
    out: dict[tuple, Fraction] = {}
    prev = None
    while not F.is_zero():
        e = max(F.terms)
        if prev is not None and not e < prev:
            raise AssertionError("peeling failed to make progress")
        prev = e
        lam = shift_to_weight(e)
        if lam is None:
            raise ValueError(f"leading term {e} is not dominant; input not Weyl-invariant")
        c = F.terms[e].try_rational()
        if c is None:
            # class functions of the groups handled here always decompose
            # with rational multiplicities
            raise ValueError(f"irrational multiplicity at weight {lam}")
        F = F - char_fn(lam).scale(CycloNum.rational(c))
        out[lam] = out.get(lam, 0) + c
    return out


def _dominant_c(e):
    ok = all(e[i] >= e[i + 1] for i in range(len(e) - 1)) and e[-1] >= 0
    return tuple(e) if ok else None


def _dominant_su3(e):
    a, b = e
    return (a, b) if a >= b >= 0 else None


def decompose_usp6(F: LaurentPoly) -> dict[tuple[int, int, int], Fraction]:
    """Full decomposition of a rank-3 symplectic class function."""
    return _peel(F, char_usp6, _dominant_c)


def peel_trivial_usp6(F: LaurentPoly) -> Fraction:
    return Fraction(decompose_usp6(F).get((0, 0, 0), 0))


def peel_trivial_usp4(F: LaurentPoly) -> Fraction:
    return Fraction(_peel(F, char_usp4, _dominant_c).get((0, 0), 0))


def peel_trivial_su3(F: LaurentPoly) -> Fraction:
    return Fraction(_peel(F, char_su3, _dominant_su3).get((0, 0), 0))


# ---------------------------------------------------------------------------
# connected types


@dataclass(frozen=True)
class Factor:
    kind: str              # U1 | SU2 | USp4 | USp6 | U3
    vars: tuple[int, ...]  # torus variable indices
    pairs: tuple[int, ...] # coordinate pairs (x_k, y_k) occupied

    @property
    def mult(self) -> int:
        if self.kind in ("U1", "SU2"):
            return len(self.pairs)
        return 1


@dataclass(frozen=True)
class ConnectedType:
    name: str
    letter: str
    rank: int
    factors: tuple[Factor, ...]

    @property
    def weight_map(self) -> tuple[tuple[int, ...], ...]:
        """Exponent vector of each of the six eigenvalue slots.

        Slots are ordered (x1, x2, x3, y1, y2, y3) for the symplectic form
        with J = [[0, I3], [-I3, 0]]; slot y_k carries the negated vector
        of slot x_k.
        """
        w = [None] * 6
        for f in self.factors:
            if f.kind in ("U1", "SU2"):
                v = f.vars[0]
                for p in f.pairs:
                    e = [0] * self.rank
                    e[v] = 1
                    w[p] = tuple(e)
            elif f.kind in ("USp4", "USp6", "U3"):
                for v, p in zip(f.vars, f.pairs):
                    e = [0] * self.rank
                    e[v] = 1
                    w[p] = tuple(e)
        for k in range(3):
            w[k + 3] = tuple(-x for x in w[k])
        return tuple(w)

    def weyl_generators(self):
        """Signed-permutation generators of the Weyl group action."""
        gens = []
        idp = tuple(range(self.rank))
        ids = (1,) * self.rank
        for f in self.factors:
            if f.kind == "SU2":
                v = f.vars[0]
                signs = tuple(-1 if i == v else 1 for i in range(self.rank))
                gens.append((idp, signs))
            elif f.kind in ("USp4", "USp6"):
                vs = f.vars
                perm = list(idp)
                perm[vs[0]], perm[vs[1]] = perm[vs[1]], perm[vs[0]]
                gens.append((tuple(perm), ids))
                signs = tuple(-1 if i == vs[0] else 1 for i in range(self.rank))
                gens.append((idp, signs))
                if f.kind == "USp6":
                    perm = list(idp)
                    perm[vs[1]], perm[vs[2]] = perm[vs[2]], perm[vs[1]]
                    gens.append((tuple(perm), ids))
            elif f.kind == "U3":
                vs = f.vars
                perm = list(idp)
                perm[vs[0]], perm[vs[1]] = perm[vs[1]], perm[vs[0]]
                gens.append((tuple(perm), ids))
                perm = list(idp)
                perm[vs[1]], perm[vs[2]] = perm[vs[2]], perm[vs[1]]
                gens.append((tuple(perm), ids))
        return gens

    def weyl_order(self) -> int:
        n = 1
        for f in self.factors:
            n *= {"U1": 1, "SU2": 2, "USp4": 8, "USp6": 48, "U3": 6}[f.kind]
        return n


def _ct(name, letter, factors):
    rank = max(v for f in factors for v in f.vars) + 1
    return ConnectedType(name, letter, rank, tuple(factors))


CONNECTED_TYPES: dict[str, ConnectedType] = {
    "A": _ct("USp(6)", "A", [Factor("USp6", (0, 1, 2), (0, 1, 2))]),
    "B": _ct("U(3)", "B", [Factor("U3", (0, 1, 2), (0, 1, 2))]),
    "C": _ct("SU(2)xUSp(4)", "C", [Factor("SU2", (0,), (0,)), Factor("USp4", (1, 2), (1, 2))]),
    "D": _ct("U(1)xUSp(4)", "D", [Factor("U1", (0,), (0,)), Factor("USp4", (1, 2), (1, 2))]),
    "E": _ct("SU(2)xSU(2)xSU(2)", "E",
             [Factor("SU2", (0,), (0,)), Factor("SU2", (1,), (1,)), Factor("SU2", (2,), (2,))]),
    "F": _ct("U(1)xSU(2)xSU(2)", "F",
             [Factor("U1", (0,), (0,)), Factor("SU2", (1,), (1,)), Factor("SU2", (2,), (2,))]),
    "G": _ct("U(1)xU(1)xSU(2)", "G",
             [Factor("U1", (0,), (0,)), Factor("U1", (1,), (1,)), Factor("SU2", (2,), (2,))]),
    "H": _ct("U(1)xU(1)xU(1)", "H",
             [Factor("U1", (0,), (0,)), Factor("U1", (1,), (1,)), Factor("U1", (2,), (2,))]),
    "I": _ct("SU(2)xSU(2)_2", "I", [Factor("SU2", (0,), (0,)), Factor("SU2", (1,), (1, 2))]),
    "J": _ct("U(1)xSU(2)_2", "J", [Factor("U1", (0,), (0,)), Factor("SU2", (1,), (1, 2))]),
    "K": _ct("SU(2)xU(1)_2", "K", [Factor("SU2", (0,), (0,)), Factor("U1", (1,), (1, 2))]),
    "L": _ct("U(1)xU(1)_2", "L", [Factor("U1", (0,), (0,)), Factor("U1", (1,), (1, 2))]),
    "M": _ct("SU(2)_3", "M", [Factor("SU2", (0,), (0, 1, 2))]),
    "N": _ct("U(1)_3", "N", [Factor("U1", (0,), (0, 1, 2))]),
}


# ---------------------------------------------------------------------------
# trivial multiplicity over a connected type


def check_weyl_invariant(t: ConnectedType, F: LaurentPoly) -> bool:
    return all(F.invariant_under(g) for g in t.weyl_generators())


def trivial_multiplicity(t: ConnectedType, F: LaurentPoly) -> Fraction:
    """Multiplicity of the trivial representation in the virtual character
    whose torus restriction is F (the class-function certificate is
    checked first)."""
    if F.rank != t.rank:
        raise ValueError("rank mismatch between type and polynomial")
    if not check_weyl_invariant(t, F):
        raise ValueError(f"input is not Weyl-invariant for {t.name}")
    return _trivial_mult_unchecked(t, F)


def _trivial_mult_unchecked(t: ConnectedType, F: LaurentPoly) -> Fraction:
    # eliminate U(1) and SU(2) factors by slices, highest variable first
    big = None
    small: list[tuple[int, str]] = []
    for f in t.factors:
        if f.kind == "U1":
            small.append((f.vars[0], "U1"))
        elif f.kind == "SU2":
            small.append((f.vars[0], "SU2"))
        else:
            big = f
    for v, kind in sorted(small, reverse=True):
        if kind == "U1":
            F = F.coeff_slice(v, 0)
        else:
            F = F.coeff_slice(v, 0) - F.coeff_slice(v, 2)
    if big is None:
        c = F.terms.get((), CycloNum.zero())
        q = c.try_rational()
        if q is None:
            raise ValueError("average of a class function came out irrational")
        return q
    if big.kind == "USp6":
        return peel_trivial_usp6(F)
    if big.kind == "USp4":
        return peel_trivial_usp4(F)
    if big.kind == "U3":
        E = F.substitute_u3().coeff_slice(2, 0)
        return peel_trivial_su3(E)
    raise AssertionError(f"unhandled factor kind {big.kind}")


# ---------------------------------------------------------------------------
# characters of USp(6) in terms of characteristic polynomial coefficients


def _elementary_apolys() -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    """a1, a2, a3 on the USp(6) torus: signed elementary symmetric functions
    of the six eigenvalue monomials."""
    monos = [LaurentPoly.variable(3, i, s) for i in range(3) for s in (1, -1)]
    e1 = LaurentPoly.zero(3)
    for m in monos:
        e1 = e1 + m
    e2 = LaurentPoly.zero(3)
    e3 = LaurentPoly.zero(3)
    n = len(monos)
    for i in range(n):
        for j in range(i + 1, n):
            e2 = e2 + monos[i] * monos[j]
            for k in range(j + 1, n):
                e3 = e3 + monos[i] * monos[j] * monos[k]
    return -e1, e2, -e3


_APOLYS = None


def apolys_usp6():
    global _APOLYS
    if _APOLYS is None:
        _APOLYS = _elementary_apolys()
    return _APOLYS


@lru_cache(maxsize=None)
def char_in_coeffs(lam: tuple[int, int, int]) -> dict[tuple[int, int, int], int]:
    """chi_lambda as an integer polynomial in a1, a2, a3.

    Peels the torus character against products of the elementary
    coefficient functions; the lex-leading monomial of a1^i a2^j a3^k is
    (-1)^(i+k) u1^(i+j+k) u2^(j+k) u3^k, so dominant terms map bijectively
    to coefficient monomials.
    """
    lam = tuple(lam)
    A1, A2, A3 = apolys_usp6()
    X = char_usp6(lam)
    out: dict[tuple[int, int, int], int] = {}
    prev = None
    while not X.is_zero():
        e = max(X.terms)
        if prev is not None and not e < prev:
            raise AssertionError("char_in_coeffs failed to make progress")
        prev = e
        p1, p2, p3 = e
        if not (p1 >= p2 >= p3 >= 0):
            raise AssertionError(f"non-dominant leading term {e}")
        i, j, k = p1 - p2, p2 - p3, p3
        c = X.terms[e].try_rational()
        if c is None or c.denominator != 1:
            raise AssertionError("character coefficient not an integer")
        coef = int(c) * (-1 if (i + k) % 2 else 1)
        out[(i, j, k)] = coef
        sub = (A1 ** i) * (A2 ** j) * (A3 ** k)
        X = X - sub.scale(coef)
    return out


def nu3_multiplicity(lam, normalized: bool) -> int:
    """Trivial multiplicity of chi_lambda restricted to U(3), or to the
    normalizer of U(3) when `normalized` is set (closed form)."""
    a, b, c = tuple(lam)
    if a % 2 or b % 2 or c % 2:
        return 0
    if not normalized:
        return 1
    return 1 if (a + b + c) % 4 == 0 else 0


# ---------------------------------------------------------------------------
# polynomials in a1, a2, a3 (exponent dict -> rational)


def apoly_mul(f: dict, g: dict) -> dict:
    out: dict[tuple[int, int, int], Fraction] = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
            w = out.get(e, 0) + c1 * c2
            if w:
                out[e] = w
            else:
                out.pop(e, None)
    return out


def apoly_eval(f: dict, A1: LaurentPoly, A2: LaurentPoly, A3: LaurentPoly,
               power_cache: dict | None = None) -> LaurentPoly:
    """Evaluate a polynomial in a1, a2, a3 at Laurent-polynomial values."""
    rank = A1.rank
    out = LaurentPoly.zero(rank)
    if power_cache is None:
        power_cache = {}

    def pw(tag, base, k):
        key = (tag, k)
        got = power_cache.get(key)
        if got is None:
            got = base ** k
            power_cache[key] = got
        return got

    for (i, j, k), c in f.items():
        term = pw(1, A1, i) * pw(2, A2, j) * pw(3, A3, k)
        out = out + term.scale(CycloNum.rational(c))
    return out
