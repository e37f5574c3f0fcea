"""Sparse multivariate Laurent polynomials over CycloNum.

Terms are kept in a dict mapping integer exponent tuples to nonzero
CycloNum coefficients; the rank (number of torus variables) is fixed per
polynomial.  These carry all the symbolic weight data: restricted
characters, coset characteristic-polynomial coefficients and Weyl
alternants.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclo import CycloNum


class LaurentPoly:
    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: dict[tuple[int, ...], CycloNum] | None = None,
                 _clean: bool = False):
        self.rank = rank
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = terms
        else:
            self.terms = {e: c for e, c in terms.items() if not c.is_zero()}

    # -- constructors --------------------------------------------------

    @staticmethod
    def zero(rank: int) -> "LaurentPoly":
        return LaurentPoly(rank, {}, _clean=True)

    @staticmethod
    def const(rank: int, c) -> "LaurentPoly":
        if not isinstance(c, CycloNum):
            c = CycloNum.rational(c)
        if c.is_zero():
            return LaurentPoly.zero(rank)
        return LaurentPoly(rank, {(0,) * rank: c}, _clean=True)

    @staticmethod
    def one(rank: int) -> "LaurentPoly":
        return LaurentPoly.const(rank, 1)

    @staticmethod
    def monomial(exp: tuple[int, ...], coef=1) -> "LaurentPoly":
        if not isinstance(coef, CycloNum):
            coef = CycloNum.rational(coef)
        if coef.is_zero():
            return LaurentPoly.zero(len(exp))
        return LaurentPoly(len(exp), {tuple(exp): coef}, _clean=True)

    @staticmethod
    def variable(rank: int, i: int, power: int = 1) -> "LaurentPoly":
        e = [0] * rank
        e[i] = power
        return LaurentPoly.monomial(tuple(e))

    # -- basics ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0,) * self.rank in self.terms)

    def constant_value(self) -> CycloNum:
        return self.terms.get((0,) * self.rank, CycloNum.zero())

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    # -- ring operations --------------------------------------------------

    def _check(self, other: "LaurentPoly"):
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(self.rank, other)
        self._check(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            w = t.get(e)
            if w is None:
                t[e] = c
            else:
                w = w + c
                if w.is_zero():
                    del t[e]
                else:
                    t[e] = w
        return LaurentPoly(self.rank, t, _clean=True)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.rank, {e: -c for e, c in self.terms.items()}, _clean=True)

    def __sub__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(self.rank, other)
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return LaurentPoly.const(self.rank, other) + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        t: dict[tuple[int, ...], CycloNum] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                c = c1 * c2
                w = t.get(e)
                if w is None:
                    if not c.is_zero():
                        t[e] = c
                else:
                    w = w + c
                    if w.is_zero():
                        del t[e]
                    else:
                        t[e] = w
        return LaurentPoly(self.rank, t, _clean=True)

    __rmul__ = __mul__

    def scale(self, c) -> "LaurentPoly":
        if not isinstance(c, CycloNum):
            c = CycloNum.rational(c)
        if c.is_zero():
            return LaurentPoly.zero(self.rank)
        return LaurentPoly(self.rank, {e: v * c for e, v in self.terms.items()}, _clean=True)

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative power of a Laurent polynomial")
        out = LaurentPoly.one(self.rank)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- structure operations -----------------------------------------------

    def coeff_slice(self, var: int, power: int) -> "LaurentPoly":
        """Terms with the given exponent at `var`, as a poly in the rest."""
        if var >= self.rank:
            raise ValueError("variable index out of range")
        t: dict[tuple[int, ...], CycloNum] = {}
        for e, c in self.terms.items():
            if e[var] == power:
                t[e[:var] + e[var + 1:]] = c
        return LaurentPoly(self.rank - 1, t, _clean=True)

    def substitute_u3(self) -> "LaurentPoly":
        """Monomial substitution u1 -> u*w, u2 -> v*w, u3 -> 1/(u*v) * w."""
        if self.rank != 3:
            raise ValueError("substitute_u3 requires rank 3")
        t: dict[tuple[int, ...], CycloNum] = {}
        for (k1, k2, k3), c in self.terms.items():
            e = (k1 - k3, k2 - k3, k1 + k2 + k3)
            w = t.get(e)
            if w is None:
                t[e] = c
            else:
                w = w + c
                if w.is_zero():
                    del t[e]
                else:
                    t[e] = w
        return LaurentPoly(3, t, _clean=True)

    def apply_weyl(self, action) -> "LaurentPoly":
        """Apply a signed permutation (perm, signs) to the variables.

        The new exponent vector is e'[i] = signs[i] * e[perm[i]].
        """
        perm, signs = action
        t: dict[tuple[int, ...], CycloNum] = {}
        for e, c in self.terms.items():
            e2 = tuple(signs[i] * e[perm[i]] for i in range(self.rank))
            w = t.get(e2)
            if w is None:
                t[e2] = c
            else:
                t[e2] = w + c
        return LaurentPoly(self.rank, t)

    def invariant_under(self, action) -> bool:
        perm, signs = action
        for e, c in self.terms.items():
            e2 = tuple(signs[i] * e[perm[i]] for i in range(self.rank))
            if self.terms.get(e2) != c:
                return False
        return True

    def eval_ones(self) -> CycloNum:
        """Value at u_i = 1 for all i (dimension count for characters)."""
        total = CycloNum.zero()
        for c in self.terms.values():
            total = total + c
        return total

    def drop_vars(self, keep: tuple[int, ...]) -> "LaurentPoly":
        """Project onto a subset of variables; others must not occur."""
        t: dict[tuple[int, ...], CycloNum] = {}
        kept = set(keep)
        for e, c in self.terms.items():
            if any(e[i] for i in range(self.rank) if i not in kept):
                raise ValueError("dropped variable occurs in polynomial")
            t[tuple(e[i] for i in keep)] = c
        return LaurentPoly(len(keep), t, _clean=True)

    def __repr__(self):
        if not self.terms:
            return "0"
        names = ["u1", "u2", "u3"][: self.rank]
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            mono = " ".join(f"{names[i]}^{e[i]}" for i in range(self.rank) if e[i])
            parts.append(f"({c.to_literal()})" + (" " + mono if mono else ""))
        return " + ".join(parts)
