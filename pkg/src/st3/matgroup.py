"""Finite matrix groups over exact cyclotomic scalars.

Matrices are tuples of tuples of CycloNum.  Everything a Sato-Tate group
needs lives here: breadth-first closure with canonical hashing, the
quotient by the identity component (yielding the finite component group),
conjugacy classes, isomorphism-grade fingerprints, and the classification
of extensions of SU(3)-subgroups to the J-side.

All 6x6 data uses the symplectic form J = [[0, I3], [-I3, 0]] with
coordinate slots (x1, x2, x3, y1, y2, y3); a 3x3 unitary block A embeds
as diag(A, conj(A)) and the J element itself is the form matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .cyclo import CycloNum, parse_literal, root_of_unity
from .laurent import LaurentPoly
from .weylchar import ConnectedType

Mat = tuple  # tuple of row tuples of CycloNum

_ZERO = CycloNum.zero()
_ONE = CycloNum.one()


# ---------------------------------------------------------------------------
# basic matrix helpers


def mat(rows) -> Mat:
    return tuple(tuple(x if isinstance(x, CycloNum) else CycloNum.rational(x) for x in r)
                 for r in rows)


def identity(n: int) -> Mat:
    return tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n))


def mat_mul(a: Mat, b: Mat) -> Mat:
    n, m = len(a), len(b[0])
    k = len(b)
    bt = tuple(tuple(b[i][j] for i in range(k)) for j in range(m))
    out = []
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(m):
            bj = bt[j]
            s = _ZERO
            for t in range(k):
                x = ai[t]
                if not x.is_zero():
                    y = bj[t]
                    if not y.is_zero():
                        s = s + x * y
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def mat_conj(a: Mat) -> Mat:
    return tuple(tuple(x.conj() for x in r) for r in a)


def mat_transpose(a: Mat) -> Mat:
    return tuple(zip(*a))


def mat_conj_t(a: Mat) -> Mat:
    return mat_transpose(mat_conj(a))


def mat_inv_unitary(a: Mat) -> Mat:
    return mat_conj_t(a)


def mat_scale(a: Mat, c: CycloNum) -> Mat:
    return tuple(tuple(x * c for x in r) for r in a)


def mat_neg(a: Mat) -> Mat:
    return tuple(tuple(-x for x in r) for r in a)


def mat_trace(a: Mat) -> CycloNum:
    t = _ZERO
    for i in range(len(a)):
        t = t + a[i][i]
    return t


def mat_eq(a: Mat, b: Mat) -> bool:
    return a == b


def mat_sort_key(a: Mat):
    return tuple(x.sort_key() for r in a for x in r)


def is_unitary(a: Mat) -> bool:
    return mat_mul(a, mat_conj_t(a)) == identity(len(a))


def symplectic_form() -> Mat:
    rows = []
    for i in range(3):
        rows.append(tuple(_ONE if j == i + 3 else _ZERO for j in range(6)))
    for i in range(3):
        rows.append(tuple(-_ONE if j == i else _ZERO for j in range(6)))
    return tuple(rows)


def is_symplectic(a: Mat) -> bool:
    J = symplectic_form()
    return mat_mul(mat_transpose(a), mat_mul(J, a)) == J


def diag3(u: Fraction, v: Fraction, w: Fraction) -> Mat:
    """D(u, v, w) = Diag(e(u), e(v), e(w)) as an exact 3x3 matrix."""
    es = [root_of_unity(Fraction(x).numerator % Fraction(x).denominator,
                        Fraction(x).denominator) for x in (u, v, w)]
    return tuple(tuple(es[i] if i == j else _ZERO for j in range(3)) for i in range(3))


def su3_embed(a3: Mat) -> Mat:
    """A -> diag(A, conj(A)) in the (x, y)-block picture."""
    z = _ZERO
    out = []
    for i in range(3):
        out.append(tuple(a3[i]) + (z, z, z))
    c = mat_conj(a3)
    for i in range(3):
        out.append((z, z, z) + tuple(c[i]))
    return tuple(out)


def j_embed(a3: Mat) -> Mat:
    """J * diag(A, conj(A))."""
    return mat_mul(symplectic_form(), su3_embed(a3))


class MatrixG:
    """A validated element of USp(6): unitary and symplectic."""

    __slots__ = ("m",)

    def __init__(self, m: Mat, check: bool = True):
        if check:
            if len(m) != 6 or any(len(r) != 6 for r in m):
                raise ValueError("MatrixG requires a 6x6 matrix")
            if not is_unitary(m):
                raise ValueError("matrix is not unitary")
            if not is_symplectic(m):
                raise ValueError("matrix does not preserve the symplectic form")
        self.m = m

    def __mul__(self, other: "MatrixG") -> "MatrixG":
        return MatrixG(mat_mul(self.m, other.m), check=False)

    def __eq__(self, other):
        return isinstance(other, MatrixG) and self.m == other.m

    def __hash__(self):
        return hash(self.m)


# ---------------------------------------------------------------------------
# matrix literal grammar: rows ';'-separated, entries ','-separated


def mat_format(a: Mat) -> str:
    return ";".join(",".join(x.to_literal() for x in r) for r in a)


def mat_parse(s: str) -> Mat:
    return tuple(tuple(parse_literal(x) for x in row.split(",")) for row in s.split(";"))


# ---------------------------------------------------------------------------
# closure


class ClosureExceedsBound(Exception):
    pass


def close(gens, bound: int = 10000, mul=mat_mul, ident=None):
    """Breadth-first closure under multiplication, canonical hashing.

    Works for any hashable elements with an associative `mul`; raises
    ClosureExceedsBound past `bound` (signals wrong generators)."""
    if ident is None:
        n = len(gens[0])
        ident = identity(n)
    seen = {ident: 0}
    elements = [ident]
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    if len(elements) >= bound:
                        raise ClosureExceedsBound(
                            f"closure exceeded bound {bound}; wrong generators?")
                    seen[y] = len(elements)
                    elements.append(y)
                    new.append(y)
        frontier = new
    return elements


class FiniteGroup:
    """A finite matrix group as an explicit element list in closure order."""

    def __init__(self, elements: list, gens: list, mul=mat_mul):
        self.elements = elements
        self.gens = gens
        self.mul = mul
        self.index = {m: i for i, m in enumerate(elements)}

    @staticmethod
    def generate(gens, bound: int = 10000, mul=mat_mul, ident=None) -> "FiniteGroup":
        return FiniteGroup(close(list(gens), bound=bound, mul=mul, ident=ident),
                           list(gens), mul=mul)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, m):
        return m in self.index


# ---------------------------------------------------------------------------
# identity-component membership and torus normalization


def _block(m: Mat, rows, cols) -> Mat:
    return tuple(tuple(m[i][j] for j in cols) for i in rows)


def _is_zero_block(m: Mat, rows, cols) -> bool:
    return all(m[i][j].is_zero() for i in rows for j in cols)


def in_identity_component(m: Mat, conn: ConnectedType) -> bool:
    """Pattern test: does the 6x6 matrix lie in the embedded G^0?"""
    pair_sets = [f.pairs for f in conn.factors]
    # off-factor blocks must vanish
    for a, pa in enumerate(pair_sets):
        slots_a = list(pa) + [p + 3 for p in pa]
        for b, pb in enumerate(pair_sets):
            if a == b:
                continue
            slots_b = list(pb) + [p + 3 for p in pb]
            if not _is_zero_block(m, slots_a, slots_b):
                return False
    for f, pa in zip(conn.factors, pair_sets):
        xs = list(pa)
        ys = [p + 3 for p in pa]
        if f.kind == "U1":
            # diagonal, equal entries across the diagonal multiplicity
            slots = xs + ys
            for i in slots:
                for j in slots:
                    if i != j and not m[i][j].is_zero():
                        return False
            u = m[xs[0]][xs[0]]
            if any(m[i][i] != u for i in xs):
                return False
            uc = u.conj()
            if any(m[i][i] != uc for i in ys):
                return False
        elif f.kind == "SU2":
            # [[a I, b I], [c I, d I]] over the factor's pairs
            a = m[xs[0]][xs[0]]
            b = m[xs[0]][ys[0]]
            c = m[ys[0]][xs[0]]
            d = m[ys[0]][ys[0]]
            for k, p in enumerate(pa):
                for l, q in enumerate(pa):
                    want_a = a if k == l else _ZERO
                    want_b = b if k == l else _ZERO
                    want_c = c if k == l else _ZERO
                    want_d = d if k == l else _ZERO
                    if m[p][q] != want_a or m[p][q + 3] != want_b:
                        return False
                    if m[p + 3][q] != want_c or m[p + 3][q + 3] != want_d:
                        return False
            det = a * d - b * c
            if det != _ONE:
                return False
        elif f.kind == "U3":
            A = _block(m, xs, xs)
            if _block(m, ys, ys) != mat_conj(A):
                return False
            if not _is_zero_block(m, xs, ys) or not _is_zero_block(m, ys, xs):
                return False
        elif f.kind in ("USp4", "USp6"):
            continue  # whole factor group; pattern already enforced above
    return True


def normalizes_torus(m: Mat, conn: ConnectedType) -> bool:
    """Symbolic check that conjugation by m preserves the maximal torus of
    the embedded identity component."""
    wm = conn.weight_map
    rank = conn.rank
    dsym = tuple(
        tuple(LaurentPoly.monomial(wm[i]) if i == j else LaurentPoly.zero(rank)
              for j in range(6))
        for i in range(6)
    )
    mlp = tuple(tuple(LaurentPoly.const(rank, x) for x in r) for r in m)
    minv = tuple(tuple(LaurentPoly.const(rank, x) for x in r) for r in mat_inv_unitary(m))

    def lp_mul(a, b):
        n = len(a)
        return tuple(
            tuple(sum((a[i][t] * b[t][j] for t in range(n)), LaurentPoly.zero(rank))
                  for j in range(n))
            for i in range(n)
        )

    c = lp_mul(lp_mul(mlp, dsym), minv)
    for i in range(6):
        for j in range(6):
            if i != j and not c[i][j].is_zero():
                return False
            if i == j and len(c[i][j].terms) != 1:
                return False
    return True


# ---------------------------------------------------------------------------
# component groups


class ComponentGroup:
    """The finite group G/G^0 given by canonical component keys.

    `mul` and `inv` act on keys and must return canonical keys; `reps`
    optionally maps keys to underlying data used elsewhere (matrices,
    eigenvalue blocks, ...).  Internally elements are interned to integer
    ids so group-theoretic bookkeeping stays cheap.
    """

    def __init__(self, keys: list, gens: list, mul, inv, ident, reps=None):
        self.keys = list(keys)
        self.gens = list(gens)
        self._mul = mul
        self._inv = inv
        self.ident = ident
        self.reps = reps if reps is not None else {}
        self.index = {k: i for i, k in enumerate(self.keys)}
        self._mulcache: dict[tuple[int, int], int] = {}
        self._invcache: dict[int, int] = {}
        self._orders: dict = {}

    def __len__(self):
        return len(self.keys)

    def _mul_id(self, i: int, j: int) -> int:
        key = (i, j)
        got = self._mulcache.get(key)
        if got is None:
            got = self.index[self._mul(self.keys[i], self.keys[j])]
            self._mulcache[key] = got
        return got

    def _inv_id(self, i: int) -> int:
        got = self._invcache.get(i)
        if got is None:
            got = self.index[self._inv(self.keys[i])]
            self._invcache[i] = got
        return got

    def mul(self, a, b):
        return self.keys[self._mul_id(self.index[a], self.index[b])]

    def inv(self, a):
        return self.keys[self._inv_id(self.index[a])]

    def element_order(self, a) -> int:
        got = self._orders.get(a)
        if got is None:
            i0 = self.index[a]
            n, i = 1, i0
            e = self.index[self.ident]
            while i != e:
                i = self._mul_id(i, i0)
                n += 1
            self._orders[a] = got = n
        return got

    def conj_classes(self) -> list[list]:
        """Orbits under conjugation (generator conjugations suffice)."""
        gen_pairs = [(g, self.inv(g)) for g in self.gens]
        unseen = set(self.keys)
        classes = []
        for k in self.keys:
            if k not in unseen:
                continue
            orbit = {k}
            stack = [k]
            while stack:
                x = stack.pop()
                for g, gi in gen_pairs:
                    y = self.mul(self.mul(g, x), gi)
                    if y not in orbit:
                        orbit.add(y)
                        stack.append(y)
            unseen -= orbit
            classes.append(sorted(orbit, key=self.index.__getitem__))
        return classes

    def center_order(self) -> int:
        n = 0
        for x in self.keys:
            if all(self.mul(x, g) == self.mul(g, x) for g in self.gens):
                n += 1
        return n

    def derived_subgroup(self) -> set:
        """[G, G] as a set of keys: the closure of the generator
        commutators under right multiplication by commutators and
        conjugation by group generators."""
        comms = set()
        for a in self.gens:
            for b in self.gens:
                c = self.mul(self.mul(a, b),
                             self.mul(self.inv(a), self.inv(b)))
                comms.add(c)
        comms.discard(self.ident)
        gen_pairs = [(g, self.inv(g)) for g in self.gens]
        closed = {self.ident} | comms
        frontier = list(closed)
        while frontier:
            x = frontier.pop()
            for c in comms:
                y = self.mul(x, c)
                if y not in closed:
                    closed.add(y)
                    frontier.append(y)
            for g, gi in gen_pairs:
                y = self.mul(self.mul(g, x), gi)
                if y not in closed:
                    closed.add(y)
                    frontier.append(y)
        return closed

    def abelian_invariants(self) -> tuple[int, ...]:
        """Invariant factors of G/[G, G], largest first.

        For an abelian group the counts N(p^j) = #{x : x^(p^j) = e}
        determine the type: log_p(N(p^j)/N(p^(j-1))) is the number of
        cyclic p-power factors of exponent at least p^j.
        """
        D = self.derived_subgroup()
        reps: list = []
        for k in self.keys:
            if any(self.mul(k, self.inv(r)) in D for r in reps):
                continue
            reps.append(k)
        q = len(reps)
        if q == 1:
            return ()
        orders = []
        for r in reps:
            n, x = 1, r
            while x not in D:
                x = self.mul(x, r)
                n += 1
            orders.append(n)
        expo = 1
        for n in orders:
            expo = lcm(expo, n)
        lam_by_p: dict[int, list[int]] = {}
        for p in _prime_factors(q):
            kmax = 0
            while expo % (p ** (kmax + 1)) == 0:
                kmax += 1
            sols = [sum(1 for n in orders if (p ** j) % n == 0) for j in range(kmax + 1)]
            conj = []
            for j in range(1, kmax + 1):
                ratio, e = sols[j] // sols[j - 1], 0
                while p ** (e + 1) <= ratio:
                    e += 1
                assert p ** e == ratio, "element-order counts inconsistent"
                conj.append(e)
            nparts = conj[0] if conj else 0
            lam_by_p[p] = [sum(1 for e in conj if e >= i) for i in range(1, nparts + 1)]
        nfac = max(len(lam) for lam in lam_by_p.values())
        factors = []
        for i in range(nfac):
            d = 1
            for p, lam in lam_by_p.items():
                if i < len(lam):
                    d *= p ** lam[i]
            factors.append(d)
        prod = 1
        for f in factors:
            prod *= f
        assert prod == q, f"abelianization bookkeeping failed: {factors} vs order {q}"
        return tuple(factors)

    def fingerprint(self) -> "Fingerprint":
        orders = sorted(self.element_order(k) for k in self.keys)
        classes = sorted(len(c) for c in self.conj_classes())
        return Fingerprint(
            order=len(self.keys),
            element_orders=tuple(orders),
            class_sizes=tuple(classes),
            abelian_invariants=self.abelian_invariants(),
            center_order=self.center_order(),
            derived_order=len(self.derived_subgroup()),
        )


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class Fingerprint:
    """Component-group invariants standing in for the isomorphism class."""

    order: int
    element_orders: tuple[int, ...]
    class_sizes: tuple[int, ...]
    abelian_invariants: tuple[int, ...]
    center_order: int
    derived_order: int

    def short(self) -> str:
        return (f"|G|={self.order} ab={list(self.abelian_invariants)} "
                f"Z={self.center_order} D={self.derived_order}")


def quotient_by_torus(group: FiniteGroup, conn: ConnectedType) -> ComponentGroup:
    """Component representatives after identifying elements whose ratio
    lies in the embedded identity component."""
    for m in group.elements:
        if not normalizes_torus(m, conn):
            raise ValueError("element fails to normalize the identity-component torus")
    inner = [m for m in group.elements if in_identity_component(m, conn)]

    canon_cache: dict = {}

    def canon(m: Mat) -> Mat:
        got = canon_cache.get(m)
        if got is None:
            got = min((mat_mul(t, m) for t in inner), key=mat_sort_key)
            for t in inner:
                canon_cache[mat_mul(t, m)] = got
        return got

    keys = sorted({canon(m) for m in group.elements}, key=mat_sort_key)
    gens = [canon(g) for g in group.gens]
    ident = canon(identity(6))

    def mul(a, b):
        return canon(mat_mul(a, b))

    def inv(a):
        return canon(mat_inv_unitary(a))

    return ComponentGroup(keys, gens, mul, inv, ident,
                          reps={k: k for k in keys})


# ---------------------------------------------------------------------------
# SU(3)-picture helpers for the U(1)_3 families


_CANON3_CACHE: dict[Mat, Mat] = {}
_SORTKEY_CACHE: dict[Mat, tuple] = {}


def _sort_key_cached(m: Mat):
    got = _SORTKEY_CACHE.get(m)
    if got is None:
        got = mat_sort_key(m)
        _SORTKEY_CACHE[m] = got
    return got


def canon3(a: Mat) -> Mat:
    """Canonical representative of A modulo the scalars {±1, ±zeta_3^k}."""
    got = _CANON3_CACHE.get(a)
    if got is not None:
        return got
    scaled = [a]
    for k, s in ((0, -1), (1, 1), (1, -1), (2, 1), (2, -1)):
        z = root_of_unity(k, 3)
        scaled.append(mat_scale(a, z if s == 1 else -z))
    best = min(scaled, key=_sort_key_cached)
    for m in scaled:
        _CANON3_CACHE[m] = best
    return best


def su3_close(gens3: list[Mat], bound: int = 10000) -> list[Mat]:
    return close(gens3, bound=bound, mul=mat_mul, ident=identity(3))


class SU3Cayley:
    """A finite subgroup of SU(3) with index-level multiplication.

    The closure BFS records, for each element, a generator word; products
    x*y are then evaluated by pushing x through y's word using the
    right-multiplication tables, so group bookkeeping never re-multiplies
    cyclotomic matrices.
    """

    def __init__(self, gens3: list[Mat], bound: int = 10000):
        self.gens = list(gens3)
        ident = identity(3)
        self.elements = [ident]
        self.index = {ident: 0}
        self.words: list[tuple[int, ...]] = [()]
        tables: list[list[int]] = [[] for _ in gens3]
        frontier = [0]
        while frontier:
            new = []
            for i in frontier:
                for gi, g in enumerate(gens3):
                    while len(tables[gi]) < len(self.elements):
                        tables[gi].append(-1)
                    y = mat_mul(self.elements[i], g)
                    j = self.index.get(y)
                    if j is None:
                        if len(self.elements) >= bound:
                            raise ClosureExceedsBound(
                                f"closure exceeded bound {bound}; wrong generators?")
                        j = len(self.elements)
                        self.index[y] = j
                        self.elements.append(y)
                        self.words.append(self.words[i] + (gi,))
                        new.append(j)
                    tables[gi][i] = j
            frontier = new
        for gi in range(len(gens3)):
            while len(tables[gi]) < len(self.elements):
                tables[gi].append(-1)
            for i in range(len(self.elements)):
                if tables[gi][i] < 0:
                    tables[gi][i] = self.index[mat_mul(self.elements[i], gens3[gi])]
        self.tables = tables
        self.scalar_idxs = [self.index[mat_scale(identity(3), root_of_unity(k, 3))]
                            for k in range(3)]

    def __len__(self):
        return len(self.elements)

    def mul_idx(self, i: int, j: int) -> int:
        for gi in self.words[j]:
            i = self.tables[gi][i]
        return i

    def inv_idx(self, i: int) -> int:
        if i == 0:
            return 0
        prev, x = i, self.mul_idx(i, i)
        while x != 0:
            prev, x = x, self.mul_idx(x, i)
        return prev


def n_type_components(cay: SU3Cayley, ext_g: Mat | None) -> ComponentGroup:
    """Component group of the Sato-Tate group built from a finite subgroup
    H of SU(3), optionally extended by the coset J*g*H.

    Component keys are (j, i) with j the J-parity and i the index of the
    3x3 part, minimized over the six quotient-torus scalars; signs are
    absorbed by the scalar -1.  Multiplication follows
    J^j1 emb(A1) J^j2 emb(A2) = J^(j1+j2) emb(conj^j2(A1) A2) up to sign.
    """
    n = len(cay)
    scal = cay.scalar_idxs

    if ext_g is not None:
        # tw[i] = index of ±(g^-1 conj(h_i) g); the sign is irrelevant in the
        # torus quotient
        ginv = mat_inv_unitary(ext_g)
        tw = []
        for h in cay.elements:
            x = mat_mul(mat_mul(ginv, mat_conj(h)), ext_g)
            j = cay.index.get(x)
            if j is None:
                j = cay.index.get(mat_neg(x))
                if j is None:
                    raise ValueError("extension element does not normalize H")
            tw.append(j)
        w = mat_mul(mat_conj(ext_g), ext_g)
        q_idx = cay.index.get(w)
        if q_idx is None:
            q_idx = cay.index.get(mat_neg(w))
            if q_idx is None:
                raise ValueError("(Jg)^2 is not in ±H")
    else:
        tw = None
        q_idx = None

    def canon(j: int, i: int) -> tuple[int, int]:
        # the quotient-torus scalars are central, so right products suffice
        return (j, min(cay.mul_idx(i, s) for s in scal))

    keys = []
    seen = set()
    for i in range(n):
        k = canon(0, i)
        if k not in seen:
            seen.add(k)
            keys.append(k)
    n_even = len(keys)
    if ext_g is not None:
        for i in range(n):
            k = canon(1, i)
            if k not in seen:
                seen.add(k)
                keys.append(k)

    def mul(a, b):
        j1, i1 = a
        j2, i2 = b
        if j2 == 0:
            return canon(j1, cay.mul_idx(i1, i2))
        if j1 == 0:
            # emb(h) J emb(g x) = J emb(conj(h) g x) = J emb(g (±tw-part) x)
            return canon(1, cay.mul_idx(tw[i1], i2))
        # J emb(g x) J emb(g y) = -emb(conj(g) conj(x) g y)
        #                       = -emb((conj(g) g) (g^-1 conj(x) g) y)
        return canon(0, cay.mul_idx(cay.mul_idx(q_idx, tw[i1]), i2))

    def inv(a):
        j, i = a
        if j == 0:
            return canon(0, cay.inv_idx(i))
        # (J emb(g x))^-1 = ± J emb(g (q tw(x))^-1)
        return canon(1, cay.inv_idx(cay.mul_idx(q_idx, tw[i])))

    ident = canon(0, 0)
    gens = [canon(0, cay.index[g]) for g in cay.gens]
    if ext_g is not None:
        gens.append(canon(1, 0))
    reps = {}
    for (j, i) in keys:
        if j == 0:
            reps[(j, i)] = (0, cay.elements[i])
        else:
            reps[(j, i)] = (1, mat_mul(ext_g, cay.elements[i]))
    cg = ComponentGroup(keys, gens, mul, inv, ident, reps=reps)
    cg.n_even = n_even
    return cg


# ---------------------------------------------------------------------------
# extension classification


def extension_kind(H: list[Mat], g: Mat) -> str:
    """Classify the extension <H, J g> of a finite SU(3)-subgroup H:
    'standard', 'split-nonstandard' or 'nonsplit-nonstandard'.

    Preconditions (checked): Jg normalizes H and (Jg)^2 lies in ±H.
    """
    hset = set(H)
    pm = hset | {mat_neg(h) for h in H}
    ginv = mat_inv_unitary(g)
    for h in H:
        x = mat_mul(mat_mul(ginv, mat_conj(h)), g)
        if x not in pm:
            raise ValueError(f"Jg does not normalize H; witness {mat_format(h)}")
    w = mat_mul(mat_conj(g), g)
    if w not in pm:
        raise ValueError("(Jg)^2 is not in ±H")

    # shape of the connected normalizer, detected from H itself
    def is_diag(m):
        return all(m[i][j].is_zero() for i in range(3) for j in range(3) if i != j)

    def is_block12(m):
        return all(m[i][j].is_zero() and m[j][i].is_zero() for i in (0,) for j in (1, 2))

    if all(is_diag(h) for h in H):
        shape = "diag"
    elif all(is_block12(h) for h in H):
        shape = "u12"
    else:
        shape = "finite"

    def in_torus_orbit(m):
        if shape == "diag":
            return is_diag(m)
        if shape == "u12":
            return is_diag(m) and m[1][1] == m[2][2]
        return is_diag(m) and m[0][0] == m[1][1] == m[2][2]

    for h in pm:
        if in_torus_orbit(mat_mul(g, h)):
            return "standard"
    for h in pm:
        if mat_mul(mat_conj(h), h) == w:
            return "split-nonstandard"
    return "nonsplit-nonstandard"
