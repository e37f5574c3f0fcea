"""Exact distribution invariants of catalog groups.

Every connected component of a group contributes the coefficients of its
coset characteristic polynomial det(1 - gamma h T) restricted to the
maximal torus, as Laurent polynomials a1, a2, a3.  For components of
central type the component average of any polynomial in a1, a2, a3 is a
trivial-multiplicity extraction over the identity component; components
of the E/F families that permute identical SU(2) factors are first
cycle-reduced (each l-cycle contributes a factor det(1 - c T^l) with c
Haar-distributed in a fresh SU(2)); the nonidentity component of N(U(3))
is handled by the closed-form multiplicity rule.

Group invariants are averages with equal Haar mass per component,
computed per conjugacy class of components by default.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclo import CycloNum
from .laurent import LaurentPoly
from .matgroup import Fingerprint, Mat, mat_conj, mat_mul, mat_trace
from .weylchar import (
    CONNECTED_TYPES,
    ConnectedType,
    Factor,
    Partition3,
    apoly_eval,
    apoly_mul,
    char_in_coeffs,
    check_weyl_invariant,
    decompose_usp6,
    nu3_multiplicity,
    subpartitions,
    _trivial_mult_unchecked,
)
from .catalog import STGroup

ZERO = CycloNum.zero()
ONE = CycloNum.one()


# ---------------------------------------------------------------------------
# component profiles


@dataclass
class ComponentProfile:
    """Symbolic coset data: a1, a2, a3 over a reduced torus."""

    space: ConnectedType          # factor structure used for extraction
    a: tuple[LaurentPoly, LaurentPoly, LaurentPoly]
    centrality: str               # central | cycle-reduced | closed-form
    _powers: dict = None

    def power_cache(self) -> dict:
        if self._powers is None:
            self._powers = {}
        return self._powers

    def a_constants(self):
        """(value or None) for each of a1, a2, a3; value as a Fraction."""
        out = []
        for p in self.a:
            if p.is_constant():
                v = p.constant_value().try_rational()
                if v is None:
                    raise ValueError("constant coset coefficient is irrational")
                out.append(v)
            else:
                out.append(None)
        return tuple(out)


def _reduced_type(kinds: list[str]) -> ConnectedType:
    factors = []
    for i, k in enumerate(kinds):
        factors.append(Factor(k, (i,), (i,)))
    return ConnectedType("reduced:" + "x".join(kinds), "?", max(1, len(kinds)), tuple(factors))


def _tpoly_mul(p: list[LaurentPoly], q: list[LaurentPoly], rank: int) -> list[LaurentPoly]:
    out = [LaurentPoly.zero(rank) for _ in range(len(p) + len(q) - 1)]
    for i, a in enumerate(p):
        if a.is_zero():
            continue
        for j, b in enumerate(q):
            if not b.is_zero():
                out[i + j] = out[i + j] + a * b
    return out


def _symbolic_char_coeffs(m: Mat, conn: ConnectedType):
    """a1, a2, a3 of det(1 - D(u) m T) via principal minors."""
    wm = conn.weight_map
    rank = conn.rank
    rows = [[LaurentPoly.monomial(wm[i], m[i][j]) for j in range(6)] for i in range(6)]
    e1 = LaurentPoly.zero(rank)
    for i in range(6):
        e1 = e1 + rows[i][i]
    e2 = LaurentPoly.zero(rank)
    e3 = LaurentPoly.zero(rank)
    for i in range(6):
        for j in range(i + 1, 6):
            m2 = rows[i][i] * rows[j][j] - rows[i][j] * rows[j][i]
            e2 = e2 + m2
            for k in range(j + 1, 6):
                det3 = (rows[i][i] * (rows[j][j] * rows[k][k] - rows[j][k] * rows[k][j])
                        - rows[i][j] * (rows[j][i] * rows[k][k] - rows[j][k] * rows[k][i])
                        + rows[i][k] * (rows[j][i] * rows[k][j] - rows[j][j] * rows[k][i]))
                e3 = e3 + det3
    return -e1, e2, -e3


def _ntype_profile(j: int, a3: Mat) -> ComponentProfile:
    """Profile of a U(1)_3-type component from its 3x3 part."""
    space = _reduced_type(["U1"])
    if j == 0:
        t1 = mat_trace(a3)
        sq = mat_mul(a3, a3)
        e2a = (t1 * t1 - mat_trace(sq)) * CycloNum.rational(Fraction(1, 2))
        det = _det3(a3)
        u = LaurentPoly.variable(1, 0)
        ui = LaurentPoly.variable(1, 0, -1)
        e1 = u.scale(t1) + ui.scale(t1.conj())
        e2 = (u * u).scale(e2a) + (ui * ui).scale(e2a.conj()) \
            + LaurentPoly.const(1, t1 * t1.conj())
        e3 = (u * u * u).scale(det) + (ui * ui * ui).scale(det.conj()) \
            + u.scale(e2a * t1.conj()) + ui.scale(t1 * e2a.conj())
        return ComponentProfile(space, (-e1, e2, -e3), "central")
    # J-side coset: (D(u) J emb(A))^2 = -emb(conj(A) A), independent of u,
    # so a1 = a3 = 0 and a2 is the constant (tr(conj(A)A) + c.c.)/2
    w = mat_mul(mat_conj(a3), a3)
    t = mat_trace(w)
    a2val = (t + t.conj()) * CycloNum.rational(Fraction(1, 2))
    z = LaurentPoly.zero(1)
    return ComponentProfile(space, (z, LaurentPoly.const(1, a2val), z), "central")


def _det3(m: Mat) -> CycloNum:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def _factor_permutation(m: Mat, conn: ConnectedType):
    """The permutation induced on the factors, or None if m is block-diagonal
    per factor."""
    n = len(conn.factors)
    supports = []
    for f in conn.factors:
        supports.append(sorted(list(f.pairs) + [p + 3 for p in f.pairs]))
    slot_factor = {}
    for a in range(n):
        for i in supports[a]:
            slot_factor[i] = a
    sigma = {}
    for b in range(n):
        targets = {slot_factor[i]
                   for j in supports[b] for i in range(6)
                   if not m[i][j].is_zero()}
        if len(targets) != 1:
            raise ValueError("component does not permute the identity factors")
        sigma[b] = targets.pop()
    if sorted(sigma.values()) != list(range(n)):
        raise ValueError("component does not permute the identity factors")
    return sigma


def _cycle_reduced_profile(m: Mat, conn: ConnectedType) -> ComponentProfile:
    """Profile of a component permuting identical SU(2) factors: each cycle
    of length l contributes det(1 - v T^l) det(1 - 1/v T^l) with v a fresh
    Haar SU(2) variable; fixed factors keep their symbolic torus data."""
    sigma = _factor_permutation(m, conn)
    n = len(conn.factors)
    seen = set()
    cycles = []
    for b in range(n):
        if b in seen:
            continue
        cyc = [b]
        seen.add(b)
        nxt = sigma[b]
        while nxt != b:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = sigma[nxt]
        cycles.append(cyc)
    kinds = []
    plan = []   # (kind, data)
    for cyc in cycles:
        f = conn.factors[cyc[0]]
        if len(cyc) == 1:
            b = cyc[0]
            if len(f.pairs) != 1:
                raise ValueError("cycle reduction supports rank-1 factors only")
            p = f.pairs[0]
            var = len(kinds)
            kinds.append(f.kind)
            plan.append(("fixed", p, var))
        else:
            if any(conn.factors[c].kind != "SU2" or len(conn.factors[c].pairs) != 1
                   for c in cyc):
                raise ValueError("only identical SU(2) factors can be cycled")
            var = len(kinds)
            kinds.append("SU2")
            plan.append(("cycle", len(cyc), var))
    rank = len(kinds)
    tpoly = [LaurentPoly.one(rank)]
    for item in plan:
        if item[0] == "fixed":
            _, p, var = item
            x, y = p, p + 3
            u = LaurentPoly.variable(rank, var)
            ui = LaurentPoly.variable(rank, var, -1)
            c1 = u.scale(m[x][x]) + ui.scale(m[y][y])
            c2 = LaurentPoly.const(rank, m[x][x] * m[y][y] - m[x][y] * m[y][x])
            factor = [LaurentPoly.one(rank), -c1, c2]
        else:
            _, ell, var = item
            v = LaurentPoly.variable(rank, var)
            vi = LaurentPoly.variable(rank, var, -1)
            factor = [LaurentPoly.one(rank)] + [LaurentPoly.zero(rank)] * (ell - 1) \
                + [-(v + vi)] + [LaurentPoly.zero(rank)] * (ell - 1) \
                + [LaurentPoly.one(rank)]
        tpoly = _tpoly_mul(tpoly, factor, rank)
    assert len(tpoly) == 7, "coset characteristic polynomial must have degree 6"
    return ComponentProfile(_reduced_type(kinds), (tpoly[1], tpoly[2], tpoly[3]),
                            "cycle-reduced")


_U3_ADATA = None


def _u3_adata():
    global _U3_ADATA
    if _U3_ADATA is None:
        conn = CONNECTED_TYPES["B"]
        monos = [LaurentPoly.monomial(w) for w in conn.weight_map]
        e1 = LaurentPoly.zero(3)
        for x in monos:
            e1 = e1 + x
        e2 = LaurentPoly.zero(3)
        e3 = LaurentPoly.zero(3)
        for i in range(6):
            for j in range(i + 1, 6):
                e2 = e2 + monos[i] * monos[j]
                for k in range(j + 1, 6):
                    e3 = e3 + monos[i] * monos[j] * monos[k]
        _U3_ADATA = (-e1, e2, -e3)
    return _U3_ADATA


def component_profile(st: STGroup, key) -> ComponentProfile:
    """The classified profile of one component; cached on the group."""
    cache = st.extra.setdefault("profiles", {})
    got = cache.get(key)
    if got is not None:
        return got
    rep = st.comps.reps[key]
    if st.letter == "N":
        j, a3 = rep
        prof = _ntype_profile(j, a3)
    elif st.letter == "B":
        if rep == "J":
            z = LaurentPoly.zero(3)
            prof = ComponentProfile(CONNECTED_TYPES["B"],
                                    (z, LaurentPoly.zero(3), z), "closed-form")
        else:
            prof = ComponentProfile(CONNECTED_TYPES["B"], _u3_adata(), "central")
    else:
        conn = st.conn
        m = rep if isinstance(rep, tuple) else st.component_matrix(key)
        a = _symbolic_char_coeffs(m, conn)
        if all(check_weyl_invariant(conn, p) for p in a):
            prof = ComponentProfile(conn, a, "central")
        else:
            prof = _cycle_reduced_profile(m, conn)
    if prof.centrality == "central":
        if not all(check_weyl_invariant(prof.space, p) for p in prof.a):
            raise AssertionError(f"central profile not Weyl-invariant in {st.name}")
    cache[key] = prof
    return prof


# ---------------------------------------------------------------------------
# component averages


@lru_cache(maxsize=None)
def _norm_apoly(lam: tuple, mu: tuple) -> tuple:
    f = apoly_mul(char_in_coeffs(lam), char_in_coeffs(mu))
    return tuple(sorted(f.items()))


@lru_cache(maxsize=None)
def _usp6_decomposition_of_apoly(fkey: tuple) -> tuple:
    """Decompose a polynomial in a1, a2, a3 into USp(6) irreducibles."""
    A1, A2, A3 = _generic_usp6_adata()
    F = dict(fkey)
    lp = apoly_eval(F, A1, A2, A3)
    dec = decompose_usp6(lp)
    return tuple(sorted(dec.items()))


_GEN_USP6 = None


def _generic_usp6_adata():
    global _GEN_USP6
    if _GEN_USP6 is None:
        from .weylchar import apolys_usp6
        _GEN_USP6 = apolys_usp6()
    return _GEN_USP6


def component_average(st: STGroup, key, fkey: tuple) -> Fraction:
    """Average of the coefficient polynomial F over one component."""
    prof = component_profile(st, key)
    if prof.centrality == "closed-form":
        # nonidentity component of N(U(3)): 2*m_{N(U(3))} - m_{U(3)} per irrep
        total = Fraction(0)
        for lam, mult in _usp6_decomposition_of_apoly(fkey):
            contrib = 2 * nu3_multiplicity(lam, True) - nu3_multiplicity(lam, False)
            total += mult * contrib
        return total
    F = dict(fkey)
    lp = apoly_eval(F, *prof.a, power_cache=prof.power_cache())
    val = _trivial_mult_unchecked(prof.space, lp)
    return val


def _component_classes(st: STGroup) -> list[tuple[object, int]]:
    got = st.extra.get("classes")
    if got is None:
        classes = st.comps.conj_classes()
        got = [(c[0], len(c)) for c in classes]
        st.extra["classes"] = got
    return got


def group_average(st: STGroup, fkey: tuple, per_class: bool = True) -> Fraction:
    n = st.n_components
    total = Fraction(0)
    if per_class:
        for rep, size in _component_classes(st):
            total += size * component_average(st, rep, fkey)
    else:
        for key in st.comps.keys:
            total += component_average(st, key, fkey)
    return total / n


# ---------------------------------------------------------------------------
# public invariants


def moment(st: STGroup, e1: int, e2: int, e3: int, per_class: bool = True) -> Fraction:
    """M_{e1,e2,e3}: the average of a1^e1 a2^e2 a3^e3."""
    return group_average(st, (((e1, e2, e3), Fraction(1)),), per_class)


def simplex(st: STGroup, m: int = 12) -> dict[tuple[int, int, int], Fraction]:
    """All moments with e1 + 2 e2 + 3 e3 <= m."""
    out = {}
    for e1 in range(m + 1):
        for e2 in range((m - e1) // 2 + 1):
            for e3 in range((m - e1 - 2 * e2) // 3 + 1):
                out[(e1, e2, e3)] = moment(st, e1, e2, e3)
    return out


def norm(st: STGroup, lam, mu=None) -> Fraction:
    """N_{lambda,mu}: the average of chi_lambda * chi_mu."""
    lam = tuple(lam)
    mu = tuple(mu) if mu is not None else lam
    val = group_average(st, _norm_apoly(lam, mu))
    if val.denominator != 1 or val < 0:
        raise AssertionError(
            f"character norm N_{lam},{mu}({st.name}) = {val} violates integrality")
    return val


def diagonal(st: STGroup, m: int = 3) -> dict[Partition3, Fraction]:
    return {lam: norm(st, lam) for lam in subpartitions(m)}


DENSITY_T_VALUES = (-1, 0, 1, 2, 3)


def densities(st: STGroup):
    """The 4x7 matrix of point densities Z(G)."""
    n = st.n_components
    counts: dict[tuple, int] = {}
    for rep, size in _component_classes(st):
        prof = component_profile(st, rep)
        c1, c2, c3 = prof.a_constants()
        if c1 is not None and c1 != 0:
            raise ValueError(f"{st.name}: constant a1 = {c1} violates ST2/ST3")
        if c3 is not None and c3 != 0:
            raise ValueError(f"{st.name}: constant a3 = {c3} violates ST2/ST3")
        if c2 is not None and (c2.denominator != 1 or not -1 <= c2 <= 3):
            raise ValueError(f"{st.name}: constant a2 = {c2} outside allowed set")
        key = (c1 is not None, c2, c3 is not None)
        counts[key] = counts.get(key, 0) + size

    def dens(need1: bool, need3: bool, t=None, any2: bool = False) -> Fraction:
        total = 0
        for (has1, c2v, has3), cnt in counts.items():
            if need1 and not has1:
                continue
            if need3 and not has3:
                continue
            if any2 and c2v is None:
                continue
            if t is not None and c2v != t:
                continue
            total += cnt
        return Fraction(total, n)

    rows = []
    for need1, need3 in ((False, False), (True, False), (False, True), (True, True)):
        first = Fraction(1) if (not need1 and not need3) else dens(need1, need3)
        row = [first, dens(need1, need3, any2=True)]
        for t in DENSITY_T_VALUES:
            row.append(dens(need1, need3, t=t))
        rows.append(row)
    return rows


@dataclass
class StatProfile:
    """Exact invariant bundle of one group."""

    label: str
    name: str
    simplex: dict
    diagonal: dict
    norms_select: dict
    Z: list
    fingerprint: Fingerprint


NORMS_SELECT_B = (Partition3(3, 2, 2), Partition3(3, 3, 0), Partition3(3, 3, 1))
NORMS_SELECT_C = (Partition3(1, 1, 0), Partition3(1, 1, 1), Partition3(2, 0, 0))


def stat_profile(st: STGroup, simplex_m: int = 2, diagonal_m: int = 0) -> StatProfile:
    fp = st.extra.get("fingerprint")
    if fp is None:
        fp = st.comps.fingerprint()
        st.extra["fingerprint"] = fp
    return StatProfile(
        label=st.label,
        name=st.name,
        simplex=simplex(st, simplex_m),
        diagonal=diagonal(st, diagonal_m) if diagonal_m else {},
        norms_select={lam: norm(st, lam) for lam in NORMS_SELECT_B + NORMS_SELECT_C},
        Z=densities(st),
        fingerprint=fp,
    )


def profile_triple_multiset(st: STGroup):
    """Canonically serialized multiset of per-component (a1, a2, a3) data,
    for coincident-distribution checks."""
    out = []
    for key in st.comps.keys:
        prof = component_profile(st, key)
        ser = tuple(tuple(sorted((e, c.sort_key()) for e, c in p.terms.items()))
                    for p in prof.a)
        out.append(ser)
    return sorted(out)
