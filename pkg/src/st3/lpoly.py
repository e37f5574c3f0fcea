"""Ingestion of L-polynomial data files and empirical statistics.

Input files carry one record per line, `p c1 c2 c3` (degree-1 primes
only), describing L_p(T) = 1 + c1 T + c2 T^2 + c3 T^3 + p c2 T^4
+ p^2 c1 T^5 + p^3 T^6.  The normalized coefficients a_i = c_i p^(-i/2)
satisfy the Weil bounds |a1| <= 6, |a2| <= 15, |a3| <= 20; records outside
those bounds are rejected.

Empirical moments are accumulated in double precision (sampling noise
dominates rounding); the point-density counters are exact integer
conditions on the unnormalized coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .stats import DENSITY_T_VALUES, _norm_apoly


class LPolyFormatError(ValueError):
    pass


@dataclass(frozen=True)
class LPolyRecord:
    p: int
    c1: int
    c2: int
    c3: int

    def normalized(self) -> tuple[float, float, float]:
        rp = math.sqrt(self.p)
        return (self.c1 / rp, self.c2 / self.p, self.c3 / (self.p * rp))

    def check_weil(self):
        a1, a2, a3 = self.normalized()
        if abs(a1) > 6 + 1e-9 or abs(a2) > 15 + 1e-9 or abs(a3) > 20 + 1e-9:
            raise LPolyFormatError(
                f"Weil bound violation: p={self.p} c=({self.c1},{self.c2},{self.c3})")


def _simplex_exponents(m: int):
    out = []
    for e1 in range(m + 1):
        for e2 in range((m - e1) // 2 + 1):
            for e3 in range((m - e1 - 2 * e2) // 3 + 1):
                out.append((e1, e2, e3))
    return out


@dataclass
class EmpiricalProfile:
    """Running moment sums and exact point-density counters."""

    m: int = 14
    count: int = 0
    sums: dict = field(default_factory=dict)
    density_counts: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.sums:
            self.sums = {e: 0.0 for e in _simplex_exponents(self.m)}

    def add(self, rec: LPolyRecord):
        rec.check_weil()
        a1, a2, a3 = rec.normalized()
        pows1 = [1.0]
        pows2 = [1.0]
        pows3 = [1.0]
        for _ in range(self.m):
            pows1.append(pows1[-1] * a1)
            pows2.append(pows2[-1] * a2)
            pows3.append(pows3[-1] * a3)
        for (e1, e2, e3) in self.sums:
            self.sums[(e1, e2, e3)] += pows1[e1] * pows2[e2] * pows3[e3]
        z1 = rec.c1 == 0
        z3 = rec.c3 == 0
        t = None
        if rec.c2 % rec.p == 0:
            q = rec.c2 // rec.p
            if q in DENSITY_T_VALUES:
                t = q
        key = (z1, t, z3)
        self.density_counts[key] = self.density_counts.get(key, 0) + 1
        self.count += 1

    def merge(self, other: "EmpiricalProfile") -> "EmpiricalProfile":
        if other.m != self.m:
            raise ValueError("cannot merge profiles with different truncation")
        out = EmpiricalProfile(self.m)
        out.count = self.count + other.count
        out.sums = {e: self.sums[e] + other.sums[e] for e in self.sums}
        keys = set(self.density_counts) | set(other.density_counts)
        out.density_counts = {k: self.density_counts.get(k, 0)
                              + other.density_counts.get(k, 0) for k in keys}
        return out

    # -- estimators ---------------------------------------------------

    def moment(self, e1: int, e2: int, e3: int) -> float:
        if self.count == 0:
            raise ValueError("empty profile")
        return self.sums[(e1, e2, e3)] / self.count

    def norm_estimate(self, lam, mu=None) -> float:
        """E[chi_lam chi_mu] assembled linearly from the moment estimates."""
        lam = tuple(lam)
        mu = tuple(mu) if mu is not None else lam
        total = 0.0
        for e, c in _norm_apoly(lam, mu):
            total += float(c) * self.moment(*e)
        return total

    def z_estimates(self) -> list[list[float]]:
        if self.count == 0:
            raise ValueError("empty profile")

        def dens(need1, need3, t=None, any2=False):
            total = 0
            for (z1, tv, z3), cnt in self.density_counts.items():
                if need1 and not z1:
                    continue
                if need3 and not z3:
                    continue
                if any2 and tv is None:
                    continue
                if t is not None and tv != t:
                    continue
                total += cnt
            return total / self.count

        rows = []
        for need1, need3 in ((False, False), (True, False), (False, True), (True, True)):
            first = 1.0 if (not need1 and not need3) else dens(need1, need3)
            row = [first, dens(need1, need3, any2=True)]
            for t in DENSITY_T_VALUES:
                row.append(dens(need1, need3, t=t))
            rows.append(row)
        return rows


def parse_line(line: str, lineno: int = 0) -> LPolyRecord | None:
    body = line.split("#", 1)[0].strip()
    if not body:
        return None
    parts = body.split()
    if len(parts) != 4:
        raise LPolyFormatError(f"line {lineno}: expected 'p c1 c2 c3', got {body!r}")
    try:
        p, c1, c2, c3 = (int(x) for x in parts)
    except ValueError as exc:
        raise LPolyFormatError(f"line {lineno}: {exc}") from None
    if p < 2:
        raise LPolyFormatError(f"line {lineno}: bad prime norm {p}")
    return LPolyRecord(p, c1, c2, c3)


def ingest(path: str, m: int = 14) -> EmpiricalProfile:
    prof = EmpiricalProfile(m)
    with open(path) as fh:
        for i, line in enumerate(fh, start=1):
            rec = parse_line(line, i)
            if rec is not None:
                try:
                    prof.add(rec)
                except LPolyFormatError as exc:
                    raise LPolyFormatError(f"line {i}: {exc}") from None
    return prof
