"""Distinguishing-invariant keys and empirical lookup.

Three key variants mirror the minimal distinguishing data: (a) the
2-simplex of moments separates the 14 connected groups; (b) the character
norms at (3,2,2), (3,3,0), (3,3,1) separate the 409 distributions (one
coincident pair remains); (c) the component-group fingerprint together
with the point-density matrix and the norms at (1,1,0), (1,1,1), (2,0,0)
separates all 410 groups.

Empirical matching against noisy data is heuristic by design: a rigorous
determination cannot come from finitely many Euler factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .catalog import STGroup
from .stats import NORMS_SELECT_B, NORMS_SELECT_C, densities, moment, norm

TWO_SIMPLEX = ((1, 0, 0), (2, 0, 0), (0, 1, 0))


@dataclass(frozen=True)
class InvariantKey:
    variant: str
    payload: tuple

    def numeric(self) -> tuple:
        """The empirically comparable entries (drops the fingerprint)."""
        if self.variant == "c":
            return self.payload[1]
        return self.payload


def key(st: STGroup, variant: str) -> InvariantKey:
    if variant == "a":
        return InvariantKey("a", tuple(moment(st, *e) for e in TWO_SIMPLEX))
    if variant == "b":
        return InvariantKey("b", tuple(norm(st, lam) for lam in NORMS_SELECT_B))
    if variant == "c":
        fp = st.extra.get("fingerprint")
        if fp is None:
            fp = st.comps.fingerprint()
            st.extra["fingerprint"] = fp
        z = tuple(x for row in densities(st) for x in row)
        norms = tuple(norm(st, lam) for lam in NORMS_SELECT_C)
        return InvariantKey("c", (fp, z + norms))
    raise ValueError(f"unknown key variant {variant!r}")


def audit_keys(catalog: list[STGroup], variant: str) -> dict:
    """Pairwise-distinctness audit; returns colliding label groups."""
    seen: dict[InvariantKey, list[str]] = {}
    for g in catalog:
        seen.setdefault(key(g, variant), []).append(g.label)
    collisions = {k: v for k, v in seen.items() if len(v) > 1}
    return {
        "variant": variant,
        "n_groups": len(catalog),
        "n_keys": len(seen),
        "collisions": sorted(sorted(v) for v in collisions.values()),
    }


def match_empirical(profile, tol, variant: str, catalog: list[STGroup],
                    keys=None) -> list[tuple[str, float]]:
    """Rank catalog groups whose key entries all lie within `tol` of the
    empirical estimates.  `profile` provides moment/norm/density estimates
    (an EmpiricalProfile or a mapping with the same methods)."""
    if tol <= 0 and not isinstance(tol, Fraction):
        tol = Fraction(tol)
    target = _empirical_payload(profile, variant)
    out = []
    for g in catalog:
        k = keys[g.label] if keys else key(g, variant)
        entries = [float(x) for x in k.numeric()]
        if len(entries) != len(target):
            raise ValueError("empirical profile does not cover the key entries")
        dev = max(abs(a - b) for a, b in zip(entries, target))
        if dev <= tol:
            out.append((g.label, dev))
    out.sort(key=lambda t: (t[1], t[0]))
    return out


def _empirical_payload(profile, variant: str) -> list[float]:
    if variant == "a":
        return [profile.moment(*e) for e in TWO_SIMPLEX]
    if variant == "b":
        return [profile.norm_estimate(lam) for lam in NORMS_SELECT_B]
    if variant == "c":
        z = [x for row in profile.z_estimates() for x in row]
        return z + [profile.norm_estimate(lam) for lam in NORMS_SELECT_C]
    raise ValueError(f"unknown key variant {variant!r}")
