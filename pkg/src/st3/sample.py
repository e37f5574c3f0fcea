"""Synthetic Haar sampling of normalized coefficient triples.

Used to exercise the matcher without curve data.  Supported identity
components are built from U(1), SU(2) and U(3) factors (diagonal
embeddings included); groups with USp(4) or USp(6) factors raise
UnsupportedSampler.  Streams are bit-reproducible for a fixed seed.
"""

from __future__ import annotations

import numpy as np

from .catalog import STGroup


class UnsupportedSampler(ValueError):
    pass


def _haar_u3(rng) -> np.ndarray:
    z = (rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def _haar_su2(rng) -> np.ndarray:
    v = rng.standard_normal(4)
    a, b, c, d = v / np.linalg.norm(v)
    return np.array([[a + 1j * b, c + 1j * d], [-c + 1j * d, a - 1j * b]])


def _identity_element(st: STGroup, rng) -> np.ndarray:
    g = np.zeros((6, 6), dtype=complex)
    for f in st.conn.factors:
        xs = list(f.pairs)
        ys = [p + 3 for p in f.pairs]
        if f.kind == "U1":
            u = np.exp(2j * np.pi * rng.random())
            for x, y in zip(xs, ys):
                g[x, x] = u
                g[y, y] = np.conj(u)
        elif f.kind == "SU2":
            a = _haar_su2(rng)
            for x, y in zip(xs, ys):
                g[x, x] = a[0, 0]
                g[x, y] = a[0, 1]
                g[y, x] = a[1, 0]
                g[y, y] = a[1, 1]
        elif f.kind == "U3":
            a = _haar_u3(rng)
            for i, x in enumerate(xs):
                for j, x2 in enumerate(xs):
                    g[x, x2] = a[i, j]
            for i, y in enumerate(ys):
                for j, y2 in enumerate(ys):
                    g[y, y2] = np.conj(a[i, j])
        else:
            raise UnsupportedSampler(
                f"no Haar sampler for identity factor {f.kind} in {st.name}")
    return g


def sample(st: STGroup, n: int, seed: int = 0):
    """Yield n normalized (a1, a2, a3) triples from the Haar measure."""
    rng = np.random.default_rng(seed)
    comps = [np.array([[complex(x.to_complex()) for x in row]
                       for row in st.component_matrix(k)]) for k in st.comps.keys]
    for _ in range(n):
        h = comps[rng.integers(len(comps))]
        g = _identity_element(st, rng)
        eig = np.linalg.eigvals(g @ h)
        e1 = eig.sum()
        e2 = 0j
        e3 = 0j
        # elementary symmetric functions via Newton's identities
        p1 = e1
        p2 = (eig ** 2).sum()
        p3 = (eig ** 3).sum()
        e2 = (p1 * p1 - p2) / 2
        e3 = (p1 ** 3 - 3 * p1 * p2 + 2 * p3) / 6
        yield (float(-e1.real), float(e2.real), float(-e3.real))


def sample_profile(st: STGroup, n: int, seed: int = 0, m: int = 14,
                   zero_tol: float = 1e-9):
    """An EmpiricalProfile filled from synthetic samples (numeric zero
    detection for the density counters uses `zero_tol`)."""
    from .lpoly import EmpiricalProfile
    from .stats import DENSITY_T_VALUES

    prof = EmpiricalProfile(m)
    for a1, a2, a3 in sample(st, n, seed):
        pows1, pows2, pows3 = [1.0], [1.0], [1.0]
        for _ in range(m):
            pows1.append(pows1[-1] * a1)
            pows2.append(pows2[-1] * a2)
            pows3.append(pows3[-1] * a3)
        for (e1, e2, e3) in prof.sums:
            prof.sums[(e1, e2, e3)] += pows1[e1] * pows2[e2] * pows3[e3]
        z1 = abs(a1) < zero_tol
        z3 = abs(a3) < zero_tol
        t = None
        for tv in DENSITY_T_VALUES:
            if abs(a2 - tv) < zero_tol:
                t = tv
                break
        key = (z1, t, z3)
        prof.density_counts[key] = prof.density_counts.get(key, 0) + 1
        prof.count += 1
    return prof
