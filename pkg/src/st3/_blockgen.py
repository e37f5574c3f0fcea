"""Generator for the bundled genus-2 building-block file.

The catalog composes Sato-Tate groups of abelian threefolds out of the
genus-1 and genus-2 groups; the U(1)_2-type blocks in particular are not
spelled out matrix-by-matrix in the threefold classification, so their
generators are fixed here once and shipped as data.  Run this module to
regenerate ``data/genus2_blocks.txt``; a test asserts the bundled file
matches.

Conventions (4x4, symplectic form [[0, I2], [-I2, 0]], slots x1 x2 y1 y2):
  * U(1)xU(1), U(1)xSU(2), SU(2)xSU(2): factor k on slots (x_k, y_k).
  * SU(2)_2: [[a I2, b I2], [c I2, d I2]]; its commutant gives the E_n
    and J(E_n) component representatives.
  * U(1)_2: diag(u, u, u*, u*); a 2x2 unitary A embeds as diag(A, conj(A)),
    J4 is the form matrix, and the central odd coset is J4*emb(j) where
    j is the quaternion unit.  Graph ("twisted") groups use J4*emb(j*A).
"""

from __future__ import annotations

from fractions import Fraction as F

from .cyclo import CycloNum, root_of_unity
from .matgroup import mat, mat_format, mat_mul

ZERO = CycloNum.zero()
ONE = CycloNum.one()


def e(a, b):
    return root_of_unity(a, b)


def emb_u2(a2):
    """2x2 unitary -> diag(A, conj(A)) in USp(4)."""
    c = tuple(tuple(x.conj() for x in r) for r in a2)
    return (
        tuple(a2[0]) + (ZERO, ZERO),
        tuple(a2[1]) + (ZERO, ZERO),
        (ZERO, ZERO) + tuple(c[0]),
        (ZERO, ZERO) + tuple(c[1]),
    )


def quad4(a, b, c, d):
    """Assemble [[a, b], [c, d]] from 2x2 blocks (x- and y-slot quadrants)."""
    return (
        tuple(a[0]) + tuple(b[0]),
        tuple(a[1]) + tuple(b[1]),
        tuple(c[0]) + tuple(d[0]),
        tuple(c[1]) + tuple(d[1]),
    )


I2 = ((ONE, ZERO), (ZERO, ONE))
Z2 = ((ZERO, ZERO), (ZERO, ZERO))
J4 = quad4(Z2, I2, ((-ONE, ZERO), (ZERO, -ONE)), Z2)

JQ = mat(((0, 1), (-1, 0)))                      # quaternion j
OMEGA = tuple(tuple(x * CycloNum.rational(F(1, 2)) for x in r) for r in (
    (ONE + e(1, 4), ONE + e(1, 4)),
    (-ONE + e(1, 4), ONE - e(1, 4)),
))                                               # (1+i+j+k)/2
SIGMA = ((e(1, 8), ZERO), (ZERO, e(7, 8)))       # (1+i)/sqrt(2)


def qrot(n):
    """Lift of the order-n rotation: diag(e(1/2n), e(-1/2n))."""
    return ((e(1, 2 * n), ZERO), (ZERO, e(2 * n - 1, 2 * n)))


def mul2(a, b):
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(2)), ZERO)
                       for j in range(2)) for i in range(2))


JC = mat_mul(J4, emb_u2(JQ))     # central odd generator for J(...) blocks


def godd(a2):
    """Odd generator of a graph subgroup: J4 * emb(j * A)."""
    return mat_mul(J4, emb_u2(mul2(JQ, a2)))


# factor-1 / factor-2 J2 and the swap, for the 2x(1+1) types
def j2_factor(k):
    rows = [[ZERO] * 4 for _ in range(4)]
    other = 1 - k
    rows[other][other] = ONE
    rows[other + 2][other + 2] = ONE
    rows[k][k + 2] = ONE
    rows[k + 2][k] = -ONE
    return tuple(tuple(r) for r in rows)


A4 = j2_factor(0)
B4 = j2_factor(1)
SWAP = mat(((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0)))

R2 = {}
for n in (2, 3, 4, 6):
    c = (e(1, 2 * n) + e(2 * n - 1, 2 * n)) * CycloNum.rational(F(1, 2))
    s = (e(1, 2 * n) - e(2 * n - 1, 2 * n)) * CycloNum.rational(F(1, 2)) * e(3, 4)
    R2[n] = ((c, -s), (s, c))


def rquad(n):
    return quad4(R2[n], Z2, Z2, R2[n])


W_REFL = quad4(((ONE, ZERO), (ZERO, -ONE)), Z2, Z2, ((ONE, ZERO), (ZERO, -ONE)))


def blocks() -> list[tuple[str, str, int, int, list, dict]]:
    """(label, kind, component order, realizable, generators, known moments)."""
    out = []

    def add(label, kind, comps, realizable, gens, known=None):
        out.append((label, kind, comps, realizable, list(gens), known or {}))

    add("USp(4)", "USp4", 1, 1, [], {"a1^2": 1})
    add("G_{3,3}", "SU2xSU2", 1, 1, [], {"a1^2": 2})
    add("N(G_{3,3})", "SU2xSU2", 2, 1, [SWAP])
    add("G_{1,3}", "U1xSU2", 1, 1, [], {"a1^2": 3})
    add("N(G_{1,3})", "U1xSU2", 2, 1, [A4])

    add("F", "U1xU1", 1, 1, [], {"a1^2": 4})
    add("F_a", "U1xU1", 2, 1, [A4])
    add("F_{ab}", "U1xU1", 2, 1, [mat_mul(A4, B4)])
    add("F_{ac}", "U1xU1", 4, 1, [mat_mul(A4, SWAP)])
    add("F_{a,b}", "U1xU1", 4, 1, [A4, B4])
    add("F_c", "U1xU1", 2, 0, [SWAP])
    add("F_{ab,c}", "U1xU1", 4, 0, [mat_mul(A4, B4), SWAP])
    add("F_{a,b,c}", "U1xU1", 8, 0, [A4, B4, SWAP])

    add("E_1", "SU2_2", 1, 1, [], {"a1^2": 4})
    for n in (2, 3, 4, 6):
        add(f"E_{n}", "SU2_2", n, 1, [rquad(n)])
    add("J(E_1)", "SU2_2", 2, 1, [W_REFL])
    for n in (2, 3, 4, 6):
        add(f"J(E_{n})", "SU2_2", 2 * n, 1, [rquad(n), W_REFL])

    q = {n: emb_u2(qrot(n)) for n in (2, 3, 4, 6)}
    jhat = emb_u2(JQ)
    what = emb_u2(OMEGA)
    shat = emb_u2(SIGMA)
    add("C_1", "U1_2", 1, 1, [], {"a1^2": 8})
    for n in (2, 3, 4, 6):
        add(f"C_{n}", "U1_2", n, 1, [q[n]])
    for n in (2, 3, 4, 6):
        add(f"D_{n}", "U1_2", 2 * n, 1, [q[n], jhat])
    add("T", "U1_2", 12, 1, [q[2], jhat, what])
    add("O", "U1_2", 24, 1, [what, shat])
    add("J(C_1)", "U1_2", 2, 1, [JC], {"a1^2": 4})
    for n in (2, 3, 4, 6):
        add(f"J(C_{n})", "U1_2", 2 * n, 1, [q[n], JC])
    for n in (2, 3, 4, 6):
        add(f"J(D_{n})", "U1_2", 4 * n, 1, [q[n], jhat, JC])
    add("J(T)", "U1_2", 24, 1, [q[2], jhat, what, JC])
    add("J(O)", "U1_2", 48, 1, [what, shat, JC])
    add("C_{2,1}", "U1_2", 2, 1, [godd(qrot(2))])
    add("C_{4,1}", "U1_2", 4, 1, [godd(SIGMA)])
    add("C_{6,1}", "U1_2", 6, 1, [godd(qrot(6))])
    add("D_{2,1}", "U1_2", 4, 1, [q[2], J4])
    add("D_{4,1}", "U1_2", 8, 1, [q[2], jhat, godd(SIGMA)])
    add("D_{6,1}", "U1_2", 12, 1, [q[3], jhat, godd(qrot(6))])
    add("D_{3,2}", "U1_2", 6, 1, [q[3], J4])
    add("D_{4,2}", "U1_2", 8, 1, [shat, J4])
    add("D_{6,2}", "U1_2", 12, 1, [q[6], J4])
    add("O_1", "U1_2", 24, 1, [q[2], jhat, what, godd(SIGMA)])
    return out


def render() -> str:
    lines = [
        "# genus-1/genus-2 Sato-Tate building blocks",
        "# label | kind | component_order | realizable | generators | known",
    ]
    for label, kind, comps, realizable, gens, known in blocks():
        gtxt = " ; ".join(mat_format(g) for g in gens)
        ktxt = ",".join(f"{k}={v}" for k, v in sorted(known.items()))
        lines.append(f"{label} | {kind} | {comps} | {realizable} | {gtxt} | {ktxt}")
    return "\n".join(lines) + "\n"


def main():
    import pathlib

    target = pathlib.Path(__file__).parent / "data" / "genus2_blocks.txt"
    target.write_text(render())
    print(f"wrote {target}")


if __name__ == "__main__":
    main()
