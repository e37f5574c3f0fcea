import random
from fractions import Fraction as F

import pytest

from st3.catalog import su3_subgroup_gens, T_matrix
from st3.cyclo import CycloNum
from st3.matgroup import (
    ClosureExceedsBound,
    FiniteGroup,
    MatrixG,
    SU3Cayley,
    diag3,
    extension_kind,
    identity,
    in_identity_component,
    j_embed,
    mat,
    mat_format,
    mat_mul,
    mat_parse,
    n_type_components,
    quotient_by_torus,
    su3_close,
    su3_embed,
    symplectic_form,
)
from st3.weylchar import CONNECTED_TYPES


def test_matrixg_invariants():
    m = MatrixG(su3_embed(diag3(F(1, 3), F(1, 3), F(1, 3))))
    j = MatrixG(symplectic_form())
    assert (m * j).m == mat_mul(m.m, j.m)
    broken = [[CycloNum.rational(2 if i == j else 0) for j in range(6)]
              for i in range(6)]
    with pytest.raises(ValueError):
        MatrixG(tuple(tuple(r) for r in broken))


def test_closure_mu3():
    g = FiniteGroup.generate([su3_embed(diag3(F(1, 3), F(1, 3), F(1, 3)))])
    assert len(g) == 3


def test_closure_orders():
    assert len(su3_close(su3_subgroup_gens("A(6,6)"))) == 108
    assert len(su3_close(su3_subgroup_gens("E(216)"), bound=1000)) == 648
    assert len(su3_close(su3_subgroup_gens("B(T,1)"))) == 72
    assert len(su3_close(su3_subgroup_gens("B(O,2)"))) == 288


def test_closure_bound():
    with pytest.raises(ClosureExceedsBound):
        su3_close(su3_subgroup_gens("E(216)"), bound=100)


def test_closure_elements_stay_symplectic_unitary():
    from st3.matgroup import is_symplectic, is_unitary

    gens = [su3_embed(g) for g in su3_subgroup_gens("A(3,2)")] \
        + [symplectic_form()]
    grp = FiniteGroup.generate(gens)
    for m in grp.elements:
        assert is_unitary(m) and is_symplectic(m)


def test_quotient_by_torus_counts():
    tN = CONNECTED_TYPES["N"]
    grp = FiniteGroup.generate([su3_embed(diag3(F(1, 3), F(1, 3), F(1, 3)))])
    q = quotient_by_torus(grp, tN)
    assert len(q) == 1
    # H of order k with the scalars mu_3 inside: k / |H ∩ torus| components
    grp2 = FiniteGroup.generate(
        [su3_embed(diag3(F(1, 9), F(4, 9), F(4, 9)))])
    q2 = quotient_by_torus(grp2, tN)
    assert len(q2) == 3  # A(1,3) has order 9 and contains mu_3


def test_ntype_component_counts():
    cay = SU3Cayley(su3_subgroup_gens("E(216)"), bound=1000)
    assert len(n_type_components(cay, None)) == 216
    assert len(n_type_components(cay, identity(3))) == 432
    cay7 = SU3Cayley(su3_subgroup_gens("A(1,7)"))
    assert len(n_type_components(cay7, None)) == 7
    assert len(n_type_components(cay7, identity(3))) == 14


def test_component_group_laws():
    cay = SU3Cayley(su3_subgroup_gens("B(T,2)"))
    cg = n_type_components(cay, identity(3))
    rng = random.Random(0)
    ks = cg.keys
    for _ in range(200):
        a, b, c = (rng.choice(ks) for _ in range(3))
        assert cg.mul(cg.mul(a, b), c) == cg.mul(a, cg.mul(b, c))
        assert cg.mul(a, cg.inv(a)) == cg.ident


def test_conj_classes():
    # abelian group: singleton classes
    cay = SU3Cayley(su3_subgroup_gens("A(3,2)"))
    cg = n_type_components(cay, None)
    assert all(len(c) == 1 for c in cg.conj_classes())
    # binary tetrahedral image in B(T,1): 2T class sizes {1,1,4,4,4,4,6}
    cayt = SU3Cayley(su3_subgroup_gens("B(T,1)"))
    cgt = n_type_components(cayt, None)
    assert len(cgt) == 24
    sizes = sorted(len(c) for c in cgt.conj_classes())
    assert sizes == [1, 1, 4, 4, 4, 4, 6]
    # C(3,1): brute-force class count of the 9-component group
    cayc = SU3Cayley(su3_subgroup_gens("C(3,1)"))
    cgc = n_type_components(cayc, None)
    assert len(cgc) == 9
    assert len(cgc.conj_classes()) == 9  # image in PSU(3) is abelian


def test_fingerprints_distinguish_prop62_pair():
    cay = SU3Cayley(su3_subgroup_gens("C(3,3)"))
    fp_j = n_type_components(cay, identity(3)).fingerprint()
    fp_js = n_type_components(cay, T_matrix(1)).fingerprint()
    assert fp_j.order == fp_js.order == 54
    assert fp_j != fp_js


def test_fingerprint_conjugate_generators():
    g1 = su3_subgroup_gens("A(2,2)")
    cay1 = SU3Cayley(g1)
    s = su3_subgroup_gens("C(2,2)")[-1]  # the 3-cycle S normalizes A(2,2)
    sinv = tuple(zip(*[[x.conj() for x in r] for r in s]))
    g2 = [mat_mul(mat_mul(s, g), sinv) for g in g1]
    cay2 = SU3Cayley(g2)
    fp1 = n_type_components(cay1, None).fingerprint()
    fp2 = n_type_components(cay2, None).fingerprint()
    assert fp1 == fp2


def test_in_identity_component():
    tN = CONNECTED_TYPES["N"]
    scal = su3_embed(diag3(F(1, 3), F(1, 3), F(1, 3)))
    assert in_identity_component(scal, tN)
    nonscal = su3_embed(diag3(F(1, 3), F(0), F(2, 3)))
    assert not in_identity_component(nonscal, tN)
    tE = CONNECTED_TYPES["E"]
    assert in_identity_component(identity(6), tE)


def test_extension_kinds():
    H = su3_close(su3_subgroup_gens("A(3,2)"))
    g_ns = mat(((1, 0, 0), (0, 0, 1), (0, -1, 0)))
    assert extension_kind(H, g_ns) == "nonsplit-nonstandard"
    assert extension_kind(H, T_matrix(1)) == "split-nonstandard"
    assert extension_kind(H, identity(3)) == "standard"
    assert extension_kind(H, diag3(F(1, 3), F(1, 6), F(1, 2))) == "standard"
    # B(T,1): split nonstandard via D(1/4,1/4,1/2)
    HT = su3_close(su3_subgroup_gens("B(T,1)"))
    assert extension_kind(HT, diag3(F(1, 4), F(1, 4), F(1, 2))) == "split-nonstandard"
    # precondition violations are reported: the 3-cycle S does not normalize
    from st3.catalog import S_MATRIX

    with pytest.raises(ValueError):
        extension_kind(H, S_MATRIX)


def test_matrix_literal_roundtrip():
    for name in ("A(1,8)_2", "E(36)", "B(2,4;4)"):
        for g in su3_subgroup_gens(name):
            m = su3_embed(g)
            assert mat_parse(mat_format(m)) == m
    j = symplectic_form()
    assert mat_parse(mat_format(j)) == j
