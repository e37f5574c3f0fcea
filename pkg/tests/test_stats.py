import random
from fractions import Fraction as F

import pytest

from st3.stats import (
    component_average,
    component_profile,
    densities,
    diagonal,
    moment,
    norm,
    profile_triple_multiset,
    simplex,
    stat_profile,
)


def test_identity_component_profiles(by_name):
    g = by_name["USp(6)"]
    prof = component_profile(g, g.comps.keys[0])
    assert prof.centrality == "central"
    # a_i at the all-ones point are the signed binomials (-6, 15, -20)
    vals = [p.eval_ones().try_rational() for p in prof.a]
    assert vals == [-6, 15, -20]


def test_component_profile_bounds(catalog):
    # at the all-ones point the a_i are real coefficients of an actual
    # unitary symplectic matrix, hence within the binomial bounds (they can
    # be irrational, e.g. 2cos(2pi/9) traces)
    rng = random.Random(1)
    for g in rng.sample(catalog, 25):
        for key in [g.comps.keys[0], g.comps.keys[-1]]:
            prof = component_profile(g, key)
            if prof.centrality == "closed-form":
                continue
            for p, bound in zip(prof.a, (6, 15, 20)):
                v = p.eval_ones()
                assert v.conj() == v
                z = v.to_complex()
                assert abs(z.imag) < 1e-9
                assert abs(z.real) <= bound + 1e-9


def test_es_transposition_and_cycle_components(by_name):
    es = by_name["E_s"]
    skey = next(k for k in es.comps.keys if k != es.comps.ident)
    prof = component_profile(es, skey)
    assert prof.centrality == "cycle-reduced"
    assert prof.a[0].is_zero() and prof.a[1].is_zero()
    # a3 = -Trace over one SU(2): the T^3 coefficient is -(v + 1/v)
    assert sorted(prof.a[2].terms) == [(-1,), (1,)]
    et = by_name["E_t"]
    tkey = next(k for k in et.comps.keys if k != et.comps.ident)
    ptrans = component_profile(et, tkey)
    assert ptrans.centrality == "cycle-reduced"
    assert ptrans.space.rank == 2


def test_nu3_j_component(by_name):
    g = by_name["N(U(3))"]
    jkey = next(k for k in g.comps.keys if k != g.comps.ident)
    prof = component_profile(g, jkey)
    assert prof.centrality == "closed-form"
    # averaging 1 over any component gives 1
    assert component_average(g, jkey, (((0, 0, 0), F(1)),)) == 1


def test_moment_examples(by_name):
    assert moment(by_name["USp(6)"], 2, 0, 0) == 1
    assert moment(by_name["A(1,1)"], 2, 0, 0) == 18
    assert moment(by_name["J(E(216))"], 0, 0, 0) == 1
    assert moment(by_name["U(1)xUSp(4)"], 0, 1, 0) == 2


def test_per_class_toggle_identical(by_name):
    for name in ("J(B(T,1))", "H(abc,s)", "N(U(1))xJ(C_2)"):
        g = by_name[name]
        for e in [(1, 0, 0), (0, 1, 0), (2, 1, 0)]:
            assert moment(g, *e, per_class=True) == moment(g, *e, per_class=False)


def test_conjugate_components_equal_averages(by_name):
    g = by_name["J(D(4,4))"]
    classes = g.comps.conj_classes()
    big = max(classes, key=len)
    fkey = (((2, 0, 0), F(1)),)
    vals = {component_average(g, k, fkey) for k in big[:4]}
    assert len(vals) == 1


def test_norm_examples(by_name):
    assert norm(by_name["USp(6)"], (3, 3, 1)) == 1
    assert norm(by_name["U(3)"], (2, 2, 2)) == 10
    assert norm(by_name["U(1)xUSp(4)"], (3, 2, 1)) == 50
    # restriction-monotonicity: N(U(3)) between U(3) and half of it
    assert norm(by_name["N(U(3))"], (3, 2, 2)) == 12


def test_diagonal_output(by_name):
    d = diagonal(by_name["SU(2)xUSp(4)"], 2)
    assert d[(0, 0, 0)] == 1
    assert all(v.denominator == 1 and v >= 0 for v in d.values())


def test_densities_examples(by_name):
    z = densities(by_name["USp(6)"])
    assert z[0][0] == 1
    assert all(x == 0 for row in z for x in row[1:]) and z[1][0] == 0
    zn = densities(by_name["N(U(3))"])
    assert zn[1][0] == F(1, 2) and zn[2][0] == F(1, 2) and zn[3][0] == F(1, 2)
    # row sums: z_S2 equals the sum over t of z_S2^t
    for name in ("J(A(1,4)_2)", "M(S_4)", "L(J(D_6),D_6)", "H(a,b,c)"):
        for row in densities(by_name[name]):
            assert row[1] == sum(row[2:], F(0))


def test_density_values_in_range(catalog):
    rng = random.Random(7)
    for g in rng.sample(catalog, 20):
        for row in densities(g):
            for x in row:
                assert 0 <= x <= 1


def test_subgroup_monotonicity(catalog_ext, by_name):
    """N_{ll}(H) >= N_{ll}(G) and M_e(H) >= M_e(G) for recorded H <= G."""
    pairs = []
    for g in catalog_ext:
        for sub in g.subgroups:
            if sub in by_name:
                pairs.append((by_name[sub], g))
    assert len(pairs) >= 50
    rng = random.Random(3)
    lam = (1, 1, 0)
    for sub, sup in rng.sample(pairs, 50):
        assert norm(sub, lam) >= norm(sup, lam), (sub.name, sup.name)
        assert moment(sub, 2, 0, 0) >= moment(sup, 2, 0, 0)


def test_prop62_pair(by_name):
    g1, g2 = by_name["J(C(3,3))"], by_name["Js(C(3,3))"]
    assert profile_triple_multiset(g1) == profile_triple_multiset(g2)
    assert g1.comps.fingerprint() != g2.comps.fingerprint()
    assert simplex(g1, 6) == simplex(g2, 6)


def test_stat_profile_bundle(by_name):
    sp = stat_profile(by_name["N(U(3))"])
    assert sp.fingerprint.order == 2
    assert sp.Z[1][0] == F(1, 2)
    assert len(sp.norms_select) == 6


def test_norm_assembled_from_simplex(catalog):
    """Redundancy: N_{ll} via per-component character averaging equals the
    value assembled monomial-by-monomial from the moment simplex."""
    from st3.stats import _norm_apoly
    from st3.weylchar import subpartitions

    rng = random.Random(42)
    for g in rng.sample(catalog, 10):
        for lam in subpartitions(2):
            via_chars = norm(g, lam)
            via_moments = sum((c * moment(g, *e)
                               for e, c in _norm_apoly(tuple(lam), tuple(lam))),
                              F(0))
            assert via_chars == via_moments, (g.name, lam)
