import random
from fractions import Fraction as F

import pytest

from st3.identify import InvariantKey, audit_keys, key, match_empirical
from st3.sample import sample_profile


def test_variant_a_on_connected(catalog):
    connected = [g for g in catalog if g.n_components == 1]
    assert len(connected) == 14
    keys = {key(g, "a") for g in connected}
    assert len(keys) == 14


def test_variant_b_prop62_pair_collides(by_name):
    k1 = key(by_name["J(C(3,3))"], "b")
    k2 = key(by_name["Js(C(3,3))"], "b")
    assert k1 == k2


def test_variant_c_separates_prop62_pair(by_name):
    k1 = key(by_name["J(C(3,3))"], "c")
    k2 = key(by_name["Js(C(3,3))"], "c")
    assert k1 != k2


def test_audit_small_families(catalog):
    sub = [g for g in catalog if g.letter in ("A", "B", "C", "D", "E", "M")]
    rep = audit_keys(sub, "c")
    assert rep["collisions"] == []


def test_match_exact_self(by_name):
    # tol = 0 self-match through exact keys rendered as floats
    g = by_name["N(U(3))"]

    class ExactProfile:
        def moment(self, e1, e2, e3):
            from st3.stats import moment as exact

            return float(exact(g, e1, e2, e3))

        def norm_estimate(self, lam, mu=None):
            from st3.stats import norm as exact

            return float(exact(g, lam))

        def z_estimates(self):
            from st3.stats import densities as exact

            return [[float(x) for x in row] for row in exact(g)]

    pool = [by_name[n] for n in ("USp(6)", "U(3)", "N(U(3))", "A(1,1)", "M(C_2)")]
    res = match_empirical(ExactProfile(), 1e-9, "b", pool)
    assert [r[0] for r in res] == [g.label]
    res_c = match_empirical(ExactProfile(), 1e-9, "c", pool)
    assert [r[0] for r in res_c] == [g.label]


def test_match_sampled_profile(by_name):
    # variance of the chi^2 estimators scales like c/sqrt(n); calibrate the
    # tolerance accordingly rather than using a fixed small epsilon
    g = by_name["J(A(1,4)_2)"]
    prof = sample_profile(g, 30000, seed=11)
    pool = [by_name[n] for n in
            ("J(A(1,4)_2)", "A(1,4)_2", "A(1,1)", "J(A(1,1))", "N(U(3))", "U(3)")]
    res = match_empirical(prof, 60.0, "b", pool)
    assert res, "no candidates within tolerance"
    assert res[0][0] == g.label


def test_match_all_zero_profile_empty(catalog):
    class Zero:
        def moment(self, *e):
            return 0.0

        def norm_estimate(self, lam, mu=None):
            return 0.0

        def z_estimates(self):
            return [[0.0] * 7 for _ in range(4)]

    pool = catalog[:20]
    assert match_empirical(Zero(), 0.01, "a", pool) == []
