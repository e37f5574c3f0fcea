from fractions import Fraction as F

import pytest

from st3.catalog import su3_subgroup_gens
from st3.matgroup import diag3, su3_close
from st3.rationality import (
    UnityTriple,
    beukers_smyth_check,
    cyclic_integrality_classes,
    cyclic_integrality_holds,
    restricted_rationality,
    single_integrality_classes,
    single_integrality_holds,
)

REF_SINGLE = [
    "0,0,0", "0,1/3,2/3", "1/3,1/3,1/3", "1/4,1/4,1/2", "0,1/6,5/6",
    "1/6,1/3,1/2", "1/7,2/7,4/7", "1/8,3/8,1/2", "1/9,1/9,7/9",
    "1/12,1/12,5/6", "1/12,1/6,3/4", "1/12,5/12,1/2", "1/18,1/18,8/9",
    "1/21,4/21,16/21", "1/24,1/6,19/24", "1/90,19/90,7/9",
]

# the class often written (1/18, 7/18, 5/9) is recorded here by its
# lexicographically first member (Galois multiplier 13), matching the
# generator presentation used for the corresponding cyclic group
REF_CYCLIC = [
    "0,0,0", "0,1/2,1/2", "0,1/3,2/3", "1/3,1/3,1/3", "0,1/4,3/4",
    "1/4,1/4,1/2", "0,1/6,5/6", "1/6,1/6,2/3", "1/6,1/3,1/2", "1/7,2/7,4/7",
    "1/8,1/4,5/8", "1/8,3/8,1/2", "1/9,1/9,7/9", "1/12,1/12,5/6",
    "1/12,1/6,3/4", "1/12,1/3,7/12", "1/12,5/12,1/2", "1/18,1/18,8/9",
    "1/18,2/9,13/18", "1/21,4/21,16/21", "1/24,1/6,19/24", "1/24,5/12,13/24",
    "1/36,4/9,19/36",
]


def tri(s):
    return UnityTriple.make(*[F(x) for x in s.split(",")])


def test_canonicalize_examples():
    assert str(tri("2/3,1/3,0").canonicalize()) == "0,1/3,2/3"
    assert str(tri("2/7,4/7,1/7").canonicalize()) == "1/7,2/7,4/7"
    # this class is often written (1/18, 7/18, 5/9); multiplying by 13
    # gives the lexicographically smaller member below
    assert str(tri("5/9,7/18,1/18").canonicalize()) == "1/18,2/9,13/18"
    assert tri("5/9,7/18,1/18").canonicalize() == \
        tri("1/18,7/18,5/9").canonicalize()


def test_sum_condition_enforced():
    with pytest.raises(ValueError):
        UnityTriple.make(F(1, 3), F(1, 3), F(0))


def test_single_classes_reference_list():
    got = [str(t) for t in single_integrality_classes()]
    assert got == REF_SINGLE
    for t in single_integrality_classes():
        q = t.abs_square_sum().try_rational()
        assert q is not None and q.denominator == 1


def test_cyclic_classes_reference_list():
    got = [str(t) for t in cyclic_integrality_classes()]
    assert got == REF_CYCLIC
    assert str(tri("1/36,4/9,19/36")) in got[-1]


def test_90_class_excluded_from_cyclic():
    t = tri("1/90,19/90,7/9")
    assert single_integrality_holds(t)
    assert not cyclic_integrality_holds(t)
    # eliminated by squaring
    assert not single_integrality_holds(t.power(2))


def test_cyclic_classes_closure_invariants():
    singles = set(single_integrality_classes())
    half = F(1, 2)
    for t in cyclic_integrality_classes():
        entries = t.entries()
        has_half_pair = any((x - y) % 1 == half for x in entries for y in entries)
        assert has_half_pair or t.canonicalize() in singles
        # prime-shrink closure: (pu, pv, pw) lands earlier in the list
        ordered = list(cyclic_integrality_classes())
        for p in (2, 3, 5, 7):
            if t.order % p == 0:
                shrunk = t.power(p).canonicalize()
                assert shrunk in ordered
                assert ordered.index(shrunk) <= ordered.index(t)


def test_degenerate_family_detection():
    assert tri("0,1/4,3/4").is_degenerate()
    assert not tri("1/7,2/7,4/7").is_degenerate()
    # degenerates satisfy single-integrality via the (a+b)(b+c)(c+a)=0 branch
    assert single_integrality_holds(tri("1/10,1/5,7/10"))


def test_restricted_rationality_groups():
    a66 = su3_close(su3_subgroup_gens("A(6,6)"))
    assert restricted_rationality(a66)
    bad = su3_close([diag3(F(0), F(1, 8), F(7, 8))])
    assert not restricted_rationality(bad)
    witness = su3_close([diag3(F(2, 3), F(1, 24), F(7, 24))])
    assert not restricted_rationality(witness)


def test_restricted_rationality_matches_powers_membership():
    # cyclic <D(u,v,w)>: restricted rationality iff all power triples are
    # degenerate or in the single-integrality classes
    cases = [(F(1, 21), F(16, 21), F(4, 21)), (F(1, 9), F(4, 9), F(4, 9)),
             (F(2, 3), F(1, 24), F(7, 24)), (F(0), F(1, 8), F(7, 8))]
    for u, v, w in cases:
        grp = su3_close([diag3(u, v, w)])
        t = UnityTriple.make(u, v, w)
        assert restricted_rationality(grp) == cyclic_integrality_holds(t)


def test_beukers_smyth():
    rep = beukers_smyth_check()
    assert rep["ok"], (rep["missing"], rep["extra"])
    assert len(rep["recovered"]) == 16
