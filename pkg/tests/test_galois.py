import random

import pytest

from coxorder.galois import (relation_r, relation_rprime, dagger, star, stable_pairs,
    groupoid_hom, involution_star, is_subgroup, is_meet_closed, R, RPRIME,
    LengthMismatchFamilies)
from coxorder.rootsys import subgroup_of_elements
from coxorder.weak import join, meet, leq
from coxorder.closures import closure_set
from coxorder.errors import NotInvolution, UnsupportedInfinite
from conftest import system

SMALL = ["A3", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)"]


def gen(W, word):
    return W.parse_element(word)


@pytest.mark.parametrize("name", SMALL)
def test_r_chain(name):
    W = system(name)
    E = W.elements()
    for x in E:
        px = x.inversion_set()
        for z in E:
            pz = z.inversion_set()
            r = relation_r(x, z)
            j = join([x, z])
            a = bool(j) and j == z * x and not (px & pz)
            b = (z * x).inversion_set() == pz | px and not (px & pz)
            assert r == a == b, (x, z)
            if r:
                assert relation_r(x, z.inverse())
                assert len(z * x) == len(z) + len(x)


@pytest.mark.parametrize("name", SMALL)
def test_rprime_chain(name):
    W = system(name)
    E = W.elements()
    for x in E:
        cx = x.complement()
        for z in E:
            pz = z.inversion_set()
            czx = (z * x).complement()
            r = relation_rprime(x, z)
            a = closure_set(W, cx | pz) == czx and not (cx & pz)
            b = (pz | cx) == czx and not (cx & pz)
            assert r == a == b, (x, z)
            if r:
                assert leq(z, x)
                assert len(x) - len(z) == len(z.inverse() * x)
                assert relation_rprime(x, z.inverse())


@pytest.mark.parametrize("name", SMALL)
@pytest.mark.parametrize("flavor", [R, RPRIME])
def test_stable_pairs_structure(name, flavor):
    W = system(name)
    E = W.elements()
    pairs = stable_pairs(W, flavor)
    for p in pairs:
        assert is_subgroup(p.group)
        L = p.lattice
        if flavor == R:
            assert W.identity in L
            assert all(leq(W.identity, x) for x in L)
        if L:
            assert is_meet_closed(L)
        # existing joins stay inside
        Ls = sorted(L)
        for x in Ls:
            for y in Ls:
                j = join([x, y])
                if j:
                    assert j in L
    if flavor == RPRIME:
        assert star(W, E, RPRIME) == {W.longest()}
    else:
        assert star(W, E, R) == {W.identity}


def test_galois_law():
    rng = random.Random(1)
    for name in ("B2", "A3"):
        W = system(name)
        E = W.elements()
        for flavor in (R, RPRIME):
            for _ in range(200):
                X = frozenset(rng.sample(E, rng.randrange(0, 4)))
                Z = frozenset(rng.sample(E, rng.randrange(0, 4)))
                assert (Z <= dagger(W, X, flavor)) == (X <= star(W, Z, flavor))


def test_rprime_bounded(A3):
    E = A3.elements()
    for x in E:
        D = dagger(A3, [x], RPRIME)
        assert all(leq(z, x) for z in D)


def test_trivial_relations(A3):
    one = A3.identity
    for w in A3.elements():
        assert relation_r(one, w) and relation_r(w, one)
    assert dagger(A3, [one]) == set(A3.elements())


@pytest.mark.parametrize("m", [3, 4, 5, 6, 7])
def test_dihedral_relations(m):
    W = system("I2(%d)" % m)
    w0 = W.longest()
    for w in W.elements():
        assert relation_r(w0, w) == (w == W.identity)
    # G = {1, s} is stable with G* = {1, s w0}
    for s in (W.gen(0), W.gen(1)):
        assert star(W, [s]) == {W.identity, s * w0}
    n = len(stable_pairs(W))
    assert n == (m + 1 if m % 2 else m + 2)


def test_dihedral_m4_pair(B2):
    w0 = B2.longest()
    for s in (B2.gen(0), B2.gen(1)):
        assert relation_r(s * w0, s)
        assert groupoid_hom([s * w0], [s * w0]) == {B2.identity, s}


def test_groupoid_hom(A3):
    rng = random.Random(3)
    E = A3.elements()
    for _ in range(30):
        X = rng.sample(E, 2)
        assert groupoid_hom(X, X) == dagger(A3, X)
    assert groupoid_hom([A3.gen(0)], [A3.longest()]) == frozenset()
    with pytest.raises(LengthMismatchFamilies):
        groupoid_hom([A3.gen(0)], [])


def test_a4_identities(A4):
    sd = dagger(A4, [gen(A4, "2")])
    assert sd == subgroup_of_elements(A4, [gen(A4, "4"), gen(A4, "1.2.3.2.1")])
    td = dagger(A4, [gen(A4, "3")])
    assert td == subgroup_of_elements(A4, [gen(A4, "1"), gen(A4, "2.3.4.3.2")])
    std = dagger(A4, [gen(A4, "2"), gen(A4, "3")])
    assert std == subgroup_of_elements(A4, [gen(A4, "1.2.3.4.3.2.1")])


def test_a4_involution_map(A4):
    w = gen(A4, "1.2.3.4.3.2.1")
    groups = {p.group for p in stable_pairs(A4, R)}
    named_ = [dagger(A4, [gen(A4, "2")]), dagger(A4, [gen(A4, "3")]),
        dagger(A4, [gen(A4, "2"), gen(A4, "3")])]
    assert len(set(named_)) == 3
    for G in named_:
        assert G in groups
        assert w in G and max(len(g) for g in G) == len(w)
    invs = [x for x in A4.elements() if x * x == A4.identity]
    images = {involution_star(x).lattice for x in invs}
    assert len(images) == len(invs)
    assert len(images) < len([p for p in stable_pairs(A4, RPRIME) if p.lattice])


def test_involution_star(A3):
    p = involution_star(A3.identity)
    assert A3.identity in p.lattice
    p = involution_star(A3.longest())
    assert p.lattice == {A3.longest()}
    with pytest.raises(NotInvolution):
        involution_star(gen(A3, "1.2"))


def test_infinite_rprime(Iinf):
    with pytest.raises(UnsupportedInfinite):
        relation_rprime(Iinf.gen(0), Iinf.gen(1))
    assert relation_r(Iinf.gen(0), Iinf.identity)
