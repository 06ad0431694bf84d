import itertools
import random

import pytest

from coxorder.closures import (closure, closure_set, is_closed, is_coclosed, is_biclosed,
    strip_simple, NotBiclosed, is_unipodal, Ambient, zsum_closure, pair_closure_two)
from coxorder.cone import in_cone
from coxorder.rootsys import bruhat_stratum
from coxorder.scalars import Scalar
from coxorder.errors import UnsupportedSystem, TruncationLimit
from conftest import system


def a2_names(W):
    a, g = W.simple_roots
    return a, W.make_root([1, 1]), g


def test_two_closure_examples(A2, B2):
    a, b, g = a2_names(A2)
    assert closure_set(A2, {a, g}) == {a, b, g}
    assert closure_set(A2, {b}) == {b}
    assert closure_set(B2, B2.simple_roots) == B2.positive_roots()


def test_infinite_closure(Iinf):
    a, g = Iinf.simple_roots
    res = closure(Iinf, "two", {a, g}, 10)
    assert res.infinite and set(res.witness) == {a, g}
    assert str(res).startswith("INFINITE")
    assert pair_closure_two(Iinf, a, g).infinite
    # closed finite sets still close fine
    x = Iinf.element([0, 1, 0])
    assert closure(Iinf, "two", x.inversion_set(), 10).roots == x.inversion_set()


def test_truncation(Iinf):
    x = Iinf.element([0, 1, 0, 1, 0])
    phi = x.inversion_set()
    # the ambient does not hold the roots of the pair cone
    with pytest.raises(TruncationLimit):
        closure(Iinf, "two", {min(phi), max(phi)}, 2)


def _b2(W):
    "B2 roots named by the usual crystallographic labels"
    from coxorder.closures import integer_coords
    by = {integer_coords(W, r): r for r in W.positive_roots()}
    short, long_ = by[1, 0], by[0, 1]
    return {"e2": short, "e1-e2": long_, "e1": by[1, 1], "e1+e2": by[2, 1]}


def test_zsum_differs_in_B2(B2):
    n = _b2(B2)
    G = {n["e1-e2"], n["e1+e2"]}
    assert zsum_closure(B2, G) == G
    assert closure(B2, "zsum", G).roots == G
    assert n["e1"] in closure_set(B2, G)
    assert closure(B2, "two", {n["e1-e2"], n["e2"]}).roots == B2.positive_roots()


def test_zsum_needs_crystal():
    H3 = system("H3")
    with pytest.raises(UnsupportedSystem):
        zsum_closure(H3, H3.simple_roots)


def test_zsum_counterexample_B2(B2):
    # some Gamma between Phi_{x,-1} and Phi_x whose sum closure misses Phi_x
    found = []
    for x in B2.elements():
        low = bruhat_stratum(x, -1)
        phi = x.inversion_set()
        extra = sorted(phi - low)
        for k in range(len(extra) + 1):
            for add in itertools.combinations(extra, k):
                G = low | set(add)
                assert closure_set(B2, G) == phi
                if zsum_closure(B2, G) != phi:
                    found.append((x, G))
    assert found


def test_closed_predicates(A2):
    a, b, g = a2_names(A2)
    assert is_closed(A2, {b}, A2.positive_roots())
    assert not is_biclosed(A2, {b})
    assert is_coclosed(A2, {b, g})
    assert is_biclosed(A2, {a, b})
    assert not is_closed(A2, {a, g}, A2.positive_roots())


def test_strip_simple(A2):
    a, b, g = a2_names(A2)
    assert strip_simple(A2, {a, b}) == A2.element([0, 1])
    r = strip_simple(A2, {b})
    assert isinstance(r, NotBiclosed) and not r


def test_unipodal(A2, A3):
    a, b, g = a2_names(A2)
    assert not is_unipodal(A2, {b})
    assert is_unipodal(A2, {a, b})
    pos = A3.positive_roots()
    for m in Ambient(A3, pos).closed_sets():
        co = Ambient(A3, pos)
        G = pos - co.set(m)
        assert is_unipodal(A3, G)


def _random_sets(W, n, seed):
    rng = random.Random(seed)
    pos = sorted(W.positive_roots())
    for _ in range(n):
        yield frozenset(r for r in pos if rng.random() < 0.4)


@pytest.mark.parametrize("name", ["A3", "B2", "A2"])
def test_closure_axioms(name):
    W = system(name)
    kinds = ["two", "cone", "zsum"]
    sets = list(_random_sets(W, 40, 5))
    for k in kinds:
        for G in sets:
            c = closure(W, k, G).roots
            assert G <= c
            assert closure(W, k, c).roots == c
            for H in sets[:8]:
                if G <= H:
                    assert c <= closure(W, k, H).roots
    for G in sets:
        two = closure(W, "two", G).roots
        assert two <= closure(W, "cone", G).roots


def test_phi_closed(A3):
    for x in A3.elements():
        assert closure_set(A3, x.inversion_set()) == x.inversion_set()
        assert closure_set(A3, x.complement()) == x.complement()


def test_equivariance(A3):
    rng = random.Random(2)
    E = A3.elements()
    allr = A3.roots()
    for G in _random_sets(A3, 200, 11):
        w = rng.choice(E)
        wG = w.act_set(G)
        assert closure(A3, "two", wG, allr).roots == w.act_set(closure(A3, "two", G, allr).roots)


def _solve(cols, target):
    "nonnegative solution of sum c_i cols_i = target with independent cols, or None"
    n, k = len(target), len(cols)
    rows = [[cols[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    zero = Scalar(0)
    r = 0
    piv = []
    for c in range(k):
        p = next((i for i in range(r, n) if rows[i][c] != zero), None)
        if p is None:
            return None
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [v * inv for v in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != zero:
                f = rows[i][c]
                rows[i] = [u - f * v for (u, v) in zip(rows[i], rows[r])]
        piv.append(c)
        r += 1
    if any(rows[i][k] != zero for i in range(r, n)):
        return None
    sol = [rows[i][k] for i in range(k)]
    return sol if all(s.sign() >= 0 for s in sol) else None


def caratheodory(vecs, target):
    "target in the cone iff it is in the cone of some independent subfamily"
    n = len(target)
    for k in range(1, min(n, len(vecs)) + 1):
        for sub in itertools.combinations(vecs, k):
            if _solve(list(sub), target) is not None:
                return True
    return all(t == Scalar(0) for t in target)


@pytest.mark.parametrize("name", ["A3", "B3"])
def test_cone_vs_caratheodory(name):
    W = system(name)
    pos = sorted(W.positive_roots())
    rng = random.Random(4)
    for _ in range(60):
        G = rng.sample(pos, rng.randrange(1, 5))
        vecs = [r.coords for r in G]
        for r in W.roots():
            assert in_cone(vecs, r.coords) == caratheodory(vecs, r.coords), (G, r)


def test_sandwich_B3(B3):
    rng = random.Random(9)
    for x in B3.elements():
        low = bruhat_stratum(x, -1)
        phi = x.inversion_set()
        extra = sorted(phi - low)
        for _ in range(200 if len(extra) > 7 else 2 ** len(extra)):
            G = low | frozenset(r for r in extra if rng.random() < 0.5)
            assert closure_set(B3, G) == phi
        # converse: dropping any root of the stratum loses Phi_x
        for r in low:
            assert closure_set(B3, phi - {r}) != phi


@pytest.mark.parametrize("name,order", [("A2", 6), ("B2", 8), ("A3", 24), ("B3", 48)])
def test_biclosed_census(name, order):
    W = system(name)
    A = Ambient(W, W.positive_roots())
    brute = [A.set(m) for m in range(A.full + 1) if A.is_biclosed(m)]
    assert len(brute) == order
    assert set(brute) == {x.inversion_set() for x in W.elements()}
    assert sorted(A.biclosed_sets(brute=False)) == sorted(A.biclosed_sets(brute=True))
