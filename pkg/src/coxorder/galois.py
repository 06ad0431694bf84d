"""
The relations xRz <=> z(Phi_x) = Phi_x and xR'z <=> z(Phi'_x) = Phi'_x,
the maps they induce between subsets of W, and their stable pairs.
Finite W only for anything set-valued.
"""

from dataclasses import dataclass

from coxorder.errors import UnsupportedInfinite, NotInvolution, CoxError
from coxorder.weak import leq

R, RPRIME = "R", "Rprime"


class LengthMismatchFamilies(CoxError):
    pass


def _perm(w):
    "w as a permutation of the finite root set, cached on the system"
    W = w.system
    cache = W.__dict__.setdefault("_perms", {})
    p = cache.get(w.word)
    if p is None:
        if not w.word:
            p = {r: r for r in W.roots()}
        else:
            s = w.word[0]
            rest = _perm(W.element(w.word[1:]))
            p = {r: W.reflect(s, q) for (r, q) in rest.items()}
        cache[w.word] = p
    return p


def _image(z, roots):
    if z.system.is_finite():
        p = _perm(z)
        return frozenset(p[r] for r in roots)
    return z.act_set(roots)


def relation_r(x, z):
    phi = x.inversion_set()
    return _image(z, phi) == phi


def relation_rprime(x, z):
    if not x.system.is_finite():
        raise UnsupportedInfinite("R' is only implemented for finite W")
    phi = x.complement()
    return _image(z, phi) == phi


def _rel(flavor):
    return {R: relation_r, RPRIME: relation_rprime}[flavor]


def _table(W, flavor):
    "x -> {z : x rel z}"
    if not W.is_finite():
        raise UnsupportedInfinite("set-valued Galois maps need finite W")
    cache = W.__dict__.setdefault("_galois", {})
    if flavor not in cache:
        rel = _rel(flavor)
        E = W.elements()
        cache[flavor] = {x: frozenset(z for z in E if rel(x, z)) for x in E}
    return cache[flavor]


def dagger(W, X, flavor=R):
    t = _table(W, flavor)
    out = frozenset(W.elements())
    for x in X:
        out &= t[x]
    return out


def star(W, Z, flavor=R):
    t = _table(W, flavor)
    Z = frozenset(Z)
    return frozenset(x for x in W.elements() if Z <= t[x])


@dataclass(frozen=True)
class StablePair:
    group: frozenset
    lattice: frozenset
    flavor: str

    def key(self):
        return (len(self.group), sorted(self.group))


def stable_pairs(W, flavor=R):
    t = _table(W, flavor)
    groups = {frozenset(W.elements())}
    for g in t.values():
        groups |= {g & h for h in groups}
        groups.add(g)
    out = []
    for G in groups:
        L = star(W, G, flavor)
        assert dagger(W, L, flavor) == G
        out.append(StablePair(G, L, flavor))
    out.sort(key=StablePair.key)
    return out


def groupoid_hom(Xfam, Yfam):
    Xfam, Yfam = list(Xfam), list(Yfam)
    if len(Xfam) != len(Yfam):
        raise LengthMismatchFamilies("%d vs %d" % (len(Xfam), len(Yfam)))
    if not Xfam:
        raise LengthMismatchFamilies("empty families")
    W = Xfam[0].system
    if not W.is_finite():
        raise UnsupportedInfinite("needs finite W")
    pairs = [(x.inversion_set(), y.inversion_set()) for (x, y) in zip(Xfam, Yfam)]
    if any(len(a) != len(b) for (a, b) in pairs):
        return frozenset()
    return frozenset(z for z in W.elements() if all(_image(z, a) == b for (a, b) in pairs))


def involution_star(w):
    W = w.system
    if w * w != W.identity:
        raise NotInvolution(str(w))
    L = star(W, [w], RPRIME)
    G = dagger(W, L, RPRIME)
    assert w in L and w in G
    assert all(leq(w, x) for x in L), "w is not the minimum of its semilattice"
    assert all(leq(g, w) for g in G), "w is not the maximum of its group"
    return StablePair(G, L, RPRIME)


def is_subgroup(G):
    G = frozenset(G)
    return all(x * y in G for x in G for y in G) and all(x.inverse() in G for x in G)


def is_meet_closed(L):
    from coxorder.weak import meet
    L = frozenset(L)
    return all(meet([x, y]) in L for x in L for y in L)
