"""
Parabolic weak orders: finite biclosed subsets of Lambda_J = Phi_+ u Phi_J
ordered by inclusion.
"""

import logging

from coxorder.closures import Ambient, closure, strip_simple, NotBiclosed, _cone_in
from coxorder.errors import (UnsupportedInfinite, NotQuasiparabolic, TruncationLimit,
    TheoremViolation)
from coxorder.roots import sort_roots
from coxorder.weak import NoJoin, leq
from coxorder.posets import covers, maximal_chains, to_dot
from coxorder.roots import render

log = logging.getLogger("coxorder.research")


class ParabolicSet:
    def __init__(self, system, J, cap=None):
        self.system = system
        self.J = frozenset(J)
        finite = system.is_finite()
        if not finite and cap is None:
            cap = 8
        self.cap = None if finite else cap
        allr = system.roots(self.cap)
        self.phiJ = frozenset(r for r in allr if r.support() <= self.J)
        self.roots = system.positive_roots(self.cap) | self.phiJ
        self._amb = None

    @property
    def ambient(self):
        if self._amb is None:
            if not self.system.is_finite():
                raise UnsupportedInfinite("no finite ambient for infinite W")
            self._amb = Ambient(self.system, self.roots)
        return self._amb

    def __repr__(self):
        return "Lambda_%s(%s)" % (sorted(j + 1 for j in self.J), self.system.name)


def lambda_j(system, J, cap=None):
    return ParabolicSet(system, J, cap)


def type_map(P, gamma):
    return frozenset(gamma) & P.phiJ


def in_L(P, gamma):
    "is gamma a finite biclosed subset of Lambda?"
    W = P.system
    gamma = frozenset(gamma)
    if not gamma <= P.roots:
        return False
    if W.is_finite():
        A = P.ambient
        return A.is_biclosed(A.mask(gamma))
    if len(P.J) > 1:
        raise UnsupportedInfinite("membership for |J| > 1 in infinite W")
    if not P.J:
        return not isinstance(strip_simple(W, gamma), NotBiclosed)
    (s,) = P.J
    a = W.simple_roots[s]
    pos = frozenset(r for r in gamma if r.positive)
    other = frozenset(W.reflect(s, r) for r in gamma if r != a)
    return (not isinstance(strip_simple(W, pos), NotBiclosed) and
        not isinstance(strip_simple(W, other), NotBiclosed))


def enumerate_biclosed_in_lambda(P, max_length=None):
    W = P.system
    if W.is_finite():
        A = P.ambient
        out = [A.set(m) for m in A.biclosed_sets()]
        return sorted(out, key=_set_key)
    if len(P.J) >= 2:
        log.info("infinite W with |J| = %d: finite biclosed sets of Lambda may collapse to {empty}", len(P.J))
        raise UnsupportedInfinite("enumeration for |J| >= 2 needs finite W")
    if max_length is None:
        raise TruncationLimit("infinite W needs an element length bound", None)
    out = set()
    for x in W.elements(max_length):
        phi = x.inversion_set()
        if not P.J:
            out.add(phi)
            continue
        (s,) = P.J
        a = W.simple_roots[s]
        sx = W.gen(s) * x
        if a in phi:
            out.add(phi)
            out.add(frozenset(W.reflect(s, r) for r in phi))
        if x != sx and leq(x, sx):
            out.add(phi)
        if x != sx and leq(sx, x):
            out.add(phi | {-a})
    return sorted(out, key=_set_key)


def _set_key(s):
    return (len(s), [r.key for r in sort_roots(s)])


def _closure_in(P, gamma):
    W = P.system
    if W.is_finite():
        A = P.ambient
        return A.set(A.closure(A.mask(gamma)))
    res = closure(W, "two", gamma, P.system.roots(P.cap))
    if res.infinite:
        return None
    if not res.roots <= P.roots:
        raise TruncationLimit("closure leaves Lambda", P.cap)
    return res.roots


def pjoin(P, Y):
    Y = [frozenset(g) for g in Y]
    assert Y
    if len(P.J) <= 1:
        u = frozenset().union(*Y)
        c = _closure_in(P, u)
        if c is None:
            return NoJoin("InfiniteClosure")
        if not in_L(P, c):
            return NoJoin("NotBiclosedClosure", c)
        return c
    L = enumerate_biclosed_in_lambda(P)
    ups = [g for g in L if all(y <= g for y in Y)]
    low = [g for g in ups if all(g <= u for u in ups)]
    return low[0] if low else NoJoin("NoUpperBound")


def pmeet(P, Y):
    Y = [frozenset(g) for g in Y]
    assert Y
    W = P.system
    if W.is_finite() and len(P.J) <= 1:
        lam = P.roots
        u = frozenset().union(*(lam - g for g in Y))
        out = lam - _closure_in(P, u)
        if not in_L(P, out):
            raise TheoremViolation("complement formula did not give an element of L")
        return out
    if W.is_finite():
        L = enumerate_biclosed_in_lambda(P)
        lows = [g for g in L if all(g <= y for y in Y)]
    else:
        inter = frozenset.intersection(*Y)
        lows = [g for g in _subsets(inter) if in_L(P, g)]
    top = [g for g in lows if all(h <= g for h in lows)]
    assert len(top) == 1
    return top[0]


def _subsets(s):
    s = sort_roots(s)
    for m in range(1 << len(s)):
        yield frozenset(s[i] for i in range(len(s)) if m >> i & 1)


def pmeet_oracle(L, Y):
    lows = [g for g in L if all(g <= y for y in Y)]
    top = [g for g in lows if all(h <= g for h in lows)]
    return top[0] if len(top) == 1 else None


def pjoin_oracle(L, Y):
    ups = [g for g in L if all(y <= g for y in Y)]
    low = [g for g in ups if all(g <= u for u in ups)]
    return low[0] if len(low) == 1 else None


def quasiparabolic_data(system, lam):
    "(Psi, simple roots of W(Lambda), element set of W(Lambda))"
    from coxorder.rootsys import ReflectionSubgroup
    if not system.is_finite():
        raise UnsupportedInfinite("checked on finite W only")
    lam = frozenset(lam)
    allr = system.roots()
    if lam | frozenset(-r for r in lam) != allr:
        raise NotQuasiparabolic("Lambda u -Lambda != Phi")
    A = Ambient(system, allr)
    if A.closure(A.mask(lam)) != A.mask(lam):
        raise NotQuasiparabolic("Lambda is not closed")
    psi = frozenset(r for r in lam if -r in lam)
    pos = [r for r in psi if r.positive]
    if not pos:
        return psi, (), frozenset([system.identity])
    sub = ReflectionSubgroup(system, pos)
    G = sub.elements()
    for g in G:
        if frozenset(g(r) for r in lam) != lam:
            raise NotQuasiparabolic("Lambda not stable under W(Lambda)")
    return psi, sub.simple, G


def complement_closure_prop(P, gamma, xi):
    "Delta in L with closure((Lambda - gamma) u xi) = Lambda - Delta"
    lam = P.roots
    c = _closure_in(P, (lam - frozenset(gamma)) | frozenset(xi))
    delta = lam - c
    if not in_L(P, delta):
        raise TheoremViolation("complement closure is not co-biclosed")
    return delta


def hasse(P):
    L = enumerate_biclosed_in_lambda(P)
    return L, covers(L, lambda a, b: a <= b)


def chains(L):
    return maximal_chains(L, lambda a, b: a <= b)


def hasse_dot(P):
    L = enumerate_biclosed_in_lambda(P)
    return to_dot(L, lambda a, b: a <= b, label=render, name="L")
