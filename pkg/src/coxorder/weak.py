"""
Weak order: joins by closing the union of inversion sets, meets by
peeling common left descents, plus the finite-complement tricks.
"""

import logging
from dataclasses import dataclass

from coxorder.closures import (closure, closure_set, strip_simple, NotBiclosed,
    is_coclosed, default_ambient)
from coxorder.errors import (MixedSystems, NoUpperBound, LengthMismatch, NotCoclosed,
    UnsupportedInfinite, TheoremViolation)
from coxorder.rootsys import maximal_dihedral_containing

log = logging.getLogger("coxorder.research")

INFINITE_CLOSURE = "InfiniteClosure"
NOT_BICLOSED = "NotBiclosedClosure"


@dataclass(frozen=True)
class NoJoin:
    reason: str
    witness: object = None

    def __bool__(self):
        return False

    def __str__(self):
        return "NOJOIN:%s" % self.reason


def _system(X):
    X = list(X)
    assert X, "need a nonempty set"
    s = X[0].system
    for x in X:
        if x.system is not s:
            raise MixedSystems("elements from different systems")
    return s, X


def leq(x, y):
    return x.inversion_set() <= y.inversion_set()


def join(X, depth=None):
    """
    y with Phi_y = closure of the union, or NoJoin.
    depth is the root depth cap used for infinite systems
    """
    W, X = _system(X)
    union = frozenset().union(*(x.inversion_set() for x in X))
    if W.is_finite():
        amb = W.positive_roots()
    else:
        if depth is None:
            depth = max(10, 2 * max(len(x) for x in X) + 2)
        amb = W.positive_roots(depth)
    res = closure(W, "two", union, amb)
    if res.infinite:
        return NoJoin(INFINITE_CLOSURE, res.witness)
    y = strip_simple(W, res.roots)
    if isinstance(y, NotBiclosed):
        log.info("finite closure that is not an inversion set: %s -> %d roots",
            [str(x) for x in X], len(res.roots))
        return NoJoin(NOT_BICLOSED, y.residue)
    return y


def meet(X):
    W, X = _system(X)
    word = []
    while True:
        common = None
        for x in X:
            d = x.left_descents()
            common = d if common is None else common & d
        if not common:
            break
        s = min(common)
        word.append(s)
        g = W.gen(s)
        X = [g * x for x in X]
    return W.element(word)


def lower_interval(x):
    "{w : w <= x}, grown upward from the identity"
    W = x.system
    phi = x.inversion_set()
    out = {W.identity}
    layer = [W.identity]
    while layer:
        nxt = set()
        for w in layer:
            for s in range(W.rank):
                ws = W.element(w.word + (s,))
                if len(ws) > len(w) and ws.inversion_set() <= phi:
                    nxt.add(ws)
        out |= nxt
        layer = nxt
    return out


def meet_oracle(X):
    "brute force: the largest common lower bound"
    X = list(X)
    cands = [w for w in lower_interval(X[0]) if all(leq(w, x) for x in X[1:])]
    top = [w for w in cands if all(leq(u, w) for u in cands)]
    assert len(top) == 1
    return top[0]


def join_oracle(X):
    "brute force over a finite group: the least common upper bound or None"
    W, X = _system(X)
    ups = [w for w in W.elements() if all(leq(x, w) for x in X)]
    low = [w for w in ups if all(leq(w, u) for u in ups)]
    return low[0] if low else None


def meet_complement_check(X):
    W, X = _system(X)
    if not W.is_finite():
        raise UnsupportedInfinite("complement formula needs finite W")
    m = meet(X)
    union = frozenset().union(*(x.complement() for x in X))
    return closure_set(W, union) == m.complement()


@dataclass
class AdjoinOutcome:
    case: int      # +1 or -1
    y: object
    checks: dict


def join_adjoin_root(x, a):
    """
    For l(s_a x) = l(x)+1: the least z >= x with a in Phi_z.
    For l(s_a x) = l(x)-1: the largest z <= x with a not in Phi_z.
    """
    W = x.system
    t = W.reflection_element(a)
    tx = t * x
    if len(tx) == len(x) + 1:
        amb = W.positive_roots() if W.is_finite() else W.positive_roots(2 * len(x) + 4)
        res = closure(W, "two", x.inversion_set() | {a}, amb)
        if res.infinite:
            raise NoUpperBound("closure is infinite")
        y = strip_simple(W, res.roots)
        if isinstance(y, NotBiclosed):
            raise NoUpperBound("closure is not an inversion set")
        ty = t * y
        rest = closure_set(W, (x.inversion_set() | tx.inversion_set()) - {a}, amb)
        checks = {
            "phi_ty": ty.inversion_set() == y.inversion_set() - {a},
            "closure": rest == y.inversion_set() - {a},
            "is_join": join([x, tx]) == y,
        }
        return AdjoinOutcome(+1, y, checks)
    if len(tx) == len(x) - 1:
        if W.is_finite():
            c = closure_set(W, x.complement() | {a})
            y = strip_simple(W, W.positive_roots() - c)
            if isinstance(y, NotBiclosed):
                raise TheoremViolation("complement closure not biclosed for %s, %s" % (x, a))
            ty = t * y
            rest = closure_set(W, (x.complement() | tx.complement()) - {a})
            checks = {
                "phi_ty": ty.complement() == y.complement() - {a},
                "closure": rest == y.complement() - {a},
                "is_meet": meet([x, tx]) == y,
            }
        else:
            cands = [z for z in lower_interval(x) if a not in z.inversion_set()]
            y = max(cands, key=len)
            checks = {
                "maximum": all(leq(z, y) for z in cands),
                "is_meet": meet([x, tx]) == y,
            }
        return AdjoinOutcome(-1, y, checks)
    raise LengthMismatch("l(s_a x) - l(x) = %d" % (len(tx) - len(x)))


def max_below_avoiding(x, y):
    "max{w <= y : Phi_x and Phi_w disjoint}"
    W = x.system
    if W.is_finite():
        c = closure_set(W, x.inversion_set() | y.complement())
        z = strip_simple(W, W.positive_roots() - c)
        if isinstance(z, NotBiclosed):
            raise TheoremViolation("not biclosed")
        return z
    phi = x.inversion_set()
    cands = [w for w in lower_interval(y) if not (w.inversion_set() & phi)]
    z = max(cands, key=len)
    assert all(leq(w, z) for w in cands)
    return z


def cofinite_coclosed_closure(W, gamma):
    "x with Phi'_x = closure(gamma), for coclosed gamma in finite W"
    if not W.is_finite():
        raise UnsupportedInfinite("needs finite W")
    gamma = frozenset(gamma)
    if not is_coclosed(W, gamma):
        raise NotCoclosed("complement of gamma is not closed")
    c = closure_set(W, gamma)
    x = strip_simple(W, W.positive_roots() - c)
    if isinstance(x, NotBiclosed):
        raise TheoremViolation("closure of a coclosed set is not biclosed")
    return x


def parabolic_fibering_check(W, J, x):
    J = frozenset(J)
    if not J:
        return True
    wJ = W.parabolic_longest(J)
    if len(wJ * x) != len(wJ) + len(x):
        raise LengthMismatch("l(w_J x) != l(w_J) + l(x)")
    y = join([wJ, x])
    if not y:
        return y
    z = wJ * y
    ok = True
    WJ = _parabolic_elements(W, J)
    for u in WJ:
        uz = u * z
        if join([u, z]) != uz:
            ok = False
        if u.inversion_set() & z.inversion_set() or \
                uz.inversion_set() != u.inversion_set() | z.inversion_set():
            ok = False
    phiy = y.inversion_set()
    for a in W.positive_roots():
        if not a.support() <= J:
            continue
        for p in maximal_dihedral_containing(W, a, W.positive_roots()):
            pos = p.plane.positive() if p.finite else p.positive
            if not (pos <= phiy or pos & phiy == {a}):
                ok = False
    return ok


def _parabolic_elements(W, J):
    out = {W.identity}
    layer = [W.identity]
    while layer:
        nxt = []
        for w in layer:
            for s in J:
                u = W.element(w.word + (s,))
                if u not in out:
                    out.add(u)
                    nxt.append(u)
        layer = nxt
    return out
