"""
Closure operators on sets of roots: 2-closure (pair cones), cone
closure and closure under root sums; closed / biclosed predicates,
recognition of inversion sets, and the unipodal test.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from coxorder.roots import sort_roots
from coxorder.scalars import Scalar
from coxorder.cone import in_cone
from coxorder.errors import TruncationLimit, UnsupportedSystem, NotPositive, UnsupportedInfinite
from coxorder.coxeter import dot_action, INF

KINDS = ("two", "cone", "zsum")

log = logging.getLogger("coxorder.research")


@dataclass(frozen=True)
class ClosureResult:
    roots: frozenset = None
    witness: tuple = None   # the pair whose cone is infinite

    @property
    def infinite(self):
        return self.roots is None

    def __str__(self):
        if self.infinite:
            return "INFINITE plane(%s,%s)" % self.witness
        return "{%s}" % ", ".join(str(r) for r in sort_roots(self.roots))


@dataclass(frozen=True)
class NotBiclosed:
    residue: frozenset

    def __bool__(self):
        return False


def default_ambient(system, depth=None):
    if system.is_finite() and depth is None:
        return system.roots()
    if depth is None:
        raise UnsupportedInfinite("infinite system: pass a depth cap or an ambient set")
    return system.roots(depth)


def _ambient(system, ambient):
    if ambient is None:
        return default_ambient(system)
    if isinstance(ambient, int):
        return default_ambient(system, ambient)
    return frozenset(ambient)


def _cap(ambient):
    return max((r.depth for r in ambient), default=0)


def pair_closure_two(system, a, b, ambient=None):
    cone = system.pair_cone(a, b)
    if cone is None:
        return ClosureResult(None, (a, b))
    amb = _ambient(system, ambient if ambient is not None or system.is_finite()
        else max(a.depth, b.depth) * 4)
    if not cone <= amb:
        raise TruncationLimit("pair cone of %s, %s leaves the ambient roots" % (a, b), _cap(amb))
    return ClosureResult(cone)


def closure(system, kind, gamma, ambient=None):
    amb = _ambient(system, ambient)
    gamma = frozenset(gamma)
    if kind == "two":
        return _closure_two(system, gamma, amb)
    if kind == "cone":
        two = _closure_two(system, gamma, amb)
        if two.infinite:
            return two
        vecs = [r.coords for r in sort_roots(gamma)]
        out = frozenset(r for r in amb if r in gamma or in_cone(vecs, r.coords))
        return ClosureResult(out)
    if kind == "zsum":
        return ClosureResult(zsum_closure(system, gamma, amb))
    raise ValueError("unknown closure kind %r" % kind)


def _closure_two(system, gamma, amb):
    done = []
    todo = sort_roots(gamma)
    have = set(gamma)
    cap = None
    while todo:
        r = todo.pop(0)
        new = []
        for q in done + [r]:
            cone = system.pair_cone(q, r)
            if cone is None:
                return ClosureResult(None, (q, r))
            for x in cone:
                if x not in have:
                    if x not in amb:
                        cap = cap or _cap(amb)
                        raise TruncationLimit("closure needs %s beyond the ambient roots" % x, cap)
                    have.add(x)
                    new.append(x)
        done.append(r)
        todo.extend(sort_roots(new))
    return ClosureResult(frozenset(have))


def closure_set(system, gamma, ambient=None):
    "2-closure as a plain set; raises if infinite"
    res = closure(system, "two", gamma, ambient)
    if res.infinite:
        raise UnsupportedInfinite("closure is infinite, witness %s, %s" % res.witness)
    return res.roots


# ----------------------------------------------------------------------
# sums of roots, crystallographic case


def crystal_scales(system):
    "scale c_s for each simple root making the Cartan matrix integral"
    if not system.is_crystallographic() or not hasattr(system, "form"):
        raise UnsupportedSystem("%s is not crystallographic" % system.name)
    if getattr(system, "_scales", None):
        return system._scales
    n = system.rank
    c = [None] * n
    r2, r3 = Scalar.sqrt(2), Scalar.sqrt(3)
    for start in range(n):
        if c[start] is not None:
            continue
        c[start] = Scalar(1)
        todo = [start]
        while todo:
            s = todo.pop()
            for t in range(n):
                m = system.matrix[s][t]
                if t == s or m == 2 or c[t] is not None:
                    continue
                if m in (3, INF):
                    c[t] = c[s]
                elif m == 4:
                    c[t] = c[s] * r2
                elif m == 6:
                    c[t] = c[s] * r3
                todo.append(t)
    for s in range(n):
        for t in range(n):
            a = 2 * c[s] * system.form[s][t] / c[t]
            if not (a.is_rational() and a.rational().denominator == 1):
                raise UnsupportedSystem("no integral Cartan matrix for %s" % system.name)
    system._scales = tuple(c)
    return system._scales


def integer_coords(system, r):
    memo = system.__dict__.setdefault("_intcoords", {})
    if r in memo:
        return memo[r]
    c = crystal_scales(system)
    _, s = system.root_word(r)
    out = []
    for t, x in enumerate(r.coords):
        y = c[s] * x / c[t]
        assert y.is_rational() and y.rational().denominator == 1, (r, y)
        out.append(int(y.rational()))
    memo[r] = tuple(out)
    return memo[r]


def zsum_closure(system, gamma, ambient=None):
    amb = _ambient(system, ambient)
    lookup = {integer_coords(system, r): r for r in amb}
    have = set(gamma)
    todo = sort_roots(gamma)
    while todo:
        r = todo.pop(0)
        ri = integer_coords(system, r)
        new = []
        for q in list(have):
            qi = integer_coords(system, q)
            s = tuple(x + y for (x, y) in zip(ri, qi))
            x = lookup.get(s)
            if x is not None and x not in have:
                have.add(x)
                new.append(x)
        todo.extend(sort_roots(new))
    return frozenset(have)


# ----------------------------------------------------------------------
# predicates


def _cone_in(system, a, b, lam):
    "roots of lam in the closed cone of a, b"
    cone = system.pair_cone(a, b)
    if cone is not None:
        return cone & lam
    plane = system.plane(a, b)
    return frozenset(r for r in lam if plane.contains(r) and plane.in_cone(r, a, b))


def is_closed(system, gamma, lam=None, kind="two"):
    gamma = frozenset(gamma)
    if lam is None:
        lam = default_ambient(system) if system.is_finite() else None
    if kind == "two":
        rs = sort_roots(gamma)
        for i, a in enumerate(rs):
            for b in rs[i + 1:]:
                if lam is None:
                    cone = system.pair_cone(a, b)
                    if cone is None or not cone <= gamma:
                        return False
                elif not _cone_in(system, a, b, lam) <= gamma:
                    return False
        return True
    if lam is None:
        raise UnsupportedInfinite("need a finite Lambda")
    if kind == "cone":
        vecs = [r.coords for r in gamma]
        return all(r in gamma or not in_cone(vecs, r.coords) for r in lam)
    if kind == "zsum":
        return zsum_closure(system, gamma, lam) == gamma
    raise ValueError(kind)


def is_coclosed(system, gamma, lam=None, kind="two"):
    if lam is None:
        lam = system.positive_roots()
    lam = frozenset(lam)
    return is_closed(system, lam - frozenset(gamma), lam, kind)


def is_biclosed(system, gamma, lam=None, kind="two"):
    if lam is None:
        lam = system.positive_roots()
    lam = frozenset(lam)
    return is_closed(system, gamma, lam, kind) and is_coclosed(system, gamma, lam, kind)


def strip_simple(system, delta):
    "y with Phi_y = delta, or NotBiclosed with the stuck residue"
    delta = frozenset(delta)
    for r in delta:
        if not r.positive:
            raise NotPositive(str(r))
    word = []
    simple = system.simple_roots
    while delta:
        for s in range(system.rank):
            if simple[s] in delta:
                break
        else:
            return NotBiclosed(delta)
        word.append(s)
        delta = dot_action(system.gen(s), delta)
    y = system.element(word)
    assert len(y) == len(word)
    return y


def is_unipodal(system, gamma, ambient=None):
    from coxorder.rootsys import maximal_dihedral_containing
    if not system.is_finite() and system.rank > 2:
        raise TruncationLimit("cannot list all planes through a root of an infinite system", None)
    if ambient is None:
        ambient = system.positive_roots() if system.is_finite() else None
    gamma = frozenset(gamma)
    for a in gamma:
        if not a.positive:
            raise NotPositive(str(a))
        if ambient is None:
            planes = [system.plane(*system.simple_roots)]
        else:
            planes = [p.plane for p in maximal_dihedral_containing(system, a, ambient)]
        for p in planes:
            b, c = p.simple
            if b not in gamma and c not in gamma:
                return False
    return True


# ----------------------------------------------------------------------
# bitmask engine over a fixed finite ambient set, for brute force work


class Ambient:
    def __init__(self, system, roots):
        self.system = system
        self.roots = sort_roots(roots)
        self.index = {r: i for (i, r) in enumerate(self.roots)}
        self.n = len(self.roots)
        self.full = (1 << self.n) - 1
        lam = frozenset(self.roots)
        self.cones = {}
        self.escapes = {}
        self.pairs = [[] for _ in range(self.n)]
        for i, a in enumerate(self.roots):
            for j in range(i + 1, self.n):
                b = self.roots[j]
                cone = system.pair_cone(a, b)
                inside = _cone_in(system, a, b, lam)
                m = self.mask(inside)
                self.cones[i, j] = self.cones[j, i] = m
                esc = cone is None or not cone <= lam
                self.escapes[i, j] = self.escapes[j, i] = esc
                if m & ~((1 << i) | (1 << j)) or esc:
                    self.pairs[i].append((j, m))
                    self.pairs[j].append((i, m))

    def mask(self, roots):
        m = 0
        for r in roots:
            m |= 1 << self.index[r]
        return m

    def set(self, mask):
        return frozenset(self.roots[i] for i in range(self.n) if mask >> i & 1)

    def bits(self, mask):
        i = 0
        while mask:
            if mask & 1:
                yield i
            mask >>= 1
            i += 1

    def is_closed(self, mask):
        for i in self.bits(mask):
            for j, m in self.pairs[i]:
                if mask >> j & 1 and m & ~mask:
                    return False
        return True

    def is_biclosed(self, mask):
        return self.is_closed(mask) and self.is_closed(self.full & ~mask)

    def closure(self, mask):
        "closure inside the ambient; raises if a pair cone escapes it"
        todo = list(self.bits(mask))
        while todo:
            i = todo.pop()
            for j, m in self.pairs[i]:
                if mask >> j & 1:
                    if self.escapes[i, j]:
                        raise TruncationLimit("pair cone leaves the ambient", None)
                    new = m & ~mask
                    if new:
                        mask |= new
                        todo.extend(self.bits(new))
        return mask

    def closed_sets(self):
        "every closed subset, by growing closures one root at a time"
        seen = {0}
        layer = [0]
        while layer:
            nxt = []
            for m in layer:
                for i in range(self.n):
                    if not m >> i & 1:
                        c = self.closure(m | 1 << i)
                        if c not in seen:
                            seen.add(c)
                            nxt.append(c)
            layer = nxt
        return sorted(seen)

    def biclosed_sets(self, brute=None):
        if brute is None:
            brute = self.n <= 16
        if brute:
            return [m for m in range(self.full + 1) if self.is_biclosed(m)]
        return [m for m in self.closed_sets() if self.is_closed(self.full & ~m)]
