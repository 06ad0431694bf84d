"""
Root generation, reflection subgroups, dihedral planes, coset
representatives and Bruhat graph strata.
"""

from coxorder.roots import sort_roots
from coxorder.errors import DependentRoots, TruncationLimit, NotPositive


def generate_roots(system, depth_cap):
    assert depth_cap >= 1
    return sort_roots(system.positive_roots(depth_cap))


class ReflectionSubgroup:
    """
    W' generated by reflections in the given positive roots.
    Stores the root system Phi_{W'} and the canonical simple roots.
    """

    def __init__(self, system, roots, ambient=None):
        self.system = system
        gens = [abs(r) for r in roots]
        if ambient is None:
            ambient = system.roots()
        ambient = frozenset(ambient) | frozenset(-r for r in ambient)
        cap = max((r.depth for r in ambient), default=0)
        phi = set(gens) | set(-r for r in gens)
        todo = list(phi)
        while todo:
            r = todo.pop()
            for g in gens:
                q = system.reflect_in(g, r)
                if q not in phi:
                    if q not in ambient:
                        raise TruncationLimit("reflection subgroup leaves the ambient roots", cap)
                    phi.add(q)
                    todo.append(q)
        self.roots = frozenset(phi)
        self.positive = frozenset(r for r in phi if r.positive)
        simple = []
        for b in self.positive:
            t = system.reflection_element(b)
            if t.inversion_set() & self.positive == {b}:
                simple.append(b)
        self.simple = tuple(sort_roots(simple))
        self.generators = tuple(system.reflection_element(b) for b in self.simple)

    def contains_root(self, r):
        return r in self.roots

    def contains(self, w):
        return w in self.elements()

    def elements(self):
        "all elements of a finite W'"
        if getattr(self, "_elements", None) is not None:
            return self._elements
        out = {self.system.identity}
        todo = [self.system.identity]
        while todo:
            w = todo.pop()
            for g in self.generators:
                u = g * w
                if u not in out:
                    out.add(u)
                    todo.append(u)
        self._elements = frozenset(out)
        return self._elements

    def length(self, w):
        "length of w in W' with its canonical generators"
        return len(w.inversion_set() & self.positive)

    def __repr__(self):
        return "W'<%s>" % ", ".join(str(r) for r in self.simple)


def reflection_root(t):
    "the positive root of a reflection given as a group element"
    W = t.system
    hit = [b for b in t.inversion_set() if t(b) == -b]
    if len(hit) != 1 or t * t != W.identity:
        raise NotPositive("%s is not a reflection" % t)
    return hit[0]


def canonical_generators(system, reflections, ambient=None):
    roots = []
    for t in reflections:
        t = getattr(t, "root", t)
        roots.append(reflection_root(t) if hasattr(t, "word") else t)
    return ReflectionSubgroup(system, roots, ambient)


def subgroup_of_elements(system, gens):
    "element set of the subgroup generated by arbitrary elements"
    out = {system.identity}
    todo = [system.identity]
    while todo:
        w = todo.pop()
        for g in gens:
            u = w * g
            if u not in out:
                out.add(u)
                todo.append(u)
    return frozenset(out)


class PlaneSubsystem:
    "the roots of an ambient set inside the plane of a and b"

    def __init__(self, system, a, b, ambient):
        self.system = system
        self.plane = system.plane(a, b)
        self.span = (a, b)
        amb = frozenset(ambient) | frozenset(-r for r in ambient)
        self.roots = frozenset(r for r in amb if self.plane.contains(r))
        self.simple = self.plane.simple
        self.finite = self.plane.finite

    @property
    def positive(self):
        return frozenset(r for r in self.roots if r.positive)

    def key(self):
        return tuple(sort_roots(self.simple))

    def subgroup(self):
        return ReflectionSubgroup(self.system, self.simple, self.roots)

    def __repr__(self):
        return "Plane(%s, %s)" % self.simple


def plane_subsystem(system, a, b, ambient=None):
    if ambient is None:
        ambient = system.roots()
    if a == b or a == -b:
        raise DependentRoots("%s, %s" % (a, b))
    return PlaneSubsystem(system, a, b, ambient)


def maximal_dihedral_containing(system, a, ambient=None):
    "one plane per 2-dim subspace through a that holds another ambient root"
    if not a.positive:
        raise NotPositive(str(a))
    if ambient is None:
        ambient = system.positive_roots()
    out = {}
    covered = set([a])
    for b in sort_roots(r for r in ambient if r.positive):
        if b in covered:
            continue
        p = PlaneSubsystem(system, a, b, ambient)
        covered |= p.positive
        out[p.key()] = p
    return [out[k] for k in sorted(out, key=lambda k: [r.key for r in k])]


def coset_min_rep(sub, x):
    "the minimal element of W'x: strip reflections of W' from the left"
    u = x
    while True:
        hit = [b for b in u.inversion_set() if sub.contains_root(b)]
        if not hit:
            return u
        b = min(hit)
        u = sub.system.reflection_element(b) * u


def bruhat_stratum(x, n, ambient=None):
    "{alpha : l(s_alpha x) = l(x) + n}"
    system = x.system
    if ambient is None:
        ambient = system.positive_roots()
    out = []
    for a in ambient:
        if a.positive and len(system.reflection_element(a) * x) == len(x) + n:
            out.append(a)
    return frozenset(out)


def bruhat_edges(system, elements=None):
    "edges (x, s_alpha x, alpha) with length going up, finite W"
    if elements is None:
        elements = system.elements()
    refl = [(a, system.reflection_element(a)) for a in sort_roots(system.positive_roots())]
    out = []
    for x in elements:
        for a, t in refl:
            y = t * x
            if len(y) > len(x):
                out.append((x, y, a))
    return out
