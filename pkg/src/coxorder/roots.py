"""
Root objects.

Two flavours share one small interface (neg, positive, depth, key):
geometric roots carry exact coordinates over the simple roots, and
AngleRoot is the combinatorial model of a finite dihedral root system
where root k sits at angle k*pi/m.
"""

from coxorder.scalars import Scalar


class Root:
    __slots__ = ("coords", "depth", "positive", "_hash", "_key")

    def __init__(self, coords, depth=None, positive=None):
        self.coords = tuple(coords)
        self.depth = depth
        if positive is None:
            positive = _first_sign(self.coords) > 0
        self.positive = positive
        self._hash = None
        self._key = None

    def __eq__(self, other):
        return isinstance(other, Root) and self.coords == other.coords

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coords)
        return self._hash

    def __neg__(self):
        return Root(tuple(-x for x in self.coords), self.depth, not self.positive)

    def __abs__(self):
        return self if self.positive else -self

    @property
    def key(self):
        if self._key is None:
            # alpha_1 before alpha_2 and so on: compare coordinates downwards
            self._key = (self.depth, 0 if self.positive else 1, tuple(-x for x in self.coords))
        return self._key

    def __lt__(self, other):
        return self.key < other.key

    def support(self):
        return frozenset(i for (i, x) in enumerate(self.coords) if x)

    def __str__(self):
        return "[%s]" % ", ".join(str(x) for x in self.coords)
    __repr__ = __str__


def _first_sign(coords):
    for x in coords:
        s = x.sign()
        if s:
            return s
    raise ValueError("zero vector is not a root")


class AngleRoot:
    "root number k of the dihedral system of order 2m, at angle k*pi/m"
    __slots__ = ("k", "m")

    def __init__(self, k, m):
        self.k = k % (2 * m)
        self.m = m

    def __eq__(self, other):
        return isinstance(other, AngleRoot) and self.k == other.k and self.m == other.m

    def __hash__(self):
        return hash((self.k, self.m))

    def __neg__(self):
        return AngleRoot(self.k + self.m, self.m)

    def __abs__(self):
        return self if self.positive else -self

    @property
    def positive(self):
        return self.k < self.m

    @property
    def depth(self):
        j = self.k % self.m
        return min(j, self.m - 1 - j) + 1

    @property
    def key(self):
        return (self.depth, 0 if self.positive else 1, self.k % self.m)

    def __lt__(self, other):
        return self.key < other.key

    def support(self):
        j = self.k % self.m
        if j == 0:
            return frozenset([0])
        if j == self.m - 1:
            return frozenset([1])
        return frozenset([0, 1])

    def __str__(self):
        return "<%d/%d>" % (self.k, self.m)
    __repr__ = __str__


def sort_roots(roots):
    "canonical order: depth, then positive before negative, then coordinates"
    return sorted(roots, key=lambda r: r.key)


def render(roots):
    return "{" + ", ".join(str(r) for r in sort_roots(roots)) + "}"


def vector(*xs):
    return tuple(x if isinstance(x, Scalar) else Scalar(x) for x in xs)
