"""
Combinatorial model of the finite dihedral group I2(m) for any m.

Roots are the 2m directions k*pi/m; the positive ones are k < m with
alpha = 0 and gamma = m-1.  Reflecting direction j in root k gives
2k + m - j.  No scalars are involved so m = 7, 8, ... are fine.
"""

from coxorder.coxeter import SystemBase
from coxorder.roots import AngleRoot
from coxorder.errors import DependentRoots


class DihedralSystem(SystemBase):

    def __init__(self, m):
        assert m >= 2
        self.m = m
        self.rank = 2
        self.matrix = ((1, m), (m, 1))
        self.name = "I2(%d)" % m
        self.simple_roots = (AngleRoot(0, m), AngleRoot(m - 1, m))
        self._setup()
        self._pos = frozenset(AngleRoot(k, m) for k in range(m))
        self._plane = DihedralPlane(self)

    def __repr__(self):
        return "DihedralSystem(%d)" % self.m

    def is_finite(self):
        return True

    def is_crystallographic(self):
        return self.m in (2, 3, 4, 6)

    def _reflect_raw(self, i, r):
        return self.reflect_in(self.simple_roots[i], r)

    def reflect_in(self, beta, r):
        return AngleRoot(2 * beta.k + self.m - r.k, self.m)

    def descend(self, r):
        for i in (0, 1):
            q = self.reflect(i, r)
            if q.positive and q.depth < r.depth:
                return i, q
        raise ValueError(r)

    def positive_roots(self, cap=None):
        if cap is None:
            return self._pos
        return frozenset(r for r in self._pos if r.depth <= cap)

    def plane(self, a, b):
        if a == b or a == -b:
            raise DependentRoots("%s, %s" % (a, b))
        return self._plane

    def descriptor(self):
        return self.name


class DihedralPlane:
    "the whole system, seen as its own unique plane"

    def __init__(self, system):
        self.system = system
        self.simple = system.simple_roots
        self.finite = True
        self.m = system.m
        pos = system.positive_roots()
        self._all = pos | frozenset(-r for r in pos)
        self.span = self.simple

    def contains(self, r):
        return True

    def roots(self):
        return self._all

    def positive(self):
        return self.system.positive_roots()

    def in_cone(self, r, a, b):
        n = 2 * self.m
        d = (b.k - a.k) % n
        if d > self.m:
            a, b = b, a
            d = n - d
        assert d != self.m
        return (r.k - a.k) % n <= d

    def cone(self, a, b):
        return frozenset(r for r in self._all if self.in_cone(r, a, b))
