"""
Coxeter systems in the geometric representation, and group elements.

Elements are stored by their ShortLex-least reduced word. All the
group theory goes through the action of simple reflections on roots,
which is memoised per system, so finite groups end up running on
lookup tables.
"""

from fractions import Fraction
from math import inf
import re

from coxorder.scalars import Scalar, cos_pi_over
from coxorder.roots import Root, sort_roots
from coxorder.errors import (InvalidMatrix, IndexOutOfRange, NotPositive,
    DependentRoots, ParseError, UnsupportedInfinite, TruncationLimit)

INF = inf


# ----------------------------------------------------------------------
# group elements


class GroupElement:
    __slots__ = ("system", "word", "_hash")

    def __init__(self, system, word):
        # word must already be canonical, use system.element(..) otherwise
        self.system = system
        self.word = tuple(word)
        self._hash = hash(self.word)

    def __eq__(self, other):
        return (isinstance(other, GroupElement) and other.system is self.system
            and other.word == self.word)

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (len(self.word), self.word) < (len(other.word), other.word)

    def __len__(self):
        return len(self.word)

    def __bool__(self):
        return True

    @property
    def length(self):
        return len(self.word)

    def is_identity(self):
        return not self.word

    def __mul__(self, other):
        assert other.system is self.system, "mixed systems"
        return self.system.element(self.word + other.word)

    def inverse(self):
        return self.system.element(self.word[::-1])

    def __call__(self, r):
        "act on a root"
        reflect = self.system.reflect
        for i in reversed(self.word):
            r = reflect(i, r)
        return r

    def act_set(self, roots):
        return frozenset(self(r) for r in roots)

    def inversion_set(self):
        return self.system.inversion_set(self)

    def complement(self):
        "Phi'_x, finite W only"
        return self.system.positive_roots() - self.inversion_set()

    def left_descents(self):
        simple = self.system.simple_roots
        phi = self.inversion_set()
        return frozenset(i for i in range(self.system.rank) if simple[i] in phi)

    def right_descents(self):
        return self.inverse().left_descents()

    @property
    def matrix(self):
        "columns are the images of the simple roots"
        cols = [self(a).coords for a in self.system.simple_roots]
        n = self.system.rank
        return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))

    def __str__(self):
        if not self.word:
            return "e"
        return ".".join(str(i + 1) for i in self.word)

    def __repr__(self):
        return "<%s>" % self


class Reflection:
    "s_beta for a positive root beta"
    __slots__ = ("system", "root")

    def __init__(self, system, root):
        if not root.positive:
            raise NotPositive(str(root))
        self.system = system
        self.root = root

    def __eq__(self, other):
        return isinstance(other, Reflection) and other.root == self.root

    def __hash__(self):
        return hash(self.root)

    @property
    def element(self):
        return self.system.reflection_element(self.root)

    def __repr__(self):
        return "s%s" % (self.root,)


def reduce(system, word):
    return system.element(word)


def act_on_root(g, r):
    return g(r)


def inversion_set(g):
    return g.inversion_set()


def left_descents(g):
    return g.left_descents()


def dot_action(w, gamma):
    "x.G = (Phi_x - x(-G)) u (x(G) - (-Phi_x))"
    gamma = frozenset(gamma)
    for r in gamma:
        if not r.positive:
            raise NotPositive("dot action needs positive roots, got %s" % r)
    phi = w.inversion_set()
    img = w.act_set(gamma)
    neg_img = frozenset(-r for r in img)
    neg_phi = frozenset(-r for r in phi)
    return (phi - neg_img) | (img - neg_phi)


def n_set(g):
    return frozenset(Reflection(g.system, r) for r in g.inversion_set())


# ----------------------------------------------------------------------
# shared machinery for anything that acts like a root system


class SystemBase:
    """
    Subclasses provide: rank, matrix, simple_roots, _reflect_raw(i, r),
    reflect_in(beta, r), descend(r), is_finite(), positive_roots(cap),
    plane(a, b).
    """

    def _setup(self):
        self._reflect = {}
        self._elements = {}
        self._inv = {}
        self._cone = {}
        self._planes = {}
        self._all_elements = None
        self.identity = GroupElement(self, ())

    # -- roots

    def reflect(self, i, r):
        key = (i, r)
        out = self._reflect.get(key)
        if out is None:
            out = self._reflect_raw(i, r)
            self._reflect[key] = out
        return out

    def roots(self, cap=None):
        pos = self.positive_roots(cap)
        return pos | frozenset(-r for r in pos)

    def root_word(self, r):
        "(w, s) with r = +-w(alpha_s)"
        r = abs(r)
        word = []
        while r.depth > 1:
            i, r = self.descend(r)
            word.append(i)
        s = self.simple_roots.index(r)
        return tuple(word), s

    def reflection_element(self, r):
        w, s = self.root_word(r)
        return self.element(w + (s,) + w[::-1])

    # -- elements

    def element(self, word):
        word = tuple(word)
        e = self._elements.get(word)
        if e is not None:
            return e
        for i in word:
            if not (isinstance(i, int) and 0 <= i < self.rank):
                raise IndexOutOfRange("generator index %r, rank %d" % (i, self.rank))
        red = self._reduced(word)
        canon = self._shortlex(red)
        e = self._elements.get(canon)
        if e is None:
            e = GroupElement(self, canon)
            self._elements[canon] = e
        self._elements[word] = e
        return e

    def _reduced(self, word):
        u = []
        simple = self.simple_roots
        for s in word:
            v = simple[s]
            hit = None
            for j in range(len(u) - 1, -1, -1):
                if v == simple[u[j]]:
                    hit = j
                    break
                v = self.reflect(u[j], v)
            if hit is None:
                u.append(s)
            else:
                del u[hit]
        return u

    def _betas(self, word):
        out = []
        for i in range(len(word)):
            v = self.simple_roots[word[i]]
            for j in range(i - 1, -1, -1):
                v = self.reflect(word[j], v)
            out.append(v)
        return out

    def _shortlex(self, word):
        word = list(word)
        out = []
        simple = self.simple_roots
        while word:
            betas = self._betas(word)
            best = None
            for i, b in enumerate(betas):
                if b.depth == 1:
                    s = simple.index(b)
                    if best is None or s < best[0]:
                        best = (s, i)
            s, i = best
            out.append(s)
            del word[i]
        return tuple(out)

    def inversion_set(self, g):
        phi = self._inv.get(g.word)
        if phi is None:
            phi = frozenset(self._betas(g.word))
            assert len(phi) == len(g.word)
            self._inv[g.word] = phi
        return phi

    def gen(self, i):
        return self.element((i,))

    def parse_element(self, text):
        text = text.strip()
        if text in ("e", ""):
            return self.identity
        try:
            word = [int(x) - 1 for x in text.split(".")]
        except ValueError:
            raise ParseError("bad element literal %r" % text)
        return self.element(word)

    def elements(self, max_length=None):
        "all elements (finite W), or all of length <= max_length"
        if max_length is None:
            if not self.is_finite():
                raise UnsupportedInfinite("need a length cap for an infinite group")
            if self._all_elements is None:
                self._all_elements = self._bfs(None)
            return self._all_elements
        return self._bfs(max_length)

    def _bfs(self, cap):
        layer = [self.identity]
        out = [self.identity]
        n = 0
        while layer and (cap is None or n < cap):
            nxt = {}
            for w in layer:
                for s in range(self.rank):
                    if s in w.right_descents():
                        continue
                    ws = self.element(w.word + (s,))
                    nxt[ws.word] = ws
            layer = sorted(nxt.values())
            out.extend(layer)
            n += 1
        return out

    def longest(self):
        return max(self.elements(), key=len)

    def parabolic_longest(self, J):
        "longest element of the finite parabolic W_J"
        w = self.identity
        while True:
            for s in sorted(J):
                if s not in w.right_descents():
                    w = self.element(w.word + (s,))
                    break
            else:
                return w
            if len(w) > 500:
                raise TruncationLimit("W_J looks infinite", 500)

    def positive_roots_set(self, cap=None):
        return self.positive_roots(cap)

    def ordered_positive_roots(self, cap=None):
        return sort_roots(self.positive_roots(cap))

    # -- planes

    def pair_cone(self, a, b):
        """
        roots in the closed nonnegative cone of a, b;
        None means there are infinitely many
        """
        key = (a, b)
        if key in self._cone:
            return self._cone[key]
        if a == b:
            out = frozenset([a])
        elif a == -b:
            out = frozenset([a, b])
        else:
            out = self.plane(a, b).cone(a, b)
        self._cone[key] = out
        self._cone[b, a] = out
        return out


# ----------------------------------------------------------------------
# the geometric representation


class CoxeterSystem(SystemBase):

    def __init__(self, matrix, bonds=None, name=None):
        n = len(matrix)
        if n < 1:
            raise InvalidMatrix("rank must be positive")
        m = [list(row) for row in matrix]
        for row in m:
            if len(row) != n:
                raise InvalidMatrix("matrix not square")
        for i in range(n):
            if m[i][i] != 1:
                raise InvalidMatrix("diagonal must be 1")
            for j in range(n):
                if m[i][j] != m[j][i]:
                    raise InvalidMatrix("matrix not symmetric")
                if i != j and not (m[i][j] == INF or (isinstance(m[i][j], int) and m[i][j] >= 2)):
                    raise InvalidMatrix("bad label %r" % (m[i][j],))
        self.rank = n
        self.matrix = tuple(tuple(row) for row in m)
        self.bonds = {}
        for (i, j), q in (bonds or {}).items():
            q = Fraction(q)
            if self.matrix[i][j] != INF:
                raise InvalidMatrix("bond on a finite edge %d,%d" % (i, j))
            if q > -1:
                raise InvalidMatrix("bond %s must be <= -1" % q)
            self.bonds[i, j] = self.bonds[j, i] = q
        form = []
        for i in range(n):
            row = []
            for j in range(n):
                if i == j:
                    row.append(Scalar(1))
                elif self.matrix[i][j] == INF:
                    row.append(Scalar(self.bonds.get((i, j), -1)))
                else:
                    row.append(-cos_pi_over(self.matrix[i][j]))
            form.append(tuple(row))
        self.form = tuple(form)
        self._rows = [[(j, x) for (j, x) in enumerate(row) if x] for row in self.form]
        self.name = name or "custom"
        zero = Scalar(0)
        self.simple_roots = tuple(
            Root([Scalar(1) if j == i else zero for j in range(n)], 1, True)
            for i in range(n))
        self._finite = None
        self._pos = {}
        self._setup()

    def __repr__(self):
        return "CoxeterSystem(%s)" % self.name

    # -- form

    def Bi(self, i, coords):
        "B(alpha_i, v)"
        out = Scalar(0)
        for j, x in self._rows[i]:
            if coords[j]:
                out = out + x * coords[j]
        return out

    def bilinear(self, u, v):
        u = getattr(u, "coords", u)
        v = getattr(v, "coords", v)
        out = Scalar(0)
        for i in range(self.rank):
            if u[i]:
                out = out + u[i] * self.Bi(i, v)
        return out

    def is_finite(self):
        if self._finite is None:
            self._finite = all(_det([row[:k] for row in self.form[:k]]).sign() > 0
                for k in range(1, self.rank + 1))
        return self._finite

    def is_crystallographic(self):
        return all(self.matrix[i][j] in (2, 3, 4, 6) or
            (self.matrix[i][j] == INF and self.bonds.get((i, j), -1) == -1)
            for i in range(self.rank) for j in range(self.rank) if i != j)

    # -- roots

    def _reflect_raw(self, i, r):
        b = self.Bi(i, r.coords)
        if not b:
            return r
        c = list(r.coords)
        c[i] = c[i] - 2 * b
        if r.depth == 1 and r.coords[i] and abs(r) == self.simple_roots[i]:
            return -r
        sg = b.sign()
        depth = r.depth - sg if r.positive else r.depth + sg
        return Root(c, depth, r.positive)

    def descend(self, r):
        "a simple reflection lowering the depth of a positive non-simple root"
        assert r.positive
        for i in range(self.rank):
            if self.Bi(i, r.coords).sign() > 0:
                return i, self.reflect(i, r)
        raise ValueError("%s is not a root" % r)

    def make_root(self, coords, check=True):
        "wrap a coordinate vector as a Root, computing its depth"
        coords = tuple(x if isinstance(x, Scalar) else Scalar(x) for x in coords)
        if len(coords) != self.rank:
            raise ParseError("root needs %d coordinates" % self.rank)
        if check and self.bilinear(coords, coords) != 1:
            raise ParseError("not a root: %s" % (coords,))
        sgn = None
        for x in coords:
            if x:
                sgn = x.sign()
                break
        if sgn is None:
            raise ParseError("zero vector")
        v = coords if sgn > 0 else tuple(-x for x in coords)
        depth = 1
        while True:
            nz = [i for (i, x) in enumerate(v) if x]
            if len(nz) == 1 and v[nz[0]] == 1:
                break
            if any(x.sign() < 0 for x in v):
                raise ParseError("not a root: %s" % (coords,))
            for i in range(self.rank):
                b = self.Bi(i, v)
                if b.sign() > 0:
                    v = tuple(x - 2 * b if j == i else x for (j, x) in enumerate(v))
                    break
            else:
                raise ParseError("not a root: %s" % (coords,))
            depth += 1
            if depth > 10000:
                raise ParseError("not a root: %s" % (coords,))
        return Root(coords, depth, sgn > 0)

    def reflect_in(self, beta, r):
        b = self.bilinear(beta.coords, r.coords)
        if not b:
            return r
        c = tuple(x - 2 * b * y for (x, y) in zip(r.coords, beta.coords))
        return self.make_root(c, check=False)

    def positive_roots(self, cap=None):
        if cap is None:
            if not self.is_finite():
                raise UnsupportedInfinite("infinite root system needs a depth cap")
            cap = -1
        if cap in self._pos:
            return self._pos[cap]
        seen = set(self.simple_roots)
        layer = list(self.simple_roots)
        d = 1
        while layer and (cap < 0 or d < cap):
            nxt = []
            for r in layer:
                for i in range(self.rank):
                    if self.Bi(i, r.coords).sign() < 0:
                        q = self.reflect(i, r)
                        if q not in seen:
                            seen.add(q)
                            nxt.append(q)
            layer = nxt
            d += 1
        out = frozenset(seen)
        self._pos[cap] = out
        return out

    def plane(self, a, b):
        key = (abs(a), abs(b))
        p = self._planes.get(key)
        if p is None:
            p = GeometricPlane(self, a, b)
            self._planes[key] = p
            self._planes[key[::-1]] = p
        return p

    def descriptor(self):
        return self.name


def _det(m):
    m = [list(row) for row in m]
    n = len(m)
    det = Scalar(1)
    for c in range(n):
        piv = None
        for r in range(c, n):
            if m[r][c]:
                piv = r
                break
        if piv is None:
            return Scalar(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c]
        inv = m[c][c].inverse()
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] * inv
                m[r] = [x - f * y for (x, y) in zip(m[r], m[c])]
    return det


class GeometricPlane:
    """
    The roots of W lying in the real span of two independent roots.
    These form a dihedral root system; we find its simple pair and then
    answer cone questions either from the finite orbit or, in the
    infinite case, from the position of roots along the two branches
    that accumulate at the isotropic rays.
    """

    def __init__(self, system, a, b):
        self.system = system
        self.span = (a, b)
        n = system.rank
        ac, bc = a.coords, b.coords
        self.proj = None
        for i in range(n):
            for j in range(i + 1, n):
                if ac[i] * bc[j] - ac[j] * bc[i]:
                    self.proj = (i, j)
                    break
            if self.proj:
                break
        if self.proj is None:
            raise DependentRoots("%s and %s are dependent" % (a, b))
        self.D = self.det(a, b)
        if system.is_finite():
            cands = system.positive_roots()
        elif n == 2:
            cands = system.simple_roots
        else:
            cap = max(a.depth, b.depth)
            cands = system.positive_roots(cap)
        pos = [r for r in cands if self.contains(r)]
        lo = [p for p in pos if all(self.orient(p, q) >= 0 for q in pos)]
        hi = [p for p in pos if all(self.orient(q, p) >= 0 for q in pos)]
        assert len(lo) == 1 and len(hi) == 1, (a, b, pos)
        s1, s2 = sorted([lo[0], hi[0]])
        self.simple = (s1, s2)
        self.c = system.bilinear(s1, s2)
        self.finite = (self.c + 1).sign() > 0
        self._rho = [s1]
        self._rhop = [s2]
        self.m = None
        self._all = None
        if self.finite:
            k = 0
            while self._rho[k] != s2:
                self._extend()
                k += 1
                assert k < 200
            self.m = k + 1
            pos = frozenset(self._rho)
            self._all = pos | frozenset(-r for r in pos)

    def det(self, u, v):
        i, j = self.proj
        u, v = u.coords, v.coords
        return u[i] * v[j] - u[j] * v[i]

    def orient(self, u, v):
        return self.det(u, v).sign()

    def contains(self, r):
        a, b = self.span
        x = self.det(r, b)
        y = self.det(a, r)
        D = self.D
        return all(D * rk == x * ak + y * bk
            for (rk, ak, bk) in zip(r.coords, a.coords, b.coords))

    def roots(self):
        "all roots of the plane (finite case only)"
        if not self.finite:
            raise UnsupportedInfinite("infinite plane")
        return self._all

    def positive(self):
        return frozenset(r for r in self.roots() if r.positive)

    def in_cone(self, r, a, b):
        d = self.det(a, b).sign()
        return self.det(r, b).sign() * d >= 0 and self.det(a, r).sign() * d >= 0

    def _extend(self):
        s1, s2 = self.simple
        sys = self.system
        r = sys.reflect_in(s1, self._rhop[-1])
        rp = sys.reflect_in(s2, self._rho[-1])
        self._rho.append(r)
        self._rhop.append(rp)

    def _sigma_coords(self, r):
        s1, s2 = self.simple
        D = self.det(s1, s2)
        return self.det(r, s2) / D, self.det(s1, r) / D

    def locate(self, r):
        "(branch, index) of a root in an infinite plane"
        if not r.positive:
            b, i = self.locate(-r)
            return 1 - b, i
        x, y = self._sigma_coords(r)
        total = x + y
        first = (y + self.c * x).sign() < 0
        seq = self._rho if first else self._rhop
        k = 0
        while True:
            while k >= len(seq):
                self._extend()
            if seq[k] == r:
                return (0, k) if first else (1, -k - 1)
            u, v = self._sigma_coords(seq[k])
            if u + v > total:
                raise ValueError("%s is not a root of the plane" % r)
            k += 1

    def at(self, branch, i):
        while max(i, -i - 1) >= len(self._rho):
            self._extend()
        r = self._rho[i] if i >= 0 else -self._rhop[-i - 1]
        return -r if branch else r

    def cone(self, a, b):
        if self.finite:
            return frozenset(r for r in self._all if self.in_cone(r, a, b))
        (ba, ia), (bb, ib) = self.locate(a), self.locate(b)
        if ba != bb:
            return None
        lo, hi = min(ia, ib), max(ia, ib)
        return frozenset(self.at(ba, i) for i in range(lo, hi + 1))


# ----------------------------------------------------------------------
# named systems and the matrix file format


def coxeter_matrix(n, edges):
    m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for (i, j), v in edges.items():
        m[i][j] = m[j][i] = v
    return m


def type_A(n):
    return CoxeterSystem(coxeter_matrix(n, {(i, i + 1): 3 for i in range(n - 1)}), name="A%d" % n)


def type_B(n):
    edges = {(i, i + 1): 3 for i in range(n - 1)}
    edges[0, 1] = 4
    return CoxeterSystem(coxeter_matrix(n, edges), name="B%d" % n)


def type_D(n):
    edges = {(i, i + 1): 3 for i in range(n - 2)}
    edges[n - 3, n - 1] = 3
    return CoxeterSystem(coxeter_matrix(n, edges), name="D%d" % n)


def type_H(n):
    edges = {(i, i + 1): 3 for i in range(n - 1)}
    edges[0, 1] = 5
    return CoxeterSystem(coxeter_matrix(n, edges), name="H%d" % n)


def type_F4():
    return CoxeterSystem(coxeter_matrix(4, {(0, 1): 3, (1, 2): 4, (2, 3): 3}), name="F4")


def dihedral(m, bond=None):
    """
    I2(m). Labels beyond the scalar field use the combinatorial model.
    m may be inf, with an optional bond q <= -1.
    """
    if m == INF:
        name = "I2(inf)" if bond is None else "I2(inf,%s)" % Fraction(bond)
        bonds = {} if bond is None else {(0, 1): bond}
        return CoxeterSystem([[1, INF], [INF, 1]], bonds, name=name)
    if m <= 6:
        return CoxeterSystem([[1, m], [m, 1]], name="I2(%d)" % m)
    from coxorder.dihedral import DihedralSystem
    return DihedralSystem(m)


def named(name):
    name = name.strip()
    m = re.fullmatch(r"I2\((\d+|inf)(?:,(-?\d+(?:/\d+)?))?\)", name)
    if m:
        mm = INF if m.group(1) == "inf" else int(m.group(1))
        if mm != INF and mm < 2:
            raise ParseError("bad dihedral label")
        return dihedral(mm, m.group(2) and Fraction(m.group(2)))
    m = re.fullmatch(r"([ABDHG])(\d)", name)
    if m:
        t, n = m.group(1), int(m.group(2))
        if t == "A" and n >= 1:
            return type_A(n)
        if t == "B" and n >= 2:
            return type_B(n)
        if t == "D" and n >= 4:
            return type_D(n)
        if t == "H" and n in (2, 3, 4):
            return type_H(n)
        if t == "G" and n == 2:
            s = CoxeterSystem([[1, 6], [6, 1]], name="G2")
            return s
    if name == "F4":
        return type_F4()
    if name == "Atilde1":
        return dihedral(INF)
    raise ParseError("unknown system %r" % name)


def parse_matrix_file(text, name=None):
    """
    rank N
    m i j = v        (1-based, v in 2,3,4,5,6,inf)
    bond i j = p/q   (optional, for inf edges)
    """
    lines = [ln.split("#")[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty matrix file")
    mm = re.fullmatch(r"rank\s+(\d+)", lines[0])
    if not mm:
        raise ParseError("first line must be 'rank N'")
    n = int(mm.group(1))
    if n < 1:
        raise ParseError("rank must be positive")
    edges = {}
    bonds = {}
    for ln in lines[1:]:
        m1 = re.fullmatch(r"m\s+(\d+)\s+(\d+)\s*=\s*(\d+|inf)", ln)
        m2 = re.fullmatch(r"bond\s+(\d+)\s+(\d+)\s*=\s*(-?\d+(?:/\d+)?)", ln)
        if m1:
            i, j = int(m1.group(1)) - 1, int(m1.group(2)) - 1
            v = INF if m1.group(3) == "inf" else int(m1.group(3))
            if v != INF and v not in (2, 3, 4, 5, 6):
                raise ParseError("label %s not supported" % v)
        elif m2:
            i, j = int(m2.group(1)) - 1, int(m2.group(2)) - 1
        else:
            raise ParseError("bad line %r" % ln)
        if not (0 <= i < n and 0 <= j < n) or i == j:
            raise ParseError("bad indices in %r" % ln)
        if m1:
            edges[min(i, j), max(i, j)] = v
        else:
            bonds[min(i, j), max(i, j)] = Fraction(m2.group(3))
    try:
        return CoxeterSystem(coxeter_matrix(n, edges), bonds, name=name or "file")
    except InvalidMatrix as e:
        raise ParseError(str(e))
