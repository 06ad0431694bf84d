"""
Exact arithmetic in Q(r2, r3, r5).

An element is stored as 8 rational coordinates over the basis
1, r2, r3, r5, r6, r10, r15, r30.  Each basis vector is a square root
of a squarefree product of primes in {2,3,5}; we index them by a
bitmask (bit0 <-> 2, bit1 <-> 3, bit2 <-> 5).
"""

from fractions import Fraction
from math import isqrt, gcd
import re

from coxorder.errors import UnsupportedLabel, ParseError

PRIMES = (2, 3, 5)
MASKS = (0, 1, 2, 4, 3, 5, 6, 7)
INDEX = {m: i for (i, m) in enumerate(MASKS)}
RADICANDS = (1, 2, 3, 5, 6, 10, 15, 30)
NAMES = ("", "r2", "r3", "r5", "r6", "r10", "r15", "r30")
MAX_BITS = 1024


def _mul_table():
    table = {}
    for i, a in enumerate(MASKS):
        for j, b in enumerate(MASKS):
            factor = 1
            for bit, p in enumerate(PRIMES):
                if (a & b) >> bit & 1:
                    factor *= p
            table[i, j] = (INDEX[a ^ b], factor)
    return table

MUL = _mul_table()

ZERO_Q = Fraction(0)


class Scalar:
    __slots__ = ("c", "_hash")

    def __init__(self, value=0):
        if isinstance(value, Scalar):
            self.c = value.c
        else:
            c = [ZERO_Q] * 8
            c[0] = Fraction(value)
            self.c = tuple(c)
        self._hash = None

    @classmethod
    def from_coords(cls, coords):
        coords = tuple(Fraction(x) for x in coords)
        assert len(coords) == 8
        s = cls.__new__(cls)
        s.c = coords
        s._hash = None
        return s

    @classmethod
    def sqrt(cls, n):
        "square root of one of 1,2,3,5,6,10,15,30"
        if n not in RADICANDS:
            raise ValueError("no basis radical for %s" % n)
        c = [ZERO_Q] * 8
        c[RADICANDS.index(n)] = Fraction(1)
        return cls.from_coords(c)

    # -- structure

    def is_rational(self):
        return not any(self.c[1:])

    def rational(self):
        assert self.is_rational(), self
        return self.c[0]

    def is_zero(self):
        return not any(self.c)

    def conj(self, p):
        "flip the sign of rp"
        bit = 1 << PRIMES.index(p)
        return Scalar.from_coords(
            -q if MASKS[i] & bit else q for (i, q) in enumerate(self.c))

    # -- arithmetic

    @staticmethod
    def _lift(other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return Scalar.from_coords(a + b for (a, b) in zip(self.c, other.c))
    __radd__ = __add__

    def __neg__(self):
        return Scalar.from_coords(-a for a in self.c)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return Scalar.from_coords(a - b for (a, b) in zip(self.c, other.c))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Scalar.from_coords(a * other for a in self.c)
        if not isinstance(other, Scalar):
            return NotImplemented
        a, b = self.c, other.c
        out = [ZERO_Q] * 8
        for i in range(8):
            x = a[i]
            if not x:
                continue
            for j in range(8):
                y = b[j]
                if not y:
                    continue
                k, f = MUL[i, j]
                out[k] += f * x * y
        return Scalar.from_coords(out)
    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of 0")
        if self.is_rational():
            return Scalar(1 / self.c[0])
        num = Scalar(1)
        cur = self
        for p in (5, 3, 2):
            c = cur.conj(p)
            num = num * c
            cur = cur * c
        r = cur.rational()  # all radicals gone
        return num * (1 / r)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar(other) * self.inverse()

    # -- order

    def sign(self):
        nz = [(i, q) for (i, q) in enumerate(self.c) if q]
        if not nz:
            return 0
        if len(nz) == 1:
            return 1 if nz[0][1] > 0 else -1
        den = 1
        for _, q in nz:
            den = den * q.denominator // gcd(den, q.denominator)
        ints = [(RADICANDS[i], int(q * den)) for (i, q) in nz]
        bits = 64
        while bits <= MAX_BITS:
            lo = hi = 0
            for n, p in ints:
                if n == 1:
                    l = h = 1 << bits
                else:
                    l = isqrt(n << (2 * bits))
                    h = l + 1
                if p > 0:
                    lo += p * l
                    hi += p * h
                else:
                    lo += p * h
                    hi += p * l
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2
        raise ArithmeticError("sign undecided at %d bits" % MAX_BITS)

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.c[0])
            else:
                self._hash = hash(self.c)
        return self._hash

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __bool__(self):
        return not self.is_zero()

    def __float__(self):
        return sum(float(q) * RADICANDS[i] ** 0.5 for (i, q) in enumerate(self.c))

    # -- text

    def __str__(self):
        terms = []
        for i, q in enumerate(self.c):
            if not q:
                continue
            neg = q < 0
            q = abs(q)
            if i == 0:
                body = str(q)
            elif q == 1:
                body = NAMES[i]
            else:
                body = "%s*%s" % (q, NAMES[i])
            terms.append((neg, body))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] else "") + terms[0][1]
        for neg, body in terms[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self):
        return "Scalar(%r)" % str(self)

    @classmethod
    def parse(cls, text):
        "inverse of str(); also accepts things like 2*r3 - 1/4"
        s = text.replace(" ", "")
        if not s:
            raise ParseError("empty scalar")
        if s[0] not in "+-":
            s = "+" + s
        parts = re.findall(r"[+-][^+-]+", s)
        if "".join(parts) != s:
            raise ParseError("bad scalar %r" % text)
        c = [ZERO_Q] * 8
        for part in parts:
            sgn = -1 if part[0] == "-" else 1
            body = part[1:]
            m = re.fullmatch(r"(?:(\d+(?:/\d+)?)\*?)?(r(?:2|3|5|6|10|15|30))?", body)
            if m is None or not body:
                raise ParseError("bad scalar term %r" % part)
            coef, rad = m.groups()
            q = Fraction(coef) if coef else Fraction(1)
            i = NAMES.index(rad) if rad else 0
            if coef is None and rad is None:
                raise ParseError("bad scalar term %r" % part)
            c[i] += sgn * q
        return cls.from_coords(c)


def cos_pi_over(m):
    "cos(pi/m), only for the labels our field can hold"
    h = Fraction(1, 2)
    if m == 2:
        return Scalar(0)
    if m == 3:
        return Scalar(h)
    if m == 4:
        return Scalar.sqrt(2) * h
    if m == 5:
        return (Scalar(1) + Scalar.sqrt(5)) * Fraction(1, 4)
    if m == 6:
        return Scalar.sqrt(3) * h
    raise UnsupportedLabel("cos(pi/%s) is not in Q(r2,r3,r5)" % m)
