"""
Exact conic feasibility: does A x = b have a solution with x >= 0?
Gaussian elimination for the equalities, then Fourier-Motzkin on the
remaining free variables. Everything stays in the scalar field.
"""

from coxorder.scalars import Scalar


def _rref(rows, ncols):
    "rows are lists of Scalars of length ncols + 1 (last = rhs); returns (rows, pivots)"
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for (x, y) in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def feasible(columns, b):
    """
    columns: list of k vectors (length n), b: vector of length n.
    True iff b is a nonnegative combination of the columns.
    """
    k = len(columns)
    n = len(b)
    zero = Scalar(0)
    if k == 0:
        return all(not x for x in b)
    rows = [[columns[j][i] for j in range(k)] + [b[i]] for i in range(n)]
    rows, pivots = _rref(rows, k)
    for row in rows[len(pivots):]:
        if row[-1]:
            return False
    free = [j for j in range(k) if j not in pivots]
    # inequalities sum c_f x_f <= d over the free variables
    ineqs = []
    for i, p in enumerate(pivots):
        row = rows[i]
        ineqs.append((tuple(row[f] for f in free), row[-1]))
    for t in range(len(free)):
        ineqs.append((tuple(Scalar(-1) if u == t else zero for u in range(len(free))), zero))
    for t in range(len(free)):
        pos, neg, rest = [], [], []
        for c, d in ineqs:
            s = c[t].sign()
            (pos if s > 0 else neg if s < 0 else rest).append((c, d))
        for cp, dp in pos:
            for cn, dn in neg:
                a, bb = -cn[t], cp[t]
                c = tuple(a * x + bb * y for (x, y) in zip(cp, cn))
                rest.append((c, a * dp + bb * dn))
        seen = set()
        ineqs = []
        for c, d in rest:
            if all(not x for x in c):
                if d.sign() < 0:
                    return False
                continue
            if (c, d) not in seen:
                seen.add((c, d))
                ineqs.append((c, d))
    return all(d.sign() >= 0 for (c, d) in ineqs)


def in_cone(vectors, target):
    return feasible([tuple(v) for v in vectors], tuple(target))


def cones_meet_trivially(us, vs):
    "is cone(us) n cone(vs) = {0}?  (both assumed to lie in a pointed cone)"
    if not us or not vs:
        return True
    n = len(us[0])
    one, zero = Scalar(1), Scalar(0)
    cols = [tuple(u) + (one,) for u in us] + [tuple(-x for x in v) + (zero,) for v in vs]
    return not feasible(cols, (zero,) * n + (one,))
