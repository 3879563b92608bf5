"""Pure-Python exact integer Gauss-Jordan kernels.

Rows are sequences of Python ints.  The canonical key of a span is its
reduced row-echelon basis with every row scaled to a primitive integer
vector whose pivot is positive.
"""
from math import gcd


def _primitive(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    if g > 1:
        row = [x // g for x in row]
    return row


def rref_key(rows):
    """Return the canonical primitive-integer RREF of the row span."""
    a = [list(r) for r in rows if any(r)]
    if not a:
        return ()
    ncols = len(a[0])
    r = 0
    pivots = []
    for c in range(ncols):
        p = None
        for i in range(r, len(a)):
            if a[i][c]:
                p = i
                break
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pr = a[r]
        pv = pr[c]
        for i in range(len(a)):
            if i != r:
                f = a[i][c]
                if f:
                    a[i] = _primitive([pv * x - f * y for x, y in zip(a[i], pr)])
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    out = []
    for i, c in enumerate(pivots):
        row = _primitive(a[i])
        if row[c] < 0:
            row = [-x for x in row]
        out.append(tuple(row))
    return tuple(out)


def rank(rows):
    return len(rref_key(rows))
