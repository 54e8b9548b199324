"""Extremal rays of the n-system monotonicity cone via pycddlib (< 3.0).

usage: cddlib_rays.py N [OUT]

Builds the facets from scratch (lower sets by brute force) and writes one
coprime integer ray per line to OUT, coordinates in increasing subset-mask order.
"""
import math
import sys
import time
from fractions import Fraction

import cdd


def lower_sets(i, n):
    poset = [m for m in range(1, 1 << n) if m >> (i - 1) & 1]
    out = []
    for bits in range(1 << len(poset)):
        fam = {poset[k] for k in range(len(poset)) if bits >> k & 1}
        closed = all((x & ~(1 << j)) in fam
                     for x in fam for j in range(n) if j != i - 1 and x >> j & 1)
        if closed:
            out.append(fam)
    return poset, out


def cone(n):
    d = (1 << n) - 1
    rows, lin = [], []
    for i in range(1, n + 1):
        poset, families = lower_sets(i, n)
        for fam in families:
            if 0 < len(fam) < len(poset):
                rows.append([0] + [1 if (m + 1) in fam else 0 for m in range(d)])
        lin.append(len(rows))
        rows.append([0] + [1 if (m + 1) in poset else 0 for m in range(d)])
    mat = cdd.Matrix(rows, number_type='fraction')
    mat.rep_type = cdd.RepType.INEQUALITY
    mat.lin_set = frozenset(lin)
    return mat


def primitive(v):
    v = [Fraction(x) for x in v]
    den = 1
    for x in v:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = math.gcd(g, abs(x))
    return [x // g for x in ints]


def main():
    n = int(sys.argv[1])
    start = time.time()
    gen = cdd.Polyhedron(cone(n)).get_generators()
    rays = [r for r in gen if r[0] == 0]
    print("n=%d rays=%d lineality=%d time=%.1fs" % (n, len(rays), len(gen.lin_set), time.time() - start))
    if len(sys.argv) > 2:
        with open(sys.argv[2], 'w') as f:
            for r in sorted(primitive(r[1:]) for r in rays):
                f.write(" ".join(map(str, r)) + "\n")


if __name__ == '__main__':
    main()
