# dev scratch: exhaustive numeric enumeration of dendriform splits
# over selected parents, succ entries on a small integer grid
import itertools
from fractions import Fraction

A2 = ((  (1, 0), (0, 1)), ((0, 0), (0, 0)))
A4 = (((1, 0), (0, 1)), ((0, 1), (0, 0)))
A6 = (((0, 0), (0, 0)), ((0, 0), (0, 1)))
A7 = (((1, 0), (0, 0)), ((0, 0), (0, 1)))


def bilinear(table, x, y):
    n = 2
    out = [0, 0]
    for i in range(n):
        if not x[i]:
            continue
        for j in range(n):
            if not y[j]:
                continue
            w = x[i] * y[j]
            out[0] += w * table[i][j][0]
            out[1] += w * table[i][j][1]
    return tuple(out)


def is_dendriform(succ, prec):
    star = tuple(tuple(tuple(succ[i][j][k] + prec[i][j][k] for k in range(2))
                       for j in range(2)) for i in range(2))
    basis = ((1, 0), (0, 1))
    for x in basis:
        for y in basis:
            for z in basis:
                xy_p = bilinear(prec, x, y)
                yz_s = bilinear(star, y, z)
                if bilinear(prec, xy_p, z) != bilinear(prec, x, yz_s):
                    return False
                xy_s = bilinear(succ, x, y)
                yz_p = bilinear(prec, y, z)
                if bilinear(prec, xy_s, z) != bilinear(succ, x, yz_p):
                    return False
                yz_ss = bilinear(succ, y, z)
                xy_star = bilinear(star, x, y)
                if bilinear(succ, x, yz_ss) != bilinear(succ, xy_star, z):
                    return False
    return True


def enumerate_splits(parent, values):
    slots = [(i, j, k) for i in range(2) for j in range(2) for k in range(2)]
    found = []
    for combo in itertools.product(values, repeat=8):
        succ = [[[0, 0] for _ in range(2)] for _ in range(2)]
        for (i, j, k), v in zip(slots, combo):
            succ[i][j][k] = v
        prec = [[[parent[i][j][k] - succ[i][j][k] for k in range(2)]
                 for j in range(2)] for i in range(2)]
        if is_dendriform(succ, prec):
            found.append((tuple(map(tuple, (tuple(r) for r in succ))),
                          tuple(map(tuple, (tuple(r) for r in prec)))))
    return found


def describe(succ, prec):
    bits = []
    for table, sym in ((succ, ">"), (prec, "<")):
        for i in range(2):
            for j in range(2):
                vec = table[i][j]
                if vec == (0, 0) or vec == [0, 0]:
                    continue
                parts = []
                for k, c in enumerate(vec):
                    if c:
                        name = f"e{k + 1}"
                        parts.append(name if c == 1 else
                                     (f"-{name}" if c == -1 else
                                      f"{c}{name}"))
                bits.append(f"e{i+1}{sym}e{j+1}={'+'.join(parts)}")
    return ", ".join(bits) or "zero"


for label, parent, values in (
        ("A7 grid -2..2", A7, (-2, -1, 0, 1, 2)),
        ("A4 grid -2..2", A4, (-2, -1, 0, 1, 2)),
        ("A6 grid -2..2", A6, (-2, -1, 0, 1, 2)),
        ("A2 grid -1..1", A2, (-1, 0, 1)),
        ("A7 grid halves", A7, (Fraction(-1, 2), 0, Fraction(1, 2), 1,
                                Fraction(3, 2))),
):
    found = enumerate_splits(parent, values)
    print(f"== {label}: {len(found)} splits")
    for succ, prec in found:
        print("  ", describe(succ, prec))
