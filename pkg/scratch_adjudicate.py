# dev scratch: evidence for adjudicating suspect table-7 rows
import itertools
from fractions import Fraction

from algdouble import *
from algdouble.scalar import Scalar
from algdouble.solver import extract_deq_system, verify_family, grid_scan

V = Scalar.var
lam = V("lam")
a11, a12, a21, a22 = V("a11"), V("a12"), V("a21"), V("a22")
Z = Scalar(0)

A2 = Algebra(2, {(0, 0): [1, 0], (0, 1): [0, 1]})
A4 = Algebra(2, {(0, 0): [1, 0], (0, 1): [0, 1], (1, 0): [0, 1]})
A5 = Algebra(2)
A6 = Algebra(2, {(1, 1): [0, 1]})
A7 = Algebra(2, {(0, 0): [1, 0], (1, 1): [0, 1]})
D = DendriformStructure


def survivors(structure, family):
    system = extract_deq_system(structure)
    out = []
    for eq in system.equations:
        val = eq.substitute(family)
        if not val.is_zero():
            out.append(val)
    return out


def grid_solutions(structure, values=(-2, -1, 0, 1, 2)):
    system = extract_deq_system(structure)
    return [tuple(p[k] for k in ("a11", "a12", "a21", "a22"))
            for p in grid_scan(system, values).satisfying_points()]


print("=== D2_5 family 2: (a11 a12; a12 a22), printed a12=a21!=0 ===")
D2_5 = D(2, succ={(0, 1): [0, 1], (0, 0): [0, -1]}, prec={(0, 0): [1, 1]},
         parent=A2)
fam = dict(a11=a11, a12=a12, a21=a12, a22=a22)
print("survivors:", [str(s) for s in survivors(D2_5, fam)])
print("with a11=0:", [str(s) for s in survivors(
    D2_5, dict(a11=Z, a12=a12, a21=a12, a22=a22))])
print("with a11=a12:", [str(s) for s in survivors(
    D2_5, dict(a11=a12, a12=a12, a21=a12, a22=a22))])
sols = grid_solutions(D2_5, (-1, 0, 1))
print("grid solutions:", sols)

print()
print("=== D5_1 beta=1 ===")
D5_1b1 = D(2, succ={(1, 1): [1, 0]}, prec={(1, 1): [-1, 0]}, parent=A5)
system = extract_deq_system(D5_1b1)
print("equations:", [str(e) for e in system.equations])
print("grid:", grid_solutions(D5_1b1, (-1, 0, 1)))

print()
print("=== D7_1 families 2 and 4 ===")
D7_1 = D(2, prec={(0, 1): [1, 0], (1, 1): [0, 1]},
         succ={(0, 0): [1, 0], (0, 1): [-1, 0]}, parent=A7)
print("f2 (a11 0; a21 0):",
      [str(s) for s in survivors(D7_1, dict(a11=a11, a12=Z, a21=a21, a22=Z))])
print("f2' (a11 0; a11 0):",
      [str(s) for s in survivors(D7_1, dict(a11=a11, a12=Z, a21=a11, a22=Z))])
print("f4 generic:",
      [str(s) for s in survivors(D7_1, dict(a11=a11, a12=a12, a21=a21,
                                            a22=a22))])
print("f4 a12=a22:",
      [str(s) for s in survivors(D7_1, dict(a11=a11, a12=a12, a21=a21,
                                            a22=a12))])
print("f4 a12=a22, a21=a12:",
      [str(s) for s in survivors(D7_1, dict(a11=a11, a12=a12, a21=a12,
                                            a22=a12))])
print("grid:", grid_solutions(D7_1, (-1, 0, 1)))

print()
print("=== D7_2 families 1 and 2 ===")
D7_2 = D(2, succ={(0, 0): [1, 0], (1, 1): [0, 1]}, parent=A7)
print("f1 (0 0; a21 a22):",
      [str(s) for s in survivors(D7_2, dict(a11=Z, a12=Z, a21=a21, a22=a22))])
print("f2 (0 a22; a21 a22):",
      [str(s) for s in survivors(D7_2, dict(a11=Z, a12=a22, a21=a21,
                                            a22=a22))])
print("f2' (0 a22; 0 a22):",
      [str(s) for s in survivors(D7_2, dict(a11=Z, a12=a22, a21=Z,
                                            a22=a22))])
print("f4 (a11 a12; a11 a12):",
      [str(s) for s in survivors(D7_2, dict(a11=a11, a12=a12, a21=a11,
                                            a22=a12))])
print("grid:", grid_solutions(D7_2, (-1, 0, 1)))

print()
print("=== D7_4 family 4 ===")
D7_4 = D(2, prec={(0, 1): [0, -1], (1, 1): [0, 1]},
         succ={(0, 1): [0, 1], (0, 0): [1, 0]}, parent=A7)
print("f4 (a11 a12; a11 0) printed:",
      [str(s) for s in survivors(D7_4, dict(a11=a11, a12=a12, a21=a11,
                                            a22=Z))])
print("grid:", grid_solutions(D7_4, (-1, 0, 1)))

print()
print("=== D7_5 at lam = -1: families 4, 5, 6 ===")
D7_5m1 = D(2, prec={(0, 0): [1, 0], (1, 0): [0, 1]},
           succ={(1, 0): [0, -1], (1, 1): [0, 1]}, parent=A7)
assert D7_5m1.is_dendriform()
print("f4 (a11 0; a11 a22):",
      [str(s) for s in survivors(D7_5m1, dict(a11=a11, a12=Z, a21=a11,
                                              a22=a22))])
print("f4' (a11 0; a11 0):",
      [str(s) for s in survivors(D7_5m1, dict(a11=a11, a12=Z, a21=a11,
                                              a22=Z))])
print("f5 (a11 a12; a11 a22):",
      [str(s) for s in survivors(D7_5m1, dict(a11=a11, a12=a12, a21=a11,
                                              a22=a22))])
print("f5 with a12=a22:",
      [str(s) for s in survivors(D7_5m1, dict(a11=a11, a12=a22, a21=a11,
                                              a22=a22))])
print("f5 with a12=a11:",
      [str(s) for s in survivors(D7_5m1, dict(a11=a11, a12=a11, a21=a11,
                                              a22=a22))])
print("grid lam=-1:", grid_solutions(D7_5m1, (-1, 0, 1)))
D7_5z = D(2, prec={(0, 0): [1, 0]}, succ={(1, 1): [0, 1]}, parent=A7)
print("grid lam=0:", grid_solutions(D7_5z, (-1, 0, 1)))
print("f6 lam=0 (0 a12; 0 a12):",
      [str(s) for s in survivors(D7_5z, dict(a11=Z, a12=a12, a21=Z,
                                             a22=a12))])
print("f6 lam=-1 (0 a12; 0 a12):",
      [str(s) for s in survivors(D7_5m1, dict(a11=Z, a12=a12, a21=Z,
                                              a22=a12))])

print()
print("=== enumerating dendriform splits over A4 and A6 ===")


def enumerate_splits(parent, coeffs=(-1, 0, 1)):
    n = parent.dim
    found = []
    slots = [(i, j) for i in range(n) for j in range(n)]
    for combo in itertools.product(
            itertools.product(coeffs, repeat=n), repeat=len(slots)):
        succ_table = [[[Scalar(v) for v in combo[i * n + j]]
                       for j in range(n)] for i in range(n)]
        prec_table = [[[parent.c[i][j][k] - succ_table[i][j][k]
                        for k in range(n)] for j in range(n)]
                      for i in range(n)]
        d = D(n, succ_table=succ_table, prec_table=prec_table, parent=parent)
        if d.is_dendriform():
            found.append(d)
    return found


def describe(d):
    sym = {"succ": ">", "prec": "<"}
    bits = []
    for op, i, j, vec in d.product_equations():
        from algdouble.algebra import format_combination
        bits.append(f"e{i+1}{sym[op]}e{j+1}={format_combination(vec, d.basis_names)}")
    return ", ".join(bits) or "zero"


for parent, label in ((A4, "A4"), (A6, "A6")):
    found = enumerate_splits(parent)
    print(f"-- {label}: {len(found)} dendriform splits with entries in -1..1")
    for d in found:
        print("   ", describe(d))
