# dev scratch: second round of family adjudication
from algdouble import *
from algdouble.scalar import Scalar
from algdouble.solver import extract_deq_system, verify_family, grid_scan

V = Scalar.var
a11, a12, a21, a22 = V("a11"), V("a12"), V("a21"), V("a22")
Z = Scalar(0)

A4 = Algebra(2, {(0, 0): [1, 0], (0, 1): [0, 1], (1, 0): [0, 1]})
A6 = Algebra(2, {(1, 1): [0, 1]})
A7 = Algebra(2, {(0, 0): [1, 0], (1, 1): [0, 1]})
A3 = Algebra(2, {(0, 0): [1, 0], (1, 0): [0, 1]})
D = DendriformStructure


def check(structure, label, family):
    system = extract_deq_system(structure)
    ok = verify_family(system, family)
    print(f"  {label}: {'ok' if ok else 'FAIL'}")
    if not ok:
        for eq in system.equations:
            val = eq.substitute(family)
            if not val.is_zero():
                print(f"    survives: {val}")


def grid(structure, values=(-1, 0, 1)):
    system = extract_deq_system(structure)
    return [tuple(p[k] for k in ("a11", "a12", "a21", "a22"))
            for p in grid_scan(system, values).satisfying_points()]


print("== adjudicated D4_4: e1<e1=e1, e1<e2=e2, e2<e1=e2")
D4_4 = D(2, prec={(0, 0): [1, 0], (0, 1): [0, 1], (1, 0): [0, 1]}, parent=A4)
print("dendriform:", D4_4.is_dendriform())
check(D4_4, "f1 (a11 0; 0 a22)", dict(a11=a11, a12=Z, a21=Z, a22=a22))
check(D4_4, "f2 (a11 a12; 0 0)", dict(a11=a11, a12=a12, a21=Z, a22=Z))
print("grid:", grid(D4_4))

print("== adjudicated D6_4: e2<e2=e2")
D6_4 = D(2, prec={(1, 1): [0, 1]}, parent=A6)
print("dendriform:", D6_4.is_dendriform())
check(D6_4, "f1 (0 a12; 0 0)", dict(a11=Z, a12=a12, a21=Z, a22=Z))
check(D6_4, "f2 (0 0; 0 a22)", dict(a11=Z, a12=Z, a21=Z, a22=a22))
print("grid:", grid(D6_4))

print("== D7_2 corrected f1")
D7_2 = D(2, succ={(0, 0): [1, 0], (1, 1): [0, 1]}, parent=A7)
check(D7_2, "f1' (0 0; 0 a22)", dict(a11=Z, a12=Z, a21=Z, a22=a22))

print("== D7_4 shape (a11 a11; a11 a22) free a22")
D7_4 = D(2, prec={(0, 1): [0, -1], (1, 1): [0, 1]},
         succ={(0, 1): [0, 1], (0, 0): [1, 0]}, parent=A7)
check(D7_4, "(a11 a11; a11 a22)", dict(a11=a11, a12=a11, a21=a11, a22=a22))
check(D7_4, "(a11 a11; a11 0)", dict(a11=a11, a12=a11, a21=a11, a22=Z))

print("== D7_5 lam=-1 families 2 and 3")
D7_5m1 = D(2, prec={(0, 0): [1, 0], (1, 0): [0, 1]},
           succ={(1, 0): [0, -1], (1, 1): [0, 1]}, parent=A7)
check(D7_5m1, "f2 (a11 0; 0 0)", dict(a11=a11, a12=Z, a21=Z, a22=Z))
check(D7_5m1, "f3 (0 0; 0 a22)", dict(a11=Z, a12=Z, a21=Z, a22=a22))

print("== D3_3 symmetric family for table 8")
D3_3 = D(2, succ={(0, 0): [1, -1]}, prec={(0, 0): [0, 1], (1, 0): [0, 1]},
         parent=A3)
check(D3_3, "(a11 a12; a12 a11) free a12",
      dict(a11=a11, a12=a12, a21=a12, a22=a11))
check(D3_3, "(a11 -a11; -a11 a11)",
      dict(a11=a11, a12=-a11, a21=-a11, a22=a11))

print("== D2_1 symmetric rank-1 (table 8 row c), sanity")
A2 = Algebra(2, {(0, 0): [1, 0], (0, 1): [0, 1]})
D2_1 = D(2, succ={(0, 0): [1, 0], (0, 1): [0, 1]}, parent=A2)
s, u, v = V("s"), V("u"), V("v")
check(D2_1, "sym rank-1", dict(a11=s * u * u, a12=s * u * v, a21=s * u * v,
                               a22=s * v * v))

print("== D5_1 beta=1 corrected f2: (a11 a12; a12 0)")
A5 = Algebra(2)
D5_1b1 = D(2, succ={(1, 1): [1, 0]}, prec={(1, 1): [-1, 0]}, parent=A5)
check(D5_1b1, "(a11 a12; a12 0)", dict(a11=a11, a12=a12, a21=a12, a22=Z))
