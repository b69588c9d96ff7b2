# dev scratch: match the four unlisted A7 splits to the four bogus rows
# by comparing solution sets, and finish pending symbolic checks
from algdouble import *
from algdouble.scalar import Scalar
from algdouble.solver import extract_deq_system, verify_family, grid_scan

V = Scalar.var
a11, a12, a21, a22 = V("a11"), V("a12"), V("a21"), V("a22")
Z = Scalar(0)

A4 = Algebra(2, {(0, 0): [1, 0], (0, 1): [0, 1], (1, 0): [0, 1]})
A6 = Algebra(2, {(1, 1): [0, 1]})
A7 = Algebra(2, {(0, 0): [1, 0], (1, 1): [0, 1]})
D = DendriformStructure

CANDIDATES = {
    "#1  e1>e1=-e2,e1>e2=e2,e1<e1=e1+e2,e1<e2=-e2,e2<e2=e2":
        D(2, succ={(0, 0): [0, -1], (0, 1): [0, 1]},
          prec={(0, 0): [1, 1], (0, 1): [0, -1], (1, 1): [0, 1]}, parent=A7),
    "#3  e1<e1=e1,e2<e2=e2":
        D(2, prec={(0, 0): [1, 0], (1, 1): [0, 1]}, parent=A7),
    "#8  e1>e1=e1,e1>e2=-e1,e2>e2=e1+e2,e1<e2=e1,e2<e2=-e1":
        D(2, succ={(0, 0): [1, 0], (0, 1): [-1, 0], (1, 1): [1, 1]},
          prec={(0, 1): [1, 0], (1, 1): [-1, 0]}, parent=A7),
    "#12 e1>e1=e1+e2,e2>e1=-e2,e2>e2=e2,e1<e1=-e2,e2<e1=e2":
        D(2, succ={(0, 0): [1, 1], (1, 0): [0, -1], (1, 1): [0, 1]},
          prec={(0, 0): [0, -1], (1, 0): [0, 1]}, parent=A7),
}

for label, d in CANDIDATES.items():
    assert d.is_dendriform() and d.is_compatible_with_parent()
    system = extract_deq_system(d)
    sols = [tuple(p[k] for k in ("a11", "a12", "a21", "a22"))
            for p in grid_scan(system, (-1, 0, 1)).satisfying_points()]
    print(label)
    print("   grid:", sols)
    for name, fam in (
            ("(0 0; 0 a22)", dict(a11=Z, a12=Z, a21=Z, a22=a22)),
            ("(0 a12; 0 a12)", dict(a11=Z, a12=a12, a21=Z, a22=a12)),
            ("(0 a12; 0 0)", dict(a11=Z, a12=a12, a21=Z, a22=Z)),
            ("(a11 0; 0 0)", dict(a11=a11, a12=Z, a21=Z, a22=Z)),
            ("(0 0; a21 0)", dict(a11=Z, a12=Z, a21=a21, a22=Z)),
            ("(a11 0; 0 a22)", dict(a11=a11, a12=Z, a21=Z, a22=a22)),
    ):
        if verify_family(system, fam):
            print("   family ok:", name)

print()
print("== pending symbolic checks")
D4_4 = D(2, prec={(0, 0): [1, 0], (0, 1): [0, 1], (1, 0): [0, 1]}, parent=A4)
sys44 = extract_deq_system(D4_4)
print("D4_4 (a11 0; 0 0):",
      verify_family(sys44, dict(a11=a11, a12=Z, a21=Z, a22=Z)))
print("D4_4 (0 a12; a12 a22):",
      verify_family(sys44, dict(a11=Z, a12=a12, a21=a12, a22=a22)))

D6_4 = D(2, prec={(1, 1): [0, 1]}, parent=A6)
sys64 = extract_deq_system(D6_4)
print("D6_4 (a11 0; 0 a22):",
      verify_family(sys64, dict(a11=a11, a12=Z, a21=Z, a22=a22)))

# symmetric families used by table 8 that have not been checked symbolically
D3_4 = D(2, succ={(0, 1): [0, 1], (0, 0): [1, 0]},
         prec={(0, 1): [0, -1], (1, 0): [0, 1]}, parent=A3 if False else
         Algebra(2, {(0, 0): [1, 0], (1, 0): [0, 1]}))
s, u, v = V("s"), V("u"), V("v")
print("D3_4 sym rank-1:",
      verify_family(extract_deq_system(D3_4),
                    dict(a11=s * u * u, a12=s * u * v, a21=s * u * v,
                         a22=s * v * v)))

D7_1 = D(2, prec={(0, 1): [1, 0], (1, 1): [0, 1]},
         succ={(0, 0): [1, 0], (0, 1): [-1, 0]}, parent=A7)
print("D7_1 f5 sym (a11 a12; a12 a12):",
      verify_family(extract_deq_system(D7_1),
                    dict(a11=a11, a12=a12, a21=a12, a22=a12)))

D7_2 = D(2, succ={(0, 0): [1, 0], (1, 1): [0, 1]}, parent=A7)
print("D7_2 all-equal (a a; a a):",
      verify_family(extract_deq_system(D7_2),
                    dict(a11=a11, a12=a11, a21=a11, a22=a11)))

D7_6 = D(2, prec={(0, 0): [1, 0], (1, 0): [-1, 0]},
         succ={(1, 0): [1, 0], (1, 1): [0, 1]}, parent=A7)
print("D7_6 f4 sym (a11 a12; a12 a12):",
      verify_family(extract_deq_system(D7_6),
                    dict(a11=a11, a12=a12, a21=a12, a22=a12)))

D7_4 = D(2, prec={(0, 1): [0, -1], (1, 1): [0, 1]},
         succ={(0, 1): [0, 1], (0, 0): [1, 0]}, parent=A7)
print("D7_4 table8 family (a11 a11; a11 0):",
      verify_family(extract_deq_system(D7_4),
                    dict(a11=a11, a12=a11, a21=a11, a22=Z)))

D2_4 = D(2, prec={(1, 0): [0, 1], (0, 0): [1, 0]},
         succ={(0, 1): [0, 1], (1, 0): [0, -1]},
         parent=Algebra(2, {(0, 0): [1, 0], (0, 1): [0, 1]}))
print("D2_4 table8 family (a11 0; 0 0):",
      verify_family(extract_deq_system(D2_4),
                    dict(a11=a11, a12=Z, a21=Z, a22=Z)))
