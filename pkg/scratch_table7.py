# dev scratch: check every table-7 family reading against the engine
from algdouble import *
from algdouble.scalar import Scalar
from algdouble.solver import extract_deq_system, verify_family

V = Scalar.var
lam, beta = V("lam"), V("beta")
a11, a12, a21, a22 = V("a11"), V("a12"), V("a21"), V("a22")
x, y, u, v, s = V("x"), V("y"), V("u"), V("v"), V("s")

A1 = Algebra(2, {(0, 0): [0, 1]})
A2 = Algebra(2, {(0, 0): [1, 0], (0, 1): [0, 1]})
A3 = Algebra(2, {(0, 0): [1, 0], (1, 0): [0, 1]})
A4 = Algebra(2, {(0, 0): [1, 0], (0, 1): [0, 1], (1, 0): [0, 1]})
A5 = Algebra(2)
A6 = Algebra(2, {(1, 1): [0, 1]})
A7 = Algebra(2, {(0, 0): [1, 0], (1, 1): [0, 1]})

D = DendriformStructure

STRUCTURES = {
    "D1_1lam": D(2, prec={(0, 0): [0, lam]}, succ={(0, 0): [0, 1 - lam]}, parent=A1),
    "D2_1": D(2, succ={(0, 0): [1, 0], (0, 1): [0, 1]}, parent=A2),
    "D2_2": D(2, succ={(0, 1): [0, 1]}, prec={(0, 0): [1, 0]}, parent=A2),
    "D2_3": D(2, prec={(0, 0): [1, 0], (0, 1): [0, 1]}, parent=A2),
    "D2_4": D(2, prec={(1, 0): [0, 1], (0, 0): [1, 0]},
              succ={(0, 1): [0, 1], (1, 0): [0, -1]}, parent=A2),
    "D2_5": D(2, succ={(0, 1): [0, 1], (0, 0): [0, -1]},
              prec={(0, 0): [1, 1]}, parent=A2),
    "D3_1": D(2, succ={(0, 0): [1, 0]}, prec={(1, 0): [0, 1]}, parent=A3),
    "D3_2": D(2, prec={(0, 0): [1, 0], (1, 0): [0, 1]}, parent=A3),
    "D3_3": D(2, succ={(0, 0): [1, -1]}, prec={(0, 0): [0, 1], (1, 0): [0, 1]}, parent=A3),
    "D3_4": D(2, succ={(0, 1): [0, 1], (0, 0): [1, 0]},
              prec={(0, 1): [0, -1], (1, 0): [0, 1]}, parent=A3),
    "D4_1": D(2, succ={(0, 1): [0, 1]}, prec={(0, 0): [1, 0], (1, 0): [0, 1]}, parent=A4),
    "D4_2": D(2, succ={(0, 1): [0, 1], (0, 0): [1, 0], (1, 0): [0, 1]}, parent=A4),
    "D4_3": D(2, succ={(0, 1): [0, 1], (0, 0): [1, 0]}, prec={(1, 0): [0, 1]}, parent=A4),
    "D4_4": D(2, succ={(0, 1): [0, 1], (0, 0): [0, -1], (1, 0): [0, 1]},
              prec={(0, 0): [1, 1]}, parent=A4),
    "D5_1beta": D(2, succ={(1, 1): [beta, 0]}, prec={(1, 1): [-beta, 0]}, parent=A5),
    "D6_1": D(2, succ={(1, 1): [0, 1]}, parent=A6),
    "D6_2": D(2, succ={(1, 1): [0, 1], (1, 0): [1, 0]}, prec={(1, 0): [-1, 0]}, parent=A6),
    "D6_3": D(2, prec={(1, 1): [0, 1], (0, 1): [1, 0]}, succ={(0, 1): [-1, 0]}, parent=A6),
    "D6_4": D(2, succ={(0, 0): [0, 1], (1, 1): [0, 1]}, prec={(0, 0): [0, -1]}, parent=A6),
    "D7_1": D(2, prec={(0, 1): [1, 0], (1, 1): [0, 1]},
              succ={(0, 0): [1, 0], (0, 1): [-1, 0]}, parent=A7),
    "D7_2": D(2, succ={(0, 0): [1, 0], (1, 1): [0, 1]}, parent=A7),
    "D7_3": D(2, prec={(1, 1): [0, 1]}, succ={(0, 0): [1, 0]}, parent=A7),
    "D7_4": D(2, prec={(0, 1): [0, -1], (1, 1): [0, 1]},
              succ={(0, 1): [0, 1], (0, 0): [1, 0]}, parent=A7),
    "D7_5lam": D(2, prec={(0, 0): [1, 0], (1, 0): [0, -lam]},
                 succ={(1, 0): [0, lam], (1, 1): [0, 1]}, parent=A7),
    "D7_6": D(2, prec={(0, 0): [1, 0], (1, 0): [-1, 0]},
              succ={(1, 0): [1, 0], (1, 1): [0, 1]}, parent=A7),
    "D7_7": D(2, prec={(0, 0): [1, 0], (1, 0): [-1, 0], (1, 1): [1, 1]},
              succ={(1, 0): [1, 0], (1, 1): [-1, 0]}, parent=A7),
    "D7_8lam": D(2, prec={(0, 0): [0, lam]},
                 succ={(0, 0): [1, -lam], (1, 1): [0, 1]}, parent=A7),
    "D7_9lam": D(2, prec={(0, 0): [0, lam], (1, 1): [0, 1]},
                 succ={(0, 0): [1, -lam]}, parent=A7),
    "D7_10lam": D(2, prec={(0, 1): [0, -1], (0, 0): [1, -lam], (1, 0): [0, -1]},
                  succ={(0, 1): [0, 1], (1, 0): [0, 1], (0, 0): [0, lam],
                        (1, 1): [0, 1]}, parent=A7),
    "D7_11lam": D(2, prec={(0, 1): [0, -1], (0, 0): [1, -lam], (1, 0): [0, -1],
                           (1, 1): [0, 1]},
                  succ={(0, 1): [0, 1], (1, 0): [0, 1], (0, 0): [0, lam]},
                  parent=A7),
}

Z = Scalar(0)
# family: (label, {a11,a12,a21,a22 bindings}, structure-bindings, note)
FAMILIES = {
    "D1_1lam": [
        ("f1", dict(a11=Z, a12=Z, a21=Z, a22=a22), {}),
        ("f2", dict(a11=Z, a12=Z, a21=a21, a22=a22), {"lam": Z}),
        ("f3", dict(a11=Z, a12=-lam * a21, a21=a21, a22=a22), {}),
    ],
    "D2_1": [
        ("f1", dict(a11=a11, a12=Z, a21=a21, a22=Z), {}),
        ("f2", dict(a11=Z, a12=Z, a21=Z, a22=a22), {}),
        ("f3", dict(a11=Z, a12=Z, a21=a21, a22=a22), {}),
        ("f4", dict(a11=x * u, a12=x * v, a21=y * u, a22=y * v), {}),
    ],
    "D2_2": [
        ("f1", dict(a11=Z, a12=a12, a21=Z, a22=a22), {}),
        ("f2", dict(a11=a11, a12=Z, a21=Z, a22=Z), {}),
        ("f3", dict(a11=Z, a12=a12, a21=a12, a22=a22), {}),
    ],
    "D2_3": [
        ("f1", dict(a11=Z, a12=Z, a21=Z, a22=a22), {}),
        ("f2", dict(a11=s * u * u, a12=s * u * v, a21=s * u * v, a22=s * v * v), {}),
    ],
    "D2_4": [
        ("f1", dict(a11=a11, a12=Z, a21=a21, a22=Z), {}),
        ("f2", dict(a11=a11, a12=a12, a21=Z, a22=Z), {}),
        ("f3", dict(a11=a11, a12=a22, a21=a11, a22=a22), {}),
    ],
    "D2_5": [
        ("f1", dict(a11=Z, a12=a12, a21=Z, a22=a22), {}),
        ("f2", dict(a11=a11, a12=a12, a21=a12, a22=a22), {}),
    ],
    "D3_1": [
        ("f1", dict(a11=a11, a12=Z, a21=a21, a22=Z), {}),
        ("f2", dict(a11=Z, a12=a12, a21=a12, a22=Z), {}),
        ("f3", dict(a11=Z, a12=a12, a21=a12, a22=a22), {}),
    ],
    "D3_2": [
        ("f1", dict(a11=Z, a12=Z, a21=Z, a22=a22), {}),
        ("f2", dict(a11=s * u * u, a12=s * u * v, a21=s * u * v, a22=s * v * v), {}),
    ],
    "D3_3": [
        ("f1", dict(a11=Z, a12=Z, a21=Z, a22=a22), {}),
        ("f2", dict(a11=Z, a12=Z, a21=a21, a22=-a21), {}),
        ("f3", dict(a11=Z, a12=a12, a21=a12, a22=a22), {}),
        ("f4", dict(a11=a11, a12=-a11, a21=a21, a22=-a21), {}),
    ],
    "D3_4": [
        ("f1", dict(a11=Z, a12=a12, a21=Z, a22=a22), {}),
        ("f2", dict(a11=Z, a12=Z, a21=a21, a22=a22), {}),
        ("f3", dict(a11=x * u, a12=x * v, a21=y * u, a22=y * v), {}),
    ],
    "D4_1": [
        ("f1", dict(a11=a11, a12=Z, a21=Z, a22=a22), {}),
        ("f2", dict(a11=Z, a12=a12, a21=Z, a22=Z), {}),
        ("f3", dict(a11=a11, a12=a12, a21=Z, a22=Z), {}),
    ],
    "D4_2": [
        ("f1", dict(a11=Z, a12=Z, a21=Z, a22=a22), {}),
        ("f2", dict(a11=Z, a12=a12, a21=Z, a22=Z), {}),
        ("f3", dict(a11=Z, a12=a12, a21=a12, a22=a22), {}),
        ("f4", dict(a11=a11, a12=a12, a21=Z, a22=Z), {}),
    ],
    "D4_3": [
        ("f1", dict(a11=a11, a12=Z, a21=Z, a22=a22), {}),
        ("f2", dict(a11=Z, a12=Z, a21=a21, a22=Z), {}),
        ("f3", dict(a11=Z, a12=a12, a21=Z, a22=Z), {}),
    ],
    "D4_4": [
        ("f1", dict(a11=a11, a12=Z, a21=Z, a22=a22), {}),
        ("f2", dict(a11=a11, a12=a12, a21=Z, a22=Z), {}),
    ],
    "D5_1beta": [
        ("f1", dict(a11=a11, a12=a12, a21=a21, a22=Z), {"beta": Z}),
        ("f2", dict(a11=a11, a12=a12, a21=Z, a22=Z), {"beta": Scalar(1)}),
        ("f3", dict(a11=a11, a12=Z, a21=a21, a22=Z), {"beta": Scalar(1)}),
        ("f4", dict(a11=a11, a12=a12, a21=a21, a22=a22), {"beta": Z}),
    ],
    "D6_1": [
        ("f1", dict(a11=a11, a12=a12, a21=Z, a22=Z), {}),
        ("f2", dict(a11=a11, a12=Z, a21=Z, a22=a22), {}),
    ],
    "D6_2": [
        ("f1", dict(a11=Z, a12=a12, a21=a21, a22=Z), {}),
        ("f2", dict(a11=Z, a12=Z, a21=Z, a22=a22), {}),
        ("f3", dict(a11=a11, a12=a12, a21=a12, a22=Z), {}),
    ],
    "D6_3": [
        ("f1", dict(a11=a11, a12=a12, a21=Z, a22=Z), {}),
        ("f2", dict(a11=a11, a12=a12, a21=a12, a22=Z), {}),
        ("f3", dict(a11=Z, a12=Z, a21=Z, a22=a22), {}),
    ],
    "D6_4": [
        ("f1", dict(a11=Z, a12=a12, a21=Z, a22=Z), {}),
        ("f2", dict(a11=Z, a12=Z, a21=Z, a22=a22), {}),
    ],
    "D7_1": [
        ("f1", dict(a11=a11, a12=Z, a21=Z, a22=Z), {}),
        ("f2", dict(a11=a11, a12=Z, a21=a21, a22=Z), {}),
        ("f3", dict(a11=Z, a12=Z, a21=Z, a22=a22), {}),
        ("f4", dict(a11=a11, a12=a12, a21=a21, a22=a22), {}),
        ("f5", dict(a11=a11, a12=a12, a21=a12, a22=a12), {}),
        ("f6", dict(a11=Z, a12=a12, a21=Z, a22=a12), {}),
    ],
    "D7_2": [
        ("f1", dict(a11=Z, a12=Z, a21=a21, a22=a22), {}),
        ("f2", dict(a11=Z, a12=a22, a21=a21, a22=a22), {}),
        ("f3", dict(a11=a11, a12=Z, a21=Z, a22=a22), {}),
        ("f4", dict(a11=a11, a12=a12, a21=a11, a22=a12), {}),
    ],
    "D7_3": [
        ("f1", dict(a11=a11, a12=Z, a21=Z, a22=a22), {}),
        ("f2", dict(a11=a11, a12=Z, a21=a11, a22=Z), {}),
    ],
    "D7_4": [
        ("f1", dict(a11=Z, a12=Z, a21=Z, a22=a22), {}),
        ("f2", dict(a11=a11, a12=Z, a21=Z, a22=Z), {}),
        ("f3", dict(a11=a11, a12=a11, a21=Z, a22=Z), {}),
        ("f4", dict(a11=a11, a12=a12, a21=a11, a22=Z), {}),
        ("f5", dict(a11=a11, a12=Z, a21=a11, a22=Z), {}),
    ],
    "D7_5lam": [
        ("f1", dict(a11=a11, a12=Z, a21=Z, a22=a22), {"lam": Z}),
        ("f2", dict(a11=a11, a12=Z, a21=Z, a22=Z), {}),
        ("f3", dict(a11=Z, a12=Z, a21=Z, a22=a22), {}),
        ("f4", dict(a11=a11, a12=Z, a21=a11, a22=a22), {"lam": Scalar(-1)}),
        ("f5", dict(a11=a11, a12=a12, a21=a11, a22=a22), {"lam": Scalar(-1)}),
        ("f6", dict(a11=Z, a12=a12, a21=Z, a22=a12), {}),
    ],
    "D7_6": [
        ("f1", dict(a11=Z, a12=Z, a21=Z, a22=a22), {}),
        ("f2", dict(a11=Z, a12=Z, a21=a21, a22=a21), {}),
        ("f3", dict(a11=Z, a12=a12, a21=Z, a22=a12), {}),
        ("f4", dict(a11=a11, a12=a12, a21=a12, a22=a12), {}),
        ("f5", dict(a11=Z, a12=a12, a21=a12, a22=a12), {}),
    ],
    "D7_7": [
        ("f1", dict(a11=a11, a12=Z, a21=Z, a22=Z), {}),
    ],
    "D7_8lam": [
        ("f1", dict(a11=Z, a12=Z, a21=Z, a22=a22), {}),
        ("f2", dict(a11=Z, a12=a12, a21=Z, a22=a12), {}),
    ],
    "D7_9lam": [
        ("f1", dict(a11=Z, a12=Z, a21=Z, a22=a22), {}),
    ],
    "D7_10lam": [
        ("f1", dict(a11=Z, a12=Z, a21=Z, a22=a22), {}),
        ("f2", dict(a11=Z, a12=a12, a21=Z, a22=Z), {}),
    ],
    "D7_11lam": [
        ("f1", dict(a11=Z, a12=Z, a21=Z, a22=a22), {}),
        ("f2", dict(a11=Z, a12=a12, a21=Z, a22=Z), {}),
    ],
}

for name, structure in STRUCTURES.items():
    lam_free = "lam" in name or "beta" in name
    dend = structure.is_dendriform()
    compat = structure.is_compatible_with_parent()
    print(f"== {name}: dendriform(symbolic)={dend} compat={compat}")
    for label, family, struct_bind in FAMILIES[name]:
        st = structure.substitute(struct_bind) if struct_bind else structure
        if not st.is_dendriform():
            print(f"   {label}: STRUCTURE NOT DENDRIFORM after {struct_bind}")
            continue
        system = extract_deq_system(st)
        ok = verify_family(system, family)
        flag = "ok" if ok else "FAIL"
        print(f"   {label}: {flag}")
        if not ok:
            # show one surviving equation
            bind = {k: v for k, v in family.items()}
            for eq in system.equations:
                val = eq.substitute(bind)
                if not val.is_zero():
                    print(f"      survives: {val}")
                    break
