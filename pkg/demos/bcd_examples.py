"""Half branch classes and invariant dimensions for quadrics and isotropic Grassmannians."""
from schubred.branch import branch_class
from schubred.reduce import alternating_multiplicity
from schubred.rootsys import ParabolicData, root_system
from schubred.tensor import triple_invariants
from schubred.weyl import subset_to_weyl

CASES = [
    ("Q7", "B", 4, 1, [(7,), (7,), (6,)]),
    ("OG(4,9)", "B", 4, 4, [(3, 6, 8, 9), (3, 6, 8, 9), (1, 3, 6, 8)]),
    ("OG(2,8)", "D", 4, 2, [(6, 8), (3, 7), (3, 7)]),
    ("IG(2,8)", "C", 4, 2, [(5, 7), (5, 7), (4, 6)]),
]

for name, kind, rank, node, subsets in CASES:
    P = ParabolicData.of(root_system(kind, rank), [node])
    vs = [subset_to_weyl(I, P) for I in subsets]
    rep = branch_class(vs, P)
    th = rep.theta
    row = []
    for k in range(4):
        z = [t * k for t in th]
        direct = triple_invariants(*z)
        alt = alternating_multiplicity(z, vs, P).value if rep.bk_value else None
        row.append(f"{direct}" + ("" if alt is None else f"/{alt}"))
    print(f"{name:8} c={rep.c_value} BK={rep.bk_value} theta={[str(t) for t in th]}  m(k theta), k<4: {row}")
