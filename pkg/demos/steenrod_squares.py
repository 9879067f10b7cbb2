"""Re-derive the Steenrod squares on the six-generator cohomology ring.

Run:  python demos/steenrod_squares.py
"""

from bpuverify.mod2alg.rings import (
    bso3_action,
    bso6_action,
    bu4_action,
    delta_star,
    phi_star,
    pi_star,
    toda_action,
    toda_ring,
)
from bpuverify.mod2alg.steenrod import solve_sq

T = toda_ring()
act = toda_action()
maps = [
    (pi_star(), bu4_action()),
    (phi_star(), bso6_action()),
    (delta_star(), bso3_action()),
]

print("Ring:", ", ".join(f"{n}({d})" for n, d in zip(T.gen_names, T.gen_degrees)))
print("Relations:")
for r in T.relations:
    print("   ", T.format(r))

print("\nSolving for each square from the three restriction maps:")
for gname in ("y2", "y3", "y5", "y8", "y9", "y12"):
    for i in (1, 2, 4, 8):
        candidates = solve_sq(T, maps, act, gname, i)
        shown = " | ".join(T.format(c) for c in candidates)
        print(f"  Sq^{i}({gname}) in {{ {shown} }}")

print("\nWell-definedness: Sq^i of every relation reduces to zero:")
for r in T.relations:
    values = [T.format(act.sq(i, r)) for i in (1, 2, 4, 8)]
    print(f"  {T.format(r)} -> {values}")
