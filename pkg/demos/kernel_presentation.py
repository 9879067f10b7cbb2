"""Walk through the integral kernel computations for four variables.

Run:  python demos/kernel_presentation.py
"""

from bpuverify.intlinalg import smith_normal_form, solve_integer
from bpuverify.symfun import (
    SymmetricContext,
    alpha_generators,
    coker_order,
    coordinates,
    kernel_basis,
    nabla_matrix,
)

ctx = SymmetricContext(4)
al = alpha_generators(ctx)

print("The four divergence-free generators:")
for name, gen in al.as_dict().items():
    print(f"  {name} = {gen}   (divergence: {ctx.nabla_sigma(gen)})")

relation = 64 * al.a6 - al.a2 ** 3 - 27 * al.a3 ** 2 + 48 * al.a2 * al.a4
print(f"\nDefining relation: 64*a6 - a2^3 - 27*a3^2 + 48*a2*a4 = {relation}")

print("\nKernel lattice bases (degrees 2..6):")
for d in range(2, 7):
    basis = kernel_basis(ctx, d)
    print(f"  degree {d}: rank {len(basis)}")
    for g in basis:
        print(f"    {g}")

print("\nThe divergence matrix at degree 2 and its Smith form:")
mat = nabla_matrix(ctx, 2)
print(f"  matrix {mat.entries}, invariant factors "
      f"{smith_normal_form(mat).invariant_factors}")

print("\nCokernel orders (all four):")
for name, f in (("1", ctx.sigma_ring.one()), ("a4", al.a4), ("a6", al.a6)):
    print(f"  order of {name}: {coker_order(ctx, f)}")

print("\nThe degree-4 subtlety: the kernel element u = (a2^2 - 64*a4)/3")
u_coords = None
kern4 = kernel_basis(ctx, 4)
cols = [list(coordinates(ctx, g, 4)) for g in kern4]
target = coordinates(ctx, al.a2 ** 2, 4)
print(f"  a2^2 in the kernel basis: {solve_integer(cols, target)}")
u = (al.a2 ** 2 - 64 * al.a4)
u3 = type(u)(u.ring, {e: c // 3 for e, c in u.terms.items()})
print(f"  u = {u3}")
print(f"  divergence(u) = {ctx.nabla_sigma(u3)}")
span = [list(coordinates(ctx, al.a2 ** 2, 4)), list(coordinates(ctx, al.a4, 4))]
print(f"  u in span{{a2^2, a4}}? {solve_integer(span, coordinates(ctx, u3, 4))}")
print("  -> the generator monomials have index 3 in the degree-4 kernel lattice.")
