"""The differential graded algebra, its chain homotopy, and its homology.

Run:  python demos/dga_homotopy.py
"""

from bpuverify.dga import (
    differential,
    homology_dimension,
    homology_series,
    homotopy_p,
    lambda_projection,
    stated_answer_series,
    w_algebra,
)

alg = w_algebra()

print("W =", ", ".join(f"{n}({d})" for n, d in zip(alg.gen_names, alg.gen_degrees)))
print("Relations:")
for r in alg.relations:
    print("   ", alg.format(r))

print("\nThe differential on a few elements:")
for text in ("x5", "x9", "x5*x9", "x3^2*x12"):
    p = alg.parse(text)
    print(f"  D({text}) = {alg.format(differential(p))}")

print("\nThe homotopy identity P*D + D*P = projection + id, sampled:")
for text in ("x3^2", "x5^2", "x9", "x2*x8^2", "x3*x5*x9"):
    m = alg.parse(text)
    lhs = homotopy_p(differential(m)) ^ differential(homotopy_p(m))
    rhs = lambda_projection(m) ^ m
    print(f"  {text}: lhs = {alg.format(lhs)}; rhs = {alg.format(rhs)}")

print("\nHomology dimensions (computed / corrected series / nominal series):")
series = homology_series(20)
nominal = stated_answer_series(20)
for d in range(21):
    print(f"  degree {d:2d}: {homology_dimension(d)} / {series[d]} / {nominal[d]}")
print("\nThe nominal tensor-ring series overcounts the x2^a*x3 monomials,")
print("which vanish in W; the first divergence is at degree 5.")
