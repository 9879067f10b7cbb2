"""Exact-arithmetic verification toolkit for the cohomology of BPU(4).

Subpackages and modules:

- ``poly``: sparse multivariate polynomials over Z and Z/m.
- ``intlinalg``: Smith/Hermite normal forms, integer kernels, cokernels.
- ``symfun``: symmetric functions, the divergence operator, its kernel
  lattices and the degreewise presentation certificates.
- ``mod2alg``: presented GF(2) algebras, Groebner normal forms, ring maps
  and Steenrod squares, with the verification suites built on them.
- ``dga``: the six-generator differential graded algebra and its chain
  homotopy.
- ``ssverify``: the bespoke spectral-sequence linear-algebra checks.
- ``cli``: the ``bpuverify`` report runner.
"""

__version__ = "0.1.0"
