"""The standard rings, ring maps and Steenrod tables of the mod-2 story.

Presentations and generator-image tables live in the packaged data files;
this module loads them once and decorates them with the Steenrod structure
(tabled squares on the six-generator ring, Wu-complete rules on the free
rings) plus the one integral coefficient ring that is needed,
Z[p1, W3]/(2*W3).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from importlib import resources

from .algebra import AlgebraMap, PresentedAlgebra, load_algebra, load_map_tables
from .steenrod import SteenrodAction, chern_rule, stiefel_whitney_rule


def _data(name: str) -> str:
    return resources.files("bpuverify.data").joinpath(name).read_text()


@functools.lru_cache(maxsize=None)
def toda_ring() -> PresentedAlgebra:
    return load_algebra(_data("toda.alg"), "toda")


@functools.lru_cache(maxsize=None)
def bu4_ring() -> PresentedAlgebra:
    return load_algebra(_data("bu4.alg"), "bu4")


@functools.lru_cache(maxsize=None)
def bso6_ring() -> PresentedAlgebra:
    return load_algebra(_data("bso6.alg"), "bso6")


@functools.lru_cache(maxsize=None)
def bso3_ring() -> PresentedAlgebra:
    return load_algebra(_data("bso3.alg"), "bso3")


@functools.lru_cache(maxsize=None)
def kz3_ring() -> PresentedAlgebra:
    return load_algebra(_data("kz3.alg"), "kz3")


@functools.lru_cache(maxsize=None)
def shadow_ring() -> PresentedAlgebra:
    return load_algebra(_data("integral_shadow.alg"), "shadow")


@functools.lru_cache(maxsize=None)
def bso3_truncated(power: int) -> PresentedAlgebra:
    return bso3_ring().with_relations([f"wp3^{power}"], name=f"bso3/(wp3^{power})")


@functools.lru_cache(maxsize=None)
def _maps() -> dict:
    return load_map_tables(_data("maps.txt"))


@functools.lru_cache(maxsize=None)
def pi_star() -> AlgebraMap:
    return AlgebraMap("pi*", toda_ring(), bu4_ring(), _maps()[("toda", "bu4")])


@functools.lru_cache(maxsize=None)
def phi_star() -> AlgebraMap:
    return AlgebraMap("phi*", toda_ring(), bso6_ring(), _maps()[("toda", "bso6")])


@functools.lru_cache(maxsize=None)
def delta_star() -> AlgebraMap:
    return AlgebraMap("delta*", toda_ring(), bso3_ring(), _maps()[("toda", "bso3")])


@functools.lru_cache(maxsize=None)
def chi_star() -> AlgebraMap:
    return AlgebraMap("chi*", kz3_ring(), toda_ring(), _maps()[("kz3", "toda")])


@functools.lru_cache(maxsize=None)
def reduction_map() -> AlgebraMap:
    """Mod-2 reduction of the integral generators, as a map from the free shadow."""
    return AlgebraMap("rho", shadow_ring(), toda_ring(), _maps()[("shadow", "toda")])


TODA_SQ_TABLE = {
    "y2": {1: "0"},
    "y3": {1: "0", 2: "y5"},
    "y5": {1: "y3^2", 2: "0", 4: "y3^3 + y9"},
    "y8": {1: "y3^3", 2: "y5^2", 4: "y2^2*y8 + y12 + y3^4"},
    "y9": {
        1: "y5^2",
        2: "y3^2*y5",
        4: "y3*y5^2",
        8: "y3*y5*y9 + y5*y12 + y8*y9",
    },
    "y12": {
        1: "y3*y5^2",
        2: "y2*y12 + y3^2*y8",
        4: "y2^2*y12 + y3^2*y5^2",
        8: "y3^4*y8 + y8*y12",
    },
}

KZ3_SQ_TABLE = {
    "x1": {1: "0", 2: "x20"},
    "x20": {1: "x1^2", 4: "x21"},
    "x21": {1: "x20^2"},
}


@functools.lru_cache(maxsize=None)
def toda_action() -> SteenrodAction:
    return SteenrodAction(toda_ring(), table=TODA_SQ_TABLE)


@functools.lru_cache(maxsize=None)
def kz3_action() -> SteenrodAction:
    return SteenrodAction(kz3_ring(), table=KZ3_SQ_TABLE)


@functools.lru_cache(maxsize=None)
def bu4_action() -> SteenrodAction:
    alg = bu4_ring()
    return SteenrodAction(alg, generator_rule=chern_rule(alg, {"c1": 1, "c2": 2, "c3": 3, "c4": 4}))


@functools.lru_cache(maxsize=None)
def bso6_action() -> SteenrodAction:
    alg = bso6_ring()
    return SteenrodAction(
        alg, generator_rule=stiefel_whitney_rule(alg, {"w2": 2, "w3": 3, "w4": 4, "w5": 5, "w6": 6})
    )


@functools.lru_cache(maxsize=None)
def bso3_action() -> SteenrodAction:
    alg = bso3_ring()
    return SteenrodAction(alg, generator_rule=stiefel_whitney_rule(alg, {"wp2": 2, "wp3": 3}))


@functools.lru_cache(maxsize=None)
def bso3_truncated_action(power: int) -> SteenrodAction:
    alg = bso3_truncated(power)
    return SteenrodAction(alg, generator_rule=stiefel_whitney_rule(alg, {"wp2": 2, "wp3": 3}))


def toda_dimension_oracle(d: int) -> int:
    """Independent count of the graded dimension of the six-generator ring.

    Transfer-matrix style enumeration of the two normal-form families
    {y2^a y8^b y12^c} and {y3^i y5^j y9^e y8^b y12^c : e <= 1, (i,j,e) != 0},
    with no Groebner machinery involved.
    """
    if d < 0:
        return 0
    count = 0
    for a in range(d // 2 + 1):
        for b in range((d - 2 * a) // 8 + 1):
            if (d - 2 * a - 8 * b) % 12 == 0:
                count += 1
    for b in range(d // 8 + 1):
        for c in range((d - 8 * b) // 12 + 1):
            rem0 = d - 8 * b - 12 * c
            for eps in (0, 1):
                rem = rem0 - 9 * eps
                if rem < 0:
                    continue
                for i in range(rem // 3 + 1):
                    if (rem - 3 * i) % 5 == 0:
                        j = (rem - 3 * i) // 5
                        if (i, j, eps) != (0, 0, 0):
                            count += 1
    return count


# -- the one integral presented ring ------------------------------------------


@dataclass(frozen=True)
class IntegralSW:
    """Element of Z[p1, W3]/(2*W3), optionally truncated by W3^cap.

    Terms with a positive W3 exponent have coefficients reduced mod 2; the
    W3-free part keeps exact integer coefficients.
    """

    terms: tuple  # sorted tuple of ((p1_exp, w3_exp), coeff)
    cap: int = 0  # 0 = no truncation, else W3^cap = 0

    @staticmethod
    def make(mapping, cap: int = 0) -> "IntegralSW":
        canon = {}
        for (a, b), c in dict(mapping).items():
            if cap and b >= cap:
                continue
            c = c % 2 if b > 0 else c
            if c:
                canon[(a, b)] = c
        return IntegralSW(tuple(sorted(canon.items())), cap)

    @staticmethod
    def monomial(p1_exp: int, w3_exp: int, cap: int = 0) -> "IntegralSW":
        return IntegralSW.make({(p1_exp, w3_exp): 1}, cap)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "IntegralSW") -> "IntegralSW":
        if self.cap != other.cap:
            raise ValueError("truncation mismatch")
        out = dict(self.terms)
        for key, c in other.terms:
            out[key] = out.get(key, 0) + c
        return IntegralSW.make(out, self.cap)

    def __mul__(self, other: "IntegralSW") -> "IntegralSW":
        if self.cap != other.cap:
            raise ValueError("truncation mismatch")
        out = {}
        for (a1, b1), c1 in self.terms:
            for (a2, b2), c2 in other.terms:
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return IntegralSW.make(out, self.cap)

    def __pow__(self, k: int) -> "IntegralSW":
        out = IntegralSW.make({(0, 0): 1}, self.cap)
        for _ in range(k):
            out = out * self
        return out

    def mod2_image(self, target: PresentedAlgebra):
        """Reduction to the Stiefel-Whitney ring: p1 -> wp2^2, W3 -> wp3."""
        out = frozenset()
        for (a, b), c in self.terms:
            if c % 2:
                out = out ^ target.monomial((b, 2 * a))  # gens (wp3, wp2)
        return target.normal_form(out)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for (a, b), c in sorted(self.terms, reverse=True):
            factors = []
            if a:
                factors.append(f"p1^{a}" if a > 1 else "p1")
            if b:
                factors.append(f"W3^{b}" if b > 1 else "W3")
            body = "*".join(factors) if factors else "1"
            pieces.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(pieces)
