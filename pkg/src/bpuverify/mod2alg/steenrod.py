"""Steenrod squares on presented GF(2) algebras: Wu formulas and Cartan.

Free rings of Stiefel-Whitney or mod-2 Chern classes carry a complete action
given by the Wu formulas (with generalized binomial coefficients, so
instability falls out of class truncation automatically).  Presented rings
carry a finite table of squares on generators for i in {1, 2, 4, 8}; values
at the remaining indices j <= 8 that a Cartan expansion may request are
resolved through the classical fixed decompositions

    Sq^3 = Sq^1 Sq^2          Sq^5 = Sq^1 Sq^4
    Sq^6 = Sq^2 Sq^4 + Sq^1 Sq^4 Sq^1
    Sq^7 = Sq^1 Sq^2 Sq^4

applied to the tabulated generator values.  Anything else raises
UnderdeterminedSquare rather than guessing; no general Adem rewriting is
performed.
"""

from __future__ import annotations

from typing import Callable, Optional

from .. import gf2
from .algebra import Poly, PresentedAlgebra, poly_mul


class UnderdeterminedSquare(ValueError):
    """A requested square is not derivable from the stored table."""


def binom_general(m: int, b: int) -> int:
    """Binomial coefficient with arbitrary integer upper argument."""
    if b < 0:
        return 0
    num = 1
    for t in range(b):
        num *= m - t
    den = 1
    for t in range(1, b + 1):
        den *= t
    return num // den


_COMPOSITE_ROUTES = {
    3: ((1, 2),),
    5: ((1, 4),),
    6: ((2, 4), (1, 4, 1)),
    7: ((1, 2, 4),),
}


class SteenrodAction:
    """Squares on a presented algebra, extended from generators by Cartan."""

    def __init__(
        self,
        algebra: PresentedAlgebra,
        table: Optional[dict] = None,
        generator_rule: Optional[Callable] = None,
        check_relations_up_to: int = 0,
    ):
        self.algebra = algebra
        self.table = {}
        for gname, entries in (table or {}).items():
            gidx = algebra.gen_names.index(gname)
            self.table[gidx] = {
                int(i): (algebra.parse(v) if isinstance(v, str) else frozenset(v))
                for i, v in entries.items()
            }
        self.generator_rule = generator_rule
        self._gen_cache = {}
        self._mono_cache = {}
        if check_relations_up_to:
            self.certify_relations(check_relations_up_to)

    # -- squares on generators ----------------------------------------------
    def sq_gen(self, i: int, gidx: int) -> Poly:
        if i == 0:
            e = [0] * len(self.algebra.gen_names)
            e[gidx] = 1
            return frozenset({tuple(e)})
        deg = self.algebra.gen_degrees[gidx]
        if i > deg:
            return frozenset()
        if i == deg:
            e = [0] * len(self.algebra.gen_names)
            e[gidx] = 2
            return self.algebra.normal_form(frozenset({tuple(e)}))
        key = (i, gidx)
        if key in self._gen_cache:
            return self._gen_cache[key]
        if gidx in self.table and i in self.table[gidx]:
            value = self.algebra.normal_form(self.table[gidx][i])
        elif self.generator_rule is not None:
            value = self.algebra.normal_form(
                self.generator_rule(i, self.algebra.gen_names[gidx])
            )
        elif i in _COMPOSITE_ROUTES and all(
            j in self.table.get(gidx, {}) or j >= deg for route in _COMPOSITE_ROUTES[i] for j in route
        ):
            value = frozenset()
            base = self.sq_gen(0, gidx)
            for route in _COMPOSITE_ROUTES[i]:
                part = base
                for j in reversed(route):
                    part = self.sq(j, part)
                value = value ^ part
            value = self.algebra.normal_form(value)
        else:
            raise UnderdeterminedSquare(
                f"Sq^{i} on {self.algebra.gen_names[gidx]} is not determined by the table"
            )
        self._gen_cache[key] = value
        return value

    # -- Cartan extension ----------------------------------------------------
    def sq(self, i: int, p: Poly) -> Poly:
        if i < 0:
            raise ValueError("negative square index")
        out = frozenset()
        for m in self.algebra.normal_form(p):
            out = out ^ self._sq_monomial(i, m)
        return self.algebra.normal_form(out)

    def _sq_monomial(self, i: int, m) -> Poly:
        if i == 0:
            return frozenset({m})
        key = (i, m)
        if key in self._mono_cache:
            return self._mono_cache[key]
        gidx = next((g for g, e in enumerate(m) if e), None)
        if gidx is None:
            value = frozenset()  # Sq^i(1) = 0 for i > 0
        else:
            rest = list(m)
            rest[gidx] -= 1
            rest = tuple(rest)
            gdeg = self.algebra.gen_degrees[gidx]
            acc = set()
            for j in range(0, min(i, gdeg) + 1):
                cof = self._sq_monomial(i - j, rest)
                if not cof:
                    continue
                try:
                    a = self.sq_gen(j, gidx)
                except UnderdeterminedSquare:
                    if self._annihilates(cof, gdeg + j):
                        continue
                    raise
                if a:
                    acc ^= poly_mul(a, cof)
            value = self.algebra.normal_form(frozenset(acc))
        self._mono_cache[key] = value
        return value

    def _annihilates(self, cof: Poly, degree: int) -> bool:
        """True if cof kills every degree-d normal-form monomial, so an
        undetermined factor of that degree contributes nothing."""
        for m in self.algebra.monomials_of_degree(degree):
            if self.algebra.mul(frozenset({m}), cof):
                return False
        return True

    def total_square(self, p: Poly) -> Poly:
        d = self.algebra.poly_degree(p)
        if d is None:
            return frozenset()
        out = frozenset()
        for i in range(0, d + 1):
            out = out ^ self.sq(i, p)
        return self.algebra.normal_form(out)

    def certify_relations(self, max_index: int):
        """Check Sq^i(r) == 0 in the quotient for each relation and i <= max_index."""
        for r in self.algebra.relations:
            for i in range(1, max_index + 1):
                value = self.sq(i, r)
                if value:
                    raise ArithmeticError(
                        f"Sq^{i} of relation {self.algebra.format(r)} is "
                        f"{self.algebra.format(value)} != 0"
                    )


# -- Wu formulas ---------------------------------------------------------------

def stiefel_whitney_rule(algebra: PresentedAlgebra, class_index: dict) -> Callable:
    """Complete generator rule for a ring of Stiefel-Whitney classes.

    ``class_index`` maps generator name -> k for w_k; w_0 = 1, w_1 = 0 and
    classes above the top listed index vanish.
    """
    by_index = {k: name for name, k in class_index.items()}

    def class_poly(k: int) -> Poly:
        if k == 0:
            return algebra.one()
        if k in by_index:
            return algebra.gen(by_index[k])
        return frozenset()  # w_1 and classes above the ambient dimension

    def rule(i: int, gname: str) -> Poly:
        k = class_index[gname]
        out = frozenset()
        for j in range(0, i + 1):
            if binom_general(k - j - 1, i - j) % 2:
                out = out ^ algebra.normal_form(
                    poly_mul(class_poly(k + i - j), class_poly(j))
                )
        return out

    return rule


def chern_rule(algebra: PresentedAlgebra, class_index: dict) -> Callable:
    """Complete generator rule for mod-2 Chern classes; odd squares vanish
    because the ring is concentrated in even degrees."""
    by_index = {k: name for name, k in class_index.items()}

    def class_poly(k: int) -> Poly:
        if k == 0:
            return algebra.one()
        if k in by_index:
            return algebra.gen(by_index[k])
        return frozenset()

    def rule(two_i: int, gname: str) -> Poly:
        if two_i % 2:
            return frozenset()
        i = two_i // 2
        k = class_index[gname]
        out = frozenset()
        for j in range(0, i + 1):
            if binom_general(k - j - 1, i - j) % 2:
                out = out ^ algebra.normal_form(
                    poly_mul(class_poly(k + i - j), class_poly(j))
                )
        return out

    return rule


def wu_sq_sw(action: SteenrodAction, i: int, k: int, class_index: dict) -> Poly:
    """Sq^i(w_k) through a Wu-complete action (convenience wrapper)."""
    name = {v: key for key, v in class_index.items()}[k]
    return action.sq(i, action.algebra.gen(name))


def wu_sq_chern(action: SteenrodAction, two_i: int, k: int, class_index: dict) -> Poly:
    """Sq^(2i)(c_k) through a Wu-complete action; an odd index gives zero
    (the ring is concentrated in even degrees), not an error."""
    if two_i % 2:
        return frozenset()
    name = {v: key for key, v in class_index.items()}[k]
    return action.sq(two_i, action.algebra.gen(name))


# -- candidate solving ---------------------------------------------------------

def solve_sq(
    source: PresentedAlgebra,
    maps,  # list of (AlgebraMap, SteenrodAction on the target)
    sq1_action: SteenrodAction,
    gen_name: str,
    i: int,
    enumeration_limit: int = 4096,
):
    """All degree-(deg g + i) elements s with F(s) = Sq^i(F(g)) for every
    listed map F, filtered by the forced Sq^1 compatibilities.

    Filters applied: for i = 1 the candidate must satisfy Sq^1(s) = 0
    (Sq^1 Sq^1 = 0); for even i with deg g = i + 1 it must satisfy
    Sq^1(s) = g^2 (the top-square constraint Sq^1 Sq^i = Sq^(i+1)).
    """
    g = source.gen(gen_name)
    gdeg = source.gen_degrees[source.gen_names.index(gen_name)]
    d = gdeg + i
    basis = source.monomials_of_degree(d)
    vectors = []
    target_mask_parts = []
    offsets = []
    offset = 0
    images_per_map = []
    for fmap, taction in maps:
        target_value = taction.sq(i, fmap.apply(g))
        tdeg = d
        tmonos = fmap.target.monomials_of_degree(tdeg)
        index = {m: idx for idx, m in enumerate(tmonos)}
        img_masks = []
        for m in basis:
            img = fmap.apply(frozenset({m}))
            mask = 0
            for mm in img:
                mask |= 1 << index[mm]
            img_masks.append(mask)
        tmask = 0
        for mm in target_value:
            tmask |= 1 << index[mm]
        images_per_map.append((img_masks, tmask, len(tmonos)))
        offsets.append(offset)
        offset += len(tmonos)
    # stack the three coordinate blocks into single bitmask vectors
    stacked = []
    for bi in range(len(basis)):
        v = 0
        for (img_masks, _, _), off in zip(images_per_map, offsets):
            v |= img_masks[bi] << off
        stacked.append(v)
    target = 0
    for (_, tmask, _), off in zip(images_per_map, offsets):
        target |= tmask << off
    solved = gf2.solve_affine(stacked, target)
    if solved is None:
        return []
    particular, nullspace = solved
    masks = gf2.enumerate_affine(particular, nullspace, limit=enumeration_limit)
    candidates = []
    for mask in masks:
        s = set()
        mm = mask
        bi = 0
        while mm:
            if mm & 1:
                s.add(basis[bi])
            mm >>= 1
            bi += 1
        candidates.append(frozenset(s))
    # forced Sq^1 compatibility filters
    if i == 1:
        candidates = [s for s in candidates if not sq1_action.sq(1, s)]
    elif i % 2 == 0 and gdeg == i + 1:
        square = source.mul(g, g)
        candidates = [s for s in candidates if sq1_action.sq(1, s) == square]
    candidates.sort(key=lambda s: sorted(s, key=source.order_key), reverse=False)
    return candidates
