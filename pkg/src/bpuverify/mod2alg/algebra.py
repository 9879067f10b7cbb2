"""Finitely presented graded-commutative GF(2) algebras with Groebner normal forms.

Char-2 graded-commutative means plain commutative, so elements are sets of
monomials (frozensets of exponent tuples) and addition is symmetric
difference.  Each algebra caches a reduced Groebner basis at construction,
certified confluent by reducing every S-polynomial to zero; equality of
normal forms is then a decision procedure for equality in the quotient.

Monomial order: graded-lex on a declared generator precedence (first listed
is compared first).  Presentations and map tables are loadable from a plain
text format (``gen name deg`` / ``rel <poly>`` / ``map src -> tgt: g = poly``
lines) so the standard ring corpus ships as data.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Optional

from ..poly import Ring, parse_polynomial

Monomial = tuple
Poly = frozenset  # of Monomial

ZERO: Poly = frozenset()


def poly_add(a: Poly, b: Poly) -> Poly:
    return a ^ b


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(m1, m2))


def poly_mul(a: Poly, b: Poly) -> Poly:
    out = set()
    for m1 in a:
        for m2 in b:
            out ^= {mono_mul(m1, m2)}
    return frozenset(out)


def mono_divides(d: Monomial, m: Monomial) -> bool:
    return all(x <= y for x, y in zip(d, m))


def mono_quotient(m: Monomial, d: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(m, d))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


class MapNotWellDefined(ValueError):
    """A generator-image table does not kill every source relation."""


class PresentedAlgebra:
    """Graded-commutative GF(2) algebra from weighted generators and relations."""

    def __init__(
        self,
        name: str,
        generators: Iterable,
        relations: Iterable = (),
        precedence: Optional[Iterable] = None,
    ):
        self.name = name
        gens = list(generators)
        self.gen_names = tuple(g for g, _ in gens)
        self.gen_degrees = tuple(int(d) for _, d in gens)
        if len(set(self.gen_names)) != len(self.gen_names):
            raise ValueError("duplicate generator names")
        if any(d <= 0 for d in self.gen_degrees):
            raise ValueError("generator degrees must be positive")
        self.precedence = (
            tuple(precedence) if precedence is not None else tuple(range(len(gens)))
        )
        if sorted(self.precedence) != list(range(len(gens))):
            raise ValueError("precedence must be a permutation of the generators")
        self._parse_ring = Ring(self.gen_names, self.gen_degrees, 2)
        rels = []
        for r in relations:
            p = self.parse(r) if isinstance(r, str) else frozenset(r)
            if not p:
                continue
            if len({self.degree(m) for m in p}) != 1:
                raise ValueError(f"inhomogeneous relation {self.format(p)}")
            rels.append(p)
        self.relations = tuple(rels)
        self.groebner = self._buchberger(self.relations)
        for r in self.relations:
            if self.normal_form(r):
                raise ArithmeticError("a defining relation does not reduce to zero")
        self._nf_monomial_cache = {}

    # -- monomial order ----------------------------------------------------
    def degree(self, m: Monomial) -> int:
        return sum(e * d for e, d in zip(m, self.gen_degrees))

    def order_key(self, m: Monomial):
        return (self.degree(m), tuple(m[i] for i in self.precedence))

    def leading_monomial(self, p: Poly) -> Monomial:
        return max(p, key=self.order_key)

    def poly_degree(self, p: Poly):
        """Weighted degree of a homogeneous element; None for zero."""
        if not p:
            return None
        degs = {self.degree(m) for m in p}
        if len(degs) != 1:
            raise ValueError("inhomogeneous element")
        return degs.pop()

    # -- element construction / io -----------------------------------------
    def parse(self, text: str) -> Poly:
        p = parse_polynomial(text, self._parse_ring)
        return frozenset(p.terms.keys())

    def gen(self, name: str) -> Poly:
        e = [0] * len(self.gen_names)
        e[self.gen_names.index(name)] = 1
        return frozenset({tuple(e)})

    def one(self) -> Poly:
        return frozenset({(0,) * len(self.gen_names)})

    def monomial(self, exponents) -> Poly:
        return frozenset({tuple(exponents)})

    def format(self, p: Poly) -> str:
        if not p:
            return "0"
        pieces = []
        for m in sorted(p, key=self.order_key, reverse=True):
            factors = []
            for name, e in zip(self.gen_names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            pieces.append("*".join(factors) if factors else "1")
        return " + ".join(pieces)

    # -- reduction -----------------------------------------------------------
    def _reduce(self, p: Poly, basis) -> Poly:
        """Full normal form of p against (lead, poly) pairs."""
        work = set(p)
        again = True
        while again:
            again = False
            for m in sorted(work, key=self.order_key, reverse=True):
                for lead, g in basis:
                    if mono_divides(lead, m):
                        cof = mono_quotient(m, lead)
                        for gm in g:
                            work ^= {mono_mul(cof, gm)}
                        again = True
                        break
                if again:
                    break
        return frozenset(work)

    def _buchberger(self, relations) -> tuple:
        basis = []
        for r in relations:
            if r:
                basis.append((self.leading_monomial(r), r))
        pairs = list(itertools.combinations(range(len(basis)), 2))
        while pairs:
            i, j = pairs.pop()
            li, fi = basis[i]
            lj, fj = basis[j]
            if all(a == 0 or b == 0 for a, b in zip(li, lj)):
                continue  # coprime leading monomials: S-pair reduces to zero
            lcm = mono_lcm(li, lj)
            s = frozenset()
            for gm in fi:
                s ^= {mono_mul(mono_quotient(lcm, li), gm)}
            for gm in fj:
                s ^= {mono_mul(mono_quotient(lcm, lj), gm)}
            s = self._reduce(s, basis)
            if s:
                basis.append((self.leading_monomial(s), s))
                pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))
        # inter-reduce to the unique reduced basis
        changed = True
        while changed:
            changed = False
            for i in range(len(basis)):
                others = [basis[j] for j in range(len(basis)) if j != i]
                red = self._reduce(basis[i][1], others)
                if red != basis[i][1]:
                    changed = True
                    basis = others
                    if red:
                        basis.append((self.leading_monomial(red), red))
                    break
        basis.sort(key=lambda t: self.order_key(t[0]))
        # confluence certificate: every S-polynomial of the final basis -> 0
        for (li, fi), (lj, fj) in itertools.combinations(basis, 2):
            lcm = mono_lcm(li, lj)
            s = frozenset()
            for gm in fi:
                s ^= {mono_mul(mono_quotient(lcm, li), gm)}
            for gm in fj:
                s ^= {mono_mul(mono_quotient(lcm, lj), gm)}
            if self._reduce(s, basis):
                raise ArithmeticError("Groebner basis failed the confluence check")
        return tuple(basis)

    def normal_form(self, p: Poly) -> Poly:
        return self._reduce(frozenset(p), self.groebner)

    def mul(self, a: Poly, b: Poly) -> Poly:
        return self.normal_form(poly_mul(a, b))

    def power(self, a: Poly, k: int) -> Poly:
        out = self.one()
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def is_zero(self, p: Poly) -> bool:
        return not self.normal_form(p)

    # -- graded pieces -------------------------------------------------------
    def monomials_of_degree(self, d: int) -> tuple:
        """Normal-form monomials of weighted degree d, order-descending."""
        if d in self._nf_monomial_cache:
            return self._nf_monomial_cache[d]
        leads = [lead for lead, _ in self.groebner]
        n = len(self.gen_names)
        found = []

        def rec(i, remaining, prefix):
            if i == n:
                if remaining == 0:
                    m = tuple(prefix)
                    if not any(mono_divides(l, m) for l in leads):
                        found.append(m)
                return
            w = self.gen_degrees[i]
            for k in range(remaining // w, -1, -1):
                rec(i + 1, remaining - k * w, prefix + [k])

        rec(0, d, [])
        found.sort(key=self.order_key, reverse=True)
        out = tuple(found)
        self._nf_monomial_cache[d] = out
        return out

    def graded_dimension(self, d: int):
        monos = self.monomials_of_degree(d)
        return len(monos), monos

    def coordinates(self, p: Poly, d: int) -> int:
        """Bitmask of a degree-d normal-form element over monomials_of_degree(d)."""
        nf = self.normal_form(p)
        monos = self.monomials_of_degree(d)
        index = {m: i for i, m in enumerate(monos)}
        mask = 0
        for m in nf:
            if m not in index:
                raise ValueError(
                    f"element not homogeneous of degree {d}: {self.format(nf)}"
                )
            mask |= 1 << index[m]
        return mask

    def from_mask(self, mask: int, d: int) -> Poly:
        monos = self.monomials_of_degree(d)
        out = set()
        i = 0
        while mask:
            if mask & 1:
                out.add(monos[i])
            mask >>= 1
            i += 1
        return frozenset(out)

    def with_relations(self, extra, name: Optional[str] = None) -> "PresentedAlgebra":
        """Quotient by additional homogeneous relations (e.g. truncations)."""
        rels = [self.format(r) for r in self.relations]
        rels.extend(extra if isinstance(extra, (list, tuple)) else [extra])
        return PresentedAlgebra(
            name or f"{self.name}-quotient",
            list(zip(self.gen_names, self.gen_degrees)),
            rels,
            precedence=self.precedence,
        )


class AlgebraMap:
    """Degree-preserving algebra map given by generator images.

    Construction verifies the well-definedness certificate: every source
    relation must map to zero in the target.
    """

    def __init__(self, name, source: PresentedAlgebra, target: PresentedAlgebra, images):
        self.name = name
        self.source = source
        self.target = target
        imgs = {}
        for gname, value in images.items():
            p = target.parse(value) if isinstance(value, str) else frozenset(value)
            p = target.normal_form(p)
            gdeg = source.gen_degrees[source.gen_names.index(gname)]
            pdeg = target.poly_degree(p)
            if pdeg is not None and pdeg != gdeg:
                raise MapNotWellDefined(
                    f"{name}: image of {gname} has degree {pdeg}, expected {gdeg}"
                )
            imgs[gname] = p
        missing = set(source.gen_names) - set(imgs)
        if missing:
            raise MapNotWellDefined(f"{name}: no image for generators {sorted(missing)}")
        self.images = imgs
        self._power_cache = {}
        for r in source.relations:
            value = self.apply(r)
            if value:
                raise MapNotWellDefined(
                    f"{name}: relation {source.format(r)} maps to {target.format(value)}"
                )

    def _gen_power(self, gidx: int, k: int) -> Poly:
        key = (gidx, k)
        if key not in self._power_cache:
            base = self.images[self.source.gen_names[gidx]]
            self._power_cache[key] = self.target.power(base, k)
        return self._power_cache[key]

    def apply(self, p: Poly) -> Poly:
        out = frozenset()
        for m in p:
            term = self.target.one()
            for gidx, e in enumerate(m):
                if e:
                    term = self.target.mul(term, self._gen_power(gidx, e))
            out = out ^ term
        return self.target.normal_form(out)


# -- plain-text corpus loader -------------------------------------------------

def load_algebra(text: str, name: str) -> PresentedAlgebra:
    """Parse ``gen <name> <deg>`` and ``rel <polynomial>`` lines.

    Generator precedence is the listing order (first gen is highest).
    """
    gens, rels = [], []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("gen "):
            _, gname, deg = line.split()
            gens.append((gname, int(deg)))
        elif line.startswith("rel "):
            rels.append(line[4:].strip())
        else:
            raise ValueError(f"bad presentation line: {raw!r}")
    return PresentedAlgebra(name, gens, rels)


def load_map_tables(text: str) -> dict:
    """Parse ``map src -> tgt: gen = poly`` lines into nested dicts."""
    out = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not line.startswith("map "):
            raise ValueError(f"bad map line: {raw!r}")
        head, assign = line[4:].split(":", 1)
        src, tgt = (part.strip() for part in head.split("->"))
        gname, value = (part.strip() for part in assign.split("=", 1))
        out.setdefault((src, tgt), {})[gname] = value
    return out
