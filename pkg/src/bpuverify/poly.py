"""Sparse multivariate polynomials with exact coefficients over Z or Z/m.

A polynomial is a dict mapping exponent tuples (one entry per ring variable)
to nonzero integer coefficients.  Coefficients over Z are plain Python ints,
so there is no overflow anywhere; over Z/m they are kept as canonical
representatives in [0, m).

Every value is immutable after construction and every operation is a pure
function, so polynomials can be shared freely between workers.

Text syntax (used by the CLI, data files and golden fixtures): terms joined
by `+` / `-`, `*` between factors (optional), `^` for exponents, variable
names like ``v1``, ``s1``, ``c1``, ``w2``, ``wp2``, ``y2``, ``x3``, ``eta``.
Example: ``8*s2 - 3*s1^2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

Exponents = tuple  # tuple[int, ...], one entry per ring variable


class RingMismatchError(ValueError):
    """Raised when operands live in different rings."""


@dataclass(frozen=True)
class Ring:
    """A coefficient/variable context: named variables with integer weights.

    ``modulus`` 0 means coefficients in Z; m >= 2 means Z/m.
    """

    variables: tuple
    weights: tuple
    modulus: int = 0

    def __post_init__(self):
        if len(self.variables) != len(self.weights):
            raise ValueError("one weight per variable required")
        if self.modulus < 0 or self.modulus == 1:
            raise ValueError("modulus must be 0 (for Z) or >= 2")
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive")

    @property
    def nvars(self):
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c: int) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, name: str) -> "Polynomial":
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return Polynomial(self, {tuple(e): 1})

    def monomial(self, exponents: Iterable, coeff: int = 1) -> "Polynomial":
        return Polynomial(self, {tuple(exponents): coeff})

    def degree_of(self, exponents: Exponents) -> int:
        return sum(e * w for e, w in zip(exponents, self.weights))

    def basis(self, degree: int) -> "GradedBasis":
        return monomial_basis(degree, self.nvars, self.weights)


def _lex_key(exponents: Exponents):
    return exponents


class Polynomial:
    """Immutable sparse polynomial over a :class:`Ring`."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Mapping):
        canonical = {}
        m = ring.modulus
        for exp, c in terms.items():
            if len(exp) != ring.nvars:
                raise ValueError("exponent tuple length mismatch")
            if m:
                c %= m
            if c:
                canonical[tuple(exp)] = c
        self.ring = ring
        self.terms = canonical

    # -- queries ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def homogeneous_degree(self):
        """Weighted degree if homogeneous; None for the zero polynomial.

        Raises ValueError on inhomogeneous input: the zero polynomial is the
        only element whose degree is undefined rather than an error.
        """
        if not self.terms:
            return None
        degs = {self.ring.degree_of(e) for e in self.terms}
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous polynomial, degrees {sorted(degs)}")
        return degs.pop()

    def coefficient(self, exponents: Iterable) -> int:
        return self.terms.get(tuple(exponents), 0)

    def graded_part(self, degree: int) -> "Polynomial":
        return Polynomial(
            self.ring,
            {e: c for e, c in self.terms.items() if self.ring.degree_of(e) == degree},
        )

    # -- arithmetic ------------------------------------------------------
    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(
                f"ring mismatch: {self.ring.variables}/{self.ring.modulus} "
                f"vs {other.ring.variables}/{other.ring.modulus}"
            )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.ring, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            return Polynomial(self.ring, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- calculus / maps --------------------------------------------------
    def partial_derivative(self, index: int) -> "Polynomial":
        """Formal d/d(variable index); coefficient picks up the old exponent."""
        if not 0 <= index < self.ring.nvars:
            raise IndexError(f"variable index {index} out of range")
        out = {}
        for e, c in self.terms.items():
            k = e[index]
            if k == 0:
                continue
            e2 = e[:index] + (k - 1,) + e[index + 1 :]
            out[e2] = out.get(e2, 0) + c * k
        return Polynomial(self.ring, out)

    def substitute(self, images: Mapping) -> "Polynomial":
        """Evaluate the algebra homomorphism sending each variable to its image.

        ``images`` maps variable names to polynomials of one common target
        ring; every variable actually occurring must have an image.
        """
        target = None
        for img in images.values():
            if target is None:
                target = img.ring
            elif img.ring != target:
                raise RingMismatchError("substitution images live in different rings")
        used = [i for i in range(self.ring.nvars) if any(e[i] for e in self.terms)]
        for i in used:
            if self.ring.variables[i] not in images:
                raise KeyError(f"no image for variable {self.ring.variables[i]!r}")
        if target is None:
            if not used and self.terms:
                raise KeyError("constant substitution requires a target ring image")
            target = self.ring
        out = target.zero()
        for e, c in self.terms.items():
            term = target.const(c)
            for i, k in enumerate(e):
                if k:
                    term = term * images[self.ring.variables[i]] ** k
            out = out + term
        return out

    def reduce_coefficients(self, m: int) -> "Polynomial":
        """Image in the same variables over Z/m (zero terms dropped)."""
        if m < 2:
            raise ValueError("modulus must be >= 2")
        if self.ring.modulus:
            raise ValueError("reduce_coefficients expects a Z-coefficient input")
        target = Ring(self.ring.variables, self.ring.weights, m)
        return Polynomial(target, self.terms)

    # -- formatting --------------------------------------------------------
    def sorted_terms(self):
        """Terms in graded-lex descending order (the canonical print order)."""
        return sorted(
            self.terms.items(),
            key=lambda item: (self.ring.degree_of(item[0]), _lex_key(item[0])),
            reverse=True,
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            factors = []
            for name, k in zip(self.ring.variables, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


@dataclass(frozen=True)
class GradedBasis:
    """All monomials of one weighted degree, in a fixed deterministic order."""

    degree: int
    monomials: tuple = field(default_factory=tuple)

    def __len__(self):
        return len(self.monomials)

    def index(self, exponents: Exponents) -> int:
        return self.monomials.index(tuple(exponents))


def monomial_basis(degree: int, nvars: int, weights) -> GradedBasis:
    """Enumerate all exponent tuples of the given weighted degree.

    Deterministic order: lexicographic descending on the exponent tuple
    (all entries share the degree, so this is graded-lex).
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    weights = tuple(weights)
    if len(weights) != nvars:
        raise ValueError("one weight per variable required")
    found = []

    def rec(i, remaining, prefix):
        if i == nvars:
            if remaining == 0:
                found.append(tuple(prefix))
            return
        w = weights[i]
        for k in range(remaining // w, -1, -1):
            rec(i + 1, remaining - k * w, prefix + [k])

    rec(0, degree, [])
    found.sort(key=_lex_key, reverse=True)
    return GradedBasis(degree, tuple(found))


# -- text syntax -----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z]+\d*)|(?P<op>[-+*^()]))")


def _tokenize(text: str):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ValueError(f"bad polynomial syntax near {text[pos:pos+12]!r}")
            break
        pos = m.end()
        if m.lastgroup == "num":
            out.append(("num", int(m.group("num"))))
        elif m.lastgroup == "name":
            out.append(("name", m.group("name")))
        else:
            out.append(("op", m.group("op")))
    return out


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """Parse the plain-text polynomial syntax into ``ring``."""
    tokens = _tokenize(text)
    result = ring.zero()
    i = 0
    n = len(tokens)
    while i < n:
        sign = 1
        while i < n and tokens[i] == ("op", "+") or i < n and tokens[i] == ("op", "-"):
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        if i >= n:
            if sign != 1 or result.is_zero() and not tokens:
                raise ValueError("dangling sign in polynomial text")
            break
        coeff = sign
        exps = [0] * ring.nvars
        saw_factor = False
        while i < n:
            kind, val = tokens[i]
            if kind == "num":
                coeff *= val
                i += 1
            elif kind == "name":
                idx = ring.index(val)
                i += 1
                power = 1
                if i < n and tokens[i] == ("op", "^"):
                    i += 1
                    if i >= n or tokens[i][0] != "num":
                        raise ValueError("exponent must be a literal integer")
                    power = tokens[i][1]
                    i += 1
                exps[idx] += power
            elif (kind, val) == ("op", "*"):
                i += 1
                continue
            else:
                break
            saw_factor = True
        if not saw_factor:
            raise ValueError("empty term in polynomial text")
        result = result + ring.monomial(exps, coeff)
    return result
