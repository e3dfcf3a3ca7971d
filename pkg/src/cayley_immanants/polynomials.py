"""Sparse exact-integer polynomials in the group variables x_g.

A monomial is an exponent tuple indexed by elements(spec) order; a
polynomial maps monomials to nonzero arbitrary-precision integers.  Every
immanant produced by the engine lives here.  Values are immutable by
convention: all operations return new objects.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .groups import GroupSpec, add_table

Monomial = tuple[int, ...]


def monomial_of_perm(spec: GroupSpec, images: tuple[int, ...]) -> Monomial:
    """Exponent vector of prod_a x_{a + sigma(a)} for sigma given as indices."""
    n = spec.order
    if sorted(images) != list(range(n)):
        raise ValueError("images do not form a permutation of the group elements")
    table = add_table(spec)
    exp = [0] * n
    for u in range(n):
        exp[table[u][images[u]]] += 1
    return tuple(exp)


@dataclass(frozen=True)
class RationalSpecialization:
    """An exact-rational value for every x_g, indexed by element order."""

    group: GroupSpec
    values: tuple[Fraction, ...]
    seed: int | None = None

    def __post_init__(self) -> None:
        if len(self.values) != self.group.order:
            raise ValueError("specialization must assign a value to every element")

    @classmethod
    def from_ints(cls, group: GroupSpec, values, seed: int | None = None):
        return cls(group, tuple(Fraction(v) for v in values), seed)


@dataclass(frozen=True)
class GroupPolynomial:
    group: GroupSpec
    terms: dict[Monomial, int] = field(default_factory=dict)

    @classmethod
    def from_terms(cls, group: GroupSpec, terms) -> "GroupPolynomial":
        """Build from any monomial -> coefficient mapping, dropping zeros."""
        n = group.order
        clean: dict[Monomial, int] = {}
        for mono, coeff in dict(terms).items():
            if len(mono) != n:
                raise ValueError(f"exponent vector length {len(mono)} != group order {n}")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono!r}")
            if coeff:
                clean[tuple(mono)] = int(coeff)
        return cls(group, clean)

    @classmethod
    def zero(cls, group: GroupSpec) -> "GroupPolynomial":
        return cls(group, {})

    @property
    def support_size(self) -> int:
        return len(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> frozenset[Monomial]:
        return frozenset(self.terms)

    def coefficient(self, mono: Monomial) -> int:
        return self.terms.get(tuple(mono), 0)

    def add_scaled(self, other: "GroupPolynomial", scale: int = 1) -> "GroupPolynomial":
        """self + scale * other, dropping cancelled terms."""
        if other.group != self.group:
            raise ValueError(
                f"cannot combine polynomials over {self.group} and {other.group}"
            )
        merged = dict(self.terms)
        for mono, coeff in other.terms.items():
            new = merged.get(mono, 0) + scale * coeff
            if new:
                merged[mono] = new
            else:
                merged.pop(mono, None)
        return GroupPolynomial(self.group, merged)

    def __add__(self, other: "GroupPolynomial") -> "GroupPolynomial":
        return self.add_scaled(other, 1)

    def __sub__(self, other: "GroupPolynomial") -> "GroupPolynomial":
        return self.add_scaled(other, -1)

    def evaluate(self, rho: RationalSpecialization) -> Fraction:
        """Exact value at the specialization; no floating point anywhere."""
        if rho.group != self.group:
            raise ValueError("specialization is for a different group")
        vals = rho.values
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            term = Fraction(coeff)
            for i, e in enumerate(mono):
                if e:
                    term *= vals[i] ** e
            total += term
        return total

    def canonical_terms(self) -> list[tuple[Monomial, int]]:
        """Terms sorted lexicographically on exponent vectors."""
        return sorted(self.terms.items())

    def to_json_dict(self) -> dict:
        return {
            "group": self.group.name,
            "terms": [
                {"exp": list(mono), "coeff": str(coeff)}
                for mono, coeff in self.canonical_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "GroupPolynomial":
        from .groups import parse_group

        group = parse_group(data["group"])
        terms = {tuple(t["exp"]): int(t["coeff"]) for t in data["terms"]}
        return cls.from_terms(group, terms)
