"""Integral cohomology of the Grassmannian G(r, s) in the Schubert basis.

Classes of a complete intersection X = G ∩ (d_1) ∩ ... ∩ (d_c) are never
built as elements of H*(X).  A pairing on X is computed upstairs by
appending the factors d_i·σ_1, which is what the restriction formula
``α|_X · β|_X = α · β · Π d_i σ_1`` says.  This keeps torsion in H*(X) out
of the picture.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from . import linalg
from .errors import DomainError
from .partitions import BoxShape, Partition, complement, lr_coefficient, partitions_in_box


@dataclass(frozen=True)
class GrassmannSpace:
    """G(r, s): r-dimensional subspaces of C^s.

    Normalized so that r <= s - r; G(r, s) and G(s - r, s) are isomorphic and
    the smaller representative is kept.
    """

    r: int
    s: int

    def __post_init__(self):
        r, s = self.r, self.s
        if not (2 <= r <= s - 2):
            raise DomainError(f"G({r},{s}) needs 2 <= r <= s-2")
        if 2 * r > s:
            object.__setattr__(self, "r", s - r)

    @property
    def dim(self) -> int:
        return self.r * (self.s - self.r)

    @property
    def box(self) -> BoxShape:
        return BoxShape(self.r, self.s - self.r)

    def basis(self, codim: int) -> list[Partition]:
        return partitions_in_box(codim, self.box)

    def betti(self, k: int) -> int:
        """b_{2k}(G(r, s))."""
        return len(self.basis(k))

    def schubert(self, *parts: int) -> "CohomologyClass":
        return CohomologyClass.schubert(self, parts)

    @property
    def point(self) -> Partition:
        return self.box.full

    def __str__(self):
        return f"G({self.r},{self.s})"


@dataclass(frozen=True)
class CohomologyClass:
    """A rational combination of Schubert classes of one codimension."""

    space: GrassmannSpace
    codim: int
    coeffs: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, c in self.coeffs.items():
            lam = Partition(lam)
            c = Fraction(c)
            if c == 0:
                continue
            if lam.weight != self.codim:
                raise DomainError(f"σ{tuple(lam)} has codimension {lam.weight}, not {self.codim}")
            if not lam.fits(self.space.r, self.space.s - self.space.r):
                raise DomainError(f"σ{tuple(lam)} does not fit in {self.space}")
            clean[lam] = clean.get(lam, Fraction(0)) + c
        clean = {lam: c for lam, c in sorted(clean.items(), reverse=True) if c != 0}
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def schubert(cls, space: GrassmannSpace, parts: Iterable[int]) -> "CohomologyClass":
        lam = Partition(parts)
        return cls(space, lam.weight, {lam: Fraction(1)})

    @classmethod
    def zero(cls, space: GrassmannSpace, codim: int) -> "CohomologyClass":
        return cls(space, codim, {})

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, lam: Iterable[int]) -> Fraction:
        return self.coeffs.get(Partition(lam), Fraction(0))

    def __add__(self, other):
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        if other.space != self.space:
            raise DomainError(f"classes live on different spaces: {self.space} vs {other.space}")
        if other.codim != self.codim:
            raise DomainError(f"cannot add classes of codimension {self.codim} and {other.codim}")
        coeffs = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            coeffs[lam] = coeffs.get(lam, Fraction(0)) + c
        return CohomologyClass(self.space, self.codim, coeffs)

    def __neg__(self):
        return CohomologyClass(self.space, self.codim, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor) -> "CohomologyClass":
        factor = Fraction(factor)
        return CohomologyClass(self.space, self.codim, {k: factor * v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, CohomologyClass):
            return product(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        result = unit(self.space)
        for _ in range(n):
            result = product(result, self)
        return result

    def __str__(self):
        from .parsing import format_class

        return format_class(self)


def unit(space: GrassmannSpace) -> CohomologyClass:
    return CohomologyClass.schubert(space, ())


@lru_cache(maxsize=None)
def _schubert_product(space: GrassmannSpace, lam: Partition, mu: Partition) -> tuple:
    out = []
    for nu in space.basis(lam.weight + mu.weight):
        if not (nu.contains(lam) and nu.contains(mu)):
            continue
        c = lr_coefficient(lam, mu, nu)
        if c:
            out.append((nu, c))
    return tuple(out)


def product(a: CohomologyClass, b: CohomologyClass) -> CohomologyClass:
    """Cup product; Schubert classes whose index leaves the box vanish."""
    if a.space != b.space:
        raise DomainError(f"classes live on different spaces: {a.space} vs {b.space}")
    codim = a.codim + b.codim
    coeffs: dict[Partition, Fraction] = {}
    if codim <= a.space.dim:
        for lam, x in a.coeffs.items():
            for mu, y in b.coeffs.items():
                for nu, c in _schubert_product(a.space, lam, mu):
                    coeffs[nu] = coeffs.get(nu, Fraction(0)) + x * y * c
    return CohomologyClass(a.space, codim, coeffs)


def _degree(a: CohomologyClass, b: CohomologyClass) -> Fraction:
    # only the point-class coefficient of a·b is needed
    top = a.space.point
    total = Fraction(0)
    for lam, x in a.coeffs.items():
        for mu, y in b.coeffs.items():
            c = lr_coefficient(lam, mu, top)
            if c:
                total += x * y * c
    return total


def intersection_number(classes: Sequence[CohomologyClass]) -> Fraction:
    """Degree of the product of ``classes``; their codimensions must sum to dim G."""
    if not classes:
        raise DomainError("intersection_number needs at least one class")
    space = classes[0].space
    for c in classes:
        if c.space != space:
            raise DomainError(f"classes live on different spaces: {space} vs {c.space}")
    total = sum(c.codim for c in classes)
    if total != space.dim:
        raise DomainError(f"codimensions sum to {total}, but dim {space} = {space.dim}")
    if len(classes) == 1:
        return classes[0].coefficient(space.point)
    acc = classes[0]
    for c in classes[1:-1]:
        acc = product(acc, c)
    return _degree(acc, classes[-1])


def hyperplane_factors(space: GrassmannSpace, degrees: Iterable[int]) -> list[CohomologyClass]:
    """The classes d_i·σ_1 cutting out a complete intersection of type (d_1, ..., d_c)."""
    sigma1 = CohomologyClass.schubert(space, (1,))
    return [sigma1.scale(d) for d in degrees]


def restricted_pairing(a: CohomologyClass, b: CohomologyClass, degrees: Iterable[int]) -> Fraction:
    """``a|_X · b|_X`` on the complete intersection X of the given multidegree."""
    return intersection_number([a, b, *hyperplane_factors(a.space, degrees)])


def poincare_dual(lam: Iterable[int], space: GrassmannSpace) -> Partition:
    """The index ν with σ_lam·σ_ν = [pt]; the rotated complement in the box."""
    lam = Partition(lam)
    if not lam.fits(space.r, space.s - space.r):
        raise DomainError(f"σ{tuple(lam)} does not fit in {space}")
    return complement(lam, space.box)


def solve_class_from_pairings(
    space: GrassmannSpace,
    basis_codim: int,
    ci_degrees: Sequence[int],
    constraints: Sequence[tuple[CohomologyClass, Fraction]],
    basis: Sequence[Iterable[int]] | None = None,
) -> CohomologyClass:
    """Find the class Σ a_λ σ_λ|_X whose pairings on X match ``constraints``.

    ``basis`` defaults to every Schubert class of codimension ``basis_codim``;
    pass a subset when only some restrictions form a basis of H*(X) modulo
    torsion (e.g. {σ_4, σ_{2,2}} on a (1,1) section of G(2,6)).
    """
    if basis is None:
        basis = space.basis(basis_codim)
    basis = [Partition(b) for b in basis]
    for b in basis:
        if b.weight != basis_codim:
            raise DomainError(f"basis element σ{tuple(b)} is not of codimension {basis_codim}")
    classes = [CohomologyClass.schubert(space, b) for b in basis]
    gram = [[restricted_pairing(e, c, ci_degrees) for e in classes] for c, _ in constraints]
    values = [Fraction(v) for _, v in constraints]
    x = linalg.solve(gram, values)
    return CohomologyClass(space, basis_codim, dict(zip(basis, x)))
