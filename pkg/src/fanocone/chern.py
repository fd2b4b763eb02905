"""Chern characters of ambient spaces and of their complete intersections.

For projective and weighted projective spaces every ch_s is a rational
multiple of H^s, so components are stored as Fractions.  On Grassmannians the
tangent bundle is S^∨ ⊗ Q and ch(T) = ch(S^∨)·ch(Q), with c_i(S^∨) = σ_{1^i}
and c_i(Q) = σ_i; components are CohomologyClass values.  Isotropic
Grassmannians only expose ch_1.

Positivity follows the convention: strictly positive pairing against every
effective generator → positive, non-negative → nef.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence, Union

from .errors import DomainError
from .grassmann import CohomologyClass, GrassmannSpace, intersection_number, hyperplane_factors, unit
from .isotropic import IsotropicSpace

MAX_DEGREE = 3

POSITIVE = "positive"
NEF = "nef-not-positive"
FAILS = "fails"


@dataclass(frozen=True)
class Projective:
    N: int

    def __post_init__(self):
        if self.N < 1:
            raise DomainError(f"P^{self.N} is not a projective space of positive dimension")

    @property
    def dim(self) -> int:
        return self.N

    @property
    def weights(self) -> tuple:
        return (1,) * (self.N + 1)

    def __str__(self):
        return f"P{self.N}"


@dataclass(frozen=True)
class WeightedProjective:
    weights: tuple

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if len(w) < 2 or any(x < 1 for x in w):
            raise DomainError(f"bad weights {w}")
        object.__setattr__(self, "weights", tuple(sorted(w, reverse=True)))

    @property
    def dim(self) -> int:
        return len(self.weights) - 1

    def __str__(self):
        return "P(" + ",".join(map(str, self.weights)) + ")"


AmbientSpace = Union[Projective, WeightedProjective, GrassmannSpace, IsotropicSpace]


def ambient_c1(space: AmbientSpace) -> int:
    """c_1 as a multiple of the hyperplane class (H, or σ_1 for Grassmannian families)."""
    if isinstance(space, (Projective, WeightedProjective)):
        return sum(space.weights)
    if isinstance(space, GrassmannSpace):
        return space.s
    if isinstance(space, IsotropicSpace):
        return space.c1
    raise DomainError(f"unsupported ambient space {space!r}")


@dataclass(frozen=True)
class CIVariety:
    """A complete intersection of multidegree ``degrees`` in ``ambient``."""

    ambient: AmbientSpace
    degrees: tuple

    def __post_init__(self):
        d = tuple(sorted(int(x) for x in self.degrees))
        if any(x < 1 for x in d):
            raise DomainError(f"degrees must be positive, got {d}")
        object.__setattr__(self, "degrees", d)
        if self.dim < 1:
            raise DomainError(f"{self} has dimension {self.dim}")

    @property
    def codim(self) -> int:
        return len(self.degrees)

    @property
    def dim(self) -> int:
        return self.ambient.dim - self.codim

    @property
    def c1(self) -> int:
        """c_1(X) as a multiple of the restricted hyperplane class (adjunction)."""
        return ambient_c1(self.ambient) - sum(self.degrees)

    def __str__(self):
        return f"{self.ambient}:(" + ",".join(map(str, self.degrees)) + ")"


@dataclass(frozen=True)
class ChernVector:
    """ch_1..ch_k; Fractions mean multiples of H^s, classes live on a Grassmannian."""

    components: dict = field(default_factory=dict)

    def __getitem__(self, s: int):
        return self.components[s]

    def __iter__(self):
        return iter(sorted(self.components))


def _newton_ch(chern: Sequence[CohomologyClass], rank: int, up_to: int) -> list[CohomologyClass]:
    """ch_0..ch_up_to from Chern classes c_1, c_2, ... via Newton's identities."""
    space = chern[0].space

    def c(i):
        if i == 0:
            return unit(space)
        if i <= len(chern):
            return chern[i - 1]
        return CohomologyClass.zero(space, i)

    power_sums = [None]
    for k in range(1, up_to + 1):
        p = c(k).scale((-1) ** (k - 1) * k)
        for i in range(1, k):
            p = p + (c(k - i) * power_sums[i]).scale((-1) ** (k - 1 + i))
        power_sums.append(p)
    out = [unit(space).scale(rank)]
    out += [power_sums[k].scale(Fraction(1, factorial(k))) for k in range(1, up_to + 1)]
    return out


def _grassmann_ch(space: GrassmannSpace, up_to: int) -> dict[int, CohomologyClass]:
    r, q = space.r, space.s - space.r
    dual_sub = [CohomologyClass.schubert(space, (1,) * i) for i in range(1, r + 1)]
    quotient = [CohomologyClass.schubert(space, (i,)) for i in range(1, q + 1)]
    a = _newton_ch(dual_sub, r, up_to)
    b = _newton_ch(quotient, q, up_to)
    out = {}
    for k in range(1, up_to + 1):
        total = CohomologyClass.zero(space, k)
        for i in range(k + 1):
            total = total + a[i] * b[k - i]
        out[k] = total
    return out


def chern_character_ambient(space: AmbientSpace, up_to: int = 2) -> ChernVector:
    """ch_1..ch_up_to of the tangent bundle of ``space``."""
    if not 1 <= up_to <= MAX_DEGREE:
        raise NotImplementedError(f"Chern characters are available up to degree {MAX_DEGREE}")
    if isinstance(space, (Projective, WeightedProjective)):
        return ChernVector({s: Fraction(sum(w**s for w in space.weights), factorial(s))
                            for s in range(1, up_to + 1)})
    if isinstance(space, GrassmannSpace):
        return ChernVector(_grassmann_ch(space, up_to))
    if isinstance(space, IsotropicSpace):
        if up_to > 1:
            raise NotImplementedError(f"only ch_1 is available for {space}")
        return ChernVector({1: Fraction(space.c1)})
    raise NotImplementedError(f"unsupported ambient space {space!r}")


def _hyperplane_power(space: GrassmannSpace, s: int) -> CohomologyClass:
    return CohomologyClass.schubert(space, (1,)) ** s


def chern_character_ci(X: CIVariety, up_to: int = 2) -> ChernVector:
    """ch_s(X) = ch_s(ambient) - Σ d_i^s / s! · H^s, kept on the ambient."""
    amb = chern_character_ambient(X.ambient, up_to)
    out = {}
    for s in amb:
        correction = Fraction(sum(d**s for d in X.degrees), factorial(s))
        if isinstance(X.ambient, GrassmannSpace):
            out[s] = amb[s] - _hyperplane_power(X.ambient, s).scale(correction)
        else:
            out[s] = amb[s] - correction
    return ChernVector(out)


def pair_ch2_with_surface(X: CIVariety, surface: CohomologyClass) -> Fraction:
    """ch_2(X) · S on X, for S = surface|_X; a negative value certifies X is not weak 2-Fano."""
    if not isinstance(X.ambient, GrassmannSpace):
        raise DomainError("surface pairings are computed on Grassmannian ambients only")
    if surface.space != X.ambient:
        raise DomainError(f"surface lives on {surface.space}, X on {X.ambient}")
    ch2 = chern_character_ci(X, 2)[2]
    if ch2.codim + surface.codim + X.codim != X.ambient.dim:
        raise DomainError(
            f"codimensions 2 + {surface.codim} + {X.codim} do not add up to dim {X.ambient} = {X.ambient.dim}"
        )
    return intersection_number([ch2, surface, *hyperplane_factors(X.ambient, X.degrees)])


def schubert_pairings(X: CIVariety, s: int = 2) -> dict:
    """ch_s(X) paired with every restricted Schubert class of complementary dimension on X."""
    if not isinstance(X.ambient, GrassmannSpace):
        raise DomainError("Schubert pairings need a Grassmannian ambient")
    G = X.ambient
    chs = chern_character_ci(X, s)[s]
    factors = hyperplane_factors(G, X.degrees)
    return {lam: intersection_number([chs, G.schubert(*lam), *factors]) for lam in G.basis(X.dim - s)}


def _verdict(value) -> str:
    if value > 0:
        return POSITIVE
    if value == 0:
        return NEF
    return FAILS


def projective_weak_kfano_test(n: int, degrees: Sequence[int], k: int) -> str:
    """Sign test for ch_k of an n-dimensional complete intersection in P^{n+c}.

    ch_k(X) = (n + c + 1 - Σ d_i^k)/k! · H^k, so the verdict is decided by
    comparing the power sum Σ d_i^k with n + c + 1.
    """
    c = len(degrees)
    return _verdict(n + c + 1 - sum(d**k for d in degrees))


def weighted_ch2(weights: Sequence[int], degrees: Sequence[int]) -> Fraction:
    """Coefficient of H^2 in ch_2 of a complete intersection in P(weights)."""
    return Fraction(sum(w * w for w in weights) - sum(d * d for d in degrees), 2)
