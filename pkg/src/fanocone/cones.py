"""Polyhedrality verdicts for cones of pseudoeffective k-cycles.

Two rules are used.  On a rational homogeneous space the Schubert classes of
dimension k span the effective cone and are dual to the codimension-k ones,
so the cone is simplicial with one ray per Schubert class.  Otherwise, a
Betti number b_{2k} of 1 (resp. 2) bounds the rank of N_k and gives a
half-line (resp. at most two rays).  N_k is taken modulo torsion throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grassmann import GrassmannSpace
from .isotropic import IsotropicSpace, betti_numbers
from .weyl import ParabolicQuotient, coxeter, poincare_polynomial

HALF_LINE = "half-line"
TWO_RAYS = "at-most-two-rays"
SIMPLICIAL = "simplicial"
UNKNOWN = "unknown"

CITE_HOMOGENEOUS = "Prop:rational-homogeneous-polyhedral"
CITE_RANK = "Lemma:rank-bound"
CITE_TORSION = "assumes:N_k-modulo-torsion"


@dataclass(frozen=True)
class GeneralizedFlag:
    """G/P given by a Coxeter type, its rank and the crossed (non-Θ) nodes."""

    kind: str
    rank: int
    crossed: frozenset

    def __str__(self):
        nodes = ",".join(map(str, sorted(self.crossed)))
        return f"{self.kind.upper()}{self.rank}/P{nodes}"


@dataclass(frozen=True)
class BettiData:
    """A variety known only through one Betti number b_{2k}."""

    label: str
    b: int


@dataclass(frozen=True)
class ConeReport:
    rank_bound: int | None
    verdict: str
    rays: int | None
    justification: tuple

    def __post_init__(self):
        if self.verdict == HALF_LINE and self.rank_bound != 1:
            raise ValueError("a half-line has rank 1")
        if self.verdict == TWO_RAYS and self.rank_bound != 2:
            raise ValueError("at-most-two-rays needs rank bound 2")

    def __str__(self):
        if self.verdict == SIMPLICIAL:
            return f"simplicial, {self.rays} ray{'s' if self.rays != 1 else ''}"
        return self.verdict


def homogeneous_betti(space) -> tuple | None:
    """(b_0, b_2, ...) for the homogeneous spaces this package models, else None."""
    if isinstance(space, GrassmannSpace):
        return tuple(space.betti(k) for k in range(space.dim + 1))
    if isinstance(space, IsotropicSpace):
        return betti_numbers(space)
    if isinstance(space, GeneralizedFlag):
        q = ParabolicQuotient.crossing(coxeter(space.kind, space.rank), space.crossed)
        return tuple(poincare_polynomial(q))
    return None


def cone_report(space, k: int) -> ConeReport:
    """Verdict on the cone of pseudoeffective k-cycles (k = dimension of the cycles)."""
    if isinstance(space, BettiData):
        if space.b == 1:
            return ConeReport(1, HALF_LINE, 1, (CITE_RANK, CITE_TORSION))
        if space.b == 2:
            return ConeReport(2, TWO_RAYS, None, (CITE_RANK, CITE_TORSION))
        return ConeReport(space.b if space.b > 0 else None, UNKNOWN, None, (CITE_TORSION,))
    betti = homogeneous_betti(space)
    if betti is None:
        return ConeReport(None, UNKNOWN, None, ())
    dim = len(betti) - 1
    if not 0 <= k <= dim:
        return ConeReport(None, UNKNOWN, None, (f"k={k} outside 0..{dim}",))
    # Schubert classes of dimension k are those of codimension dim - k
    n = betti[dim - k]
    return ConeReport(n, SIMPLICIAL, n, (CITE_HOMOGENEOUS, CITE_TORSION))
