"""Schubert classes of orthogonal and symplectic Grassmannians.

Classes are indexed by pairs (λ, μ): λ a strictly decreasing sequence of
length t, μ a subsequence of the complementary sequence λ̃ of length r - t.
For orthogonal Grassmannians with s even, λ may be padded to λ′ by one extra
entry b before positions are measured.  The codimension is

    codim = Σ λ′ + dis(λ, μ),   dis(λ, μ) = Σ_j (m - r + j - i_j),

where i_1 < ... < i_r are the positions of (λ, μ) inside the concatenation
(λ′, λ̃′).  Conventions: s = 2m + 1 - ε for OG, s = 2m for SG; the
symplectic case uses the exclusion value m and behaves like ε = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .errors import DomainError, InvalidIndex

ORTHOGONAL = "orthogonal"
SYMPLECTIC = "symplectic"


@dataclass(frozen=True)
class IsotropicSpace:
    """OG(r, s) or SG(r, s).

    For OG(m, 2m) the variety has two isomorphic components and only one of
    them (the plus component, parity t ≡ m mod 2) is modelled.
    """

    family: str
    r: int
    s: int
    plus_component: bool = False

    def __post_init__(self):
        if self.family not in (ORTHOGONAL, SYMPLECTIC):
            raise DomainError(f"unknown isotropic family {self.family!r}")
        if self.family == SYMPLECTIC and self.s % 2:
            raise DomainError(f"SG({self.r},{self.s}) needs s even")
        if not (2 <= self.r <= self.m):
            raise DomainError(f"need 2 <= r <= m = {self.m}, got r = {self.r}")
        spinor = self.family == ORTHOGONAL and self.s == 2 * self.r
        object.__setattr__(self, "plus_component", spinor)

    @classmethod
    def orthogonal(cls, r: int, s: int) -> "IsotropicSpace":
        return cls(ORTHOGONAL, r, s)

    @classmethod
    def symplectic(cls, r: int, s: int) -> "IsotropicSpace":
        return cls(SYMPLECTIC, r, s)

    @property
    def m(self) -> int:
        return self.s // 2

    @property
    def eps(self) -> int:
        """ε with s = 2m + 1 - ε; always 0 for the symplectic family."""
        if self.family == SYMPLECTIC:
            return 0
        return 2 * self.m + 1 - self.s

    @property
    def dim(self) -> int:
        r, s = self.r, self.s
        if self.family == ORTHOGONAL:
            return r * (2 * s - 3 * r - 1) // 2
        return r * (2 * s - 3 * r + 1) // 2

    @property
    def c1(self) -> int:
        """Coefficient of σ_1 in c_1."""
        if self.family == ORTHOGONAL:
            return self.s - self.r - 1
        return self.s - self.r + 1

    def __str__(self):
        if self.family == SYMPLECTIC:
            return f"SG({self.r},{self.s})"
        return f"OG+({self.r},{self.s})" if self.plus_component else f"OG({self.r},{self.s})"


@dataclass(frozen=True)
class IsotropicIndex:
    lam: tuple
    mu: tuple
    lam_tilde: tuple
    lam_prime: tuple
    lam_prime_tilde: tuple
    positions: tuple
    discrepancy: int
    codim: int

    @property
    def t(self) -> int:
        return len(self.lam)


def _exclusion(space: IsotropicSpace) -> int:
    return space.m - space.eps


def _check_lambda(lam: Sequence[int], space: IsotropicSpace):
    hi = space.m - space.eps
    lo = -space.eps
    if any(a <= b for a, b in zip(lam, lam[1:])):
        raise InvalidIndex(f"λ = {tuple(lam)} is not strictly decreasing")
    if lam and not (hi >= lam[0] and lam[-1] > lo):
        raise InvalidIndex(f"λ = {tuple(lam)} leaves the range ({lo}, {hi}]")
    if len(lam) > space.r:
        raise InvalidIndex(f"λ = {tuple(lam)} is longer than r = {space.r}")


def lambda_tilde(lam: Sequence[int], m: int, eps: int) -> tuple:
    """The strictly decreasing sequence in [0, m-1] of length m - t avoiding m - ε - λ_i.

    Built greedily from the top; an exhaustive search agrees for small m.
    """
    lam = tuple(lam)
    banned = {m - eps - a for a in lam}
    out = tuple(v for v in range(m - 1, -1, -1) if v not in banned)
    if len(out) != m - len(lam):
        raise InvalidIndex(f"no complement of length {m - len(lam)} for λ = {lam} (m={m}, ε={eps})")
    return out


def lambda_prime(lam: Sequence[int], mu: Sequence[int], space: IsotropicSpace) -> tuple:
    """λ′: λ itself, or λ ∪ {b} when s is even and t ≢ m (mod 2)."""
    lam = tuple(lam)
    m = space.m
    if space.family == SYMPLECTIC or space.eps == 0 or (len(lam) - m) % 2 == 0:
        return lam
    for a in range(m):
        if a not in lam and all(a + x != m - 1 for x in mu):
            return tuple(sorted(lam + (a,), reverse=True))
    raise InvalidIndex(f"no admissible b for λ = {lam}, μ = {tuple(mu)}")


def _positions(sub: Sequence[int], seq: Sequence[int], offset: int) -> list[int]:
    where = {v: i for i, v in enumerate(seq)}
    try:
        return [offset + where[v] + 1 for v in sub]
    except KeyError as exc:
        raise InvalidIndex(f"{tuple(sub)} is not a subsequence of {tuple(seq)}") from exc


def make_index(space: IsotropicSpace, lam: Sequence[int], mu: Sequence[int]) -> IsotropicIndex:
    """Validate (λ, μ) for ``space`` and derive λ̃, λ′, positions, discrepancy and codimension."""
    lam, mu = tuple(lam), tuple(mu)
    _check_lambda(lam, space)
    m, r, t = space.m, space.r, len(lam)
    if space.plus_component and (t - m) % 2:
        raise InvalidIndex(f"t = {t} must have the parity of m = {m} on OG+({r},{space.s})")
    tilde = lambda_tilde(lam, m, space.eps)
    if len(mu) != r - t:
        raise InvalidIndex(f"μ must have length r - t = {r - t}")
    if any(a <= b for a, b in zip(mu, mu[1:])) or not set(mu) <= set(tilde):
        raise InvalidIndex(f"μ = {mu} is not a subsequence of λ̃ = {tilde}")
    prime = lambda_prime(lam, mu, space)
    prime_tilde = lambda_tilde(prime, m, space.eps)
    pos = _positions(lam, prime, 0) + _positions(mu, prime_tilde, len(prime))
    if any(a >= b for a, b in zip(pos, pos[1:])):
        raise InvalidIndex(f"(λ, μ) does not embed increasingly in (λ′, λ̃′): {pos}")
    dis = sum(m - r + j - i for j, i in enumerate(pos, start=1))
    if dis < 0:
        raise InvalidIndex(f"negative discrepancy for λ = {lam}, μ = {mu}")
    return IsotropicIndex(lam, mu, tilde, prime, prime_tilde, tuple(pos), dis, sum(prime) + dis)


def _lambdas(space: IsotropicSpace, max_sum: int | None) -> Iterator[tuple]:
    values = list(range(space.m - space.eps, -space.eps, -1))
    for t in range(space.r + 1):
        if space.plus_component and (t - space.m) % 2:
            continue
        for lam in combinations(values, t):
            if max_sum is None or sum(lam) <= max_sum:
                yield lam


def _all_indices(space: IsotropicSpace, max_codim: int | None) -> Iterator[IsotropicIndex]:
    # Σλ′ >= Σλ, so λ with Σλ > max_codim can be skipped
    for lam in _lambdas(space, max_codim):
        tilde = lambda_tilde(lam, space.m, space.eps)
        for mu in combinations(tilde, space.r - len(lam)):
            idx = make_index(space, lam, mu)
            if max_codim is None or idx.codim <= max_codim:
                yield idx


def enumerate_classes(space: IsotropicSpace, k: int) -> list[IsotropicIndex]:
    """All Schubert classes of codimension k, sorted by (λ, μ)."""
    found = [idx for idx in _all_indices(space, k) if idx.codim == k]
    return sorted(found, key=lambda idx: (idx.lam, idx.mu))


def betti(space: IsotropicSpace, k: int) -> int:
    """b_{2k}: the number of Schubert classes of codimension k."""
    return len(enumerate_classes(space, k))


@lru_cache(maxsize=None)
def betti_numbers(space: IsotropicSpace) -> tuple:
    """(b_0, b_2, ..., b_{2 dim})."""
    counts = [0] * (space.dim + 1)
    for idx in _all_indices(space, None):
        if idx.codim > space.dim:
            raise InvalidIndex(f"codimension {idx.codim} exceeds dim {space.dim} for {idx}")
        counts[idx.codim] += 1
    return tuple(counts)


def weyl_model(space: IsotropicSpace) -> tuple[str, int, frozenset]:
    """Coxeter type, rank and crossed nodes of the matching G/P.

    OG(r, 2m+1) = B_m/P_r, SG(r, 2m) = C_m/P_r, OG(r, 2m) = D_m/P_r for
    r <= m - 2, OG(m-1, 2m) = D_m/P_{m-1,m} and OG+(m, 2m) = D_m/P_m.
    """
    m, r = space.m, space.r
    if space.family == SYMPLECTIC:
        return "C", m, frozenset({r})
    if space.eps == 0:
        return "B", m, frozenset({r})
    if r == m:
        return "D", m, frozenset({m})
    if r == m - 1:
        return "D", m, frozenset({m - 1, m})
    return "D", m, frozenset({r})


def isotropic_for_node(kind: str, rank: int, node: int) -> IsotropicSpace | None:
    """The isotropic Grassmannian D/B/C_rank / P_node, or None when it is a quadric or P^n."""
    kind = kind.upper()
    if node < 2 and kind != "A":
        return None
    if kind == "B":
        return IsotropicSpace.orthogonal(node, 2 * rank + 1)
    if kind == "C":
        return IsotropicSpace.symplectic(node, 2 * rank)
    if kind == "D":
        if node >= rank - 1:
            return IsotropicSpace.orthogonal(rank, 2 * rank)
        return IsotropicSpace.orthogonal(node, 2 * rank)
    raise DomainError(f"type {kind} has no isotropic Grassmannian model")
