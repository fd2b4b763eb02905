"""Finite Coxeter groups of types A, B/C, D and G2 acting on their roots.

An element is stored as the permutation it induces on the full root list,
so equality is canonical and the length is the number of positive roots sent
to negative ones.  Nodes are numbered 1..n in Bourbaki order: in type B the
last node is the short root, in type D nodes n-1 and n form the fork, and in
G2 node 1 is short.

B and C share one implementation (B root data); the group and its parabolic
censuses do not see the difference between long and short roots.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations

from .errors import DomainError

SUPPORTED_TYPES = ("A", "B", "C", "D", "G")


def _vec(n, pairs):
    v = [0] * n
    for i, c in pairs:
        v[i] += c
    return tuple(v)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _root_data(kind: str, rank: int):
    """Simple roots and positive roots as integer vectors."""
    n = rank
    if kind == "A":
        if n < 1:
            raise DomainError("A_n needs n >= 1")
        simple = [_vec(n + 1, [(i, 1), (i + 1, -1)]) for i in range(n)]
        positive = [_vec(n + 1, [(i, 1), (j, -1)]) for i, j in combinations(range(n + 1), 2)]
    elif kind in ("B", "C"):
        if n < 2:
            raise DomainError(f"{kind}_n needs n >= 2")
        simple = [_vec(n, [(i, 1), (i + 1, -1)]) for i in range(n - 1)] + [_vec(n, [(n - 1, 1)])]
        positive = [_vec(n, [(i, 1), (j, -1)]) for i, j in combinations(range(n), 2)]
        positive += [_vec(n, [(i, 1), (j, 1)]) for i, j in combinations(range(n), 2)]
        positive += [_vec(n, [(i, 1)]) for i in range(n)]
    elif kind == "D":
        if n < 2:
            raise DomainError("D_n needs n >= 2")
        simple = [_vec(n, [(i, 1), (i + 1, -1)]) for i in range(n - 1)]
        simple.append(_vec(n, [(n - 2, 1), (n - 1, 1)]))
        positive = [_vec(n, [(i, 1), (j, -1)]) for i, j in combinations(range(n), 2)]
        positive += [_vec(n, [(i, 1), (j, 1)]) for i, j in combinations(range(n), 2)]
    elif kind == "G":
        if n != 2:
            raise DomainError("only G2 is available")
        a1 = (1, -1, 0)
        a2 = (-2, 1, 1)
        lin = lambda p, q: tuple(p * x + q * y for x, y in zip(a1, a2))  # noqa: E731
        simple = [a1, a2]
        positive = [lin(p, q) for p, q in ((1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2))]
    else:
        raise DomainError(f"unsupported Coxeter type {kind!r}")
    return simple, positive


class CoxeterSystem:
    """A Weyl group with its simple reflections, realized on the root system."""

    def __init__(self, kind: str, rank: int):
        kind = kind.upper()
        if kind == "G2":
            kind, rank = "G", 2
        self.kind = kind
        self.rank = rank
        simple, positive = _root_data(kind, rank)
        self.simple_roots = simple
        self.positive_roots = positive
        self.roots = positive + [tuple(-x for x in v) for v in positive]
        self._index = {v: i for i, v in enumerate(self.roots)}
        self.npos = len(positive)
        self.simple_index = [self._index[a] for a in simple]
        self.reflections = [self._reflection(a) for a in simple]

    def _reflection(self, alpha) -> "WeylElement":
        aa = _dot(alpha, alpha)
        images = []
        for beta in self.roots:
            num = 2 * _dot(beta, alpha)
            if num % aa:
                raise AssertionError(f"non-crystallographic pairing {beta} · {alpha}")
            k = num // aa
            images.append(self._index[tuple(b - k * a for b, a in zip(beta, alpha))])
        return WeylElement(self, tuple(images))

    @property
    def label(self) -> str:
        return f"{self.kind}{self.rank}"

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    def s(self, node: int) -> "WeylElement":
        return self.reflections[node - 1]

    @cached_property
    def identity(self) -> "WeylElement":
        return WeylElement(self, tuple(range(len(self.roots))))

    def is_positive(self, root_index: int) -> bool:
        return root_index < self.npos

    def word(self, nodes) -> "WeylElement":
        w = self.identity
        for i in nodes:
            w = w * self.s(i)
        return w

    def longest_element(self, nodes=None) -> "WeylElement":
        """Longest element of the parabolic subgroup generated by ``nodes`` (default: all)."""
        nodes = list(self.nodes if nodes is None else nodes)
        w = self.identity
        while True:
            for i in nodes:
                if not w.has_right_descent(i):
                    w = w * self.s(i)
                    break
            else:
                return w

    def elements(self, nodes=None) -> list["WeylElement"]:
        """Every element of the subgroup generated by ``nodes``, by breadth-first search."""
        nodes = list(self.nodes if nodes is None else nodes)
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for i in nodes:
                    u = w * self.s(i)
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
            frontier = nxt
        return sorted(seen, key=lambda w: (w.length, w.images))

    def __eq__(self, other):
        return isinstance(other, CoxeterSystem) and (self.kind, self.rank) == (other.kind, other.rank)

    def __hash__(self):
        return hash((self.kind, self.rank))

    def __repr__(self):
        return f"CoxeterSystem({self.kind!r}, {self.rank})"


@lru_cache(maxsize=None)
def coxeter(kind: str, rank: int) -> CoxeterSystem:
    """Cached constructor."""
    return CoxeterSystem(kind, rank)


@dataclass(frozen=True)
class WeylElement:
    system: CoxeterSystem = field(compare=False, repr=False)
    images: tuple

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        # (a*b)(x) = a(b(x))
        a = self.images
        return WeylElement(self.system, tuple(a[i] for i in other.images))

    def inverse(self) -> "WeylElement":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return WeylElement(self.system, tuple(inv))

    @cached_property
    def length(self) -> int:
        npos = self.system.npos
        return sum(1 for i in range(npos) if self.images[i] >= npos)

    def has_right_descent(self, node: int) -> bool:
        """l(w s) < l(w), i.e. w sends the simple root to a negative root."""
        return not self.system.is_positive(self.images[self.system.simple_index[node - 1]])

    def right_descents(self) -> set[int]:
        return {i for i in self.system.nodes if self.has_right_descent(i)}

    def reduced_word(self) -> list[int]:
        word = []
        w = self
        while w.length:
            i = min(w.right_descents())
            word.append(i)
            w = w * self.system.s(i)
        return word[::-1]


def length(w: WeylElement) -> int:
    return w.length


@dataclass(frozen=True)
class ParabolicQuotient:
    """W/W_Θ for Θ a subset of the nodes; models G/P with P associated to Θ."""

    system: CoxeterSystem
    theta: frozenset

    def __post_init__(self):
        theta = frozenset(int(i) for i in self.theta)
        bad = theta - set(self.system.nodes)
        if bad:
            raise DomainError(f"nodes {sorted(bad)} not in {self.system.label}")
        object.__setattr__(self, "theta", theta)

    @classmethod
    def crossing(cls, system: CoxeterSystem, crossed) -> "ParabolicQuotient":
        """Θ = S minus the ``crossed`` nodes (the maximal parabolic for a single node)."""
        crossed = {int(i) for i in ([crossed] if isinstance(crossed, int) else crossed)}
        return cls(system, frozenset(set(system.nodes) - crossed))

    @cached_property
    def w0(self) -> WeylElement:
        return self.system.longest_element()

    @cached_property
    def w_theta(self) -> WeylElement:
        return self.system.longest_element(sorted(self.theta))

    @property
    def dim(self) -> int:
        return self.w0.length - self.w_theta.length

    def is_minimal(self, w: WeylElement) -> bool:
        """w ∈ W^Θ: l(ws) = l(w) + 1 for all s in Θ."""
        return not any(w.has_right_descent(i) for i in self.theta)

    @cached_property
    def representatives(self) -> tuple:
        """W^Θ grouped by length: a tuple of tuples of elements."""
        levels = [(self.system.identity,)]
        while True:
            nxt = {}
            for w in levels[-1]:
                for i in self.system.nodes:
                    u = self.system.s(i) * w
                    if u.length == w.length + 1 and self.is_minimal(u):
                        nxt.setdefault(u.images, u)
            if not nxt:
                break
            levels.append(tuple(nxt[k] for k in sorted(nxt)))
        return tuple(levels)

    def __str__(self):
        crossed = sorted(set(self.system.nodes) - self.theta)
        return f"{self.system.label}/P{crossed}"


def minimal_coset_reps(q: ParabolicQuotient) -> dict[int, int]:
    """Census of W^Θ by length: {length: count}."""
    return {k: len(level) for k, level in enumerate(q.representatives)}


def poincare_polynomial(q: ParabolicQuotient) -> list[int]:
    """Coefficients b_0, b_2, b_4, ... of the Poincaré polynomial of G/P."""
    return [len(level) for level in q.representatives]


def duality_check(q: ParabolicQuotient, w: WeylElement) -> tuple[WeylElement, bool]:
    """Map w ↦ w₀·w·w_Θ and test that it lands in W^Θ with complementary length."""
    if not q.is_minimal(w):
        raise DomainError("duality_check needs an element of W^Θ")
    u = q.w0 * w * q.w_theta
    ok = u.length == q.w0.length - q.w_theta.length - w.length and q.is_minimal(u)
    return u, ok


def additivity_check(q: ParabolicQuotient, cap: int = 1_000_000) -> bool:
    """Check l(w·v) = l(w) + l(v) on W^Θ × W_Θ, visiting at most ``cap`` pairs."""
    parabolic = q.system.elements(sorted(q.theta))
    seen = 0
    for level in q.representatives:
        for w in level:
            for v in parabolic:
                if (w * v).length != w.length + v.length:
                    return False
                seen += 1
                if seen >= cap:
                    return True
    return True

