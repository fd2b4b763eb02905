"""Candidate 4-folds and high-index 2-Fano families, with verdicts.

Each enumerator scans the finite constraint system (codimension fixed by
dim X = 4, degree sum bounded by the ambient index) and attaches a verdict
together with the rules or computations that justify it.  Citation tags name
the external result that a rule comes from; computed evidence is an exact
rational pairing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Callable, Optional

from .chern import CIVariety, Projective, WeightedProjective, chern_character_ci, pair_ch2_with_surface, schubert_pairings
from .cones import BettiData, GeneralizedFlag, cone_report, homogeneous_betti
from .grassmann import GrassmannSpace, solve_class_from_pairings
from .isotropic import IsotropicSpace, betti_numbers
from .parsing import format_class, format_fraction, format_partition

TWO_FANO = "2-Fano"
WEAK_TWO_FANO = "weak-2-Fano"
NOT_WEAK = "not-weak-2-Fano"
EXCLUDED = "excluded-by-dimension"
UNDETERMINED = "undetermined"

VERDICTS = (TWO_FANO, WEAK_TWO_FANO, NOT_WEAK, EXCLUDED, UNDETERMINED)

AC_INDEX_BOUND = "AC13:Prop31"
AC_GRASSMANN = "AC13:Prop32(iv)"
AC_SECTION = "AC13:Prop32(i)"
AC_SPINOR = "AC13:Prop34"
AC_OG26 = "AC13:Example21"
AC_SG = "AC13:Prop36"
AC_CLASSIFICATION = "AC13:Thm3"
DA_SURFACE = "DeArruda:Cor5.1-surface"
SCHUBERT_PAIRING = "computed:ch2-vs-restricted-Schubert"
SURFACE_PAIRING = "computed:ch2-vs-solved-surface"
P3P3_PAIRING = "computed:ch2-on-P3xP3"
CH2_THRESHOLD = "computed:ch2-threshold"

SCAN_CAP = 50


@dataclass(frozen=True)
class CandidateRecord:
    variety: CIVariety
    constraints_used: tuple
    verdict: str
    evidence: Optional[Fraction] = None
    notes: tuple = ()
    label: Optional[str] = None
    equivalent: Optional[CIVariety] = None
    family: Optional[str] = None
    derived_bound: Optional[int] = None
    cited_bound: Optional[int] = None
    cones: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if not self.constraints_used:
            raise ValueError("a verdict needs at least one citation tag")
        computed = any(t.startswith("computed:ch2-") and t != CH2_THRESHOLD for t in self.constraints_used)
        if self.verdict == NOT_WEAK and computed and self.evidence is None:
            raise ValueError("a pairing verdict needs its evidence")

    @property
    def space_label(self) -> str:
        return self.label or str(self.variety.ambient)

    @property
    def type_label(self) -> str:
        return "(" + ",".join(map(str, self.variety.degrees)) + ")"

    @property
    def discrepancy(self) -> bool:
        return self.family is not None and self.derived_bound != self.cited_bound


# ---------------------------------------------------------------- Grassmannians


def _grassmann_candidates(cap: int = SCAN_CAP):
    """(r, s, degrees) with c = r(s-r) - 4 >= 1 and Σd <= s - 1."""
    out = []
    for s in range(4, cap + 1):
        for r in range(2, s // 2 + 1):
            c = r * (s - r) - 4
            # all-ones is the cheapest type, so c > s - 1 leaves nothing
            if c < 1 or c > s - 1:
                continue
            for extra in _bounded_types(c, s - 1):
                out.append((r, s, extra))
    return out


def _bounded_types(c: int, total: int):
    return [d for d in combinations_with_replacement(range(1, total + 1), c) if sum(d) <= total]


def _grassmann_verdict(X: CIVariety, extra_tags=()) -> CandidateRecord:
    pairings = schubert_pairings(X)
    lam, low = min(pairings.items(), key=lambda kv: (kv[1], kv[0]))
    base = (AC_INDEX_BOUND,) + tuple(extra_tags)
    if low < 0:
        note = f"ch2.{format_partition(lam)}={format_fraction(low)}"
        return CandidateRecord(X, base + (AC_GRASSMANN, SCHUBERT_PAIRING), NOT_WEAK, low, (note,))
    surface = de_arruda_surface(X.ambient, X.degrees)
    if surface is not None:
        value = pair_ch2_with_surface(X, surface)
        if value < 0:
            note = f"ch2.S={format_fraction(value)}, S={format_class(surface)}"
            return CandidateRecord(X, base + (DA_SURFACE, SURFACE_PAIRING), NOT_WEAK, value, (note,))
    return CandidateRecord(X, base + (SCHUBERT_PAIRING,), UNDETERMINED, low)


def de_arruda_surface(G: GrassmannSpace, degrees):
    """The surface class S on a (1,1) section of G(2,5) or G(2,6) with S·σ_a = 0, S·σ_b = 1.

    In G(2,5) S is solved in the span of σ_2, σ_11 from S·σ_2 = 0 and
    S·σ_11 = 1; in G(2,6) it is solved in the span of σ_4, σ_22 from the same
    two conditions.  Returns None for any other ambient or type.
    """
    if tuple(degrees) != (1, 1) or G.r != 2 or G.s not in (5, 6):
        return None
    s2, s11 = G.schubert(2), G.schubert(1, 1)
    if G.s == 5:
        return solve_class_from_pairings(G, 2, (1, 1), [(s2, 0), (s11, 1)])
    return solve_class_from_pairings(G, 4, (1, 1), [(s2, 0), (s11, 1)], basis=[(4,), (2, 2)])


_GRASSMANN_ORDER = [
    ((2, 7), (1, 1, 1, 1, 1, 1)),
    ((3, 6), (1, 1, 1, 1, 1)),
    ((2, 6), (1, 1, 1, 1)),
    ((2, 6), (1, 1, 1, 2)),
    ((2, 5), (1, 1)),
    ((2, 5), (1, 2)),
    ((2, 5), (1, 3)),
    ((2, 5), (2, 2)),
]


def _order_key(table):
    rank = {key: i for i, key in enumerate(table)}
    return lambda key: (rank.get(key, len(rank)), key)


def enumerate_grassmann_4folds(cap: int = SCAN_CAP) -> list[CandidateRecord]:
    """Weak 2-Fano candidate 4-folds in G(r, s) and their verdicts."""
    keys = sorted((((r, s), d) for r, s, d in _grassmann_candidates(cap)), key=_order_key(_GRASSMANN_ORDER))
    return [_grassmann_verdict(CIVariety(GrassmannSpace(*rs), d)) for rs, d in keys]


# ------------------------------------------------------------ orthogonal family


def _og_label(space: IsotropicSpace) -> str:
    # OG(m-1, 2m) is displayed like the spinor component it fibres over
    if space.eps == 1 and space.r == space.m - 1:
        return f"OG+({space.r},{space.s})"
    return str(space)


def _p3p3_degree(poly: dict) -> Fraction:
    return Fraction(poly.get((3, 3), 0))


def _p3p3_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for (i, j), x in a.items():
        for (k, l), y in b.items():
            if i + k <= 3 and j + l <= 3:
                out[(i + k, j + l)] = out.get((i + k, j + l), 0) + x * y
    return out


def og26_pairings(degrees) -> dict:
    """ch_2·S on X ⊂ OG(2,6), for S = h1², h1h2, h2² restricted to X.

    OG(2,6) is the (1,1) divisor in P3 × P3 and the Plücker class is h1 + h2,
    so X of type (d_1, ...) is cut out by (1,1) and each d_i(1,1).
    """
    diag = {(1, 0): 1, (0, 1): 1}
    sq = _p3p3_mul(diag, diag)
    corr = Fraction(1 + sum(d * d for d in degrees), 2)
    ch2 = {(2, 0): Fraction(2), (0, 2): Fraction(2)}
    for key, v in sq.items():
        ch2[key] = ch2.get(key, 0) - corr * v
    cut = diag
    for d in degrees:
        cut = _p3p3_mul(cut, {k: d * v for k, v in diag.items()})
    out = {}
    for name, surface in (("h1^2", {(2, 0): 1}), ("h1h2", {(1, 1): 1}), ("h2^2", {(0, 2): 1})):
        out[name] = _p3p3_degree(_p3p3_mul(_p3p3_mul(ch2, surface), cut))
    return out


def _og_candidates(cap: int = SCAN_CAP):
    out = []
    for s in range(5, cap + 1):
        for r in range(2, s // 2 + 1):
            if 2 * r == s:
                continue
            c = r * (2 * s - 3 * r - 1) // 2 - 4
            if c < 1 or c > s - r - 2:
                continue
            for d in _bounded_types(c, s - r - 2):
                out.append((r, s, d))
    return out


def _spinor_candidates(cap: int = SCAN_CAP):
    """OG+(r, 2r) 4-folds of type (1,...,1) with c <= 4, or of type (2)."""
    out = []
    for r in range(2, cap // 2 + 1):
        c = r * (r - 1) // 2 - 4
        if 1 <= c <= 4:
            out.append((r, 2 * r, (1,) * c))
        if c == 1:
            out.append((r, 2 * r, (2,)))
    return out


_OG_ORDER = [((3, 7), (1, 1)), ((2, 7), (1, 1, 1)), ((2, 6), (2,)), ((2, 6), (1,)), ((4, 8), (1, 1))]


def _og_record(r: int, s: int, d: tuple) -> CandidateRecord:
    space = IsotropicSpace.orthogonal(r, s)
    X = CIVariety(space, d)
    label = _og_label(space)
    if (r, s) == (3, 7):
        return CandidateRecord(X, (AC_INDEX_BOUND, "isomorphism:OG(3,7)=OG+(4,8)"), UNDETERMINED,
                               notes=("isomorphic-to-quadric: OG(3,7) ≅ OG+(4,8)",), label=label)
    if (r, s) == (2, 7):
        return CandidateRecord(X, (AC_INDEX_BOUND, "assumes:very-general", "assumes:h13>0"), UNDETERMINED,
                               notes=("polyhedral Eff_2 assumes X very general with h^{1,3} > 0",), label=label)
    if (r, s) == (2, 6):
        pairings = og26_pairings(d)
        name, low = min(pairings.items(), key=lambda kv: (kv[1], kv[0]))
        if low < 0:
            return CandidateRecord(X, (AC_INDEX_BOUND, AC_OG26, P3P3_PAIRING), NOT_WEAK, low,
                                   (f"ch2.{name}={format_fraction(low)} on P3xP3",), label=label)
        return CandidateRecord(X, (AC_INDEX_BOUND, AC_OG26), NOT_WEAK, label=label)
    if 2 * r == s:
        return CandidateRecord(X, (AC_SPINOR, "half-spinor-embedding"), WEAK_TWO_FANO,
                               notes=("K_X = -4H: a quadric in P5, b4 = 2",), label=label)
    return CandidateRecord(X, (AC_INDEX_BOUND,), UNDETERMINED, label=label)


def enumerate_og_4folds(include_spinor: bool = False, cap: int = SCAN_CAP) -> list[CandidateRecord]:
    """Weak 2-Fano candidate 4-folds in orthogonal Grassmannians.

    Only s != 2r by default; ``include_spinor`` adds the half-spinor case
    OG+(r, 2r).
    """
    keys = [((r, s), d) for r, s, d in _og_candidates(cap)]
    if include_spinor:
        keys += [((r, s), d) for r, s, d in _spinor_candidates(cap)]
    keys.sort(key=_order_key(_OG_ORDER))
    return [_og_record(r, s, d) for (r, s), d in keys]


# ------------------------------------------------------------ symplectic family


def _sg_candidates(cap: int = SCAN_CAP):
    out = []
    for s in range(4, cap + 1, 2):
        for r in range(2, s // 2 + 1):
            c = r * (2 * s - 3 * r + 1) // 2 - 4
            if c < 1 or c > s - r:
                continue
            for d in _bounded_types(c, s - r):
                out.append((r, s, d))
    return out


_SG_ORDER = [((3, 6), (1, 1)), ((3, 6), (1, 2)), ((2, 6), (1, 1, 1)), ((2, 6), (1, 1, 2))]


def _sg_record(r: int, s: int, d: tuple) -> CandidateRecord:
    X = CIVariety(IsotropicSpace.symplectic(r, s), d)
    if r == 2:
        # SG(2, s) is a hyperplane section of G(2, s)
        Y = CIVariety(GrassmannSpace(2, s), (1,) + d)
        inner = _grassmann_verdict(Y)
        tags = (AC_INDEX_BOUND, AC_SECTION, "SG(2,s)=G(2,s):(1)") + inner.constraints_used[1:]
        notes = (f"re-expressed as {Y}",) + inner.notes
        return CandidateRecord(X, tags, inner.verdict, inner.evidence, notes, equivalent=Y)
    return CandidateRecord(X, (AC_INDEX_BOUND, AC_SG), NOT_WEAK)


def enumerate_sg_4folds(cap: int = SCAN_CAP) -> list[CandidateRecord]:
    """Weak 2-Fano candidate 4-folds in symplectic Grassmannians."""
    keys = sorted((((r, s), d) for r, s, d in _sg_candidates(cap)), key=_order_key(_SG_ORDER))
    return [_sg_record(r, s, d) for (r, s), d in keys]


# ---------------------------------------------------------- high-index catalog


@dataclass(frozen=True)
class _Family:
    name: str
    build: Callable[[int], CIVariety]
    cited_bound: Optional[int]
    quadric: bool = False


def _proj(c: int, degrees):
    return lambda n: CIVariety(Projective(n + c), degrees)


def _wproj(head, ones_extra: int, degrees):
    return lambda n: CIVariety(WeightedProjective(tuple(head) + (1,) * (n + ones_extra)), degrees)


FAMILIES = (
    _Family("P^n", lambda n: CIVariety(Projective(n), ()), None),
    _Family("quadric in P^(n+1)", _proj(1, (2,)), 2, quadric=True),
    _Family("(2,2) in P^(n+2)", _proj(2, (2, 2)), 5),
    _Family("cubic in P^(n+1)", _proj(1, (3,)), 7),
    _Family("quartic in P^(n+1)", _proj(1, (4,)), 15),
    _Family("(2,3) in P^(n+2)", _proj(2, (2, 3)), 11),
    _Family("(2,2,2) in P^(n+3)", _proj(3, (2, 2, 2)), 9),
    _Family("(4) in P(2,1,...,1)", _wproj((2,), 1, (4,)), 11),
    _Family("(6) in P(3,2,1,...,1)", _wproj((3, 2), 0, (6,)), 23),
    _Family("(6) in P(3,1,...,1)", _wproj((3,), 1, (6,)), 26),
    _Family("(2,2) in P(2,1,...,1)", _wproj((2,), 2, (2, 2)), 14),
)


def _positive_ch(X: CIVariety) -> bool:
    ch = chern_character_ci(X, 2)
    return ch[1] > 0 and ch[2] > 0


def derived_threshold(family: _Family, cap: int = 200) -> Optional[int]:
    """Largest n <= cap for which ch_1 or ch_2 fails to be positive; None if none does."""
    failing = [n for n in range(1, cap + 1) if not _positive_ch(family.build(n))]
    return max(failing) if failing else None


def _ci_betti(n: int, k: int, quadric: bool) -> int:
    """b_{2k} of a smooth complete intersection of dimension n away from the middle degree."""
    if 2 * k != n:
        return 1 if 0 <= k <= n else 0
    return 2 if quadric else 0


def _ci_cones(family: _Family, n: int) -> tuple:
    out = []
    for k in (2, 3):
        if k < n:
            b = _ci_betti(n, k, family.quadric)
            out.append((k, cone_report(BettiData(f"{family.name}, n={n}", b), k)))
    return tuple(out)


def _homogeneous_record(space, label: str, computed: Optional[Fraction] = None, tags=()) -> CandidateRecord:
    cones = tuple((k, cone_report(space, k)) for k in (2, 3))
    tags = (AC_CLASSIFICATION,) + tuple(tags)
    variety = CIVariety(space, ())
    return CandidateRecord(variety, tags, TWO_FANO, computed, label=label, cones=cones)


def _grassmann_g25_record() -> CandidateRecord:
    G = GrassmannSpace(2, 5)
    low = min(schubert_pairings(CIVariety(G, ())).values())
    return _homogeneous_record(G, "G(2,5)", low, (SCHUBERT_PAIRING,))


def _spinor_sections() -> list[CandidateRecord]:
    Y = IsotropicSpace.orthogonal(5, 10)
    b = betti_numbers(Y)
    out = []
    for c in range(1, 4):
        X = CIVariety(Y, (1,) * c)
        cones = tuple((k, cone_report(BettiData(str(X), b[k]), k)) for k in (2, 3))
        out.append(CandidateRecord(X, (AC_CLASSIFICATION, "Lefschetz:b_2k(X)=b_2k(Y)"), TWO_FANO,
                                   label=str(X), cones=cones))
    return out


def high_index_catalog_check(cap: int = 200) -> list[CandidateRecord]:
    """Every family of 2-Fano n-folds of index >= n - 2, with thresholds and cone reports."""
    out = []
    for fam in FAMILIES:
        derived = derived_threshold(fam, cap)
        n = max(b for b in (fam.cited_bound, derived, 2) if b is not None) + 1
        X = fam.build(n)
        ch2 = chern_character_ci(X, 2)[2]
        verdict = TWO_FANO if _positive_ch(X) else UNDETERMINED
        notes = (f"representative n={n}, ch2={format_fraction(ch2)}H^2",)
        if derived != fam.cited_bound:
            notes += (f"discrepancy: derived n>{derived}, cited n>{fam.cited_bound}",)
        out.append(CandidateRecord(X, (AC_CLASSIFICATION, CH2_THRESHOLD), verdict, ch2, notes,
                                   label=fam.name, family=fam.name, derived_bound=derived,
                                   cited_bound=fam.cited_bound, cones=_ci_cones(fam, n)))
    out.append(_grassmann_g25_record())
    out.append(_homogeneous_record(IsotropicSpace.orthogonal(5, 10), "OG+(5,10)"))
    out.extend(_spinor_sections())
    out.append(_homogeneous_record(IsotropicSpace.symplectic(3, 6), "SG(3,6)"))
    out.append(_g2_record())
    return out


def _g2_record() -> CandidateRecord:
    flag = GeneralizedFlag("G", 2, frozenset({2}))
    cones = tuple((k, cone_report(flag, k)) for k in (2, 3))
    return CandidateRecord(_FlagVariety(flag), (AC_CLASSIFICATION,), TWO_FANO, label="G2/P2", cones=cones)


@dataclass(frozen=True)
class _FlagVariety:
    """Stand-in for a homogeneous G/P that is not itself a complete intersection."""

    ambient: GeneralizedFlag
    degrees: tuple = ()

    @property
    def dim(self) -> int:
        return len(homogeneous_betti(self.ambient)) - 1

    def __str__(self):
        return str(self.ambient)


def cone_summary(cones) -> str:
    return "; ".join(f"k={k}: {rep}" for k, rep in cones)


__all__ = [
    "CandidateRecord",
    "TWO_FANO",
    "WEAK_TWO_FANO",
    "NOT_WEAK",
    "EXCLUDED",
    "UNDETERMINED",
    "enumerate_grassmann_4folds",
    "enumerate_og_4folds",
    "enumerate_sg_4folds",
    "high_index_catalog_check",
    "de_arruda_surface",
    "og26_pairings",
    "derived_threshold",
    "cone_summary",
]
