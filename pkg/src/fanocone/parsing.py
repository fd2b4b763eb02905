"""Text syntax for spaces, Schubert classes and complete intersections.

Classes::

    expr  := term (('+' | '-') term)*
    term  := [coef ['*']] 's' parts
    coef  := INT | INT '/' INT
    parts := DIGITS | '[' INT (',' INT)* ']' | ''

so ``-s2+2s11`` is -σ_2 + 2σ_{1,1} and ``s[10,3]`` is σ_{10,3}.
Spaces: ``G(2,5)``, ``OG(2,7)``, ``OG+(4,8)``, ``SG(3,6)``, ``P5`` (or
``P^5``), ``P(3,2,1,1)``.  Complete intersections: ``<space>:(d1,...,dc)``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import SyntaxErrorInSpec
from .grassmann import CohomologyClass, GrassmannSpace

_TERM = re.compile(r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*\*?\s*s(\[[\d,\s]*\]|\d*)\s*")
_SPACE = re.compile(r"^\s*(G|OG\+?|OG₊|SG)\((\d+),(\d+)\)\s*$")
_PROJ = re.compile(r"^\s*P\^?(\d+)\s*$")
_WPROJ = re.compile(r"^\s*P\(([\d,\s]+)\)\s*$")
_DEGREES = re.compile(r"^\s*\(([\d,\s]+)\)\s*$")


def parse_partition(text: str) -> tuple:
    if text.startswith("["):
        inner = text[1:-1].strip()
        if not inner:
            return ()
        return tuple(int(x) for x in inner.split(","))
    return tuple(int(ch) for ch in text)


def parse_class(text: str, space: GrassmannSpace) -> CohomologyClass:
    """Parse a class expression; every term must have the same codimension."""
    pos = 0
    terms = []
    text = text.strip()
    if not text:
        raise SyntaxErrorInSpec("empty class expression", token=text)
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise SyntaxErrorInSpec(f"cannot parse class near {text[pos:]!r}", token=text[pos:])
        if terms and m.group(1) is None:
            raise SyntaxErrorInSpec(f"missing sign before {m.group(0).strip()!r}", token=m.group(0).strip())
        sign = -1 if m.group(1) == "-" else 1
        coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        try:
            lam = parse_partition(m.group(3))
            cls = CohomologyClass.schubert(space, lam)
        except ValueError as exc:
            raise SyntaxErrorInSpec(f"bad Schubert index {m.group(3)!r}: {exc}", token=m.group(0).strip()) from exc
        terms.append(cls.scale(sign * coef))
        pos = m.end()
    total = terms[0]
    for t in terms[1:]:
        if t.codim != total.codim:
            raise SyntaxErrorInSpec(f"mixed codimensions in {text!r}", token=text)
        total = total + t
    return total


def format_partition(lam) -> str:
    if lam and max(lam) >= 10:
        return "s[" + ",".join(map(str, lam)) + "]"
    return "s" + "".join(map(str, lam))


def format_fraction(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_class(c: CohomologyClass) -> str:
    if c.is_zero():
        return "0"
    out = []
    for lam, coef in c.coeffs.items():
        sign = "-" if coef < 0 else "+"
        mag = abs(coef)
        body = format_partition(lam)
        if mag != 1:
            body = format_fraction(mag) + body
        out.append((sign, body))
    text = "".join(s + b for s, b in out)
    return text[1:] if text.startswith("+") else text


def parse_space(text: str):
    """Parse an ambient space string."""
    from .chern import Projective, WeightedProjective
    from .isotropic import IsotropicSpace

    m = _SPACE.match(text)
    if m:
        kind, r, s = m.group(1), int(m.group(2)), int(m.group(3))
        if kind == "G":
            return GrassmannSpace(r, s)
        if kind == "SG":
            return IsotropicSpace.symplectic(r, s)
        return IsotropicSpace.orthogonal(r, s)
    m = _PROJ.match(text)
    if m:
        return Projective(int(m.group(1)))
    m = _WPROJ.match(text)
    if m:
        return WeightedProjective(tuple(int(x) for x in m.group(1).split(",")))
    raise SyntaxErrorInSpec(f"unrecognized space {text!r}", token=text)


def parse_degrees(text: str) -> tuple:
    m = _DEGREES.match(text)
    if m:
        text = m.group(1)
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise SyntaxErrorInSpec(f"bad degree list {text!r}", token=text) from exc


def parse_ci(text: str):
    """Parse ``<space>:(d1,...)``; a bare space is the ambient itself (no equations)."""
    from .chern import CIVariety

    head, sep, tail = text.rpartition(":")
    if not sep:
        return CIVariety(parse_space(text), ())
    return CIVariety(parse_space(head), parse_degrees(tail))
