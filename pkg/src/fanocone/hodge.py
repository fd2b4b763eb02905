"""Euler-characteristic bookkeeping for b_4 of a (1,1) section X of G(2,5).

The χ(Ω^p_G(m)) values are inputs, not computed.  Given them, the Koszul
complex 0 → O(-2) → O(-1)^2 → O → O_X → 0 tensored with Ω^p_G, the conormal
sequence 0 → O_X(-1)^2 → Ω_G|X → Ω_X → 0 and its second exterior power give
χ(Ω_X) and χ(Ω²_X).  Since only the middle row of the Hodge diamond of X
differs from that of G and h^{0,4}(X) = 0:

    χ(Ω_X) = -1 - h^{1,3},   χ(Ω²_X) = h^{2,2},   b_4 = h^{2,2} + 2 h^{1,3}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import LedgerInconsistency, MissingChiEntry, SyntaxErrorInSpec

DEFAULT_TABLE = "chi_g25.txt"

HODGE_ROWS_ASSUMPTION = "assumes:hodge-rows-except-middle-equal-those-of-G(2,5)"


@dataclass
class ChiTable:
    """(label, twist) → χ, with a provenance string per entry."""

    values: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)
    source: str = "<memory>"

    def __getitem__(self, key):
        label, twist = str(key[0]), int(key[1])
        try:
            return self.values[(label, twist)]
        except KeyError:
            raise MissingChiEntry(label, twist) from None

    def set(self, label, twist, chi, provenance="user"):
        self.values[(str(label), int(twist))] = int(chi)
        self.provenance[(str(label), int(twist))] = provenance

    def scaled(self, factor: int) -> "ChiTable":
        out = ChiTable(source=f"{self.source} x{factor}")
        for key, v in self.values.items():
            out.set(key[0], key[1], factor * v, self.provenance.get(key, "scaled"))
        return out

    @classmethod
    def parse(cls, text: str, source: str = "<text>") -> "ChiTable":
        table = cls(source=source)
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split(None, 3)
            if len(parts) < 3:
                raise SyntaxErrorInSpec(f"{source}:{lineno}: expected 'label twist chi [provenance]'", token=raw)
            try:
                twist, chi = int(parts[1]), int(parts[2])
            except ValueError:
                raise SyntaxErrorInSpec(f"{source}:{lineno}: twist and chi must be integers", token=raw) from None
            table.set(parts[0], twist, chi, parts[3] if len(parts) > 3 else "unspecified")
        return table

    @classmethod
    def load(cls, path) -> "ChiTable":
        path = Path(path)
        return cls.parse(path.read_text(encoding="utf-8"), source=str(path))

    @classmethod
    def default(cls) -> "ChiTable":
        text = resources.files("fanocone").joinpath("data").joinpath(DEFAULT_TABLE).read_text(encoding="utf-8")
        return cls.parse(text, source=DEFAULT_TABLE)


@dataclass(frozen=True)
class LedgerResult:
    chi_omega1: int
    chi_omega2: int
    h13: int
    h22: int
    b4: int
    trace: tuple
    default_inputs: bool


def euler_characteristics(table: ChiTable) -> tuple[int, int, list[str]]:
    """χ(Ω_X) and χ(Ω²_X) from the table; linear in the inputs, no sign checks."""
    trace = []

    def step(name, value, formula):
        trace.append(f"{name} = {formula} = {value}")
        return value

    omega_gx = step(
        "chi(Omega_G|X)",
        table["1", -2] - 2 * table["1", -1] + table["1", 0],
        "chi(Omega_G(-2)) - 2 chi(Omega_G(-1)) + chi(Omega_G)",
    )
    omega_gx_m1 = step(
        "chi(Omega_G|X(-1))",
        table["1", -3] - 2 * table["1", -2] + table["1", -1],
        "chi(Omega_G(-3)) - 2 chi(Omega_G(-2)) + chi(Omega_G(-1))",
    )
    omega_x = step("chi(Omega_X)", omega_gx - 2 * table["OX", -1], "chi(Omega_G|X) - 2 chi(O_X(-1))")
    omega2_gx = step(
        "chi(Omega^2_G|X)",
        table["2", -2] - 2 * table["2", -1] + table["2", 0],
        "chi(Omega^2_G(-2)) - 2 chi(Omega^2_G(-1)) + chi(Omega^2_G)",
    )
    omega2_x = step(
        "chi(Omega^2_X)",
        omega2_gx - 2 * omega_gx_m1 - 3 * table["OX", -2],
        "chi(Omega^2_G|X) - 2 chi(Omega_G|X(-1)) - 3 chi(O_X(-2))",
    )
    return omega_x, omega2_x, trace


def evaluate_b4_x11(table: ChiTable | None = None) -> LedgerResult:
    if table is None:
        table = ChiTable.default()
    chi1, chi2, trace = euler_characteristics(table)
    h13 = -1 - chi1
    h22 = chi2
    if h13 < 0 or h22 < 0:
        raise LedgerInconsistency(f"negative Hodge number: h13 = {h13}, h22 = {h22}")
    b4 = h22 + 2 * h13
    trace += [
        f"h13 = -1 - chi(Omega_X) = {h13}",
        f"h22 = chi(Omega^2_X) = {h22}",
        f"b4 = h22 + 2 h13 = {b4}",
        HODGE_ROWS_ASSUMPTION,
    ]
    default_inputs = table.values == ChiTable.default().values
    return LedgerResult(chi1, chi2, h13, h22, b4, tuple(trace), default_inputs)
