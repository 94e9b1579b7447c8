"""Tabulated exchange-coupling data and fidelity-versus-separation curves.

Exchange couplings between implanted donors oscillate strongly with the
actual donor separation, so the coupling realized by fabrication can differ
badly from the design target.  This module ingests tabulated
(separation, coupling) rows, computes the fractional error of each row
against the designated target coupling, and evaluates the CNOT error each
scenario produces at a given pulse implementation level.

Couplings are never computed here; they arrive as data.  The bundled sample
table anchors the design point (20.634 nm, 0.132 ueV) and the one-site
misplacement (21.720 nm, 0.0673 ueV, a coupling ratio of 0.51); all other
rows are synthetic fixtures tagged as such, present to exercise the
pipeline, and no interpolation is ever performed between rows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import pulses

CSV_IN_HEADER = "separation_nm,J_ueV"
CSV_OUT_HEADER = "separation_nm,J_ueV,delta0,level,error"


class TableFormatError(ValueError):
    """Malformed exchange table; message carries file and row context."""


@dataclass(frozen=True)
class ExchangeRow:
    separation_nm: float
    j_uev: float
    tag: str = ""


@dataclass(frozen=True)
class ExchangeTable:
    """Rows sorted by separation with one row designated as the target."""

    rows: tuple[ExchangeRow, ...]
    target_separation: float
    direction: str = "[100]"
    bias_tag: str = ""

    def __post_init__(self) -> None:
        if len(self.rows) < 2:
            raise TableFormatError("exchange table needs at least 2 rows")
        for i, row in enumerate(self.rows):
            if not (row.j_uev > 0.0):
                raise TableFormatError(f"row {i + 1}: coupling must be positive, got {row.j_uev}")
            if i and not (row.separation_nm > self.rows[i - 1].separation_nm):
                raise TableFormatError(
                    f"row {i + 1}: separations must be strictly increasing"
                )
        if self.target_row() is None:
            raise TableFormatError(
                f"target separation {self.target_separation} nm matches no row"
            )

    def target_row(self) -> ExchangeRow | None:
        for row in self.rows:
            if row.separation_nm == self.target_separation:
                return row
        return None

    @property
    def j0(self) -> float:
        """Target coupling in ueV."""
        return self.target_row().j_uev


def delta0(j: float, j0: float) -> float:
    """Fractional coupling error J/J0 - 1 of an actual against a target coupling."""
    if not (j0 > 0.0):
        raise ValueError("target coupling must be positive")
    return j / j0 - 1.0


def load_table(path: str | Path, target_separation: float | None = None) -> ExchangeTable:
    """Read a `separation_nm,J_ueV[,tag]` CSV into a validated table.

    The target row is either given explicitly or found by its ``target`` tag.
    """
    path = Path(path)
    rows: list[ExchangeRow] = []
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    body = [(i + 1, ln.strip()) for i, ln in enumerate(lines) if ln.strip() and not ln.startswith("#")]
    if not body:
        raise TableFormatError(f"{path}: empty table")
    header_no, header = body[0]
    if [c.strip() for c in header.split(",")[:2]] != ["separation_nm", "J_ueV"]:
        raise TableFormatError(f"{path}:{header_no}: expected header '{CSV_IN_HEADER}[,tag]'")
    for lineno, line in body[1:]:
        fields = [f.strip() for f in line.split(",")]
        if len(fields) not in (2, 3):
            raise TableFormatError(f"{path}:{lineno}: expected 2 or 3 fields, got {len(fields)}")
        try:
            sep = float(fields[0])
            j = float(fields[1])
        except ValueError:
            raise TableFormatError(f"{path}:{lineno}: non-numeric separation or coupling") from None
        rows.append(ExchangeRow(sep, j, fields[2] if len(fields) == 3 else ""))
    if target_separation is None:
        tagged = [r for r in rows if r.tag == "target"]
        if not tagged:
            raise TableFormatError(f"{path}: no row tagged 'target' and no target separation given")
        target_separation = tagged[0].separation_nm
    try:
        return ExchangeTable(tuple(rows), target_separation)
    except TableFormatError as exc:
        raise TableFormatError(f"{path}: {exc}") from None


def write_table(table: ExchangeTable, path: str | Path) -> None:
    """Write a table back out; floats keep repr precision so loads round-trip."""
    lines = [f"{CSV_IN_HEADER},tag"]
    for row in table.rows:
        lines.append(f"{row.separation_nm!r},{row.j_uev!r},{row.tag}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def default_table() -> ExchangeTable:
    """The bundled sample table for donors along the [100] direction."""
    with resources.as_file(resources.files("robustcnot").joinpath("data/exchange_100.csv")) as p:
        return load_table(p)


@dataclass(frozen=True)
class SeparationPoint:
    separation_nm: float
    j_uev: float
    delta0: float
    level: int
    error: float


def fidelity_vs_separation(
    table: ExchangeTable, level: int, n_r: int = pulses.DEFAULT_NR
) -> list[SeparationPoint]:
    """CNOT error per table row when pulses assume the target coupling.

    Rows whose fractional error reaches or exceeds +1 are still evaluated;
    there the uncorrected gate beats the composite one.
    """
    j0 = table.j0
    points = []
    for row in table.rows:
        d0 = delta0(row.j_uev, j0)
        err = pulses.cnot_error(level, d0, n_r)
        points.append(SeparationPoint(row.separation_nm, row.j_uev, d0, level, err))
    return points
