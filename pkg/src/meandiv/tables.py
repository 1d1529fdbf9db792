"""The two comparison tables and a small CSV table type.

Rendering rounds half-to-even on the exact binary value of each float, so
output is byte-stable across platforms and locales.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal

from .inequalities import SECTION_NAMES, binary_family_sections, generator_sections

__all__ = [
    "OutputTable",
    "TABLE1_X",
    "TABLE2_T",
    "render_value",
    "table1",
    "table2",
]

TABLE1_X = (0.1, 10.0, 1000.0, 3000.0, 3800.0, 3900.0)
TABLE2_T = (0.0001, 0.001, 0.01, 0.1, 0.2, 0.4)


def render_value(v, precision: int | None) -> str:
    """Round half-to-even to ``precision`` places; ``None`` gives the shortest round-trip repr."""
    if isinstance(v, str):
        return v
    if precision is None:
        return repr(float(v))
    q = Decimal(float(v)).quantize(Decimal(1).scaleb(-precision), rounding=ROUND_HALF_EVEN)
    if q == 0:
        q = abs(q)  # no "-0.0000"
    return f"{q:f}"


@dataclass(frozen=True)
class OutputTable:
    header: tuple[str, ...]
    rows: tuple[tuple, ...]
    precision: int | None = 4  # None: full precision

    def __post_init__(self):
        for r in self.rows:
            if len(r) != len(self.header):
                raise ValueError(f"row {r!r} does not match header arity {len(self.header)}")

    def rendered(self) -> list[list[str]]:
        return [[render_value(v, self.precision) for v in r] for r in self.rows]

    def column(self, name: str) -> list:
        i = self.header.index(name)
        return [r[i] for r in self.rows]

    def cell(self, name: str, key) -> float:
        """Raw value of column ``name`` in the row whose first entry equals ``key``."""
        i = self.header.index(name)
        for r in self.rows:
            if float(r[0]) == float(key):
                return r[i]
        raise KeyError(key)

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(",".join(self.header) + "\n")
        for r in self.rendered():
            buf.write(",".join(r) + "\n")
        return buf.getvalue()


def _abscissa(v) -> str:
    return repr(float(v))


def table1(precision: int | None = 4) -> OutputTable:
    """Generator sections ``a(x) .. f(x)`` at the six printed abscissae."""
    sec = generator_sections()
    rows = tuple((_abscissa(x),) + tuple(float(sec[n](x)) for n in SECTION_NAMES) for x in TABLE1_X)
    return OutputTable(("x",) + SECTION_NAMES, rows, precision)


def table2(precision: int | None = 4, include_half: bool = True) -> OutputTable:
    """Binary-family measures ``a(t) .. f(t)``; ``include_half`` adds the all-zero row ``t = 0.5``."""
    sec = binary_family_sections()
    ts = TABLE2_T + ((0.5,) if include_half else ())
    rows = tuple((_abscissa(t),) + tuple(float(sec[n](t)) for n in SECTION_NAMES) for t in ts)
    return OutputTable(("t",) + SECTION_NAMES, rows, precision)
