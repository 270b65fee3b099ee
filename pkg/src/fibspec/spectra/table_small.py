"""Collision-point data for the three singular models (rows 1, 5, 7).

Fiber labels in the columns refer to vanishing orders of the Weierstrass
model, not to the topology of the fiber of the terminal minimal model; the
Euler numbers are those of the actual (singular-model) fibers.  The '(br.)'
and '(NSR)' annotations are carried verbatim.  The tau columns are stored
exactly as printed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional


@dataclass(frozen=True)
class SmallRow:
    number: int
    q1_label: str
    q2_label: Optional[str]
    chi_q1: Callable[[Optional[int]], int]
    chi_q2: Optional[Callable[[Optional[int]], int]]
    tau_p1: int
    tau_p2: Optional[int]


SMALL_ROWS = {
    1: SmallRow(1, "II", "I_1 (NSR)", lambda k: 2, lambda k: 1, 0, 1),
    5: SmallRow(
        5,
        "I_2k-2* (br.)",
        "I_2k+1 (NSR)",
        lambda k: k + 2,
        lambda k: 2 * k + 1,
        1,
        0,
    ),
    7: SmallRow(7, "III (NSR)", None, lambda k: 2, None, 2, None),
}


def point_fiber_euler(row_number: int, kind: str, param: Optional[int]) -> Optional[int]:
    """Euler number of the singular-model fiber at a collision point, when
    the table covers it; None otherwise."""
    row = SMALL_ROWS.get(row_number)
    if row is None:
        return None
    if kind == "Q1":
        return row.chi_q1(param)
    if kind == "Q2" and row.chi_q2 is not None:
        return row.chi_q2(param)
    return None
