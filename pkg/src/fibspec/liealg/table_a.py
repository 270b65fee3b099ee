"""The fiber-type / algebra / representation table (23 rows).

Stored columns are the exact transcription; the numeric charged-dimension
columns are kept as closed-form callables so tests can recompute them from
root data and compare.  Cell conventions: None means the column does not
apply to the row, NO_MATTER means the table prints "--" (collisions of that
kind carry no charged matter), NM marks the non-minimal entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence, Tuple, Union

from .cartan import Algebra, LieAlgebraError, physics_algebra
from .reps import Rep, composite_rep, named_rep

NO_MATTER = "--"
NM = "NM"

# (prefactor, ((mult, name), ...), display label)
CellSpec = Optional[Union[str, Tuple[Fraction, Tuple[Tuple[int, str], ...], str]]]


def _cell(prefactor, pieces, label) -> CellSpec:
    return (Fraction(prefactor), tuple(pieces), label)


_FUND = _cell(1, ((1, "fund"),), "fund")
_HALF_FUND = _cell(Fraction(1, 2), ((1, "fund"),), "fund")
_TWO_FUND = _cell(2, ((1, "fund"),), "fund")
_THREE_FUND = _cell(3, ((1, "fund"),), "fund")
_L2 = _cell(1, ((1, "lambda2"),), "lambda2")
_L20 = _cell(1, ((1, "lambda2_0"),), "lambda2_0")
_L2_2FUND = _cell(1, ((1, "lambda2"), (2, "fund")), "lambda2 + 2 x fund")
_VECT = _cell(1, ((1, "vect"),), "vect")
_SPIN = _cell(1, ((1, "spin"),), "spin")
_SPIN_PM = _cell(1, ((1, "spin+"),), "spin+/-")
_HALF_SPIN = _cell(Fraction(1, 2), ((1, "spin"),), "spin")
_HALF_SPIN_PM = _cell(Fraction(1, 2), ((1, "spin+"),), "spin+/-")


@dataclass(frozen=True)
class TableRow:
    number: int
    kodaira: str  # display pattern, e.g. "I_{2k+1}"
    algebra_label: str  # e.g. "sp(k)", "su(n)", "-" for trivial
    monodromy: Tuple[str, ...]  # accepted declared tags
    param: Optional[str]  # None, "k" or "n"
    param_min: int
    rho0: CellSpec
    rho_q1: CellSpec
    rho_q2: CellSpec
    adj_ch: Callable[[Optional[int]], Optional[int]]
    rho0_ch: Callable[[Optional[int]], Optional[int]]
    q1_ch: Callable[[Optional[int]], Optional[Union[int, str]]]
    q2_ch: Callable[[Optional[int]], Optional[Union[int, str]]]

    def algebra(self, param: Optional[int] = None) -> Optional[Algebra]:
        label = self.algebra_label
        if label == "-":
            return None
        if self.param is not None:
            if param is None or param < self.param_min:
                raise LieAlgebraError(
                    f"row {self.number} needs parameter {self.param} >= {self.param_min}"
                )
            sizes = {
                "sp(k)": ("sp", param),
                "su(n)": ("su", param),
                "so(2n+7)": ("so", 2 * param + 7),
                "so(2n+8)": ("so", 2 * param + 8),
            }
            name, num = sizes[label]
            return physics_algebra(name, num)
        from .cartan import algebra_from_label

        return algebra_from_label(label)

    def kodaira_label(self, param: Optional[int] = None) -> str:
        text = self.kodaira
        if self.param == "k":
            text = text.replace("2k+1", str(2 * param + 1)).replace("2k", str(2 * param))
        elif self.param == "n":
            text = text.replace("n", str(param))
        return text

    def resolve(self, cell: CellSpec, param: Optional[int] = None) -> Optional[Union[str, Rep]]:
        """Instantiate a rep cell against the row's algebra."""
        if cell is None or cell in (NO_MATTER, NM):
            return cell
        algebra = self.algebra(param)
        prefactor, pieces, label = cell
        rep = composite_rep(algebra, pieces, label)
        return Rep(algebra, label, rep.parts, prefactor)

    def expected_charged(self, param: Optional[int] = None):
        return (
            self.adj_ch(param),
            self.rho0_ch(param),
            self.q1_ch(param),
            self.q2_ch(param),
        )

    def has_rho0(self) -> bool:
        return self.rho0 not in (None, NO_MATTER, NM)

    def cover_degree(self) -> int:
        """Degree of the monodromy cover (3 only for the g2 row)."""
        if not self.has_rho0():
            return 1
        return 3 if self.algebra_label == "g2" else 2


def _const(value):
    return lambda p: value


ROWS: Tuple[TableRow, ...] = (
    TableRow(1, "I_1", "-", ("not-applicable",), None, 0,
             None, NO_MATTER, NO_MATTER,
             _const(0), _const(0), _const(0), _const(0)),
    TableRow(2, "I_2", "su(2)", ("split", "non-split", "not-applicable"), None, 0,
             None, NO_MATTER, _FUND,
             _const(2), _const(0), _const(0), _const(2)),
    TableRow(3, "I_3", "su(3)", ("split",), None, 0,
             None, NO_MATTER, _FUND,
             _const(6), _const(0), _const(0), _const(3)),
    TableRow(4, "I_2k", "sp(k)", ("non-split",), "k", 2,
             _L20, NO_MATTER, _FUND,
             lambda k: 2 * k * k, lambda k: 2 * k * k - 2 * k,
             _const(0), lambda k: 2 * k),
    TableRow(5, "I_2k+1", "sp(k)", ("non-split",), "k", 1,
             _L2_2FUND, _HALF_FUND, _FUND,
             lambda k: 2 * k * k, lambda k: 2 * k * k + 2 * k,
             lambda k: k, lambda k: 2 * k),
    TableRow(6, "I_n", "su(n)", ("split",), "n", 4,
             None, _L2, _FUND,
             lambda n: n * n - n, _const(0),
             lambda n: (n * n - n) // 2, lambda n: n),
    TableRow(7, "II", "-", ("not-applicable",), None, 0,
             None, NO_MATTER, None,
             _const(0), _const(0), _const(0), _const(None)),
    TableRow(8, "III", "su(2)", ("not-applicable",), None, 0,
             None, _TWO_FUND, None,
             _const(2), _const(0), _const(4), _const(None)),
    TableRow(9, "IV", "sp(1)", ("non-split",), None, 0,
             _L2_2FUND, _HALF_FUND, None,
             _const(2), _const(4), _const(1), _const(None)),
    TableRow(10, "IV", "su(3)", ("split",), None, 0,
             None, _THREE_FUND, None,
             _const(6), _const(0), _const(9), _const(None)),
    TableRow(11, "I_0*", "g2", ("non-split",), None, 0,
             _cell(1, ((1, "7"),), "7"), NO_MATTER, None,
             _const(12), _const(6), _const(0), _const(None)),
    TableRow(12, "I_0*", "so(7)", ("semi-split",), None, 0,
             _VECT, NO_MATTER, _SPIN,
             _const(18), _const(6), _const(0), _const(8)),
    TableRow(13, "I_0*", "so(8)", ("split",), None, 0,
             None, _VECT, _SPIN_PM,
             _const(24), _const(0), _const(8), _const(8)),
    TableRow(14, "I_1*", "so(9)", ("non-split",), None, 0,
             _VECT, NO_MATTER, _SPIN,
             _const(32), _const(8), _const(0), _const(16)),
    TableRow(15, "I_1*", "so(10)", ("split",), None, 0,
             None, _VECT, _SPIN_PM,
             _const(40), _const(0), _const(10), _const(16)),
    TableRow(16, "I_2*", "so(11)", ("non-split",), None, 0,
             _VECT, NO_MATTER, _HALF_SPIN,
             _const(50), _const(10), _const(0), _const(16)),
    TableRow(17, "I_2*", "so(12)", ("split",), None, 0,
             None, _VECT, _HALF_SPIN_PM,
             _const(60), _const(0), _const(12), _const(16)),
    TableRow(18, "I_n*", "so(2n+7)", ("non-split",), "n", 3,
             _VECT, NO_MATTER, NM,
             lambda n: 2 * (n + 3) ** 2, lambda n: 2 * n + 6,
             _const(0), _const(NM)),
    TableRow(19, "I_n*", "so(2n+8)", ("split",), "n", 3,
             None, _VECT, NM,
             lambda n: 2 * (n + 3) * (n + 4), _const(0),
             lambda n: 2 * n + 8, _const(NM)),
    TableRow(20, "IV*", "f4", ("non-split",), None, 0,
             _cell(1, ((1, "26"),), "26"), NO_MATTER, None,
             _const(48), _const(24), _const(0), _const(None)),
    TableRow(21, "IV*", "e6", ("split",), None, 0,
             None, _cell(1, ((1, "27"),), "27"), None,
             _const(72), _const(0), _const(27), _const(None)),
    TableRow(22, "III*", "e7", ("not-applicable",), None, 0,
             None, _cell(Fraction(1, 2), ((1, "56"),), "56"), None,
             _const(126), _const(0), _const(28), _const(None)),
    TableRow(23, "II*", "e8", ("not-applicable",), None, 0,
             None, NM, None,
             _const(240), _const(0), _const(NM), _const(None)),
)

ROW_BY_NUMBER = {row.number: row for row in ROWS}


def row_for_fiber(kodaira: str, n_value: Optional[int], monodromy: str) -> Tuple[TableRow, Optional[int]]:
    """Resolve (Kodaira type, I_n index, declared monodromy) to a table row.

    kodaira is one of 'In', 'II', 'III', 'IV', 'In*', 'IV*', 'III*', 'II*'
    with n_value carrying the I_n / I_n* index.
    """
    tag = monodromy
    if kodaira == "In":
        n = n_value
        if n == 1:
            return ROW_BY_NUMBER[1], None
        if n == 2:
            return ROW_BY_NUMBER[2], None
        if tag == "split":
            return (ROW_BY_NUMBER[3], None) if n == 3 else (ROW_BY_NUMBER[6], n)
        if tag == "non-split":
            if n % 2 == 0:
                if n // 2 < 2:
                    raise LieAlgebraError("non-split I_2 is row 2 (declare split or n/a)")
                return ROW_BY_NUMBER[4], n // 2
            return ROW_BY_NUMBER[5], (n - 1) // 2
        raise LieAlgebraError(f"I_{n} needs a split/non-split monodromy tag")
    if kodaira == "II":
        return ROW_BY_NUMBER[7], None
    if kodaira == "III":
        return ROW_BY_NUMBER[8], None
    if kodaira == "IV":
        if tag == "split":
            return ROW_BY_NUMBER[10], None
        if tag == "non-split":
            return ROW_BY_NUMBER[9], None
        raise LieAlgebraError("IV needs a split/non-split monodromy tag")
    if kodaira == "In*":
        n = n_value
        if n == 0:
            table = {"split": 13, "semi-split": 12, "non-split": 11}
            if tag not in table:
                raise LieAlgebraError("I_0* needs split/semi-split/non-split")
            return ROW_BY_NUMBER[table[tag]], None
        if tag == "split":
            return (ROW_BY_NUMBER[15 if n == 1 else 17], None) if n <= 2 else (ROW_BY_NUMBER[19], n)
        if tag == "non-split":
            return (ROW_BY_NUMBER[14 if n == 1 else 16], None) if n <= 2 else (ROW_BY_NUMBER[18], n)
        raise LieAlgebraError(f"I_{n}* needs a split/non-split monodromy tag")
    if kodaira == "IV*":
        if tag == "split":
            return ROW_BY_NUMBER[21], None
        if tag == "non-split":
            return ROW_BY_NUMBER[20], None
        raise LieAlgebraError("IV* needs a split/non-split monodromy tag")
    if kodaira == "III*":
        return ROW_BY_NUMBER[22], None
    if kodaira == "II*":
        return ROW_BY_NUMBER[23], None
    raise LieAlgebraError(f"unknown Kodaira type {kodaira!r}")


def row_selector(selector: str) -> Tuple[TableRow, Optional[int]]:
    """Parse CLI selectors like 'I5:sp2', 'I0*:g2', 'II*:e8'."""
    try:
        type_part, algebra_part = selector.split(":")
    except ValueError as exc:
        raise LieAlgebraError("selector must look like 'I5:sp2'") from exc
    type_part = type_part.strip()
    algebra_part = algebra_part.strip().lower()

    n_value = None
    if type_part.startswith("I") and type_part not in ("II", "III", "IV", "II*", "III*", "IV*"):
        star = type_part.endswith("*")
        digits = type_part[1:-1] if star else type_part[1:]
        if not digits.isdigit():
            raise LieAlgebraError(f"cannot parse fiber type {type_part!r}")
        n_value = int(digits)
        kod = "In*" if star else "In"
    else:
        kod = type_part

    if algebra_part in ("none", "triv", "trivial", "-", "e"):
        if kod == "In" and n_value == 1:
            return ROW_BY_NUMBER[1], None
        if kod == "II":
            return ROW_BY_NUMBER[7], None
        raise LieAlgebraError(f"no trivial-algebra row for {type_part}")

    from .cartan import algebra_from_label

    target = algebra_from_label(algebra_part)
    for row in ROWS:
        if row.algebra_label == "-":
            continue
        param = None
        if row.param == "k":
            if not target.physics.startswith("sp("):
                continue
            param = int(target.physics[3:-1])
            if param < row.param_min:
                continue
        elif row.param == "n":
            expected = row.algebra_label  # 'su(n)', 'so(2n+7)', 'so(2n+8)'
            series = expected.split("(")[0]
            if not target.physics.startswith(series + "("):
                continue
            size = int(target.physics.split("(")[1].rstrip(")"))
            if expected == "su(n)":
                param = size
            elif expected == "so(2n+7)":
                if (size - 7) % 2 or size < 7 + 2 * row.param_min:
                    continue
                param = (size - 7) // 2
            elif expected == "so(2n+8)":
                if (size - 8) % 2 or size < 8 + 2 * row.param_min:
                    continue
                param = (size - 8) // 2
            if param is None or param < row.param_min:
                continue
        else:
            if row.algebra_label.replace("(", "").replace(")", "") != algebra_part.replace("(", "").replace(")", ""):
                continue
        if row.kodaira_label(param) != _normalize_type(type_part):
            continue
        return row, param
    raise LieAlgebraError(f"no table row matches selector {selector!r}")


def _normalize_type(text: str) -> str:
    """'I5' -> 'I_5', 'I0*' -> 'I_0*', leave II/III/IV forms alone."""
    if text.startswith("I") and text not in ("II", "III", "IV", "II*", "III*", "IV*"):
        star = text.endswith("*")
        digits = text[1:-1] if star else text[1:]
        return f"I_{digits}{'*' if star else ''}"
    return text
