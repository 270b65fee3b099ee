"""Model-document ingestion: versioned JSON mirroring FibrationModel.

Unknown keys are rejected everywhere, the version key is mandatory, and
exact rationals cross the boundary as "p/q" strings.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..geometry.base import GeometryError, make_base, named_base
from ..geometry.kodaira import KodairaData
from ..liealg.cartan import algebra_from_label
from ..localring.poly import parse_polynomial
from ..spectra.model import (
    BudgetSpec,
    ChiSpec,
    Collision,
    Component,
    FibrationModel,
    KatzVafaContext,
    ModelOptions,
    SingularPoint,
)

SCHEMA_VERSION = 1


class DocumentError(ValueError):
    """Model document violates the schema."""


def _require_keys(obj: Dict[str, Any], allowed: Sequence[str], context: str):
    if not isinstance(obj, dict):
        raise DocumentError(f"{context}: expected an object")
    unknown = set(obj) - set(allowed)
    if unknown:
        raise DocumentError(f"{context}: unknown keys {sorted(unknown)}")


def _get_int(obj: Dict[str, Any], key: str, context: str, default=None, required=False):
    if key not in obj:
        if required:
            raise DocumentError(f"{context}: missing {key!r}")
        return default
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{context}: {key!r} must be an integer")
    return value


def _get_fraction(obj: Dict[str, Any], key: str, context: str, default=Fraction(1)):
    if key not in obj:
        return default
    value = obj[key]
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError(f"{context}: bad rational {value!r}") from exc
    raise DocumentError(f"{context}: {key!r} must be an integer or 'p/q' string")


def _parse_base(obj) -> Any:
    _require_keys(obj, ("name", "intersection", "canonical", "h11", "calabi_yau"), "base")
    name = obj.get("name")
    if name is None:
        raise DocumentError("base: missing 'name'")
    if name != "custom":
        for key in ("intersection", "canonical", "h11"):
            if key in obj:
                raise DocumentError(f"base: {key!r} only applies to custom bases")
        try:
            return named_base(name)
        except GeometryError as exc:
            raise DocumentError(f"base: {exc}") from exc
    try:
        return make_base(
            obj["intersection"],
            obj["canonical"],
            _get_int(obj, "h11", "base", required=True),
            obj.get("calabi_yau", True),
        )
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"base: malformed custom base ({exc})") from exc
    except GeometryError as exc:
        raise DocumentError(f"base: {exc}") from exc


def _parse_component(obj, idx: int) -> Component:
    context = f"components[{idx}]"
    _require_keys(
        obj, ("class", "ord_a", "ord_b", "ord_d", "monodromy", "genus", "cover_genus"), context
    )
    cls = obj.get("class")
    if not isinstance(cls, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in cls
    ):
        raise DocumentError(f"{context}: 'class' must be a list of integers")
    try:
        kodaira = KodairaData(
            _get_int(obj, "ord_a", context, required=True),
            _get_int(obj, "ord_b", context, required=True),
            _get_int(obj, "ord_d", context, required=True),
            obj.get("monodromy", "not-applicable"),
        )
    except GeometryError as exc:
        raise DocumentError(f"{context}: {exc}") from exc
    return Component(
        tuple(cls),
        kodaira,
        _get_int(obj, "genus", context),
        _get_int(obj, "cover_genus", context),
    )


def _parse_rep_override(obj, context: str):
    _require_keys(obj, ("pieces", "prefactor"), context)
    pieces = obj.get("pieces")
    if not isinstance(pieces, list) or not pieces:
        raise DocumentError(f"{context}: 'pieces' must be a non-empty list")
    out = []
    for piece in pieces:
        if (
            not isinstance(piece, list)
            or len(piece) != 2
            or not isinstance(piece[1], str)
        ):
            raise DocumentError(f"{context}: each piece is [multiplicity, name]")
        mult = piece[0]
        if isinstance(mult, str):
            mult = Fraction(mult)
        elif isinstance(mult, int) and not isinstance(mult, bool):
            mult = Fraction(mult)
        else:
            raise DocumentError(f"{context}: piece multiplicity must be rational")
        out.append((mult, piece[1]))
    return tuple(out), _get_fraction(obj, "prefactor", context)


def _parse_katz_vafa(obj, context: str) -> KatzVafaContext:
    _require_keys(
        obj,
        ("ambient", "after_base_change", "b", "projection", "target_projection", "branch_point"),
        context,
    )
    try:
        g_q = algebra_from_label(obj["ambient"])
        g_qs = algebra_from_label(obj["after_base_change"])
    except (KeyError, Exception) as exc:
        raise DocumentError(f"{context}: {exc}") from exc

    def matrix(key):
        if key not in obj:
            return None
        m = obj[key]
        if not isinstance(m, list) or not all(isinstance(r, list) for r in m):
            raise DocumentError(f"{context}: {key!r} must be a matrix")
        return tuple(tuple(int(x) for x in row) for row in m)

    return KatzVafaContext(
        g_q,
        g_qs,
        _get_int(obj, "b", context, default=1),
        matrix("projection"),
        matrix("target_projection"),
        bool(obj.get("branch_point", False)),
    )


def _parse_collision(obj, idx: int) -> Collision:
    context = f"collisions[{idx}]"
    _require_keys(
        obj, ("kind", "count", "fiber_euler", "component", "rep", "katz_vafa"), context
    )
    kind = obj.get("kind")
    if kind not in ("Q1", "Q2", "Cr"):
        raise DocumentError(f"{context}: kind must be one of Q1, Q2, Cr")
    rep_pieces, rep_prefactor = (None, Fraction(1))
    if "rep" in obj:
        rep_pieces, rep_prefactor = _parse_rep_override(obj["rep"], f"{context}.rep")
    kv = _parse_katz_vafa(obj["katz_vafa"], f"{context}.katz_vafa") if "katz_vafa" in obj else None
    return Collision(
        kind,
        _get_int(obj, "count", context, required=True),
        _get_int(obj, "fiber_euler", context),
        _get_int(obj, "component", context, default=0),
        rep_pieces,
        rep_prefactor,
        kv,
    )


def _parse_singular_point(obj, idx: int) -> SingularPoint:
    context = f"singular_points[{idx}]"
    _require_keys(obj, ("count", "variables", "equation"), context)
    variables = obj.get("variables")
    if not isinstance(variables, list) or not all(isinstance(v, str) for v in variables):
        raise DocumentError(f"{context}: 'variables' must be a list of names")
    try:
        poly = parse_polynomial(obj["equation"], variables)
    except (KeyError, Exception) as exc:
        raise DocumentError(f"{context}: {exc}") from exc
    return SingularPoint(_get_int(obj, "count", context, required=True), poly)


def _parse_chi(obj) -> ChiSpec:
    context = "euler_characteristic"
    _require_keys(
        obj,
        (
            "source",
            "value",
            "b2",
            "b3",
            "kadef",
            "cxdef",
            "strata",
            "points",
            "include_collisions",
            "expect",
        ),
        context,
    )
    source = obj.get("source")
    strata = []
    for i, item in enumerate(obj.get("strata", [])):
        _require_keys(item, ("chi", "fiber_euler"), f"{context}.strata[{i}]")
        strata.append(
            (
                _get_int(item, "chi", context, required=True),
                _get_int(item, "fiber_euler", context, required=True),
            )
        )
    points = []
    for i, item in enumerate(obj.get("points", [])):
        _require_keys(item, ("count", "fiber_euler"), f"{context}.points[{i}]")
        points.append(
            (
                _get_int(item, "count", context, required=True),
                _get_int(item, "fiber_euler", context, required=True),
            )
        )
    try:
        return ChiSpec(
            source,
            _get_int(obj, "value", context),
            _get_int(obj, "b2", context),
            _get_int(obj, "b3", context),
            _get_int(obj, "kadef", context),
            _get_int(obj, "cxdef", context),
            tuple(strata),
            tuple(points),
            bool(obj.get("include_collisions", True)),
            _get_int(obj, "expect", context),
        )
    except Exception as exc:
        raise DocumentError(f"{context}: {exc}") from exc


def parse_model_document(data: Dict[str, Any]) -> FibrationModel:
    _require_keys(
        data,
        (
            "version",
            "base",
            "components",
            "collisions",
            "mordell_weil_rank",
            "singular_points",
            "euler_characteristic",
            "budget",
            "options",
        ),
        "document",
    )
    version = data.get("version")
    if version != SCHEMA_VERSION:
        raise DocumentError(f"document: version must be {SCHEMA_VERSION}, got {version!r}")
    if "base" not in data:
        raise DocumentError("document: missing 'base'")
    if "euler_characteristic" not in data:
        raise DocumentError("document: missing 'euler_characteristic'")

    base = _parse_base(data["base"])
    components = tuple(
        _parse_component(obj, i) for i, obj in enumerate(data.get("components", []))
    )
    collisions = tuple(
        _parse_collision(obj, i) for i, obj in enumerate(data.get("collisions", []))
    )
    singular = tuple(
        _parse_singular_point(obj, i)
        for i, obj in enumerate(data.get("singular_points", []))
    )
    chi = _parse_chi(data["euler_characteristic"])

    budget = None
    if "budget" in data:
        _require_keys(data["budget"], ("r1", "r2"), "budget")
        budget = BudgetSpec(
            _get_int(data["budget"], "r1", "budget", required=True),
            _get_int(data["budget"], "r2", "budget", required=True),
        )

    options = ModelOptions()
    if "options" in data:
        _require_keys(
            data["options"],
            ("generic", "abelian_vector_multiplets", "variant"),
            "options",
        )
        options = ModelOptions(
            bool(data["options"].get("generic", True)),
            bool(data["options"].get("abelian_vector_multiplets", True)),
            data["options"].get("variant", "auto"),
        )

    try:
        return FibrationModel(
            base,
            components,
            collisions,
            _get_int(data, "mordell_weil_rank", "document", default=0),
            singular,
            chi,
            budget,
            options,
        )
    except Exception as exc:
        raise DocumentError(str(exc)) from exc


def load_model(path: str) -> FibrationModel:
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"not valid JSON: {exc}") from exc
    return parse_model_document(data)
