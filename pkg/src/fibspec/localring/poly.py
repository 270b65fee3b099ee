"""Exact multivariate polynomials over the rationals.

Coefficients are `fractions.Fraction` throughout; there is no floating point
anywhere in this module.  Monomials are exponent tuples keyed against a fixed
ordered variable list, and term comparison is delegated to a `MonomialOrder`
(global degree-lex, or the local negative-degree-lex order used for
localizations at the origin).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence, Tuple

Exponent = Tuple[int, ...]


class PolynomialError(ValueError):
    """Invalid polynomial input or operation."""


class PolynomialSyntaxError(PolynomialError):
    """Text does not conform to the polynomial grammar."""


class MonomialOrder:
    """Orders exponent vectors.

    kind 'global' is degree-lex (every variable ranks above 1), kind 'local'
    is negative-degree-lex (1 ranks above every variable).  Ties are broken
    lexicographically along `permutation`, a priority list of variable
    indices.
    """

    GLOBAL = "global"
    LOCAL = "local"

    __slots__ = ("kind", "permutation")

    def __init__(self, kind: str = LOCAL, permutation: Optional[Sequence[int]] = None):
        if kind not in (self.GLOBAL, self.LOCAL):
            raise PolynomialError(f"unknown order kind {kind!r}")
        self.kind = kind
        self.permutation = tuple(permutation) if permutation is not None else None

    def _perm(self, n: int) -> Tuple[int, ...]:
        if self.permutation is None:
            return tuple(range(n))
        if sorted(self.permutation) != list(range(n)):
            raise PolynomialError("order permutation does not match variable count")
        return self.permutation

    def sort_key(self, exp: Exponent):
        """Ascending key: max() over keys picks the leading monomial."""
        deg = sum(exp)
        lex = tuple(exp[i] for i in self._perm(len(exp)))
        head = -deg if self.kind == self.LOCAL else deg
        return (head,) + lex

    def is_local(self) -> bool:
        return self.kind == self.LOCAL

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}, {self.permutation!r})"


def _exp_mul(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def _exp_divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _exp_div(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def _exp_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


class Polynomial:
    """Immutable sparse polynomial: exponent tuple -> nonzero Fraction."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Dict[Exponent, Fraction]):
        self.variables = tuple(variables)
        n = len(self.variables)
        clean: Dict[Exponent, Fraction] = {}
        for exp, coeff in terms.items():
            if len(exp) != n:
                raise PolynomialError("exponent vector length mismatch")
            if any(e < 0 for e in exp):
                raise PolynomialError("negative exponent")
            c = Fraction(coeff)
            if c != 0:
                clean[tuple(exp)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "Polynomial":
        return cls(variables, {})

    @classmethod
    def constant(cls, variables: Sequence[str], value) -> "Polynomial":
        n = len(variables)
        return cls(variables, {(0,) * n: Fraction(value)})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> "Polynomial":
        idx = list(variables).index(name)
        exp = tuple(1 if i == idx else 0 for i in range(len(variables)))
        return cls(variables, {exp: Fraction(1)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def leading_monomial(self, order: MonomialOrder) -> Exponent:
        if not self.terms:
            raise PolynomialError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.sort_key)

    def leading_coefficient(self, order: MonomialOrder) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def ecart(self, order: MonomialOrder) -> int:
        """Total degree minus the degree of the leading monomial."""
        return self.total_degree() - sum(self.leading_monomial(order))

    # -- arithmetic --------------------------------------------------------

    def _check_compat(self, other: "Polynomial"):
        if self.variables != other.variables:
            raise PolynomialError("polynomials over different variable lists")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_compat(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, Fraction(0)) + c
            if s == 0:
                out.pop(exp, None)
            else:
                out[exp] = s
        return Polynomial(self.variables, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check_compat(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, Fraction(0)) - c
            if s == 0:
                out.pop(exp, None)
            else:
                out[exp] = s
        return Polynomial(self.variables, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.variables, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_compat(other)
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _exp_mul(e1, e2)
                s = out.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return Polynomial(self.variables, out)

    def scale_term(self, coeff, exp: Exponent) -> "Polynomial":
        """Multiply by coeff * x^exp."""
        c0 = Fraction(coeff)
        if c0 == 0:
            return Polynomial.zero(self.variables)
        return Polynomial(
            self.variables, {_exp_mul(e, exp): c * c0 for e, c in self.terms.items()}
        )

    def monic(self, order: MonomialOrder) -> "Polynomial":
        lc = self.leading_coefficient(order)
        if lc == 1:
            return self
        return Polynomial(self.variables, {e: c / lc for e, c in self.terms.items()})

    def diff(self, var_index: int) -> "Polynomial":
        out: Dict[Exponent, Fraction] = {}
        for exp, c in self.terms.items():
            k = exp[var_index]
            if k == 0:
                continue
            e = tuple(x - 1 if i == var_index else x for i, x in enumerate(exp))
            out[e] = out.get(e, Fraction(0)) + c * k
        return Polynomial(self.variables, out)

    # -- equality / printing ------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.variables == other.variables
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def _monomial_str(self, exp: Exponent) -> str:
        parts = []
        for name, e in zip(self.variables, exp):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        order = MonomialOrder(MonomialOrder.GLOBAL)
        exps = sorted(self.terms, key=order.sort_key, reverse=True)
        pieces = []
        for i, exp in enumerate(exps):
            c = self.terms[exp]
            mono = self._monomial_str(exp)
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if i == 0:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, vars={self.variables})"


# -- parsing ----------------------------------------------------------------

_TOKEN_OPS = "+-*^/"


def _tokenize(text: str) -> Iterable[Tuple[str, str]]:
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _TOKEN_OPS:
            yield ("op", ch)
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            yield ("num", text[i:j])
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            yield ("name", text[i:j])
            i = j
            continue
        raise PolynomialSyntaxError(f"unexpected character {ch!r} at position {i}")


def parse_polynomial(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse ASCII polynomial text over the declared variables.

    Grammar: sums of terms, each term a '*'-separated product of rational
    literals (`3`, `1/2`) and powered variables (`x`, `x^2`).  Implicit
    multiplication is not accepted and exponents must be bare naturals.
    """
    variables = tuple(variables)
    if len(set(variables)) != len(variables):
        raise PolynomialError("duplicate variable names")
    tokens = list(_tokenize(text))
    if not tokens:
        raise PolynomialSyntaxError("empty input")
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    var_index = {name: i for i, name in enumerate(variables)}
    nvars = len(variables)

    def parse_factor() -> Tuple[Fraction, Exponent]:
        kind, val = take()
        if kind == "num":
            coeff = Fraction(int(val))
            if peek() == ("op", "/"):
                take()
                k2, v2 = take()
                if k2 != "num":
                    raise PolynomialSyntaxError("expected integer after '/'")
                if int(v2) == 0:
                    raise PolynomialSyntaxError("zero denominator")
                coeff /= int(v2)
            return coeff, (0,) * nvars
        if kind == "name":
            if val not in var_index:
                raise PolynomialSyntaxError(f"unknown symbol {val!r}")
            e = 1
            if peek() == ("op", "^"):
                take()
                k2, v2 = take()
                if k2 != "num":
                    raise PolynomialSyntaxError("malformed exponent (bare natural required)")
                e = int(v2)
            exp = tuple(e if i == var_index[val] else 0 for i in range(nvars))
            return Fraction(1), exp
        raise PolynomialSyntaxError(f"unexpected token {val!r}")

    def parse_term() -> Tuple[Fraction, Exponent]:
        coeff, exp = parse_factor()
        while peek() == ("op", "*"):
            take()
            c2, e2 = parse_factor()
            coeff *= c2
            exp = _exp_mul(exp, e2)
        return coeff, exp

    terms: Dict[Exponent, Fraction] = {}

    def accumulate(sign: int):
        coeff, exp = parse_term()
        s = terms.get(exp, Fraction(0)) + sign * coeff
        if s == 0:
            terms.pop(exp, None)
        else:
            terms[exp] = s

    sign = 1
    kind, val = peek()
    if kind == "op" and val in "+-":
        take()
        sign = -1 if val == "-" else 1
    accumulate(sign)
    while pos < len(tokens):
        kind, val = take()
        if kind != "op" or val not in "+-":
            raise PolynomialSyntaxError(f"expected '+' or '-' before {val!r}")
        accumulate(-1 if val == "-" else 1)

    return Polynomial(variables, terms)
