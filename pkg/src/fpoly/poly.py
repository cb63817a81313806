"""Exact polynomial arithmetic.

``UniPoly`` holds Python ints, ``RatPoly`` holds ``Fraction`` coefficients,
and ``BiPoly`` is a sparse map ``(i, j) -> int`` in two variables ``t, s``.
All three are immutable and kept in canonical form (no trailing zeros, no
stored zero terms), so ``==`` is coefficient equality.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

__all__ = [
    "UniPoly",
    "RatPoly",
    "BiPoly",
    "FVector",
    "NotAnFFunction",
    "poly_add",
    "poly_mul",
    "antiderivative",
    "derivative",
    "poly_eval",
    "bipoly_eval",
    "f_vector_to_poly",
    "poly_to_f_vector",
    "binomial_poly",
]


class NotAnFFunction(ValueError):
    pass


def _fmt_coeff(c) -> str:
    if isinstance(c, Fraction) and c.denominator == 1:
        return str(c.numerator)
    return str(c)


def _render_terms(terms: list[tuple[object, str]]) -> str:
    """Join ``(coefficient, monomial)`` pairs into ``a + b*t - c*t^2``."""
    if not terms:
        return "0"
    parts: list[str] = []
    for k, (c, mono) in enumerate(terms):
        neg = c < 0
        a = -c if neg else c
        if mono and a == 1:
            body = mono
        elif mono:
            body = f"{_fmt_coeff(a)}*{mono}"
        else:
            body = _fmt_coeff(a)
        if k == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)


def _power(var: str, k: int) -> str:
    if k == 0:
        return ""
    return var if k == 1 else f"{var}^{k}"


class _Dense:
    """Shared dense univariate machinery; subclasses fix the coefficient ring."""

    __slots__ = ("coeffs",)

    @staticmethod
    def _coerce(c):
        raise NotImplementedError

    def __init__(self, coeffs: Iterable = ()):
        cs = [self._coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c=1):
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self._coerce(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, _Dense):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _Dense._const_tuple(other)
        return NotImplemented

    @staticmethod
    def _const_tuple(c) -> tuple:
        return (c,) if c != 0 else ()

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _result_type(self, other):
        if isinstance(self, RatPoly) or isinstance(other, RatPoly) or isinstance(other, Fraction):
            return RatPoly
        return type(self)

    def _lift(self, other):
        if isinstance(other, _Dense):
            return other.coeffs
        if isinstance(other, (int, Fraction)):
            return (other,)
        return None

    def __add__(self, other):
        oc = self._lift(other)
        if oc is None:
            return NotImplemented
        a, b = self.coeffs, oc
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return self._result_type(other)(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)(-c for c in self.coeffs)

    def __sub__(self, other):
        oc = self._lift(other)
        if oc is None:
            return NotImplemented
        return self + self._result_type(other)(-c for c in oc)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        oc = self._lift(other)
        if oc is None:
            return NotImplemented
        a, b = self.coeffs, oc
        if not a or not b:
            return self._result_type(other)()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return self._result_type(other)(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = type(self)([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, t):
        """Horner evaluation; exact for int/Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def shift_down(self):
        """Divide by ``t``; the constant term must vanish."""
        if self.coeffs and self.coeffs[0] != 0:
            raise ValueError("polynomial is not divisible by t")
        return type(self)(self.coeffs[1:])

    def render(self, var: str = "t", mul: str = "*") -> str:
        terms = [(c, _power(var, k)) for k, c in enumerate(self.coeffs) if c != 0]
        text = _render_terms(terms)
        return text if mul == "*" else text.replace("*", mul)

    def __str__(self) -> str:
        return self.render()

    def to_json(self) -> list:
        raise NotImplementedError


class UniPoly(_Dense):
    """Univariate polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, int) and not isinstance(c, bool):
            return c
        if isinstance(c, Rational) and c.denominator == 1:
            return int(c.numerator)
        raise TypeError(f"UniPoly coefficient must be an integer, got {c!r}")

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)!r})"

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data: list) -> "UniPoly":
        return cls(int(c) for c in data)


class RatPoly(_Dense):
    """Univariate polynomial over the rationals."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, Fraction):
            return c
        if isinstance(c, (int, Rational)):
            return Fraction(c)
        raise TypeError(f"RatPoly coefficient must be rational, got {c!r}")

    def __repr__(self) -> str:
        return f"RatPoly({[str(c) for c in self.coeffs]!r})"

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_unipoly(self) -> UniPoly:
        if not self.is_integral():
            raise ValueError(f"non-integer coefficient in {self}")
        return UniPoly(c.numerator for c in self.coeffs)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: list) -> "RatPoly":
        return cls(Fraction(c) for c in data)


class BiPoly:
    """Sparse bivariate integer polynomial ``sum c[i,j] t^i s^j``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], int] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            acc[(i, j)] = acc.get((i, j), 0) + int(c)
        self.terms = {k: c for k, c in acc.items() if c != 0}

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.terms.get(ij, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        if isinstance(other, int):
            return self.terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        if isinstance(other, int):
            return BiPoly({k: c * other for k, c in self.terms.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (i, j), a in self.terms.items():
            for (k, l), b in other.terms.items():
                key = (i + k, j + l)
                out[key] = out.get(key, 0) + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def swap(self) -> "BiPoly":
        """Exchange the roles of ``t`` and ``s``."""
        return BiPoly({(j, i): c for (i, j), c in self.terms.items()})

    def shift(self, di: int, dj: int) -> "BiPoly":
        """Multiply by ``t^di s^dj`` (negative shifts must stay nonnegative)."""
        return BiPoly({(i + di, j + dj): c for (i, j), c in self.terms.items()})

    def __call__(self, t, s):
        return sum(c * t**i * s**j for (i, j), c in self.terms.items())

    def shape(self) -> tuple[int, int]:
        if not self.terms:
            return (0, 0)
        return (max(i for i, _ in self.terms) + 1, max(j for _, j in self.terms) + 1)

    def to_matrix(self) -> list[list[int]]:
        rows, cols = self.shape()
        return [[self.terms.get((i, j), 0) for j in range(cols)] for i in range(rows)]

    @classmethod
    def from_matrix(cls, matrix: Iterable[Iterable[int]]) -> "BiPoly":
        return cls({(i, j): c for i, row in enumerate(matrix) for j, c in enumerate(row)})

    to_json = to_matrix
    from_json = from_matrix

    def render(self, t: str = "t", s: str = "s", mul: str = "*") -> str:
        terms = []
        for (i, j) in sorted(self.terms):
            mono = "*".join(p for p in (_power(t, i), _power(s, j)) if p)
            terms.append((self.terms[(i, j)], mono))
        text = _render_terms(terms)
        return text if mul == "*" else text.replace("*", mul)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"BiPoly({dict(sorted(self.terms.items()))!r})"


class FVector(tuple):
    """Clique counts ``(f_0, ..., f_d)`` by dimension."""

    def __new__(cls, counts: Iterable[int] = ()):
        counts = tuple(int(c) for c in counts)
        if any(c <= 0 for c in counts):
            raise ValueError(f"f-vector entries must be positive: {counts}")
        return super().__new__(cls, counts)

    @property
    def dimension(self) -> int:
        return len(self) - 1

    def __repr__(self) -> str:
        return f"FVector({tuple(self)!r})"


Poly = Union[UniPoly, RatPoly]


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def antiderivative(p: Poly) -> RatPoly:
    """``F`` with ``F(0) = 0`` and ``F' = p``."""
    return RatPoly([0] + [Fraction(c, k + 1) for k, c in enumerate(p.coeffs)])


def derivative(p: Poly) -> Poly:
    return type(p)(k * c for k, c in enumerate(p.coeffs) if k)


def poly_eval(p: Poly, t) -> Fraction | int:
    return p(t)


def bipoly_eval(p: BiPoly, t, s):
    return p(t, s)


def f_vector_to_poly(fv: Iterable[int]) -> UniPoly:
    return UniPoly([1, *fv])


def poly_to_f_vector(p: UniPoly) -> FVector:
    if p[0] != 1:
        raise NotAnFFunction(f"constant term must be 1, got {p[0]}")
    if any(c < 0 for c in p.coeffs):
        raise NotAnFFunction("f-function coefficients must be nonnegative")
    return FVector(p.coeffs[1:])


_BINOMIAL_ROWS: list[UniPoly] = [UniPoly([1])]


def binomial_poly(m: int) -> UniPoly:
    """``(1 + t)^m``, cached row by row."""
    while len(_BINOMIAL_ROWS) <= m:
        prev = _BINOMIAL_ROWS[-1].coeffs
        row = [1] + [prev[k] + prev[k + 1] for k in range(len(prev) - 1)] + [1]
        _BINOMIAL_ROWS.append(UniPoly(row))
    return _BINOMIAL_ROWS[m]
