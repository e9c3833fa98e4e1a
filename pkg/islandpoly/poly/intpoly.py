from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from math import comb

from ..utils import RangeError


@dataclass(frozen=True)
class IntPoly:
    """
    A polynomial in x with integer coefficients, stored densely from the
    constant term up. Trailing zeros are stripped, so the zero polynomial
    has no coefficients and equal polynomials compare equal.
    """

    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        coefficients = [int(c) for c in self.coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, 'coefficients', tuple(coefficients))

    @classmethod
    def of(cls, *coefficients: int) -> IntPoly:
        """IntPoly.of(3, 4, 1) is 3 + 4x + x^2."""
        return cls(coefficients)

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, c: int, k: int) -> IntPoly:
        """c x^k."""

        if k < 0:
            raise RangeError(attr='degree', msg=f'negative power {k}')
        return cls((0,) * k + (c,))

    @classmethod
    def one_plus_x(cls, k: int) -> IntPoly:
        """
        The binomial (1+x)^k, k >= 0.

        Raises:
            RangeError: For negative k.
        """

        if k < 0:
            raise RangeError(attr='degree', msg=f'(1+x)^{k} is not a '
                                                'polynomial')
        return cls(tuple(comb(k, i) for i in range(k + 1)))

    @property
    def degree(self) -> int | None:
        """The degree, or None for the zero polynomial."""
        return len(self.coefficients) - 1 if self.coefficients else None

    def is_zero(self) -> bool:
        return not self.coefficients

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __getitem__(self, i: int) -> int:
        """The coefficient of x^i; zero beyond the degree."""

        if i < 0:
            raise IndexError(i)
        return self.coefficients[i] if i < len(self.coefficients) else 0

    def __iter__(self):
        return iter(self.coefficients)

    def __len__(self) -> int:
        return len(self.coefficients)

    @staticmethod
    def _coerce(other: IntPoly | int) -> IntPoly:
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly((other,))
        return NotImplemented

    def __add__(self, other: IntPoly | int) -> IntPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        return IntPoly(tuple(x + (b[i] if i < len(b) else 0)
                             for i, x in enumerate(a)))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coefficients))

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + -other

    def __rsub__(self, other: int) -> IntPoly:
        return -self + other

    def scale(self, k: int) -> IntPoly:
        return IntPoly(tuple(k * c for c in self.coefficients))

    def shift(self, k: int) -> IntPoly:
        """Multiply by x^k."""

        if k < 0:
            raise RangeError(attr='shift', msg=f'negative power {k}')
        if not self.coefficients:
            return self
        return IntPoly((0,) * k + self.coefficients)

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        if k < 0:
            raise RangeError(attr='power', msg=f'negative power {k}')
        result = IntPoly((1,))
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, x: int) -> int:
        """Evaluate exactly, by Horner's rule."""

        value = 0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def __str__(self) -> str:
        """Render as '4 + 9 x + 6 x^2 + x^3', zero terms left out."""

        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                power = 'x' if i == 1 else f'x^{i}'
                body = power if abs(c) == 1 else f'{abs(c)} {power}'
            if not terms:
                terms.append(body if c > 0 else f'-{body}')
            else:
                terms.append(f'+ {body}' if c > 0 else f'- {body}')
        return ' '.join(terms) if terms else '0'

    def __repr__(self) -> str:
        return f'IntPoly({str(self)!r})'

    def to_json(self) -> list[int]:
        return list(self.coefficients)

    @classmethod
    def parse(cls, text: str) -> IntPoly:
        """
        Read a comma or space separated list of coefficients, constant term
        first, such as '4, 9, 6, 1'.

        Raises:
            ValueError: If an entry isn't an integer.
        """

        parts = text.replace(',', ' ').split()
        return cls(tuple(int(p) for p in parts))


def poly_sum(polys: Iterable[IntPoly]) -> IntPoly:
    total = IntPoly()
    for p in polys:
        total = total + p
    return total


def shifted_basis_decompose(p: IntPoly, n: int) -> tuple[int, ...]:
    """
    Write p as a sum of powers of (1+x): p = sum a_k (1+x)^k, k < n. The
    coefficients come from substituting x = y - 1 and expanding.

    Args:
        p: The polynomial, of degree at most n - 1.
        n: The number of basis elements.

    Returns:
        tuple[int, ...]: a_0, a_1, ..., a_{n-1}.

    Raises:
        RangeError: If the degree of p is n or more.
    """

    if p.degree is not None and p.degree > n - 1:
        raise RangeError(attr='degree',
                         msg=f'degree {p.degree} is too large for '
                             f'{n} basis polynomials')

    # x^i = (y - 1)^i = sum_k C(i, k) y^k (-1)^(i-k)
    a = [0] * n
    for i, c in enumerate(p.coefficients):
        for k in range(i + 1):
            a[k] += c * comb(i, k) * (-1) ** (i - k)
    return tuple(a)


def shifted_basis_recompose(a: Sequence[int]) -> IntPoly:
    """The inverse of shifted_basis_decompose: sum a_k (1+x)^k."""
    return poly_sum(IntPoly.one_plus_x(k).scale(c) for k, c in enumerate(a))
