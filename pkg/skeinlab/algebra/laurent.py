"""Exact Laurent polynomials in t with integer coefficients (the ground ring R)."""
from __future__ import annotations

from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

Scalar = Union[int, "LaurentInt"]


class LaurentInt:
    """Immutable element of Z[t, t^-1] stored as exponent -> coefficient.

    Zero coefficients are never stored, so two equal polynomials always have
    identical coefficient maps.
    """

    __slots__ = ('_coeffs', '_hash')

    def __init__(self, coeffs: Optional[Mapping[int, int]] = None):
        self._coeffs: Dict[int, int] = {
            int(k): int(c) for k, c in (coeffs or {}).items() if c
        }
        self._hash: Optional[int] = None

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> 'LaurentInt':
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, value: int) -> 'LaurentInt':
        return cls({0: value})

    @classmethod
    def zero(cls) -> 'LaurentInt':
        return cls()

    @classmethod
    def one(cls) -> 'LaurentInt':
        return cls({0: 1})

    @staticmethod
    def coerce(value: Scalar) -> 'LaurentInt':
        if isinstance(value, LaurentInt):
            return value
        if isinstance(value, int):
            return LaurentInt.constant(value)
        raise TypeError(f"cannot use {type(value).__name__} as a Laurent polynomial")

    # Inspection

    def items(self) -> Iterator[Tuple[int, int]]:
        """(exponent, coefficient) pairs by ascending exponent."""
        return iter(sorted(self._coeffs.items()))

    def coefficient(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    @property
    def min_degree(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no degree")
        return min(self._coeffs)

    @property
    def max_degree(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no degree")
        return max(self._coeffs)

    def is_constant(self) -> bool:
        return all(k == 0 for k in self._coeffs)

    # Ring operations

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __neg__(self) -> 'LaurentInt':
        return LaurentInt({k: -c for k, c in self._coeffs.items()})

    def __add__(self, other: Scalar) -> 'LaurentInt':
        if not isinstance(other, (int, LaurentInt)):
            return NotImplemented
        other = LaurentInt.coerce(other)
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out.get(k, 0) + c
        return LaurentInt(out)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> 'LaurentInt':
        if not isinstance(other, (int, LaurentInt)):
            return NotImplemented
        return self + (-LaurentInt.coerce(other))

    def __rsub__(self, other: Scalar) -> 'LaurentInt':
        if not isinstance(other, (int, LaurentInt)):
            return NotImplemented
        return LaurentInt.coerce(other) - self

    def __mul__(self, other: Scalar) -> 'LaurentInt':
        if isinstance(other, int):
            return LaurentInt({k: c * other for k, c in self._coeffs.items()})
        if not isinstance(other, LaurentInt):
            return NotImplemented
        out: Dict[int, int] = {}
        for k1, c1 in self._coeffs.items():
            for k2, c2 in other._coeffs.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return LaurentInt(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'LaurentInt':
        if exponent < 0:
            if len(self._coeffs) != 1:
                raise ValueError(f"{self} is not a unit of Z[t, t^-1]")
            (k, c), = self._coeffs.items()
            if c not in (1, -1):
                raise ValueError(f"{self} is not a unit of Z[t, t^-1]")
            return LaurentInt({-k * -exponent: c ** -exponent})
        result = LaurentInt.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._coeffs == ({0: other} if other else {})
        if not isinstance(other, LaurentInt):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    # Substitutions

    def mirror(self) -> 'LaurentInt':
        """Substitute t -> t^-1."""
        return LaurentInt({-k: c for k, c in self._coeffs.items()})

    def shift(self, exponent: int) -> 'LaurentInt':
        """Multiply by t^exponent."""
        return LaurentInt({k + exponent: c for k, c in self._coeffs.items()})

    def exact_divide(self, other: Scalar) -> 'LaurentInt':
        """
        Divide exactly in Z[t, t^-1].

        Args:
            other: Non-zero divisor

        Returns:
            The quotient q with q * other == self

        Raises:
            ZeroDivisionError: other is zero
            ValueError: the division leaves a remainder
        """
        other = LaurentInt.coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not self:
            return LaurentInt()
        num = [self.coefficient(k) for k in range(self.min_degree, self.max_degree + 1)]
        den = [other.coefficient(k) for k in range(other.min_degree, other.max_degree + 1)]
        lead = den[-1]
        quotient: Dict[int, int] = {}
        for i in range(len(num) - len(den), -1, -1):
            top = num[i + len(den) - 1]
            if not top:
                continue
            q, r = divmod(top, lead)
            if r:
                raise ValueError(f"{self} is not divisible by {other}")
            quotient[i] = q
            for j, d in enumerate(den):
                num[i + j] -= q * d
        if any(num):
            raise ValueError(f"{self} is not divisible by {other}")
        offset = self.min_degree - other.min_degree
        return LaurentInt({offset + i: q for i, q in quotient.items()})

    def __str__(self) -> str:
        if not self._coeffs:
            return '0'
        return ' + '.join(f"{c}*t^{k}" for k, c in self.items())

    def __repr__(self) -> str:
        return f"LaurentInt({self})"


T = LaurentInt.monomial(1)
T_INV = LaurentInt.monomial(-1)
