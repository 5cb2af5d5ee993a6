"""Chebyshev polynomials, the T-basis and threading plans."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Any, Dict, Iterator, List, Sequence, Tuple, Union

from skeinlab.algebra.laurent import LaurentInt, Scalar


class PolyZ:
    """Polynomial in z with LaurentInt coefficients, stored ascending."""

    __slots__ = ('_coeffs',)

    def __init__(self, coeffs: Sequence[Scalar] = ()):
        cs = [LaurentInt.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self._coeffs: Tuple[LaurentInt, ...] = tuple(cs)

    @classmethod
    def z(cls) -> 'PolyZ':
        return cls((0, 1))

    @classmethod
    def constant(cls, value: Scalar) -> 'PolyZ':
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coefficient: Scalar = 1) -> 'PolyZ':
        return cls([0] * degree + [coefficient])

    @property
    def coeffs(self) -> Tuple[LaurentInt, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def coefficient(self, j: int) -> LaurentInt:
        if 0 <= j < len(self._coeffs):
            return self._coeffs[j]
        return LaurentInt()

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __neg__(self) -> 'PolyZ':
        return PolyZ([-c for c in self._coeffs])

    def __add__(self, other: Union['PolyZ', Scalar]) -> 'PolyZ':
        if not isinstance(other, PolyZ):
            other = PolyZ.constant(other)
        size = max(len(self._coeffs), len(other._coeffs))
        return PolyZ([self.coefficient(j) + other.coefficient(j) for j in range(size)])

    __radd__ = __add__

    def __sub__(self, other: Union['PolyZ', Scalar]) -> 'PolyZ':
        if not isinstance(other, PolyZ):
            other = PolyZ.constant(other)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> 'PolyZ':
        return PolyZ.constant(other) - self

    def __mul__(self, other: Union['PolyZ', Scalar]) -> 'PolyZ':
        if not isinstance(other, PolyZ):
            if not isinstance(other, (int, LaurentInt)):
                return NotImplemented
            return PolyZ([c * other for c in self._coeffs])
        if not self or not other:
            return PolyZ()
        out = [LaurentInt()] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] = out[i + j] + a * b
        return PolyZ(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'PolyZ':
        result = PolyZ.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = PolyZ.constant(other)
        if not isinstance(other, PolyZ):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def evaluate_at(self, x: Any, one: Any) -> Any:
        """Horner evaluation at x, where `one` is the identity of x's ring."""
        acc = one * 0
        for c in reversed(self._coeffs):
            acc = acc * x + one * c
        return acc

    def mirror(self) -> 'PolyZ':
        return PolyZ([c.mirror() for c in self._coeffs])

    def __str__(self) -> str:
        if not self._coeffs:
            return '0'
        return ' + '.join(f"({c})*z^{j}" for j, c in enumerate(self._coeffs) if c)

    def __repr__(self) -> str:
        return f"PolyZ({self})"


@lru_cache(maxsize=None)
def cheb_T(n: int) -> PolyZ:
    """Type-1 Chebyshev polynomial: T0 = 2, T1 = z, Tn = z*T(n-1) - T(n-2)."""
    if n < 0:
        raise ValueError(f"T_n needs n >= 0, got {n}")
    if n == 0:
        return PolyZ.constant(2)
    if n == 1:
        return PolyZ.z()
    return PolyZ.z() * cheb_T(n - 1) - cheb_T(n - 2)


@lru_cache(maxsize=None)
def cheb_S(n: int) -> PolyZ:
    """Type-2 Chebyshev polynomial, extended backwards so S(-1) = 0 and S(-2) = -1."""
    if n < -2:
        raise ValueError(f"S_n needs n >= -2, got {n}")
    if n == -2:
        return PolyZ.constant(-1)
    if n == -1:
        return PolyZ()
    return PolyZ.z() * cheb_S(n - 1) - cheb_S(n - 2)


def t_basis_coefficients(p: PolyZ) -> Tuple[Dict[int, LaurentInt], LaurentInt]:
    """
    Peel p into the T-basis from the top degree down.

    Returns:
        ({j: c_j for j >= 1 with c_j != 0}, r) where p = r + sum c_j T_j and r
        is the remaining constant (so the T_0 coefficient is r / 2)
    """
    rest = list(p.coeffs)
    found: Dict[int, LaurentInt] = {}
    for j in range(len(rest) - 1, 0, -1):
        c = rest[j]
        if not c:
            continue
        found[j] = c
        for i, tc in enumerate(cheb_T(j).coeffs):
            rest[i] = rest[i] - c * tc
    return found, (rest[0] if rest else LaurentInt())


def to_T_basis(p: PolyZ) -> List[Fraction]:
    """
    Coefficients (c_0, ..., c_d) with p = sum c_j T_j, for integer polynomials.

    c_0 may be a half-integer because T_0 = 2.
    """
    if not all(c.is_constant() for c in p.coeffs):
        raise ValueError(f"{p} has non-constant coefficients; use t_basis_coefficients")
    found, remainder = t_basis_coefficients(p)
    out = [Fraction(0)] * max(len(p.coeffs), 1)
    out[0] = Fraction(remainder.coefficient(0), 2)
    for j, c in found.items():
        out[j] = Fraction(c.coefficient(0))
    return out


def from_T_basis(coeffs: Sequence[Fraction]) -> PolyZ:
    """Inverse of to_T_basis."""
    total = PolyZ()
    for j, c in enumerate(coeffs):
        scaled = 2 * Fraction(c) if j == 0 else Fraction(c)
        if scaled.denominator != 1:
            raise ValueError(f"coefficient {c} of T_{j} does not give an integer polynomial")
        if j == 0:
            total = total + int(scaled)
        else:
            total = total + cheb_T(j) * int(scaled)
    return total


def is_in_C_TN(p: PolyZ, N: int) -> bool:
    """True iff every non-zero T-basis coefficient c_j (j >= 1) has N | j."""
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    found, _ = t_basis_coefficients(p)
    return all(j % N == 0 for j in found)


@dataclass(frozen=True)
class ThreadPlan:
    """Cable multiplicities with their scalar coefficients, in lexicographic order."""

    terms: Tuple[Tuple[Tuple[int, ...], LaurentInt], ...]

    def __iter__(self) -> Iterator[Tuple[Tuple[int, ...], LaurentInt]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def as_dict(self) -> Dict[Tuple[int, ...], LaurentInt]:
        return dict(self.terms)


def mixed_thread_plan(polys: Sequence[PolyZ]) -> ThreadPlan:
    """Threading plan with a separate polynomial on each component."""
    supports = [[(j, c) for j, c in enumerate(p.coeffs) if c] for p in polys]
    terms = []
    for choice in product(*supports):
        coefficient = LaurentInt.one()
        for _, c in choice:
            coefficient = coefficient * c
        terms.append((tuple(j for j, _ in choice), coefficient))
    return ThreadPlan(tuple(sorted(terms, key=lambda term: term[0])))


def thread_plan(p: PolyZ, m: int) -> ThreadPlan:
    """
    Expand p(L) for an m-component link into cables.

    Args:
        p: Polynomial threaded on every component
        m: Number of components

    Returns:
        Plan of (multiplicities, prod a_{j_k}) where p = sum a_j z^j; for m = 0
        the empty cable carries the constant term a_0
    """
    if m < 0:
        raise ValueError(f"component count must be non-negative, got {m}")
    if m == 0:
        return ThreadPlan((((), p.coefficient(0)),) if p.coefficient(0) else ())
    return mixed_thread_plan([p] * m)


def cheb_T_laurent_identity(n: int) -> bool:
    """Check T_n(u + u^-1) == u^n + u^-n, with u playing the role of the Laurent variable."""
    u_sum = LaurentInt({1: 1, -1: 1})
    lhs = cheb_T(n).evaluate_at(u_sum, LaurentInt.one())
    return lhs == LaurentInt.monomial(n) + LaurentInt.monomial(-n)
