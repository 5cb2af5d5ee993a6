"""Exact arithmetic in Z[zeta_n] and specialization of t at roots of unity."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from sympy import Poly, divisors, symbols

from skeinlab.algebra.laurent import LaurentInt

_x = symbols('x')


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Tuple[int, ...]:
    """
    Cyclotomic polynomial Phi_n as ascending integer coefficients.

    Computed by exact division of x^n - 1 by Phi_d for every proper divisor d of n.

    Args:
        n: Cyclotomic level, n >= 1

    Returns:
        Coefficients (c_0, ..., c_deg); the last one is always 1
    """
    if n < 1:
        raise ValueError(f"cyclotomic level must be positive, got {n}")
    quotient = Poly(_x ** n - 1, _x)
    for d in divisors(n)[:-1]:
        quotient = quotient.exquo(Poly(list(reversed(cyclotomic_polynomial(d))), _x))
    return tuple(int(c) for c in reversed(quotient.all_coeffs()))


def _reduce(coeffs: List[int], phi: Tuple[int, ...]) -> Tuple[int, ...]:
    degree = len(phi) - 1
    for i in range(len(coeffs) - 1, degree - 1, -1):
        q = coeffs[i]
        if q:
            base = i - degree
            for j, p in enumerate(phi):
                coeffs[base + j] -= q * p
    out = coeffs[:degree]
    while out and not out[-1]:
        out.pop()
    return tuple(out)


class CycNum:
    """Element of Z[zeta_n] kept as its representative reduced mod Phi_n."""

    __slots__ = ('level', '_rep', '_hash')

    def __init__(self, level: int, rep: Sequence[int] = ()):
        self.level = level
        self._rep = _reduce(list(rep), cyclotomic_polynomial(level))
        self._hash: Optional[int] = None

    @classmethod
    def zero(cls, level: int) -> 'CycNum':
        return cls(level)

    @classmethod
    def from_int(cls, level: int, value: int) -> 'CycNum':
        return cls(level, (value,))

    @classmethod
    def root_power(cls, level: int, exponent: int) -> 'CycNum':
        """zeta_level ** exponent for any integer exponent."""
        rep = [0] * level
        rep[exponent % level] = 1
        return cls(level, rep)

    @property
    def rep(self) -> Tuple[int, ...]:
        return self._rep

    def _coerce(self, other: Union[int, 'CycNum']) -> 'CycNum':
        if isinstance(other, int):
            return CycNum.from_int(self.level, other)
        if other.level != self.level:
            raise ValueError(
                f"cannot combine elements of Z[zeta_{self.level}] and Z[zeta_{other.level}]"
            )
        return other

    def __bool__(self) -> bool:
        return bool(self._rep)

    def __neg__(self) -> 'CycNum':
        return CycNum(self.level, [-c for c in self._rep])

    def __add__(self, other: Union[int, 'CycNum']) -> 'CycNum':
        if not isinstance(other, (int, CycNum)):
            return NotImplemented
        other = self._coerce(other)
        size = max(len(self._rep), len(other._rep))
        a = list(self._rep) + [0] * (size - len(self._rep))
        for i, c in enumerate(other._rep):
            a[i] += c
        return CycNum(self.level, a)

    __radd__ = __add__

    def __sub__(self, other: Union[int, 'CycNum']) -> 'CycNum':
        if not isinstance(other, (int, CycNum)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other: Union[int, 'CycNum']) -> 'CycNum':
        if not isinstance(other, (int, CycNum)):
            return NotImplemented
        return self._coerce(other) - self

    def __mul__(self, other: Union[int, 'CycNum']) -> 'CycNum':
        if isinstance(other, int):
            return CycNum(self.level, [c * other for c in self._rep])
        if not isinstance(other, CycNum):
            return NotImplemented
        other = self._coerce(other)
        if not self._rep or not other._rep:
            return CycNum.zero(self.level)
        out = [0] * (len(self._rep) + len(other._rep) - 1)
        for i, a in enumerate(self._rep):
            if a:
                for j, b in enumerate(other._rep):
                    out[i + j] += a * b
        return CycNum(self.level, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'CycNum':
        if exponent < 0:
            raise ValueError("negative powers are only available for roots of unity")
        result = CycNum.from_int(self.level, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._rep == ((other,) if other else ())
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.level == other.level and self._rep == other._rep

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.level, self._rep))
        return self._hash

    def __str__(self) -> str:
        if not self._rep:
            return '0'
        return ' + '.join(f"{c}*zeta{self.level}^{k}" for k, c in enumerate(self._rep) if c)

    def __repr__(self) -> str:
        return f"CycNum({self})"


@dataclass(frozen=True, order=True)
class RootSpec:
    """The root of unity zeta_n ** a; a is kept reduced mod n."""

    n: int
    a: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"cyclotomic level must be positive, got {self.n}")
        object.__setattr__(self, 'a', self.a % self.n)

    @classmethod
    def parse(cls, text: str) -> 'RootSpec':
        """Parse the 'n/a' notation used on the command line."""
        parts = text.strip().split('/')
        if len(parts) != 2:
            raise ValueError(f"root of unity must be written n/a, got {text!r}")
        try:
            n, a = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"root of unity must be written n/a, got {text!r}") from None
        return cls(n, a)

    @property
    def order(self) -> int:
        return self.n // gcd(self.n, self.a)

    def power(self, m: int) -> 'RootSpec':
        return RootSpec(self.n, self.a * m)

    def value(self) -> CycNum:
        return CycNum.root_power(self.n, self.a)

    def __str__(self) -> str:
        return f"{self.n}/{self.a}"


def roots_of_unity(n_max: int) -> Iterator[RootSpec]:
    """Every root of unity of order <= n_max, once, at its own level."""
    for n in range(1, n_max + 1):
        for a in range(n):
            if gcd(a, n) == 1:
                yield RootSpec(n, a)


def specialize(value, xi: RootSpec):
    """
    Substitute t -> xi.

    LaurentInt values become CycNum; composite values (skein polynomials,
    annulus elements) specialize coefficientwise through their own method.
    """
    if isinstance(value, int):
        return CycNum.from_int(xi.n, value)
    if not isinstance(value, LaurentInt):
        return value.specialize(xi)
    rep = [0] * xi.n
    for k, c in value.items():
        rep[(xi.a * k) % xi.n] += c
    return CycNum(xi.n, rep)


def order_of_power(xi: RootSpec, m: int) -> int:
    """Multiplicative order of xi ** m."""
    return xi.power(m).order


def encircling_scalar(k: int) -> LaurentInt:
    """-(t^(2k+2) + t^-(2k+2)); k = 0 is the value of the unknot."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    return LaurentInt({2 * k + 2: -1, -2 * k - 2: -1})


def encircling_scalar_at(k: int, xi: RootSpec) -> CycNum:
    return specialize(encircling_scalar(k), xi)


def epsilon_of(xi: RootSpec) -> Tuple[int, CycNum]:
    """N = ord(xi^4) and epsilon = xi^(N^2)."""
    N = order_of_power(xi, 4)
    return N, xi.power(N * N).value()


UNKNOT = encircling_scalar(0)
