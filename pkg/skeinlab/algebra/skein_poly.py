"""Polynomials in curve classes with Laurent (or cyclotomic) coefficients."""
from __future__ import annotations

from typing import Any, Callable, Dict, Iterator, Mapping, Optional, Sequence, Tuple

from skeinlab.algebra.laurent import LaurentInt

Monomial = Tuple[int, ...]

STANDARD_GENERATORS = ('x1', 'x2', 'y')


def generator_names(puncture_count: int) -> Tuple[str, ...]:
    """
    Names of the curve classes of a disk with the given number of punctures.

    Class number m (1 <= m < 2^P) is the curve enclosing the punctures whose
    bits are set in m. Two punctures give the standard x1, x2, y.
    """
    if puncture_count == 0:
        return ()
    if puncture_count == 1:
        return ('x1',)
    if puncture_count == 2:
        return STANDARD_GENERATORS
    names = []
    for mask in range(1, 2 ** puncture_count):
        names.append('c' + ''.join(str(i + 1) for i in range(puncture_count) if mask >> i & 1))
    return tuple(names)


class SkeinPoly:
    """
    Element of a commutative polynomial ring over R (or over Z[zeta_n]).

    Terms map exponent tuples (one entry per generator) to non-zero
    coefficients. The coefficient ring is remembered through its zero.
    """

    __slots__ = ('gens', '_terms', '_zero')

    def __init__(self, gens: Sequence[str], terms: Optional[Mapping[Monomial, Any]] = None,
                 zero: Any = None):
        self.gens = tuple(gens)
        self._zero = LaurentInt() if zero is None else zero
        self._terms: Dict[Monomial, Any] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != len(self.gens):
                raise ValueError(f"monomial {mono} does not match generators {self.gens}")
            c = self._zero + c
            if c:
                self._terms[mono] = c

    @classmethod
    def constant(cls, value: Any, gens: Sequence[str] = STANDARD_GENERATORS,
                 zero: Any = None) -> 'SkeinPoly':
        return cls(gens, {(0,) * len(gens): value}, zero)

    @classmethod
    def generator(cls, name: str, gens: Sequence[str] = STANDARD_GENERATORS) -> 'SkeinPoly':
        gens = tuple(gens)
        mono = tuple(1 if g == name else 0 for g in gens)
        if sum(mono) != 1:
            raise ValueError(f"unknown generator {name!r}; have {gens}")
        return cls(gens, {mono: LaurentInt.one()})

    # Inspection

    @property
    def zero(self) -> Any:
        return self._zero

    def terms(self) -> Iterator[Tuple[Monomial, Any]]:
        """(monomial, coefficient) pairs in lexicographic monomial order."""
        return iter(sorted(self._terms.items()))

    def coefficient(self, mono: Sequence[int]) -> Any:
        return self._terms.get(tuple(mono), self._zero)

    def monomials(self) -> Tuple[Monomial, ...]:
        return tuple(sorted(self._terms))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # Arithmetic

    def _same_ring(self, other: 'SkeinPoly'):
        if other.gens != self.gens:
            raise ValueError(f"generator mismatch: {self.gens} vs {other.gens}")

    def _lift(self, scalar: Any) -> 'SkeinPoly':
        return SkeinPoly.constant(scalar, self.gens, self._zero)

    def __neg__(self) -> 'SkeinPoly':
        return SkeinPoly(self.gens, {m: -c for m, c in self._terms.items()}, self._zero)

    def __add__(self, other: Any) -> 'SkeinPoly':
        if not isinstance(other, SkeinPoly):
            other = self._lift(other)
        self._same_ring(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out[m] + c if m in out else c
        return SkeinPoly(self.gens, out, self._zero)

    __radd__ = __add__

    def __sub__(self, other: Any) -> 'SkeinPoly':
        if not isinstance(other, SkeinPoly):
            other = self._lift(other)
        return self + (-other)

    def __rsub__(self, other: Any) -> 'SkeinPoly':
        return self._lift(other) - self

    def __mul__(self, other: Any) -> 'SkeinPoly':
        if not isinstance(other, SkeinPoly):
            return SkeinPoly(self.gens, {m: c * other for m, c in self._terms.items()}, self._zero)
        self._same_ring(other)
        out: Dict[Monomial, Any] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out[m] + c1 * c2 if m in out else c1 * c2
        return SkeinPoly(self.gens, out, self._zero)

    def __rmul__(self, other: Any) -> 'SkeinPoly':
        return self * other

    def __pow__(self, exponent: int) -> 'SkeinPoly':
        if exponent < 0:
            raise ValueError("skein polynomials have no negative powers")
        result = self._lift(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SkeinPoly):
            return self.gens == other.gens and self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.gens, frozenset(self._terms.items())))

    # Coefficient maps

    def map_coefficients(self, fn: Callable[[Any], Any], zero: Any) -> 'SkeinPoly':
        return SkeinPoly(self.gens, {m: fn(c) for m, c in self._terms.items()}, zero)

    def specialize(self, xi) -> 'SkeinPoly':
        from skeinlab.algebra.cyclotomic import CycNum, specialize
        return self.map_coefficients(lambda c: specialize(c, xi), CycNum.zero(xi.n))

    def mirror(self) -> 'SkeinPoly':
        """Substitute t -> t^-1 in every coefficient."""
        return self.map_coefficients(lambda c: c.mirror(), self._zero)

    def permute(self, order: Sequence[int]) -> 'SkeinPoly':
        """New exponent i is the old exponent order[i]."""
        return SkeinPoly(self.gens, {tuple(m[j] for j in order): c for m, c in self._terms.items()},
                         self._zero)

    def __str__(self) -> str:
        if not self._terms:
            return '0'
        parts = []
        for mono, c in self.terms():
            parts.append(f"({c})" + ''.join(f"*{g}^{e}" for g, e in zip(self.gens, mono)))
        return ' + '.join(parts)

    def __repr__(self) -> str:
        return f"SkeinPoly({self})"


def swap_sigma(p: SkeinPoly) -> SkeinPoly:
    """Exchange the x1 and x2 exponents (rotation of the standard disk by a half turn)."""
    if p.gens != STANDARD_GENERATORS:
        raise ValueError(f"swap_sigma needs the generators {STANDARD_GENERATORS}, got {p.gens}")
    return p.permute((1, 0, 2))


X1 = SkeinPoly.generator('x1')
X2 = SkeinPoly.generator('x2')
Y = SkeinPoly.generator('y')
