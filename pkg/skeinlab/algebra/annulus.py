"""
Skein modules of the marked annuli.

AioElt is an element of R[u, u^-1], the arcs between the two boundary circles
(u^0 = e is the straight arc). A closed core z acts on it from the inside
(left) or the outside (right) by resolving its two crossings with the arc.

AooElt is b1(z) u1 + b0(z) u0, an arc with both ends on one boundary circle.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Iterator, Mapping, Optional, Tuple, Union

from skeinlab.algebra.chebyshev import PolyZ, cheb_S, cheb_T, t_basis_coefficients
from skeinlab.algebra.cyclotomic import CycNum, RootSpec, order_of_power, specialize
from skeinlab.algebra.laurent import T, T_INV, LaurentInt, Scalar


class AioElt:
    """Laurent polynomial in u; coefficients are LaurentInt or, after specialize, CycNum."""

    __slots__ = ('_terms', '_zero')

    def __init__(self, terms: Optional[Mapping[int, Any]] = None, zero: Any = None):
        self._zero = LaurentInt() if zero is None else zero
        self._terms: Dict[int, Any] = {}
        for k, c in (terms or {}).items():
            c = self._zero + c
            if c:
                self._terms[int(k)] = c

    @classmethod
    def e(cls) -> 'AioElt':
        return cls({0: LaurentInt.one()})

    @classmethod
    def u_power(cls, k: int, coefficient: Scalar = 1) -> 'AioElt':
        return cls({k: coefficient})

    @property
    def zero(self) -> Any:
        return self._zero

    def coefficient(self, k: int) -> Any:
        return self._terms.get(k, self._zero)

    def terms(self) -> Iterator[Tuple[int, Any]]:
        return iter(sorted(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __neg__(self) -> 'AioElt':
        return AioElt({k: -c for k, c in self._terms.items()}, self._zero)

    def __add__(self, other: 'AioElt') -> 'AioElt':
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out[k] + c if k in out else c
        return AioElt(out, self._zero)

    def __sub__(self, other: 'AioElt') -> 'AioElt':
        return self + (-other)

    def __mul__(self, other: Any) -> 'AioElt':
        if isinstance(other, AioElt):
            out: Dict[int, Any] = {}
            for k1, c1 in self._terms.items():
                for k2, c2 in other._terms.items():
                    out[k1 + k2] = out[k1 + k2] + c1 * c2 if k1 + k2 in out else c1 * c2
            return AioElt(out, self._zero)
        return AioElt({k: c * other for k, c in self._terms.items()}, self._zero)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, AioElt):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def specialize(self, xi: RootSpec) -> 'AioElt':
        return AioElt({k: specialize(c, xi) for k, c in self._terms.items()}, CycNum.zero(xi.n))

    def __str__(self) -> str:
        if not self._terms:
            return '0'
        return ' + '.join(f"({c})*u^{k}" for k, c in self.terms())

    def __repr__(self) -> str:
        return f"AioElt({self})"


def _core_once(x: AioElt, up: LaurentInt, down: LaurentInt) -> AioElt:
    out: Dict[int, Any] = {}
    for k, c in x.terms():
        out[k + 1] = out[k + 1] + c * up if k + 1 in out else c * up
        out[k - 1] = out[k - 1] + c * down if k - 1 in out else c * down
    return AioElt(out, x.zero)


def _bullet(p: PolyZ, x: AioElt, up: LaurentInt, down: LaurentInt) -> AioElt:
    total = AioElt(zero=x.zero)
    power = x
    for j, c in enumerate(p.coeffs):
        if j:
            power = _core_once(power, up, down)
        if c:
            total = total + power * c
    return total


def core_bullet_left(p: PolyZ, x: AioElt) -> AioElt:
    """p(z) . x with z . u^k = t u^(k+1) + t^-1 u^(k-1)."""
    return _bullet(p, x, T, T_INV)


def core_bullet_right(x: AioElt, p: PolyZ) -> AioElt:
    """x . p(z) with u^k . z = t^-1 u^(k+1) + t u^(k-1)."""
    return _bullet(p, x, T_INV, T)


def symbolic_commutator(p: PolyZ) -> AioElt:
    """p . e - e . p over R."""
    return core_bullet_left(p, AioElt.e()) - core_bullet_right(AioElt.e(), p)


def commutator(p: PolyZ, xi: RootSpec) -> AioElt:
    return symbolic_commutator(p).specialize(xi)


def commutator_closed_form(p: PolyZ) -> AioElt:
    """sum over j >= 1 of c_j (t^j - t^-j)(u^j - u^-j), c_j the T-basis coefficients of p."""
    found, _ = t_basis_coefficients(p)
    total = AioElt()
    for j, c in found.items():
        scalar = c * (LaurentInt.monomial(j) - LaurentInt.monomial(-j))
        total = total + AioElt({j: scalar, -j: -scalar})
    return total


@dataclass(frozen=True)
class CentralityVerdict:
    central: bool
    order: int
    commutator: AioElt

    def __bool__(self) -> bool:
        return self.central


def is_central(p: PolyZ, xi: RootSpec) -> CentralityVerdict:
    """
    Decide whether p(z) commutes with the arc e at t = xi.

    The commutator is the certificate; `order` is ord(xi^2), the N for which
    central polynomials are exactly the polynomials in T_N.
    """
    residual = commutator(p, xi)
    return CentralityVerdict(central=not residual, order=order_of_power(xi, 2), commutator=residual)


def skew_test(N: int, xi: RootSpec) -> AioElt:
    """T_N . e + e . T_N at t = xi; vanishes exactly when xi^(2N) = -1."""
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    tn = cheb_T(N)
    total = core_bullet_left(tn, AioElt.e()) + core_bullet_right(AioElt.e(), tn)
    return total.specialize(xi)


@dataclass(frozen=True)
class AooElt:
    """b1(z) u1 + b0(z) u0."""

    b1: PolyZ
    b0: PolyZ

    @classmethod
    def zero(cls) -> 'AooElt':
        return cls(PolyZ(), PolyZ())

    @classmethod
    def u0(cls) -> 'AooElt':
        return cls(PolyZ(), PolyZ.constant(1))

    @classmethod
    def u1(cls) -> 'AooElt':
        return cls(PolyZ.constant(1), PolyZ())

    def __add__(self, other: 'AooElt') -> 'AooElt':
        return AooElt(self.b1 + other.b1, self.b0 + other.b0)

    def __sub__(self, other: 'AooElt') -> 'AooElt':
        return AooElt(self.b1 - other.b1, self.b0 - other.b0)

    def __neg__(self) -> 'AooElt':
        return AooElt(-self.b1, -self.b0)

    def scale(self, c: Scalar) -> 'AooElt':
        return AooElt(self.b1 * c, self.b0 * c)

    def act(self, p: PolyZ) -> 'AooElt':
        """Module action of a closed-curve polynomial, coordinatewise."""
        return AooElt(self.b1 * p, self.b0 * p)

    def __mul__(self, other: Union[PolyZ, Scalar]) -> 'AooElt':
        if isinstance(other, PolyZ):
            return self.act(other)
        if isinstance(other, (int, LaurentInt)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.b1) or bool(self.b0)

    def __str__(self) -> str:
        return f"({self.b1})*u1 + ({self.b0})*u0"


def u_arc(k: int) -> AooElt:
    """u_k = t^(k-1) S_(k-1) u1 + t^(k-3) S_(k-2) u0, for k >= 1."""
    if k == 0:
        raise ValueError(
            "u_k is only given by the closed form for k >= 1: at k = 0 the arc u_0 "
            "differs from the formula by a framing twist"
        )
    if k < 0:
        raise ValueError(f"k must be positive, got {k}")
    return AooElt(cheb_S(k - 1) * LaurentInt.monomial(k - 1),
                  cheb_S(k - 2) * LaurentInt.monomial(k - 3))


def v_arc(k: int) -> AooElt:
    """v_k = t^(2-k) S_(k-1) u1 + t^-k S_k u0, for k >= 0."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    return AooElt(cheb_S(k - 1) * LaurentInt.monomial(2 - k),
                  cheb_S(k) * LaurentInt.monomial(-k))


def hook_arc_image(p: PolyZ) -> AooElt:
    """
    Image of p(z) under the hook-arc map, T_k -> -t^(k+3) u_k + t^-k v_k.

    Raises:
        ValueError: p has a constant part in the T-basis, where the map is not defined
    """
    found, remainder = t_basis_coefficients(p)
    if remainder:
        raise ValueError(
            f"the hook-arc map is only defined on polynomials without a T_0 part; {p} has constant part {remainder}"
        )
    total = AooElt.zero()
    for j, c in sorted(found.items()):
        term = u_arc(j).scale(-LaurentInt.monomial(j + 3)) + v_arc(j).scale(LaurentInt.monomial(-j))
        total = total + term.scale(c)
    return total


def hook_arc_closed_form(k: int) -> AooElt:
    """Direct form of the image of T_k: u1 t^2 (t^-2k - t^2k) S_(k-1) + u0 (t^-2k S_k - t^2k S_(k-2))."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    up, down = LaurentInt.monomial(2 * k), LaurentInt.monomial(-2 * k)
    b1 = cheb_S(k - 1) * ((down - up).shift(2))
    b0 = cheb_S(k) * down - cheb_S(k - 2) * up
    return AooElt(b1, b0)
