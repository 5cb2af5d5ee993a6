"""
Temperley-Lieb algebra TL_k on the planar matching basis.

Boundary points are numbered cyclically around the square: top points
0..k-1 left to right, then bottom points k..2k-1 right to left. Under this
numbering a non-crossing matching is a balanced parenthesis word of length 2k.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from skeinlab.algebra.cyclotomic import UNKNOT
from skeinlab.algebra.laurent import LaurentInt, Scalar
from skeinlab.diagrams.state_sum import StateGraph, collect, expand


@dataclass(frozen=True)
class Matching:
    k: int
    pairs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        points = sorted(p for pair in self.pairs for p in pair)
        if points != list(range(2 * self.k)):
            raise ValueError(f"{self.pairs} is not a perfect matching of {2 * self.k} points")
        word = self.parens()
        if not _balanced(word) or _pairs_of(word) != self.pairs:
            raise ValueError(f"{self.pairs} is not a planar matching")

    @classmethod
    def from_pairs(cls, k: int, pairs) -> 'Matching':
        return cls(k, tuple(sorted(tuple(sorted(p)) for p in pairs)))

    @classmethod
    def from_parens(cls, word: str) -> 'Matching':
        if len(word) % 2 or not _balanced(word):
            raise ValueError(f"{word!r} is not a balanced parenthesis word")
        return cls(len(word) // 2, _pairs_of(word))

    @classmethod
    def identity(cls, k: int) -> 'Matching':
        return cls.from_pairs(k, [(i, 2 * k - 1 - i) for i in range(k)])

    def partner(self, point: int) -> int:
        for a, b in self.pairs:
            if a == point:
                return b
            if b == point:
                return a
        raise KeyError(point)

    def parens(self) -> str:
        openers = {a for a, _ in self.pairs}
        return ''.join('(' if i in openers else ')' for i in range(2 * self.k))

    def reflect(self) -> 'Matching':
        """Left-right mirror of the square."""
        k = self.k

        def image(point: int) -> int:
            return k - 1 - point if point < k else 3 * k - 1 - point

        return Matching.from_pairs(k, [(image(a), image(b)) for a, b in self.pairs])

    def __str__(self) -> str:
        return self.parens() or 'empty'


def _pairs_of(word: str) -> Tuple[Tuple[int, int], ...]:
    stack: List[int] = []
    pairs = []
    for i, ch in enumerate(word):
        if ch == '(':
            stack.append(i)
        else:
            pairs.append((stack.pop(), i))
    return tuple(sorted(pairs))


def _balanced(word: str) -> bool:
    depth = 0
    for ch in word:
        if ch not in '()':
            return False
        depth += 1 if ch == '(' else -1
        if depth < 0:
            return False
    return depth == 0


def _words(opened: int, closed: int, k: int) -> Iterator[str]:
    if opened == closed == k:
        yield ''
        return
    if opened < k:
        for rest in _words(opened + 1, closed, k):
            yield '(' + rest
    if closed < opened:
        for rest in _words(opened, closed + 1, k):
            yield ')' + rest


@lru_cache(maxsize=None)
def all_matchings(k: int) -> Tuple[Matching, ...]:
    """Basis of TL_k ordered by parenthesis word, '(' before ')'."""
    return tuple(Matching.from_parens(w) for w in _words(0, 0, k))


def through_strands(m: Matching) -> int:
    """Number of pairs joining a top point to a bottom point."""
    return sum(1 for a, b in m.pairs if (a < m.k) != (b < m.k))


class TLElement:
    """Linear combination of matchings with LaurentInt coefficients."""

    __slots__ = ('k', '_terms')

    def __init__(self, k: int, terms: Optional[Mapping[Matching, Scalar]] = None):
        self.k = k
        self._terms: Dict[Matching, LaurentInt] = {}
        for m, c in (terms or {}).items():
            if m.k != k:
                raise ValueError(f"matching of TL_{m.k} in an element of TL_{k}")
            c = LaurentInt.coerce(c)
            if c:
                self._terms[m] = c

    @classmethod
    def basis(cls, m: Matching) -> 'TLElement':
        return cls(m.k, {m: 1})

    @classmethod
    def unit(cls, k: int) -> 'TLElement':
        return cls.basis(Matching.identity(k))

    def coefficient(self, m: Matching) -> LaurentInt:
        return self._terms.get(m, LaurentInt())

    def terms(self) -> Iterator[Tuple[Matching, LaurentInt]]:
        return iter(sorted(self._terms.items(), key=lambda item: item[0].parens()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: 'TLElement') -> 'TLElement':
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, LaurentInt()) + c
        return TLElement(self.k, out)

    def __sub__(self, other: 'TLElement') -> 'TLElement':
        return self + other * -1

    def __mul__(self, other) -> 'TLElement':
        if isinstance(other, TLElement):
            return tl_mul(self, other, self.k)
        return TLElement(self.k, {m: c * other for m, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TLElement):
            return NotImplemented
        return self.k == other.k and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.k, frozenset(self._terms.items())))

    def mirror_image(self) -> 'TLElement':
        """Reflect every matching and substitute t -> t^-1 (an orientation-reversing symmetry)."""
        return TLElement(self.k, {m.reflect(): c.mirror() for m, c in self._terms.items()})

    def __str__(self) -> str:
        if not self._terms:
            return '0'
        return ' + '.join(f"({c})*[{m.parens()}]" for m, c in self.terms())

    def __repr__(self) -> str:
        return f"TLElement({self})"


def compose(top: Matching, bottom: Matching) -> Tuple[Matching, int]:
    """Stack `top` over `bottom`; returns the resulting matching and the number of closed loops."""
    k = top.k
    if bottom.k != k:
        raise ValueError(f"cannot stack TL_{top.k} on TL_{bottom.k}")

    def outer(node: Tuple[int, int]) -> bool:
        layer, point = node
        return point < k if layer == 0 else point >= k

    def glue(node: Tuple[int, int]) -> Tuple[int, int]:
        layer, point = node
        # bottom point at x-position 2k-1-point of the top layer meets top point x of the bottom layer
        if layer == 0:
            return (1, 2 * k - 1 - point)
        return (0, 2 * k - 1 - point)

    seen = set()
    pairs = []
    for start in [(0, i) for i in range(k)] + [(1, i) for i in range(k, 2 * k)]:
        if start in seen:
            continue
        node = start
        while True:
            layer, point = node
            partner = (layer, (top if layer == 0 else bottom).partner(point))
            seen.add(node)
            seen.add(partner)
            if outer(partner):
                break
            node = glue(partner)
        pairs.append((start[1], partner[1]))

    loops = 0
    for i in range(k):
        start = (1, i)
        if start in seen:
            continue
        loops += 1
        node = start
        while node not in seen:
            layer, point = node
            partner = (layer, (top if layer == 0 else bottom).partner(point))
            seen.add(node)
            seen.add(partner)
            node = glue(partner)
    return Matching.from_pairs(k, pairs), loops


def tl_mul(a: TLElement, b: TLElement, k: int) -> TLElement:
    """Vertical stacking, a on top of b; every closed loop contributes lambda_0."""
    if a.k != k or b.k != k:
        raise ValueError(f"tl_mul in TL_{k} got elements of TL_{a.k} and TL_{b.k}")
    out: Dict[Matching, LaurentInt] = {}
    for m1, c1 in a._terms.items():
        for m2, c2 in b._terms.items():
            m, loops = compose(m1, m2)
            out[m] = out.get(m, LaurentInt()) + c1 * c2 * UNKNOT ** loops
    return TLElement(k, out)


def encircling_graph(k: int) -> StateGraph:
    """
    Crossing graph of the identity of TL_k with one loop around all strands.

    Strand i runs upward at x = i; the loop's lower side (under, heading right)
    crosses it first, its upper side (over, heading left) second. Crossing i is
    the lower crossing on strand i, crossing k + i the upper one. Both kinds
    have det(over, under) < 0, so the A-smoothing joins slot 0 with slot 2.
    """
    edges = []
    for i in range(k):
        low, high = 4 * i, 4 * (k + i)
        bottom_end = -(2 * k - i)       # cyclic point 2k-1-i
        top_end = -(i + 1)              # cyclic point i
        edges.append((bottom_end, low + 1, 0))
        edges.append((low + 0, high + 3, 0))
        edges.append((high + 2, top_end, 0))
    if k:
        for i in range(k - 1):
            edges.append((4 * i + 2, 4 * (i + 1) + 3, 0))
            edges.append((4 * (k + i + 1) + 0, 4 * (k + i) + 1, 0))
        edges.append((4 * (k - 1) + 2, 4 * (2 * k - 1) + 1, 0))
        edges.append((4 * k + 0, 3, 0))
    loops = () if k else (0,)
    return StateGraph(a_partner=(2,) * (2 * k), edges=tuple(edges), loops=loops)


def encircle(k: int, workers: Optional[int] = None) -> TLElement:
    """Expand the identity of TL_k encircled by one loop into the matching basis."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    graph = encircling_graph(k)
    final = expand(graph, n_classes=1, workers=workers)
    out: Dict[Matching, LaurentInt] = {}
    for key, values in final.items():
        pairs = [(-a - 1, -b - 1) for a, b, _ in key]
        m = Matching.from_pairs(k, pairs)
        coefficient = collect(values, graph.crossing_count).get((), LaurentInt())
        out[m] = out.get(m, LaurentInt()) + coefficient
    return TLElement(k, out)
