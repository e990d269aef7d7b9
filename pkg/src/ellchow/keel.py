"""Boundary presentations of genus-zero moduli with a distinguished point.

``keel_presentation(markings)`` builds the divisor presentation of the
moduli of stable genus-zero curves marked by ``markings`` plus one implicit
extra point ``*``: one degree-one generator ``D_T`` per subset ``T`` of the
markings with ``2 <= |T| < |markings|`` (labelled by the side away from
``*``), linear four-point relations, and vanishing products of
incompatible divisors.

``psi_star`` writes the cotangent class at ``*`` as a sum of boundary
divisors avoiding two chosen markings; the class is independent of the
choice modulo the relations.

The point counts of these spaces over a finite field are recovered
independently by enumerating stable trees (``mzero_point_count``), giving
an oracle for the Hilbert function of the presentation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .exactring import GradedPresentation, IntPolynomial, subset_name


@dataclass(frozen=True)
class KeelRing:
    """A boundary presentation together with its marking labels."""

    markings: tuple[int, ...]
    prefix: str
    presentation: GradedPresentation

    def divisor(self, subset: Iterable[int]) -> IntPolynomial:
        t = tuple(sorted(subset))
        if not (2 <= len(t) < len(self.markings)):
            raise ValueError(f"no divisor for subset {t}")
        if not set(t) <= set(self.markings):
            raise ValueError(f"subset {t} not within the markings")
        return IntPolynomial.symbol(subset_name(self.prefix, t))


def _pair_sum(
    ring_markings: Sequence[int],
    prefix: str,
    inside: tuple[int, ...],
    outside: tuple[int, ...],
) -> IntPolynomial:
    """Sum of divisors D_T with ``inside``-markings in T and
    ``outside``-markings (and the implicit point) out of T."""
    total = IntPolynomial.zero()
    rest = [m for m in ring_markings if m not in inside and m not in outside]
    for r in range(len(rest) + 1):
        for extra in combinations(rest, r):
            t = tuple(sorted(inside + extra))
            if 2 <= len(t) < len(ring_markings):
                total = total + IntPolynomial.symbol(subset_name(prefix, t))
    return total


def keel_presentation(markings: Sequence[int], prefix: str = "d") -> KeelRing:
    """Divisor presentation of the genus-zero space on ``markings`` plus one
    implicit point."""
    ms = tuple(sorted(set(markings)))
    if len(ms) != len(tuple(markings)):
        raise ValueError("repeated markings")
    if len(ms) < 2:
        raise ValueError("need at least two markings")
    symbols = [
        subset_name(prefix, t)
        for size in range(2, len(ms))
        for t in combinations(ms, size)
    ]
    relations: list[IntPolynomial] = []

    def sep(pair: tuple[int, int], away: tuple[int, ...]) -> IntPolynomial:
        return _pair_sum(ms, prefix, pair, away)

    # Four-point relations with the implicit point as fourth marking.
    for i, j, h in combinations(ms, 3):
        a = sep((i, j), (h,))
        b = sep((i, h), (j,))
        c = sep((j, h), (i,))
        relations.extend([a - b, a - c, b - c])
    # Four-point relations among the explicit markings: either side of a
    # separating divisor may carry the pair, the implicit point rides along.
    for i, j, h, k in combinations(ms, 4):
        q_ij = sep((i, j), (h, k)) + sep((h, k), (i, j))
        q_ih = sep((i, h), (j, k)) + sep((j, k), (i, h))
        q_ik = sep((i, k), (j, h)) + sep((j, h), (i, k))
        relations.extend([q_ij - q_ih, q_ij - q_ik, q_ih - q_ik])
    # Incompatible boundary divisors do not meet.
    for sa, sb in combinations(symbols, 2):
        ta = set(_subset_of(sa))
        tb = set(_subset_of(sb))
        if ta & tb and not (ta <= tb or tb <= ta):
            relations.append(
                IntPolynomial.symbol(sa) * IntPolynomial.symbol(sb)
            )

    pres = GradedPresentation(
        symbols, relations, name=f"keel({','.join(map(str, ms))})"
    )
    return KeelRing(markings=ms, prefix=prefix, presentation=pres)


def _subset_of(symbol: str) -> tuple[int, ...]:
    inner = symbol[symbol.index("{") + 1 : -1]
    return tuple(int(x) for x in inner.split(","))


def psi_star(ring: KeelRing, i: int | None = None, j: int | None = None) -> IntPolynomial:
    """The cotangent class at the implicit point: the sum of all divisors
    containing two chosen markings (by default the two smallest)."""
    if i is None or j is None:
        i, j = ring.markings[0], ring.markings[1]
    if i == j or i not in ring.markings or j not in ring.markings:
        raise ValueError(f"invalid marking pair ({i}, {j})")
    pair = tuple(sorted((i, j)))
    return _pair_sum(ring.markings, ring.prefix, pair, ())


# -- stable trees and point counts ------------------------------------------


@dataclass(frozen=True)
class StableTree:
    """A rooted stable tree: every vertex carries its attachments, each a
    leaf label or a further subtree; valence is attachments plus one (the
    leaf or edge connecting upward)."""

    children: tuple["StableTree | int", ...]

    def vertex_count(self) -> int:
        return 1 + sum(
            c.vertex_count() for c in self.children if isinstance(c, StableTree)
        )


def _set_partitions(items: tuple[int, ...]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def _hanging_trees(block: tuple[int, ...]) -> Iterator[StableTree]:
    """All stable subtrees on the given leaves, hanging from a parent edge."""
    for part in _set_partitions(block):
        if len(part) < 2:
            continue
        choice_lists = []
        for sub in part:
            if len(sub) == 1:
                choice_lists.append([sub[0]])
            else:
                choice_lists.append(list(_hanging_trees(tuple(sub))))
        for combo in product(*choice_lists):
            yield StableTree(children=tuple(combo))


@lru_cache(maxsize=None)
def enumerate_stable_trees(n: int) -> tuple[StableTree, ...]:
    """All stable trees on leaves ``1..n``, rooted at the vertex carrying
    leaf 1."""
    if n < 3:
        raise ValueError("stability needs at least three leaves")
    rest = tuple(range(2, n + 1))
    return tuple(_hanging_trees(rest))


def _vertex_factor(valence: int, q):
    """Number of configurations of ``valence`` distinct points on a line
    modulo automorphisms: the open genus-zero count."""
    total = 1
    for j in range(2, valence - 1):
        total *= q - j
    return total


def _tree_count(tree: StableTree, q):
    total = _vertex_factor(len(tree.children) + 1, q)
    for child in tree.children:
        if isinstance(child, StableTree):
            total *= _tree_count(child, q)
    return total


def mzero_point_count(n: int, q):
    """Point count of the stable genus-zero space with ``n`` markings over
    a field with ``q`` elements, by summing over strata."""
    return sum(_tree_count(t, q) for t in enumerate_stable_trees(n))


def mzero_point_poly(n: int) -> list[int]:
    """The point count as a polynomial in the field size, coefficients
    ascending; recovered by interpolation at ``n - 2`` sample points."""
    deg = n - 3
    xs = list(range(2, 2 + deg + 1))
    ys = [Fraction(mzero_point_count(n, x)) for x in xs]
    coeffs = [Fraction(0)] * (deg + 1)
    for i, xi in enumerate(xs):
        # Lagrange basis polynomial for node xi, accumulated coefficient-wise.
        basis = [Fraction(1)]
        denom = Fraction(1)
        for k, xk in enumerate(xs):
            if k == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for p, cp in enumerate(basis):
                new[p] -= cp * xk
                new[p + 1] += cp
            basis = new
            denom *= xi - xk
        scale = ys[i] / denom
        for p, cp in enumerate(basis):
            coeffs[p] += cp * scale
    out: list[int] = []
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError("point-count interpolation not integral")
        out.append(int(c))
    return out
