"""Patching classes and relations across the core-level stratification.

The ambient ring on ``n`` markings is generated by the Hodge class ``l``,
a boundary divisor ``t{B}`` for every marking subset of size at least
two (the full set included), and — with six markings — the degree-two
core class ``nu``.  Its relations come in three families: four-point
relations multiplied by a divisor, vanishing products of incompatible
divisors, and the normal-bundle relations tying a divisor to the Hodge
class plus its attaching cotangent sum.

A class supported on the strata of small core level is reconstructed by
descending through levels: at each stratum the current candidate is
restricted, compared to its prescribed value there, and the discrepancy —
always divisible by the stratum's excess class — is divided out and
lifted back as a correction.  Strata of the same level do not disturb one
another, and corrections never disturb the levels already handled, because
a composite divisor restricts to zero on every other stratum of its own or
higher level.

``fundamental_class`` runs that loop against prescribed restriction data;
``lift_relation`` is the special case of target zero, used to propagate
the six-marking core relations and the nodal-value identities into the
ambient ring.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import combinations
from typing import Callable, Iterable

from .corering import ClassTableError, min_class, core_relation_seeds
from .exactring import (
    GradedPresentation,
    IntPolynomial,
    name_elements,
    subset_name,
)
from .partitions import (
    SetPartition,
    compose,
    enumerate_partitions,
    incomparable,
    partitions_of_length,
    refines,
    s_max,
)
from .strata import (
    banana_partition,
    ctop_tail,
    lift_from_tail,
    restrict_to_tail,
    tail_model,
)

LAMBDA = IntPolynomial.symbol("l")
NU = IntPolynomial.symbol("nu")


def tau(subset: Iterable[int]) -> IntPolynomial:
    """The boundary divisor of one marking subset."""
    elems = tuple(sorted(subset))
    if len(elems) < 2:
        raise ValueError("boundary subsets need at least two markings")
    return IntPolynomial.symbol(subset_name("t", elems))


def tau_monomial(partition: SetPartition) -> IntPolynomial:
    """The composite divisor of a partition: the product of the divisors
    of its non-singleton blocks (one for the all-singleton partition)."""
    total = IntPolynomial.one()
    for block in partition.nonsingleton_blocks():
        total = total * tau(block)
    return total


def ambient_symbols(n: int) -> list[str]:
    symbols = ["l"]
    if n == 6:
        symbols.append("nu")
    for size in range(2, n + 1):
        for b in combinations(range(1, n + 1), size):
            symbols.append(subset_name("t", b))
    return symbols


def _sep(n: int, inside: tuple[int, ...], outside: tuple[int, ...]) -> IntPolynomial:
    """Sum of all divisors containing ``inside`` and avoiding ``outside``."""
    rest = [
        m for m in range(1, n + 1) if m not in inside and m not in outside
    ]
    total = IntPolynomial.zero()
    for r in range(len(rest) + 1):
        for extra in combinations(rest, r):
            b = tuple(sorted(inside + extra))
            if len(b) >= 2:
                total = total + tau(b)
    return total


def relation_families(n: int) -> dict[str, list[IntPolynomial]]:
    """The three ambient relation families, keyed ``"four-point"``,
    ``"incompatible"``, ``"normal"``."""
    subsets = [
        b
        for size in range(2, n + 1)
        for b in combinations(range(1, n + 1), size)
    ]
    four_point: list[IntPolynomial] = []
    for b in subsets:
        tb = tau(b)
        for i, j, h in combinations(b, 3):
            a1 = _sep(n, (i, j), (h,))
            a2 = _sep(n, (i, h), (j,))
            a3 = _sep(n, (j, h), (i,))
            four_point.extend(
                [tb * (a1 - a2), tb * (a1 - a3), tb * (a2 - a3)]
            )
        for i, j, h, k in combinations(b, 4):
            q1 = _sep(n, (i, j), (h, k)) + _sep(n, (h, k), (i, j))
            q2 = _sep(n, (i, h), (j, k)) + _sep(n, (j, k), (i, h))
            q3 = _sep(n, (i, k), (j, h)) + _sep(n, (j, h), (i, k))
            four_point.extend(
                [tb * (q1 - q2), tb * (q1 - q3), tb * (q2 - q3)]
            )
    incompatible = [
        tau(b1) * tau(b2)
        for b1, b2 in combinations(subsets, 2)
        if incomparable(b1, b2)
    ]
    normal = [
        tau(b) * (LAMBDA + _sep(n, (i, j), ()))
        for b in subsets
        for i, j in combinations(b, 2)
    ]
    return {
        "four-point": four_point,
        "incompatible": incompatible,
        "normal": normal,
    }


# -- the patching driver -------------------------------------------------------


@dataclass(frozen=True)
class RestrictionData:
    """Prescribed restrictions of a class: the value on the all-singleton
    stratum (``seed``, in ambient coordinates) and, for every other
    partition, the target value in that stratum's own coordinates."""

    n: int
    seed: IntPolynomial
    target: Callable[[SetPartition], IntPolynomial]


@dataclass(frozen=True)
class CoreLevelStratification:
    """The stratification of the ambient moduli by core level (number of
    partition blocks), traversed from fine to coarse."""

    n: int

    def levels(
        self, start_length: int | None = None
    ) -> list[tuple[int, tuple[SetPartition, ...]]]:
        top = self.n - 1 if start_length is None else start_length
        return [
            (m, partitions_of_length(self.n, m))
            for m in range(top, 0, -1)
        ]


def _patch(
    n: int,
    f: IntPolynomial,
    target: Callable[[SetPartition], IntPolynomial],
    start_length: int | None,
    checkpoint: Callable[[int, IntPolynomial], None] | None = None,
) -> IntPolynomial:
    for level, strata in CoreLevelStratification(n).levels(start_length):
        corrections = IntPolynomial.zero()
        for s in strata:
            model = tail_model(n, s)
            r = restrict_to_tail(n, s, f) - target(s)
            gbar = model.presentation.divide_in_quotient(r, ctop_tail(n, s))
            if not gbar.is_zero():
                corrections = corrections + tau_monomial(s) * lift_from_tail(
                    n, s, gbar
                )
        f = f - corrections
        if checkpoint is not None:
            checkpoint(level, f)
    return f


def fundamental_class(
    n: int,
    data: RestrictionData,
    checkpoint: Callable[[int, IntPolynomial], None] | None = None,
) -> IntPolynomial:
    """The ambient class restricting to the prescribed value on every
    stratum, built by descending level patching from the seed."""
    if data.n != n:
        raise ValueError("restriction data is for a different marking count")
    return _patch(n, data.seed, data.target, None, checkpoint)


def lift_relation(
    n: int, f: IntPolynomial, start_length: int | None = None
) -> IntPolynomial:
    """Correct ``f`` into a class restricting to zero on every stratum of
    length at most ``start_length`` (all patchable levels by default);
    levels above the start must already vanish for the result to be a
    relation of the ambient ring."""
    return _patch(n, f, lambda s: IntPolynomial.zero(), start_length)


# -- named classes ----------------------------------------------------------------


def ell_class_data(n: int, t: SetPartition) -> RestrictionData:
    """Restriction data of the closed elliptic-singularity locus with
    branch partition ``t``."""

    def target(p: SetPartition) -> IntPolynomial:
        if refines(t, p):
            return min_class("ell", p.length, compose(t, p))
        return IntPolynomial.zero()

    return RestrictionData(
        n=n, seed=min_class("ell", n, t.shape()), target=target
    )


def nod_class_data(n: int, t: SetPartition) -> RestrictionData:
    """Restriction data of the closed nodal-singularity locus with branch
    partition ``t``."""

    def target(p: SetPartition) -> IntPolynomial:
        if refines(t, p):
            return min_class("nod", p.length, compose(t, p))
        return IntPolynomial.zero()

    return RestrictionData(
        n=n, seed=min_class("nod", n, t.shape()), target=target
    )


def ell_class(n: int, t: SetPartition) -> IntPolynomial:
    return fundamental_class(n, ell_class_data(n, t))


def nod_class(n: int, t: SetPartition) -> IntPolynomial:
    return fundamental_class(n, nod_class_data(n, t))


# -- the ambient presentation -------------------------------------------------------


@lru_cache(maxsize=None)
def six_marking_extras() -> tuple[IntPolynomial, ...]:
    """The lifted core relations and nodal-value identities that only
    appear with six markings."""
    extras: list[IntPolynomial] = []
    b0, c0 = core_relation_seeds()
    extras.append(lift_relation(6, b0, start_length=5))
    extras.append(lift_relation(6, c0, start_length=5))
    banana = banana_partition()
    top = s_max(6)
    for s in enumerate_partitions(6):
        if s == top or not refines(banana, s):
            continue
        value = min_class("nod", s.length, compose(banana, s))
        seed = tau_monomial(s) * (NU - lift_from_tail(6, s, value))
        extras.append(lift_relation(6, seed, start_length=s.length - 1))
    return tuple(extras)


@lru_cache(maxsize=None)
def gorenstein_presentation(n: int) -> GradedPresentation:
    """The ambient ring of the moduli of log-canonically polarised
    genus-one curves on ``n`` markings."""
    if not 1 <= n <= 6:
        raise ValueError("marking count must be between 1 and 6")
    families = relation_families(n)
    relations = (
        families["four-point"]
        + families["incompatible"]
        + families["normal"]
    )
    if n == 6:
        relations = relations + list(six_marking_extras())
    return GradedPresentation(
        ambient_symbols(n), relations, name=f"gorenstein({n})"
    )


def classes_equal(n: int, f: IntPolynomial, g: IntPolynomial) -> bool:
    """Equality in the ambient ring."""
    return gorenstein_presentation(n).reduces_to_zero(f - g)


def restriction_offenders(
    n: int, f: IntPolynomial
) -> list[SetPartition]:
    """The strata on whose tail models ``f`` does not restrict to zero."""
    out = []
    for s in enumerate_partitions(n):
        r = restrict_to_tail(n, s, f)
        if not tail_model(n, s).presentation.reduces_to_zero(r):
            out.append(s)
    return out


def restricts_to_zero_everywhere(n: int, f: IntPolynomial) -> bool:
    return not restriction_offenders(n, f)


# -- frozen expected classes ---------------------------------------------------------


FixtureTable = dict[int, dict[SetPartition, IntPolynomial]]


def _parse_fixture_json(raw: dict) -> FixtureTable:
    table: FixtureTable = {}
    for n_str, entries in raw.items():
        n = int(n_str)
        table[n] = {
            SetPartition.parse(text, n): IntPolynomial.parse(poly)
            for text, poly in entries.items()
        }
    return table


def load_fixture_file(path: str) -> FixtureTable:
    with open(path, "r", encoding="utf-8") as fh:
        return _parse_fixture_json(json.load(fh))


@lru_cache(maxsize=None)
def _fixture_table() -> FixtureTable:
    data = (
        resources.files("ellchow.data")
        .joinpath("appendix_fixtures.json")
        .read_text(encoding="utf-8")
    )
    return _parse_fixture_json(json.loads(data))


def fixture_partitions(
    n: int, table: FixtureTable | None = None
) -> list[SetPartition]:
    return sorted((table or _fixture_table())[n])


def permute_marks(f: IntPolynomial, perm: dict[int, int]) -> IntPolynomial:
    """Relabel the markings inside every subset-indexed generator."""
    mapping: dict[str, str] = {}
    for name in f.symbols_used():
        elems = name_elements(name)
        if elems is not None:
            mapping[name] = subset_name(name[0], (perm[e] for e in elems))
    return f.rename_symbols(mapping)


def matching_permutation(
    source: SetPartition, dest: SetPartition
) -> dict[int, int]:
    """A marking relabelling carrying the blocks of ``source`` onto the
    blocks of ``dest`` (sizes must agree)."""
    if source.shape() != dest.shape():
        raise ValueError("partitions have different shapes")
    by_size: dict[int, list[tuple[int, ...]]] = {}
    for block in dest.blocks:
        by_size.setdefault(len(block), []).append(block)
    perm: dict[int, int] = {}
    for block in source.blocks:
        image = by_size[len(block)].pop(0)
        perm.update(dict(zip(block, image)))
    return perm


def expected_class(
    n: int, s: SetPartition, table: FixtureTable | None = None
) -> IntPolynomial:
    """The frozen expected value of the elliptic-singularity class of one
    partition, obtained by relabelling a stored representative of the same
    shape."""
    entries = (table or _fixture_table())[n]
    for stored, poly in entries.items():
        if stored.shape() == s.shape():
            return permute_marks(poly, matching_permutation(stored, s))
    raise KeyError(f"no stored class of shape {s.shape()} for n={n}")
