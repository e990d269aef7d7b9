"""Set partitions of marking sets, the refinement order, and singularity
specifications for modular compactifications.

Conventions used throughout the package:

* the ground set is ``{1, ..., n}``;
* a partition is written ``1 3|2 4`` — blocks separated by ``|``, elements
  by spaces — with blocks listed by smallest element;
* ``refines(coarse, fine)`` holds when every block of ``fine`` is contained
  in a block of ``coarse``; the coarsest partition has a single block and
  the finest consists of singletons;
* the *codimension* of a partition is its number of non-singleton blocks.

A :class:`QSpec` names a modular compactification by the set of partitions
whose singularity type is allowed; the set must exclude the all-singleton
partition and be closed under coarsening.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence


@dataclass(frozen=True, order=True)
class SetPartition:
    """A partition of ``{1..n}`` in canonical form: blocks sorted
    ascending internally and listed by smallest element."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise ValueError("empty block")
            if list(block) != sorted(block):
                raise ValueError(f"block not sorted: {block}")
            if seen & set(block):
                raise ValueError("blocks overlap")
            seen |= set(block)
        if seen != set(range(1, self.n + 1)):
            raise ValueError(
                f"blocks do not cover 1..{self.n}: {sorted(seen)}"
            )
        if list(self.blocks) != sorted(self.blocks, key=lambda b: b[0]):
            raise ValueError("blocks not listed by smallest element")

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]], n: int) -> "SetPartition":
        canon = tuple(
            sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0])
        )
        return cls(n, canon)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "SetPartition":
        blocks = [
            [int(tok) for tok in chunk.split()]
            for chunk in text.strip().split("|")
        ]
        size = max((e for b in blocks for e in b), default=0)
        if n is None:
            n = size
        return cls.of(blocks, n)

    def text(self) -> str:
        return "|".join(" ".join(str(e) for e in b) for b in self.blocks)

    def __str__(self) -> str:
        return self.text()

    @property
    def length(self) -> int:
        return len(self.blocks)

    def shape(self) -> tuple[int, ...]:
        return tuple(sorted((len(b) for b in self.blocks), reverse=True))

    def codim(self) -> int:
        return sum(1 for b in self.blocks if len(b) >= 2)

    def nonsingleton_blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(b for b in self.blocks if len(b) >= 2)

    def block_of(self, element: int) -> tuple[int, ...]:
        for b in self.blocks:
            if element in b:
                return b
        raise ValueError(f"element {element} not in ground set")


def s_min(n: int) -> SetPartition:
    """The coarsest partition: one block."""
    return SetPartition.of([range(1, n + 1)], n)


def s_max(n: int) -> SetPartition:
    """The finest partition: all singletons."""
    return SetPartition.of([[i] for i in range(1, n + 1)], n)


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[SetPartition, ...]:
    """All partitions of ``{1..n}``, sorted by (number of blocks, blocks)."""
    if n < 1:
        raise ValueError("ground set must be nonempty")
    acc: list[list[list[int]]] = [[[1]]]
    for e in range(2, n + 1):
        nxt: list[list[list[int]]] = []
        for part in acc:
            for i in range(len(part)):
                nxt.append(
                    [b + [e] if j == i else list(b) for j, b in enumerate(part)]
                )
            nxt.append([list(b) for b in part] + [[e]])
        acc = nxt
    parts = [SetPartition.of(p, n) for p in acc]
    parts.sort(key=lambda p: (p.length, p.blocks))
    return tuple(parts)


def partitions_of_length(n: int, m: int) -> tuple[SetPartition, ...]:
    return tuple(p for p in enumerate_partitions(n) if p.length == m)


def refines(coarse: SetPartition, fine: SetPartition) -> bool:
    """True when every block of ``fine`` lies inside a block of ``coarse``."""
    if coarse.n != fine.n:
        raise ValueError("partitions on different ground sets")
    for block in fine.blocks:
        home = coarse.block_of(block[0])
        if not set(block) <= set(home):
            return False
    return True


def compose(p: SetPartition, s: SetPartition) -> SetPartition:
    """The partition induced by ``p`` on the blocks of ``s``.

    Requires ``refines(p, s)``; block ``i`` of ``s`` (1-based, canonical
    order) is grouped with block ``j`` whenever both lie in the same block
    of ``p``.  The result partitions ``{1..s.length}`` and has ``p.length``
    blocks.
    """
    if not refines(p, s):
        raise ValueError("compose requires the first partition to be coarser")
    owner: dict[int, list[int]] = {}
    for i, block in enumerate(s.blocks, start=1):
        home = p.block_of(block[0])
        owner.setdefault(home[0], []).append(i)
    return SetPartition.of(owner.values(), s.length)


def disc_completion(blocks: Iterable[Iterable[int]], n: int) -> SetPartition:
    """The partition whose non-singleton blocks are the given disjoint
    subsets, completed by singletons."""
    listed = [tuple(sorted(b)) for b in blocks]
    used = {e for b in listed for e in b}
    singletons = [(i,) for i in range(1, n + 1) if i not in used]
    return SetPartition.of(list(listed) + singletons, n)


def validate_subset(b: Iterable[int], n: int) -> frozenset[int]:
    """Check a boundary-divisor label: a subset of ``{1..n}`` of size >= 2."""
    s = frozenset(b)
    if not s <= set(range(1, n + 1)):
        raise ValueError(f"subset {sorted(s)} not within 1..{n}")
    if len(s) < 2:
        raise ValueError("boundary subsets need at least two markings")
    return s


def incomparable(b1: Iterable[int], b2: Iterable[int]) -> bool:
    """True when the two subsets neither nest nor are disjoint."""
    s1, s2 = set(b1), set(b2)
    return bool(s1 & s2) and not (s1 <= s2) and not (s2 <= s1)


BKN_CONVENTION = "BKN-allowed-singularities"


@dataclass(frozen=True)
class QSpec:
    """A modular compactification, named by its allowed singularity types.

    ``allowed`` holds every partition whose associated singular curve is
    permitted; the all-singleton partition (the smooth locus stand-in) is
    never listed, and the set is closed under coarsening.
    """

    n: int
    allowed: frozenset[SetPartition]
    convention: str = BKN_CONVENTION

    def text_lines(self) -> list[str]:
        return [p.text() for p in sorted(self.allowed)]

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "convention": self.convention,
            "allowed": self.text_lines(),
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "QSpec":
        n = int(obj["n"])
        allowed = frozenset(
            SetPartition.parse(t, n) for t in obj.get("allowed", [])
        )
        q = cls(n, allowed, obj.get("convention", BKN_CONVENTION))
        validate_qspec(q)
        return q

    @classmethod
    def load(cls, path: str) -> "QSpec":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_json_obj(json.load(fh))


def validate_qspec(q: QSpec) -> None:
    if q.n < 1:
        raise ValueError("ground set must be nonempty")
    if q.convention != BKN_CONVENTION:
        raise ValueError(f"unknown singularity convention {q.convention!r}")
    top = s_max(q.n)
    for s in q.allowed:
        if s.n != q.n:
            raise ValueError("partition on wrong ground set")
        if s == top:
            raise ValueError("the all-singleton partition is never allowed")
    for s in q.allowed:
        for t in enumerate_partitions(q.n):
            if refines(t, s) and t not in q.allowed:
                raise ValueError(
                    f"not closed under coarsening: {s.text()} allowed "
                    f"but {t.text()} missing"
                )


def dm_space(n: int) -> QSpec:
    """The stable compactification: no extra singularities allowed."""
    return QSpec(n, frozenset())


def smyth(n: int, m: int) -> QSpec:
    """Allow every singularity with at most ``m`` branches."""
    if not 1 <= m <= n - 1:
        raise ValueError("branch bound must be between 1 and n-1")
    allowed = frozenset(
        p for p in enumerate_partitions(n) if p.length <= m
    )
    return QSpec(n, allowed)


def lp_minimal(n: int) -> QSpec:
    """The minimal log-canonically polarised compactification: every
    singularity short of the all-singleton type is allowed."""
    if n < 2:
        return QSpec(n, frozenset(p for p in enumerate_partitions(n)[:-1]))
    return smyth(n, n - 1)


def partitions_coarser_than(s: SetPartition) -> tuple[SetPartition, ...]:
    """All partitions ``t`` with ``refines(t, s)``, including ``s`` itself."""
    return tuple(
        t for t in enumerate_partitions(s.n) if refines(t, s)
    )
