"""Integer partitions, their stacks, and the Weyr-to-partition rearrangement."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from typing import Iterator, Sequence

from .arith import RootMultiset, sort_key
from .errors import ParseError, PartitionError


@dataclass(frozen=True)
class Partition:
    """A nonincreasing sequence of positive addends."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise PartitionError("a partition needs at least one addend")
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p <= 0:
                raise PartitionError(f"addends must be positive integers, got {p!r}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise PartitionError(f"addends must be nonincreasing, got {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def d(self) -> int:
        """Number of addends (= number of variables = plane dimension)."""
        return len(self.parts)

    def offsets(self) -> list:
        """0-based starting row of each addend's diagonal block."""
        out, acc = [], 0
        for p in self.parts:
            out.append(acc)
            acc += p
        return out

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return ",".join(map(str, self.parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        try:
            parts = tuple(int(t) for t in text.replace(" ", "").strip("()").split(",") if t)
        except ValueError:
            raise ParseError(f"cannot parse partition {text!r}") from None
        return cls(parts)


def make_partition(parts: Sequence[int]) -> Partition:
    return Partition(tuple(parts))


@dataclass(frozen=True)
class StackDecomposition:
    """Stack data of a partition ``(m_1^{l_1}, ..., m_t^{l_t})``.

    ``index_sets[j]`` is the 1-based range ``m_1 - m_j + 1 .. m_1 - m_{j+1}``
    (with ``m_{t+1} = 0``); ``first_part[j]`` is the 0-based index of the
    stack's first addend.
    """

    t: int
    m: tuple
    l: tuple
    s: tuple
    index_sets: tuple
    first_part: tuple

    def m_next(self, j: int) -> int:
        """``m_{j+1}`` for a 0-based stack index, with ``m_{t+1} = 0``."""
        return self.m[j + 1] if j + 1 < self.t else 0


def stack_decomposition(pi: Partition) -> StackDecomposition:
    m, l, first = [], [], []
    pos = 0
    for value, group in groupby(pi.parts):
        size = len(list(group))
        m.append(value)
        l.append(size)
        first.append(pos)
        pos += size
    s, acc = [], 0
    for x in l:
        acc += x
        s.append(acc)
    t = len(m)
    nxt = m[1:] + [0]
    index_sets = tuple(range(m[0] - m[j] + 1, m[0] - nxt[j] + 1) for j in range(t))
    return StackDecomposition(t, tuple(m), tuple(l), tuple(s), index_sets, tuple(first))


def _partitions(n: int, largest: int) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> list:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 1:
        raise PartitionError("n must be >= 1")
    return [Partition(p) for p in _partitions(n, n)]


@dataclass(frozen=True)
class EigenAssignment:
    """One root multiset per stack; stack j's multiset has l_j elements."""

    per_stack: tuple

    def __post_init__(self):
        object.__setattr__(self, "per_stack", tuple(self.per_stack))

    def flatten(self) -> list:
        """Substitution tuple: stack 1 roots, then stack 2 roots, ..."""
        return [v for roots in self.per_stack for v in roots.values()]

    def __len__(self):
        return len(self.per_stack)

    def __getitem__(self, j):
        return self.per_stack[j]


def partition_of_weyr(weyr) -> tuple:
    """Sort the nonzero Weyr entries, group equal ones, and read off the partition.

    ``weyr`` maps eigenvalue -> nonincreasing positive sequence (a
    :class:`~planeform.jordan.WeyrArray` or a plain dict). Returns the
    partition ``(m_1^{l_1}, ..., m_t^{l_t})`` and the per-stack eigenvalue
    multisets: eigenvalue ``lam`` lands in stack i once per entry of its Weyr
    sequence equal to ``m_i``.
    """
    items = weyr.items()
    entries = sorted((w for _, seq in items for w in seq if w), reverse=True)
    if not entries:
        raise PartitionError("empty Weyr array")
    pi = Partition(tuple(entries))
    stacks = stack_decomposition(pi)
    per_stack = []
    for value in stacks.m:
        counts = []
        for lam, seq in sorted(items, key=lambda kv: sort_key(kv[0])):
            c = sum(1 for w in seq if w == value)
            if c:
                counts.append((lam, c))
        per_stack.append(RootMultiset(tuple(counts)))
    return pi, EigenAssignment(tuple(per_stack))


__all__ = [
    "EigenAssignment",
    "Partition",
    "StackDecomposition",
    "enumerate_partitions",
    "make_partition",
    "partition_of_weyr",
    "stack_decomposition",
]
