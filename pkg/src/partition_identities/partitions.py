"""Integer partitions and the smallest/largest-part statistics built on them."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Sequence


@dataclass(frozen=True, slots=True, order=True)
class Partition:
    """A partition stored as its non-increasing tuple of positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        ps = self.parts
        if not isinstance(ps, tuple):
            object.__setattr__(self, "parts", ps := tuple(ps))
        if any(p < 1 for p in ps):
            raise ValueError(f"parts must be positive: {ps}")
        if any(a < b for a, b in zip(ps, ps[1:])):
            raise ValueError(f"parts must be non-increasing: {ps}")

    @classmethod
    def of(cls, parts: Sequence[int]) -> Partition:
        """Canonicalize an arbitrary multiset of positive parts."""
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Read the ``4+1+1`` notation."""
        return cls.of([int(tok) for tok in text.split("+")])

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0]

    @property
    def smallest(self) -> int:
        return self.parts[-1]

    def multiplicity(self, part: int) -> int:
        return self.parts.count(part)

    def multiplicities(self) -> Counter[int]:
        return Counter(self.parts)

    def smallest_multiplicity(self) -> int:
        s = self.parts[-1]
        k = 0
        for p in reversed(self.parts):
            if p != s:
                break
            k += 1
        return k

    def difference(self) -> int:
        """Largest part minus smallest part."""
        return self.parts[0] - self.parts[-1]

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "+".join(map(str, self.parts))


def _descending(n: int) -> Iterator[tuple[int, ...]]:
    # Reverse-lexicographic successor: take the rightmost part > 1, lower it by
    # one and refill everything after it greedily with parts no larger than it.
    a = [n]
    while True:
        yield tuple(a)
        ones = 0
        while a and a[-1] == 1:
            a.pop()
            ones += 1
        if not a:
            return
        x = a.pop() - 1
        rest = ones + 1
        a.append(x)
        while rest > x:
            a.append(x)
            rest -= x
        if rest:
            a.append(rest)


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Every partition of ``n`` once, in reverse-lexicographic order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    for parts in _descending(n):
        yield Partition(parts)


def partition_numbers(n_max: int) -> list[int]:
    """``[p(0), ..., p(n_max)]`` via Euler's pentagonal recurrence."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    p = [1] + [0] * n_max
    for m in range(1, n_max + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p


def p(n: int) -> int:
    """Number of partitions of ``n``; ``p(0) = 1``."""
    return partition_numbers(n)[n]


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError("n must be >= 1")


def count_smallest_at_least(n: int, m: int) -> int:
    """Partitions of ``n`` whose smallest part occurs at least ``m`` times."""
    _check_n(n)
    if m < 1:
        raise ValueError("m must be >= 1")
    return sum(1 for parts in _descending(n) if parts.count(parts[-1]) >= m)


def count_smallest_exactly_once(n: int) -> int:
    _check_n(n)
    return sum(1 for parts in _descending(n) if len(parts) == 1 or parts[-2] != parts[-1])


def count_no_ones(n: int) -> int:
    """Partitions of ``n + 1`` with no part equal to 1."""
    _check_n(n)
    return sum(1 for parts in _descending(n + 1) if parts[-1] != 1)


def p_fixed_diff(n: int, t: int) -> int:
    """Partitions of ``n`` whose largest and smallest parts differ by exactly ``t``."""
    _check_n(n)
    if t < 0:
        raise ValueError("t must be >= 0")
    return sum(1 for parts in _descending(n) if parts[0] - parts[-1] == t)


def _count_bounded(total: int, lo: int, hi: int) -> int:
    # partitions of total into parts drawn from lo..hi
    if total < 0:
        return 0
    ways = [1] + [0] * total
    for part in range(lo, hi + 1):
        for s in range(part, total + 1):
            ways[s] += ways[s - part]
    return ways[total]


def p_fixed_diff_dp(n: int, t: int) -> int:
    """Same count as :func:`p_fixed_diff` without enumerating.

    Sums, over the smallest part ``s``, the partitions of ``n`` using only parts
    in ``[s, s+t]`` that contain both ``s`` and ``s+t``.
    """
    _check_n(n)
    if t < 0:
        raise ValueError("t must be >= 0")
    if t == 0:
        return sum(1 for s in range(1, n + 1) if n % s == 0)
    total = 0
    s = 1
    while 2 * s + t <= n:
        total += _count_bounded(n - 2 * s - t, s, s + t)
        s += 1
    return total


@dataclass(frozen=True)
class CountTable:
    n: int
    p_n: int
    a_n: int
    c_n: int
    d_n: int
    p2n_n: int
    a_m: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        values = [self.p_n, self.a_n, self.c_n, self.d_n, self.p2n_n, *self.a_m.values()]
        if any(v < 0 for v in values):
            raise ValueError("counts must be nonnegative")
        if self.c_n + self.a_n != self.p_n:
            raise ValueError(f"c(n) + a(n) != p(n) at n={self.n}")


def count_table(n: int, m_values: Sequence[int] = (1, 2, 3, 4, 5)) -> CountTable:
    """All per-``n`` statistics, each computed by enumeration."""
    return CountTable(
        n=n,
        p_n=sum(1 for _ in _descending(n)),
        a_n=count_smallest_at_least(n, 2),
        c_n=count_smallest_exactly_once(n),
        d_n=count_no_ones(n),
        p2n_n=p_fixed_diff(2 * n, n),
        a_m={m: count_smallest_at_least(n, m) for m in m_values},
    )
