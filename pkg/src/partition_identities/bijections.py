"""Executable bijections between partition families.

``phi``: partitions of n whose smallest part is unique  <->  partitions of n+1
without a part 1. ``psi``: partitions of n whose smallest part repeats  <->
partitions of 2n whose largest and smallest parts differ by n.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .partitions import Partition, enumerate_partitions


class NotInFamily(ValueError):
    pass


class InvariantViolation(AssertionError):
    """A property the maps are proven to have did not hold."""


class Kind(str, enum.Enum):
    A = "A"  # partitions of n, smallest part occurs at least twice
    C = "C"  # partitions of n, smallest part occurs exactly once
    D = "D"  # partitions of n+1, no part equal to 1
    F = "F"  # partitions of 2n, largest - smallest = n


@dataclass(frozen=True)
class FamilyTag:
    kind: Kind
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.n < 1:
            raise ValueError("n must be >= 1")

    @property
    def size(self) -> int:
        """The integer being partitioned."""
        return {Kind.A: self.n, Kind.C: self.n, Kind.D: self.n + 1, Kind.F: 2 * self.n}[self.kind]

    def __contains__(self, pi: Partition) -> bool:
        if pi.n != self.size:
            return False
        if self.kind is Kind.A:
            return pi.smallest_multiplicity() >= 2
        if self.kind is Kind.C:
            return pi.smallest_multiplicity() == 1
        if self.kind is Kind.D:
            return pi.smallest != 1
        return pi.difference() == self.n

    def members(self) -> Iterator[Partition]:
        return (pi for pi in enumerate_partitions(self.size) if pi in self)

    def __str__(self) -> str:
        return f"{self.kind.value}({self.n})"


def _require(pi: Partition, family: FamilyTag) -> None:
    if pi not in family:
        raise NotInFamily(f"{pi} is not in {family}")


def bump(pi: Partition, index: int, delta: int) -> Partition:
    """Add ``delta`` to the part at ``index`` and re-canonicalize."""
    parts = list(pi.parts)
    parts[index] += delta
    return Partition.of(parts)


def phi_forward(pi: Partition) -> Partition:
    """Add 1 to the unique smallest part."""
    _require(pi, FamilyTag(Kind.C, pi.n))
    return bump(pi, len(pi) - 1, 1)


def phi_inverse(pi_prime: Partition) -> Partition:
    """Subtract 1 from one copy of the smallest part."""
    n = pi_prime.n - 1
    if n < 1:
        raise NotInFamily(f"{pi_prime} is too small to lie in any D(n)")
    _require(pi_prime, FamilyTag(Kind.D, n))
    parts = list(pi_prime.parts)
    parts[-1] -= 1
    return Partition.of(parts)


def psi_forward(pi: Partition) -> Partition:
    """Add n to one copy of the (repeated) smallest part."""
    n = pi.n
    _require(pi, FamilyTag(Kind.A, n))
    return bump(pi, len(pi) - 1, n)


def psi_inverse(pi_prime: Partition) -> Partition:
    """Subtract n from the largest part of a partition of 2n."""
    if pi_prime.n % 2:
        raise NotInFamily(f"{pi_prime} has odd sum, so it is in no F(n)")
    n = pi_prime.n // 2
    _require(pi_prime, FamilyTag(Kind.F, n))
    if len(pi_prime) > 1 and pi_prime.parts[1] == pi_prime.largest:
        raise InvariantViolation(f"largest part of {pi_prime} is repeated")
    return bump(pi_prime, 0, -n)


@dataclass(frozen=True)
class BijectionTrace:
    source: Partition
    image: Partition
    round_trip_ok: bool


@dataclass
class BijectionReport:
    which: str
    n: int
    source: FamilyTag
    target: FamilyTag
    traces: list[BijectionTrace]
    source_size: int
    target_size: int
    image_is_target: bool
    inverse_round_trips: bool
    errors: list[str] = field(default_factory=list)

    @property
    def forward_round_trips(self) -> bool:
        return all(t.round_trip_ok for t in self.traces)

    @property
    def passed(self) -> bool:
        return (
            not self.errors
            and self.forward_round_trips
            and self.inverse_round_trips
            and self.image_is_target
            and self.source_size == self.target_size
        )

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (
            f"{verdict} {self.which} n={self.n}: |{self.source}|={self.source_size} "
            f"|{self.target}|={self.target_size} image=target:{self.image_is_target} "
            f"round-trips:{self.forward_round_trips and self.inverse_round_trips}"
        )


BIJECTIONS: dict[str, tuple[Kind, Kind, Callable[[Partition], Partition], Callable[[Partition], Partition]]] = {
    "phi": (Kind.C, Kind.D, phi_forward, phi_inverse),
    "psi": (Kind.A, Kind.F, psi_forward, psi_inverse),
}


def verify_bijection(which: str, n: int) -> BijectionReport:
    """Run a bijection over its whole source family and check it is onto the target.

    Failures are recorded in the report rather than raised.
    """
    src_kind, tgt_kind, fwd, inv = BIJECTIONS[which]
    source, target = FamilyTag(src_kind, n), FamilyTag(tgt_kind, n)
    errors: list[str] = []
    traces = []
    images = set()
    members = list(source.members())
    for pi in members:
        try:
            img = fwd(pi)
        except (NotInFamily, InvariantViolation) as exc:
            errors.append(f"forward({pi}): {exc}")
            continue
        if img not in target:
            errors.append(f"forward({pi}) = {img} lies outside {target}")
        try:
            back = inv(img)
        except (NotInFamily, InvariantViolation) as exc:
            errors.append(f"inverse({img}): {exc}")
            back = None
        traces.append(BijectionTrace(pi, img, back == pi))
        images.add(img)

    targets = list(target.members())
    inverse_ok = True
    for pi_prime in targets:
        try:
            inverse_ok &= fwd(inv(pi_prime)) == pi_prime
        except (NotInFamily, InvariantViolation) as exc:
            errors.append(f"round trip from {pi_prime}: {exc}")
            inverse_ok = False

    return BijectionReport(
        which=which,
        n=n,
        source=source,
        target=target,
        traces=traces,
        source_size=len(members),
        target_size=len(targets),
        image_is_target=images == set(targets) and len(images) == len(traces),
        inverse_round_trips=inverse_ok,
        errors=errors,
    )
