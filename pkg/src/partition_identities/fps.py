"""Truncated Laurent series in one variable ``q`` with exact integer coefficients.

A series carries an explicit truncation ``order``: every coefficient with
exponent ``<= order`` is exact, everything above it is unknown. All operations
propagate the exact window conservatively, so comparing two results never
relies on coefficients that were silently lost.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping


class NonUnitLeadingCoefficient(ValueError):
    pass


class ExponentAboveTruncation(IndexError):
    pass


@dataclass(frozen=True, slots=True)
class LaurentSeries:
    """``sum(coeffs[i] * q**(lowest_exp + i))``, exact for exponents ``<= order``."""

    lowest_exp: int
    coeffs: tuple[int, ...]
    order: int

    def __post_init__(self) -> None:
        # an empty window is represented with lowest_exp == order + 1
        if len(self.coeffs) != max(self.order - self.lowest_exp + 1, 0):
            raise ValueError(
                f"expected {self.order - self.lowest_exp + 1} coefficients "
                f"for window [{self.lowest_exp}, {self.order}], got {len(self.coeffs)}"
            )

    # -- construction ------------------------------------------------------

    @classmethod
    def from_coeffs(
        cls, coeffs: Iterable[int] | Mapping[int, int], order: int, lowest_exp: int = 0
    ) -> LaurentSeries:
        """Build from a coefficient list (starting at ``lowest_exp``) or an
        ``{exponent: coefficient}`` mapping; entries above ``order`` are dropped."""
        if isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = ((lowest_exp + i, c) for i, c in enumerate(coeffs))
        if order < lowest_exp:
            return cls(order + 1, (), order)
        buf = [0] * (order - lowest_exp + 1)
        for e, c in items:
            if e < lowest_exp:
                raise ValueError(f"exponent {e} below lowest_exp {lowest_exp}")
            if e <= order:
                buf[e - lowest_exp] += int(c)
        return cls(lowest_exp, tuple(buf), order)

    @classmethod
    def zero(cls, order: int) -> LaurentSeries:
        return cls.from_coeffs((), order)

    @classmethod
    def one(cls, order: int) -> LaurentSeries:
        return cls.monomial(0, order)

    @classmethod
    def monomial(cls, e: int, order: int, c: int = 1) -> LaurentSeries:
        lo = min(e, 0)
        return cls.from_coeffs({e: c}, order, lowest_exp=lo)

    # -- queries -----------------------------------------------------------

    def __getitem__(self, e: int) -> int:
        return coeff(self, e)

    def window(self, start: int, stop: int) -> list[int]:
        """Coefficients for exponents ``start..stop`` inclusive."""
        return [coeff(self, e) for e in range(start, stop + 1)]

    def valuation(self) -> int | None:
        """Exponent of the first nonzero coefficient, or None if all known ones vanish."""
        for i, c in enumerate(self.coeffs):
            if c:
                return self.lowest_exp + i
        return None

    def truncate(self, order: int) -> LaurentSeries:
        if order > self.order:
            raise ExponentAboveTruncation(
                f"cannot raise truncation order from {self.order} to {order}"
            )
        if order < self.lowest_exp:
            return LaurentSeries(order + 1, (), order)
        return LaurentSeries(
            self.lowest_exp, self.coeffs[: order - self.lowest_exp + 1], order
        )

    def first_difference(self, other: LaurentSeries) -> int | None:
        """Smallest exponent in the common exact window where the two differ."""
        lo = min(self.lowest_exp, other.lowest_exp)
        hi = min(self.order, other.order)
        for e in range(lo, hi + 1):
            if coeff(self, e) != coeff(other, e):
                return e
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.first_difference(other) is None

    __hash__ = None  # type: ignore[assignment]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: LaurentSeries | int) -> LaurentSeries:
        return series_add(self, _lift(other, self.order))

    __radd__ = __add__

    def __neg__(self) -> LaurentSeries:
        return LaurentSeries(self.lowest_exp, tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other: LaurentSeries | int) -> LaurentSeries:
        return series_add(self, -_lift(other, self.order))

    def __rsub__(self, other: int) -> LaurentSeries:
        return series_add(_lift(other, self.order), -self)

    def __mul__(self, other: LaurentSeries | int) -> LaurentSeries:
        if isinstance(other, int):
            return LaurentSeries(self.lowest_exp, tuple(other * c for c in self.coeffs), self.order)
        return series_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other: LaurentSeries) -> LaurentSeries:
        return series_mul(self, series_invert(other))

    def __rtruediv__(self, other: int) -> LaurentSeries:
        return other * series_invert(self)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            e = self.lowest_exp + i
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        body = " + ".join(terms).replace("+ -", "- ") or "0"
        return f"{body} + O(q^{self.order + 1})"


def _lift(x: LaurentSeries | int, order: int) -> LaurentSeries:
    if isinstance(x, LaurentSeries):
        return x
    return LaurentSeries.monomial(0, order, x)


def coeff(f: LaurentSeries, e: int) -> int:
    """Exact coefficient of ``q**e``; zero below the stored window."""
    if e > f.order:
        raise ExponentAboveTruncation(f"q^{e} is above truncation order {f.order}")
    if e < f.lowest_exp:
        return 0
    return f.coeffs[e - f.lowest_exp]


def series_add(f: LaurentSeries, g: LaurentSeries) -> LaurentSeries:
    order = min(f.order, g.order)
    lo = min(f.lowest_exp, g.lowest_exp)
    if order < lo:
        return LaurentSeries(order + 1, (), order)
    out = [0] * (order - lo + 1)
    for s in (f, g):
        off = s.lowest_exp - lo
        for i, c in enumerate(s.coeffs[: order - s.lowest_exp + 1]):
            out[off + i] += c
    return LaurentSeries(lo, tuple(out), order)


def series_mul(f: LaurentSeries, g: LaurentSeries) -> LaurentSeries:
    lo = f.lowest_exp + g.lowest_exp
    order = min(f.order + g.lowest_exp, g.order + f.lowest_exp)
    if order < lo:
        return LaurentSeries(order + 1, (), order)
    n = order - lo + 1
    out = [0] * n
    fc, gc = f.coeffs, g.coeffs
    for i, a in enumerate(fc[:n]):
        if not a:
            continue
        for j, b in enumerate(gc[: n - i]):
            if b:
                out[i + j] += a * b
    return LaurentSeries(lo, tuple(out), order)


def series_invert(f: LaurentSeries) -> LaurentSeries:
    """Multiplicative inverse; the first nonzero coefficient must be +1 or -1.

    Leading zero coefficients are skipped, so for ``f = q**v * u`` the result is
    ``q**(-v) / u``, exact up to ``f.order - 2*v``.
    """
    v = f.valuation()
    if v is None:
        raise NonUnitLeadingCoefficient("series has no nonzero coefficient in its exact window")
    u = f.coeffs[v - f.lowest_exp :]
    lead = u[0]
    if lead not in (1, -1):
        raise NonUnitLeadingCoefficient(f"leading coefficient {lead} is not a unit")
    n = len(u)
    inv = [0] * n
    inv[0] = lead
    for k in range(1, n):
        acc = 0
        for j in range(1, k + 1):
            if u[j]:
                acc += u[j] * inv[k - j]
        # lead is +-1 so multiplying is dividing
        inv[k] = -acc * lead
    return LaurentSeries(-v, tuple(inv), f.order - 2 * v)


def monomial_shift(f: LaurentSeries, m: int) -> LaurentSeries:
    """Multiply by ``q**m``."""
    return LaurentSeries(f.lowest_exp + m, f.coeffs, f.order + m)


def _times_one_minus_q_pow(buf: list[int], j: int) -> None:
    # in place: buf *= (1 - q^j), buf indexed from exponent 0
    for e in range(len(buf) - 1, j - 1, -1):
        buf[e] -= buf[e - j]


def pochhammer_inf(k: int, order: int) -> LaurentSeries:
    """``(q^k; q)_inf = prod_{i>=0} (1 - q^(k+i))`` truncated at ``order``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if order < 0:
        raise ValueError("order must be >= 0")
    buf = [1] + [0] * order
    for j in range(k, order + 1):
        _times_one_minus_q_pow(buf, j)
    return LaurentSeries(0, tuple(buf), order)


def pochhammer_fin(base_exp: int, n: int, order: int) -> LaurentSeries:
    """``(q^base_exp; q)_n = prod_{i=0}^{n-1} (1 - q^(base_exp+i))``; empty product is 1."""
    if base_exp < 1:
        raise ValueError("base_exp must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    buf = [1] + [0] * order
    for j in range(base_exp, min(base_exp + n - 1, order) + 1):
        _times_one_minus_q_pow(buf, j)
    return LaurentSeries(0, tuple(buf), order)
