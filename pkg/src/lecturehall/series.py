"""Truncated power series in ``x, u, v`` with exact integer coefficients,
and the generating-function identity checks built on them.

A term ``c * x^a u^b v^d`` is stored under the key ``(a, b, d)``.  Any term
whose exponent exceeds a bound is dropped, so both sides of a comparison are
truncated identically.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import reduce

from .core import (
    ceiling_stats,
    enumerate_bounded,
    enumerate_lecture_hall,
)

Exponent = tuple[int, int, int]


class BoundsMismatchError(ValueError):
    pass


class DivergenceError(ValueError):
    pass


@dataclass(frozen=True)
class TruncatedSeries:
    max_x: int
    max_u: int | None = None
    max_v: int | None = None
    coefficients: dict[Exponent, int] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.max_u is None:
            object.__setattr__(self, "max_u", 2 * self.max_x)
        if self.max_v is None:
            object.__setattr__(self, "max_v", 2 * self.max_x)
        coeffs = {
            e: c for e, c in self.coefficients.items()
            if c != 0 and self._within(e)
        }
        object.__setattr__(self, "coefficients", coeffs)

    def _within(self, e: Exponent) -> bool:
        return (0 <= e[0] <= self.max_x and 0 <= e[1] <= self.max_u
                and 0 <= e[2] <= self.max_v)

    @property
    def bounds(self) -> tuple[int, int, int]:
        return (self.max_x, self.max_u, self.max_v)

    def like(self, coefficients: dict[Exponent, int]) -> TruncatedSeries:
        return TruncatedSeries(*self.bounds, coefficients=coefficients)

    def coefficient(self, dx: int, du: int = 0, dv: int = 0) -> int:
        return self.coefficients.get((dx, du, dv), 0)

    def _check(self, other: TruncatedSeries) -> None:
        if self.bounds != other.bounds:
            raise BoundsMismatchError(f"bounds differ: {self.bounds} vs {other.bounds}")

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        out = dict(self.coefficients)
        for e, c in other.coefficients.items():
            out[e] = out.get(e, 0) + c
        return self.like(out)

    def __neg__(self) -> TruncatedSeries:
        return self.like({e: -c for e, c in self.coefficients.items()})

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self + (-other)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        mx, mu, mv = self.bounds
        out: dict[Exponent, int] = {}
        for (a1, b1, d1), c1 in self.coefficients.items():
            for (a2, b2, d2), c2 in other.coefficients.items():
                a, b, d = a1 + a2, b1 + b2, d1 + d2
                if a > mx or b > mu or d > mv:
                    continue
                out[(a, b, d)] = out.get((a, b, d), 0) + c1 * c2
        return self.like(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.bounds == other.bounds and self.coefficients == other.coefficients

    __hash__ = None  # type: ignore[assignment]

    def specialize(self, u: int = 1, v: int = 1) -> TruncatedSeries:
        """Substitute integers for ``u`` and ``v``; the result depends on ``x`` only."""
        out: dict[Exponent, int] = {}
        for (a, b, d), c in self.coefficients.items():
            out[(a, 0, 0)] = out.get((a, 0, 0), 0) + c * u**b * v**d
        return self.like(out)

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        pieces = []
        for (a, b, d) in sorted(self.coefficients):
            c = self.coefficients[(a, b, d)]
            factors = [
                name if k == 1 else f"{name}^{k}"
                for name, k in (("u", b), ("v", d), ("x", a)) if k
            ]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            pieces.append((c < 0, body))
        neg, body = pieces[0]
        text = ("-" if neg else "") + body
        for neg, body in pieces[1:]:
            text += (" - " if neg else " + ") + body
        return text


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def one(max_x: int, max_u: int | None = None, max_v: int | None = None) -> TruncatedSeries:
    return TruncatedSeries(max_x, max_u, max_v, {(0, 0, 0): 1})


def monomial(max_x: int, dx: int, du: int = 0, dv: int = 0, coeff: int = 1,
             max_u: int | None = None, max_v: int | None = None) -> TruncatedSeries:
    return TruncatedSeries(max_x, max_u, max_v, {(dx, du, dv): coeff})


def product(factors: Iterable[TruncatedSeries], max_x: int) -> TruncatedSeries:
    return reduce(series_mul, factors, one(max_x))


def geometric_factor(x_exp: int, u_exp: int = 0, max_x: int = 0,
                     max_u: int | None = None, max_v: int | None = None) -> TruncatedSeries:
    """Expansion of ``1 / (1 - x^x_exp u^u_exp)``."""
    if x_exp < 1:
        raise DivergenceError("1/(1 - u^b) has no truncation in x; x exponent must be >= 1")
    coeffs = {(k * x_exp, k * u_exp, 0): 1 for k in range(max_x // x_exp + 1)}
    return TruncatedSeries(max_x, max_u, max_v, coeffs)


def rhs_plain(n: int, max_x: int) -> TruncatedSeries:
    """``prod_{i=1..n} 1/(1 - x^(2i-1))``."""
    return product((geometric_factor(2 * i - 1, max_x=max_x) for i in range(1, n + 1)), max_x)


def lhs_plain(n: int, max_x: int) -> TruncatedSeries:
    """Weight generating function of lecture hall partitions of length ``n``."""
    coeffs: dict[Exponent, int] = {}
    for lam in enumerate_lecture_hall(n, max_x):
        e = (lam.weight, 0, 0)
        coeffs[e] = coeffs.get(e, 0) + 1
    return TruncatedSeries(max_x, coefficients=coeffs)


def rhs_refined(n: int, max_x: int) -> TruncatedSeries:
    """``prod (1 + u v x^i) / prod (1 - u^2 x^(n+i))`` over ``i = 1..n``."""
    factors = [one(max_x) + monomial(max_x, i, 1, 1) for i in range(1, n + 1)]
    factors += [geometric_factor(n + i, 2, max_x=max_x) for i in range(1, n + 1)]
    return product(factors, max_x)


def lhs_refined(n: int, max_x: int) -> TruncatedSeries:
    """Sum of ``x^|lam| u^(ceiling weight) v^(odd ceilings)`` over lecture hall partitions."""
    coeffs: dict[Exponent, int] = {}
    for lam in enumerate_lecture_hall(n, max_x):
        cv = ceiling_stats(lam)
        e = (lam.weight, cv.weight, cv.odd_count)
        coeffs[e] = coeffs.get(e, 0) + 1
    return TruncatedSeries(max_x, coefficients=coeffs)


def bounded_weight_series(n: int, max_x: int) -> TruncatedSeries:
    coeffs: dict[Exponent, int] = {}
    for p in enumerate_bounded(n, max_x):
        e = (p.weight, 0, 0)
        coeffs[e] = coeffs.get(e, 0) + 1
    return TruncatedSeries(max_x, coefficients=coeffs)


def bounded_product(n: int, max_x: int) -> TruncatedSeries:
    """``prod (1 + x^i) / prod (1 - x^(n+i))`` over ``i = 1..n``."""
    factors = [one(max_x) + monomial(max_x, i) for i in range(1, n + 1)]
    factors += [geometric_factor(n + i, max_x=max_x) for i in range(1, n + 1)]
    return product(factors, max_x)


@dataclass(frozen=True)
class Comparison:
    """Outcome of a coefficientwise comparison.

    ``mismatch`` holds the smallest differing exponent and both coefficients.
    """

    ok: bool
    terms_compared: int
    mismatch: tuple[Exponent, int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return f"OK ({self.terms_compared} coefficients compared)"
        e, a, b = self.mismatch
        return f"MISMATCH at (dx, du, dv) = {e}: lhs={a} rhs={b}"


def compare(a: TruncatedSeries, b: TruncatedSeries) -> Comparison:
    a._check(b)
    keys = sorted(set(a.coefficients) | set(b.coefficients))
    for e in keys:
        ca, cb = a.coefficients.get(e, 0), b.coefficients.get(e, 0)
        if ca != cb:
            return Comparison(False, len(keys), (e, ca, cb))
    return Comparison(True, len(keys))


def verify_plain(n: int, max_x: int) -> Comparison:
    return compare(lhs_plain(n, max_x), rhs_plain(n, max_x))


def verify_refined(n: int, max_x: int) -> Comparison:
    return compare(lhs_refined(n, max_x), rhs_refined(n, max_x))


def bounded_gf_identity(n: int, max_x: int) -> Comparison:
    """Check the bounded-partition product against ``prod 1/(1 - x^(2i-1))``
    and against the enumerated bounded-partition weights."""
    prod = bounded_product(n, max_x)
    first = compare(prod, rhs_plain(n, max_x))
    if not first:
        return first
    second = compare(bounded_weight_series(n, max_x), prod)
    return Comparison(second.ok, first.terms_compared, second.mismatch)
