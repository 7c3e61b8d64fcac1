"""Radial functions on the ultrametric shell lattice q**Z.

A function on a non-Archimedean local field that depends only on the
absolute value |t| = q**k is stored as one value per integer shell index k
inside a finite window [k_min, k_max], together with closed-form tail
models (zero, constant, or pure power law) for the shells outside the
window.  Every operator in this package reduces to weighted sums over
shells, and restricting tails to this family keeps all infinite sums exact
geometric series: tail contributions are never truncated.

Shell k represents the sphere |t| = q**k, whose measure is (1 - 1/q)*q**k.
All powers of q go through :func:`qpow` so that equal exponents produce
bit-identical values everywhere, which keeps cancellation-sensitive sums
reproducible.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DivergentTail

__all__ = [
    "qpow",
    "RadialGrid",
    "TailKind",
    "TailSpec",
    "RadialFunction",
    "shell_measure",
    "ball_power_integral",
    "weighted_tail_sum",
    "GrowthKind",
    "ConditionEntry",
    "ConditionReport",
    "check_growth_conditions",
]

#: tolerance below which an exponent is routed to the alpha = 1 log branch
LOG_BRANCH_TOL = 1e-12


def qpow(q: float, x: float) -> float:
    """q**x computed as exp(x*ln q).

    Single shared routine: identical exponents give bit-identical floats in
    every module, which makes cancellation between separately computed terms
    deterministic.
    """
    return math.exp(x * math.log(q))


class _Kahan:
    """Compensated accumulator; deterministic for a fixed order of terms."""

    __slots__ = ("s", "c")

    def __init__(self) -> None:
        self.s = 0.0
        self.c = 0.0

    def add(self, x: float) -> None:
        y = x - self.c
        t = self.s + y
        self.c = (t - self.s) - y
        self.s = t


def kahan_sum(terms: Iterable[float]) -> float:
    acc = _Kahan()
    for t in terms:
        acc.add(t)
    return acc.s


@dataclass(frozen=True)
class RadialGrid:
    """Shell index window [k_min, k_max] over the value lattice q**Z.

    q is the residue-field cardinality; shell k stands for |t| = q**k.
    """

    q: int
    k_min: int
    k_max: int

    def __post_init__(self) -> None:
        if self.q < 2:
            raise ValueError(f"q must be an integer >= 2, got {self.q}")
        if self.k_min > self.k_max:
            raise ValueError(f"empty shell window [{self.k_min}, {self.k_max}]")

    @property
    def shells(self) -> range:
        return range(self.k_min, self.k_max + 1)

    @property
    def size(self) -> int:
        return self.k_max - self.k_min + 1


class TailKind(enum.Enum):
    ZERO = "zero"
    CONSTANT = "constant"
    POWER_LAW = "power_law"


@dataclass(frozen=True)
class TailSpec:
    """Closed-form model for shell values outside the window.

    POWER_LAW means u(q**k) = c * q**(e*k); CONSTANT is the e = 0 case and
    ZERO the empty one.  The family is closed under the weighted geometric
    sums every operator needs, so tail contributions are exact.  A weighted
    lower-tail sum with weight q**(w*k) converges iff w + e > 0, an upper
    one iff w + e < 0; :func:`weighted_tail_sum` rejects the divergent
    combinations.
    """

    kind: TailKind
    c: float = 0.0
    e: float = 0.0

    @staticmethod
    def zero() -> "TailSpec":
        return TailSpec(TailKind.ZERO)

    @staticmethod
    def constant(c: float) -> "TailSpec":
        return TailSpec(TailKind.CONSTANT, float(c), 0.0)

    @staticmethod
    def power_law(c: float, e: float) -> "TailSpec":
        return TailSpec(TailKind.POWER_LAW, float(c), float(e))

    def is_null(self) -> bool:
        """True when the model contributes nothing to any sum."""
        return self.kind is TailKind.ZERO or self.c == 0.0

    def exponent(self) -> float:
        """Growth exponent of the model; 0 for CONSTANT and ZERO."""
        return self.e if self.kind is TailKind.POWER_LAW else 0.0

    def eval(self, q: int, k: int) -> float:
        if self.kind is TailKind.ZERO:
            return 0.0
        if self.kind is TailKind.CONSTANT:
            return self.c
        return self.c * qpow(q, self.e * k)


@dataclass(frozen=True)
class RadialFunction:
    """A radial function: window values plus tail models plus the value at 0.

    ``eval`` is total on the integers: window lookup inside [k_min, k_max],
    tail formula outside.  ``value_at_zero`` is the value at the field point
    t = 0 (not a shell); operators read shells only, the zero value feeds
    continuity checks and constant splits.
    """

    grid: RadialGrid
    values: tuple[float, ...]
    value_at_zero: float = 0.0
    lower_tail: TailSpec = TailSpec(TailKind.ZERO)
    upper_tail: TailSpec = TailSpec(TailKind.ZERO)

    def __post_init__(self) -> None:
        vals = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) != self.grid.size:
            raise ValueError(
                f"expected {self.grid.size} shell values for window "
                f"[{self.grid.k_min}, {self.grid.k_max}], got {len(vals)}")
        lt = self.lower_tail
        if (lt.kind is TailKind.POWER_LAW and lt.c != 0.0 and lt.e > 0.0
                and self.value_at_zero != 0.0):
            # u(q**k) -> 0 as k -> -inf, so continuity at 0 forces u(0) = 0
            raise ValueError("decaying power-law lower tail requires value_at_zero == 0")

    @classmethod
    def constant(cls, grid: RadialGrid, c: float) -> "RadialFunction":
        """The function identically equal to c on all of q**Z and at 0."""
        return cls(grid, (float(c),) * grid.size, float(c),
                   TailSpec.constant(c), TailSpec.constant(c))

    @classmethod
    def from_values(cls, q: int, k_min: int, values: Sequence[float],
                    value_at_zero: float = 0.0,
                    lower_tail: TailSpec | None = None,
                    upper_tail: TailSpec | None = None) -> "RadialFunction":
        grid = RadialGrid(q, k_min, k_min + len(values) - 1)
        return cls(grid, tuple(values), value_at_zero,
                   lower_tail or TailSpec.zero(), upper_tail or TailSpec.zero())

    def eval(self, k: int) -> float:
        if k < self.grid.k_min:
            return self.lower_tail.eval(self.grid.q, k)
        if k > self.grid.k_max:
            return self.upper_tail.eval(self.grid.q, k)
        return self.values[k - self.grid.k_min]

    def with_tails(self, lower: TailSpec | None = None,
                   upper: TailSpec | None = None) -> "RadialFunction":
        return RadialFunction(self.grid, self.values, self.value_at_zero,
                              lower if lower is not None else self.lower_tail,
                              upper if upper is not None else self.upper_tail)

    def minus_constant(self, c: float) -> "RadialFunction":
        """Subtract a constant everywhere (shells, tails and the zero value).

        Only zero and constant tails can absorb the shift; subtracting a
        constant from a genuine power-law tail leaves the model family.
        """
        if c == 0.0:
            return self

        def shift(tail: TailSpec) -> TailSpec:
            if tail.kind is TailKind.POWER_LAW and tail.c != 0.0:
                raise ValueError("cannot subtract a constant from a power-law tail")
            base = 0.0 if tail.is_null() else tail.c
            out = base - c
            return TailSpec.zero() if out == 0.0 else TailSpec.constant(out)

        return RadialFunction(self.grid, tuple(v - c for v in self.values),
                              self.value_at_zero - c,
                              shift(self.lower_tail), shift(self.upper_tail))

    def sup_window(self) -> float:
        return max(abs(v) for v in self.values)


def shell_measure(grid: RadialGrid, n: int) -> float:
    """Measure of the sphere |t| = q**n, i.e. (1 - 1/q) * q**n."""
    return (1.0 - 1.0 / grid.q) * qpow(grid.q, n)


def ball_power_integral(grid: RadialGrid, n: int, a: float) -> float:
    """Integral of |t|**(a-1) over the ball |t| <= q**n, for a > 0.

    Closed form ((1 - 1/q) / (1 - q**-a)) * q**(a*n); equals the shell sum
    of (1 - 1/q) * q**j * q**((a-1)*j) over j <= n.
    """
    if a <= 0.0:
        raise ValueError(f"ball power integral diverges for a = {a} <= 0")
    q = grid.q
    return (1.0 - 1.0 / q) / (1.0 - qpow(q, -a)) * qpow(q, a * n)


def _index_factor(k: int, p: int) -> float:
    return 1.0 if p == 0 else float(k)


def _tail_series(tail: TailSpec, q: int, w: float, p: int,
                 side: str, anchor: int) -> float:
    """Exact sum of q**(w*k) * k**p * tail(k) over k <= anchor or k >= anchor."""
    if tail.is_null():
        return 0.0
    r = w + tail.exponent()
    head = tail.c * qpow(q, r * anchor)
    if side == "lower":
        y = qpow(q, -r)
        if y >= 1.0:
            raise DivergentTail(
                f"lower tail sum diverges: ratio q^-(w+e) = {y!r} >= 1 "
                f"(weight {w:g}, tail exponent {tail.exponent():g})")
        if p == 0:
            return head / (1.0 - y)
        return head * (anchor / (1.0 - y) - y / (1.0 - y) ** 2)
    x = qpow(q, r)
    if x >= 1.0:
        raise DivergentTail(
            f"upper tail sum diverges: ratio q^(w+e) = {x!r} >= 1 "
            f"(weight {w:g}, tail exponent {tail.exponent():g})")
    if p == 0:
        return head / (1.0 - x)
    return head * (anchor / (1.0 - x) + x / (1.0 - x) ** 2)


def weighted_tail_sum(f: RadialFunction, w: float, side: str, k0: int,
                      index_power: int = 0) -> float:
    """Sum of q**(w*k) * f(q**k) over k <= k0 (lower) or k >= k0 (upper).

    With ``index_power=1`` each term carries an extra factor k, which the
    log-kernel branch of the integral operator needs.  Window terms are
    accumulated in ascending shell order with compensated summation; the
    infinite region outside the window is the exact geometric closed form.

    Raises :class:`DivergentTail` when the infinite region has ratio >= 1,
    i.e. when the convergence condition on the tail model fails.
    """
    if side not in ("lower", "upper"):
        raise ValueError(f"side must be 'lower' or 'upper', got {side!r}")
    if index_power not in (0, 1):
        raise ValueError("index_power must be 0 or 1")
    q = f.grid.q
    k_min, k_max = f.grid.k_min, f.grid.k_max
    p = index_power
    acc = _Kahan()
    if side == "lower":
        acc.add(_tail_series(f.lower_tail, q, w, p, "lower", min(k0, k_min - 1)))
        for k in range(k_min, min(k0, k_max) + 1):
            acc.add(qpow(q, w * k) * _index_factor(k, p) * f.values[k - k_min])
        for k in range(k_max + 1, k0 + 1):
            acc.add(qpow(q, w * k) * _index_factor(k, p) * f.upper_tail.eval(q, k))
    else:
        for k in range(k0, k_min):
            acc.add(qpow(q, w * k) * _index_factor(k, p) * f.lower_tail.eval(q, k))
        for k in range(max(k0, k_min), k_max + 1):
            acc.add(qpow(q, w * k) * _index_factor(k, p) * f.values[k - k_min])
        acc.add(_tail_series(f.upper_tail, q, w, p, "upper", max(k0, k_max + 1)))
    return acc.s


class GrowthKind(enum.Enum):
    """Which set of growth conditions to check against the tail models."""

    DALPHA_DOMAIN = "dalpha_domain"
    IALPHA_DOMAIN = "ialpha_domain"
    RIGHT_INVERSE = "right_inverse"
    LEFT_INVERSE = "left_inverse_hypotheses"


@dataclass(frozen=True)
class ConditionEntry:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of a set of predicate checks, one entry per condition."""

    kind: str
    entries: tuple[ConditionEntry, ...]

    @property
    def ok(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self) -> tuple[ConditionEntry, ...]:
        return tuple(e for e in self.entries if not e.passed)

    def __str__(self) -> str:
        lines = [f"[{self.kind}] {'ok' if self.ok else 'FAILED'}"]
        lines += [f"  {'pass' if e.passed else 'FAIL'} {e.name}: {e.detail}"
                  for e in self.entries]
        return "\n".join(lines)


def _series_entry(name: str, tail: TailSpec, w: float, side: str) -> ConditionEntry:
    """Entry for convergence of sum q**(w*k)|u(q**k)| over one tail."""
    if tail.is_null():
        return ConditionEntry(name, True, "tail vanishes")
    e = tail.exponent()
    if side == "lower":
        ok = w + e > 0.0
        need = f"exponent > {-w:g}"
    else:
        ok = w + e < 0.0
        need = f"exponent < {-w:g}"
    return ConditionEntry(name, ok, f"{need}; tail exponent is {e:g}")


def check_growth_conditions(f: RadialFunction, alpha: float,
                            kind: GrowthKind) -> ConditionReport:
    """Check the tail models of ``f`` against the growth conditions ``kind``.

    DALPHA_DOMAIN: existence of the fractional derivative (lower shells
    summable with weight q**k, upper with q**(-alpha*l)).  IALPHA_DOMAIN:
    existence of the regularized integral (lower weight max(q**k, q**(a*k)),
    or |k| q**k on the log branch).  RIGHT_INVERSE: integral conditions plus
    absolute summability above.  LEFT_INVERSE: the two-exponent decay
    hypotheses under which the integral is also a left inverse, including
    u(0) = 0.

    Report-valued: never raises for failing conditions.
    """
    if alpha <= 0.0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    log_branch = abs(alpha - 1.0) <= LOG_BRANCH_TOL
    lo, up = f.lower_tail, f.upper_tail
    entries: list[ConditionEntry] = []

    if kind is GrowthKind.DALPHA_DOMAIN:
        entries.append(_series_entry("lower sum q^k |u|", lo, 1.0, "lower"))
        entries.append(_series_entry("upper sum q^(-a l) |u|", up, -alpha, "upper"))
    elif kind in (GrowthKind.IALPHA_DOMAIN, GrowthKind.RIGHT_INVERSE):
        if log_branch:
            entries.append(_series_entry("lower sum |k| q^k |u|", lo, 1.0, "lower"))
        else:
            w = min(1.0, alpha)
            entries.append(_series_entry(
                "lower sum max(q^k, q^(a k)) |u|", lo, w, "lower"))
        if kind is GrowthKind.RIGHT_INVERSE:
            name = "upper sum l |u|" if log_branch else "upper sum |u|"
            entries.append(_series_entry(name, up, 0.0, "upper"))
    elif kind is GrowthKind.LEFT_INVERSE:
        entries.append(ConditionEntry(
            "value at zero", f.value_at_zero == 0.0,
            f"requires u(0) = 0, got {f.value_at_zero:g}"))
        d_floor = max(0.0, alpha - 1.0)
        if lo.is_null():
            entries.append(ConditionEntry("lower decay exponent", True, "tail vanishes"))
        else:
            d = lo.exponent()
            entries.append(ConditionEntry(
                "lower decay exponent", d > d_floor,
                f"requires d > max(0, a-1) = {d_floor:g}; tail has d = {d:g}"))
        if up.is_null():
            entries.append(ConditionEntry("upper growth exponent", True, "tail vanishes"))
        else:
            h = max(0.0, up.exponent())
            ok = h < alpha and (alpha <= 1.0 + LOG_BRANCH_TOL or h < alpha - 1.0)
            need = f"h < {alpha:g}" if alpha <= 1.0 + LOG_BRANCH_TOL \
                else f"h < {alpha:g} and h < {alpha - 1.0:g}"
            entries.append(ConditionEntry(
                "upper growth exponent", ok,
                f"requires {need}; effective h = {h:g}"))
    else:
        raise ValueError(f"unknown growth kind {kind}")
    return ConditionReport(kind.value, tuple(entries))
