"""Closed-form bounds on how small a fully k-enabling graph can be, and
the parameter derivations the polynomial excluder runs on.

Everything is computed in exact rationals; integers appear only through
the explicit ceilings the recurrences prescribe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .common import DivergenceSignal, ParameterError, as_fraction


@dataclass(frozen=True)
class FloorCheck:
    """One row of the growth-floor comparison: k_j against (1 - 2/(j+1))k."""

    j: int
    value: int
    floor: Fraction

    @property
    def satisfied(self) -> bool:
        return self.value >= self.floor


@dataclass(frozen=True)
class BoundReport:
    """Evaluated k_j sequence with the n(k) lower bounds it implies.

    ``values`` holds k_2..k_m, each rounded up as the recurrence
    requires.  ``implied_n_lower`` is 2(k + k_m) - m^2, the m-system
    size argument.  ``order_lower`` is (4 - 5/m)k, the asymptotically
    tight floor, meaningful when k >= m^3 (``order_lower_applies``).
    """

    n: int
    k: int
    m: int
    values: tuple[int, ...]
    implied_n_lower: int
    order_lower: int
    order_lower_applies: bool
    floor_checks: tuple[FloorCheck, ...]


def kj_sequence(n: int, k: int, m: int) -> BoundReport:
    """Evaluate k_2 = ceil(k(k-1)/(n-k)) and
    k_{j+1} = ceil((k + k_j)(k - j)/(n - k - k_j)) for j up to m.

    Raises DivergenceSignal if a denominator drops to zero or below: the
    chain itself then proves no k-enabling graph on n vertices exists.
    """
    if m < 2:
        raise ParameterError(f"m must be >= 2, got {m}")
    if n <= k:
        raise ParameterError(f"need n > k, got n={n}, k={k}")
    values: list[int] = []
    kj = math.ceil(Fraction(k * (k - 1), n - k))
    values.append(kj)
    for j in range(2, m):
        den = n - k - kj
        if den <= 0:
            raise DivergenceSignal(n, k, j, Fraction(den), tuple(values))
        kj = math.ceil(Fraction((k + kj) * (k - j), den))
        values.append(kj)
    checks = tuple(
        FloorCheck(j, v, (1 - Fraction(2, j + 1)) * k)
        for j, v in enumerate(values, start=2)
    )
    km = values[-1]
    return BoundReport(
        n=n,
        k=k,
        m=m,
        values=tuple(values),
        implied_n_lower=2 * (k + km) - m * m,
        order_lower=math.ceil((4 - Fraction(5, m)) * k),
        order_lower_applies=k >= m**3,
        floor_checks=checks,
    )


def kj_step(n: int, k: int, j: int, kj: Fraction | int) -> Fraction:
    """One unrounded recurrence step (k + k_j)(k - j)/(n - k - k_j)."""
    den = n - k - Fraction(kj)
    if den <= 0:
        raise DivergenceSignal(n, k, j, den, ())
    return Fraction((k + kj) * (k - j), den)


def msystem_size_lower(sizes_i, sizes_c) -> int:
    """Lower bound on an m-system's union: sum of all sizes minus m^2.

    The families must have equal length m; the bound may be vacuous
    (negative) for tiny sizes.
    """
    sizes_i = tuple(sizes_i)
    sizes_c = tuple(sizes_c)
    if len(sizes_i) != len(sizes_c):
        raise ParameterError("an m-system has m independent sets and m cliques")
    m = len(sizes_i)
    if m < 1:
        raise ParameterError("m must be >= 1")
    return sum(sizes_i) + sum(sizes_c) - m * m


def min_order_lower_bound(k: int, m: int) -> int:
    """(4 - 5/m)k: no graph below this order is fully k-enabling.

    Valid for m >= 2 and k >= m^3.
    """
    if m < 2:
        raise ParameterError(f"m must be >= 2, got {m}")
    if k < m**3:
        raise ParameterError(f"need k >= m^3 = {m ** 3}, got k={k}")
    value = (4 - Fraction(5, m)) * k
    return math.ceil(value)


@dataclass(frozen=True)
class ExcluderParams:
    """Derived excluder parameters for a gap delta: the system order m,
    the relaxation eps = 1/(m(m+1)), and the small-k cutoff (m+1)^2."""

    delta: Fraction
    m: int
    eps: Fraction
    k_min: int


def derive_params(delta) -> ExcluderParams:
    """m is the largest integer strictly below 8/delta - 1; eps and the
    small-k cutoff follow from it."""
    delta = as_fraction(delta)
    if not 0 < delta <= 1:
        raise ParameterError(f"delta must be in (0, 1], got {delta}")
    x = Fraction(8) / delta - 1
    m = x.numerator // x.denominator
    if x.denominator == 1:
        m -= 1  # strictly below an integer boundary
    if m < 2:
        raise ParameterError(f"delta={delta} yields m={m} < 2")
    eps = Fraction(1, m * (m + 1))
    return ExcluderParams(delta=delta, m=m, eps=eps, k_min=(m + 1) ** 2)


def union_floor(j: int, k: int) -> int:
    """Ceiling of (2 - 2/(j+1))k, the floor asserted on the running
    union size after j rounds."""
    if j < 1:
        raise ParameterError(f"j must be >= 1, got {j}")
    return math.ceil((2 - Fraction(2, j + 1)) * k)
