"""Shared exceptions and exact-rational helpers."""

from __future__ import annotations

from fractions import Fraction

CLIQUE = "clique"
INDEPENDENT_SET = "independent_set"


class ParameterError(ValueError):
    """A caller-supplied parameter is outside an operation's admissible range."""


class GraphParseError(ValueError):
    """A graph file is malformed; carries the offending line number."""

    def __init__(self, message: str, lineno: int | None = None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class DivergenceSignal(ArithmeticError):
    """A bound recurrence hit a non-positive denominator.

    The sign of the denominator is meaningful: it certifies that no graph
    with the given parameters can exist, so the chain is stopped rather
    than saturated.  ``partial`` holds the values computed before the
    failing step.
    """

    def __init__(self, n: int, k: int, j: int, denominator: Fraction, partial: tuple[int, ...]):
        super().__init__(
            f"recurrence denominator {denominator} <= 0 at step j={j} (n={n}, k={k})"
        )
        self.n = n
        self.k = k
        self.j = j
        self.denominator = denominator
        self.partial = partial


def as_fraction(value: Fraction | int | str | float) -> Fraction:
    """Coerce a user-facing numeric parameter to an exact Fraction.

    Strings use Fraction's own parser ("1/4", "0.1").  Floats are routed
    through their shortest decimal repr so eps=0.1 means 1/10, not the
    binary float.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(str(value))
    if isinstance(value, str):
        try:
            return Fraction(value)
        except ValueError as exc:
            raise ParameterError(f"not a rational number: {value!r}") from exc
    raise ParameterError(f"cannot interpret {value!r} as a rational number")
