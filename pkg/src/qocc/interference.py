"""Pure interference analysis for co-occurrence counts, no context effect.

With both concepts in uniform-modulus states over their page sets, the
combined-concept probability depends on the per-page phase differences only
through two cosine sums: one over pages carrying all three words, one over
pages carrying the first two but not the third,

    mu = (avg + k_x / r) / (1 + (k_x + k_xp) / r),

where avg = (n_ax/n_a + n_bx/n_b) / 2 and r = sqrt(n_a * n_b).  Sweeping the
phases sweeps k_x over [-n_abx, n_abx] and k_xp over [-n_abx', n_abx'], which
yields a closed-form admissible interval for mu: the maximum sets every
cosine over the x-pages to +1 and every cosine over the x'-pages to -1, the
minimum does the opposite.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .corpus import CountTable
from .errors import DegenerateDenominator, InvalidInput, ZeroDenominator

DENOMINATOR_TOL = 1e-12
BOUNDARY_TOL = 1e-12
FEASIBILITY_SLACK = 1e-12


@dataclass(frozen=True)
class InterferenceInterval:
    """Admissible combined-concept probabilities, clamped to [0, 1].

    ``raw_lo`` and ``raw_hi`` keep the unclamped ratios for diagnostics;
    round-off (or classically impossible input counts) can push them
    marginally outside [0, 1].
    """

    lo: float
    hi: float
    raw_lo: float
    raw_hi: float

    def __post_init__(self) -> None:
        if not (self.lo <= self.hi + 1e-12):
            raise DegenerateDenominator(f"interval endpoints out of order: {self.lo!r} > {self.hi!r}")

    def contains(self, value: float, slack: float = FEASIBILITY_SLACK) -> bool:
        return self.lo - slack <= value <= self.hi + slack


@dataclass(frozen=True)
class PhaseAssignment:
    """Per-page phase differences for the abx pages and the abx' pages."""

    deltas_x: tuple[float, ...] = ()
    deltas_x_prime: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "deltas_x", tuple(float(d) for d in self.deltas_x))
        object.__setattr__(self, "deltas_x_prime", tuple(float(d) for d in self.deltas_x_prime))


class ExtensionClass(enum.Enum):
    """Position of the combined probability against the individual ones."""

    DOUBLE_UNDEREXTENSION = "double_underextension"
    SINGLE_EXTENSION = "single_extension"
    DOUBLE_OVEREXTENSION = "double_overextension"
    BOUNDARY = "boundary"


def _mean_and_scale(table: CountTable) -> tuple[float, float]:
    if table.n_a == 0 or table.n_b == 0:
        raise DegenerateDenominator("n_a and n_b must be positive")
    avg = 0.5 * (table.n_ax / table.n_a + table.n_bx / table.n_b)
    return avg, math.sqrt(table.n_a * table.n_b)


def mu_ab_interference_sums(table: CountTable, k_x: float, k_x_prime: float) -> float:
    """Combined probability from the two aggregate cosine sums."""
    if not -table.n_abx - 1e-9 <= k_x <= table.n_abx + 1e-9:
        raise InvalidInput(f"k_x={k_x!r} outside [-n_abx, n_abx]")
    if not -table.n_abx_prime - 1e-9 <= k_x_prime <= table.n_abx_prime + 1e-9:
        raise InvalidInput(f"k_x_prime={k_x_prime!r} outside [-n_abx', n_abx']")
    avg, scale = _mean_and_scale(table)
    denominator = 1.0 + (k_x + k_x_prime) / scale
    if denominator <= DENOMINATOR_TOL:
        raise DegenerateDenominator("phase choice drives the normalization to zero")
    return (avg + k_x / scale) / denominator


def mu_ab_interference(table: CountTable, phases: PhaseAssignment) -> float:
    """Combined probability from explicit per-page phase differences."""
    if len(phases.deltas_x) != table.n_abx:
        raise InvalidInput(
            f"need {table.n_abx} phase differences for the abx pages, got {len(phases.deltas_x)}"
        )
    if len(phases.deltas_x_prime) != table.n_abx_prime:
        raise InvalidInput(
            f"need {table.n_abx_prime} phase differences for the abx' pages, "
            f"got {len(phases.deltas_x_prime)}"
        )
    k_x = sum(math.cos(d) for d in phases.deltas_x)
    k_x_prime = sum(math.cos(d) for d in phases.deltas_x_prime)
    return mu_ab_interference_sums(table, k_x, k_x_prime)


def interference_interval(table: CountTable) -> InterferenceInterval:
    """Range of the combined probability over all phase assignments."""
    avg, scale = _mean_and_scale(table)
    spread = table.n_abx / scale
    skew = (table.n_abx - table.n_abx_prime) / scale
    denom_lo = 1.0 - skew
    denom_hi = 1.0 + skew
    if denom_lo <= DENOMINATOR_TOL or denom_hi <= DENOMINATOR_TOL:
        raise DegenerateDenominator(
            "|n_abx - n_abx'| reaches sqrt(n_a * n_b); the extremal ratio is singular"
        )
    raw_lo = (avg - spread) / denom_lo
    raw_hi = (avg + spread) / denom_hi
    return InterferenceInterval(
        lo=min(1.0, max(0.0, raw_lo)),
        hi=min(1.0, max(0.0, raw_hi)),
        raw_lo=raw_lo,
        raw_hi=raw_hi,
    )


def fits_interference_only(table: CountTable) -> bool:
    """Whether the observed n_abx/n_ab is attainable by phases alone."""
    if table.n_ab == 0:
        raise ZeroDenominator("marginal n_ab is zero")
    observed = table.n_abx / table.n_ab
    return interference_interval(table).contains(observed)


def classify_extension(mu_a: float, mu_b: float, mu_ab: float) -> ExtensionClass:
    """Classify mu_ab against [min(mu_a, mu_b), max(mu_a, mu_b)].

    Ties within 1e-12 of either edge are BOUNDARY; observed ratios are exact
    rationals, so ties carry meaning.
    """
    for name, value in (("mu_a", mu_a), ("mu_b", mu_b), ("mu_ab", mu_ab)):
        if not 0.0 <= value <= 1.0:
            raise InvalidInput(f"{name}={value!r} is outside [0, 1]")
    low, high = min(mu_a, mu_b), max(mu_a, mu_b)
    if abs(mu_ab - low) <= BOUNDARY_TOL or abs(mu_ab - high) <= BOUNDARY_TOL:
        return ExtensionClass.BOUNDARY
    if mu_ab > high:
        return ExtensionClass.DOUBLE_OVEREXTENSION
    if mu_ab < low:
        return ExtensionClass.DOUBLE_UNDEREXTENSION
    return ExtensionClass.SINGLE_EXTENSION
