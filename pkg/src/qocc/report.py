"""Full per-table analysis: probabilities, classification, intervals, fit."""
from __future__ import annotations

from dataclasses import dataclass

from .context_model import FitResult, fit_params
from .corpus import CountTable, ProbabilityTriple, probabilities
from .interference import (
    ExtensionClass,
    InterferenceInterval,
    classify_extension,
    fits_interference_only,
    interference_interval,
)


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the pipeline derives from one count table."""

    table: CountTable
    triple: ProbabilityTriple
    extension: ExtensionClass
    interference: InterferenceInterval
    interference_only_feasible: bool
    context_only_feasible: bool
    fit: FitResult

    def as_dict(self) -> dict:
        return {
            "table": self.table.as_dict(),
            "triple": {
                "mu_a": self.triple.mu_a,
                "mu_b": self.triple.mu_b,
                "mu_ab_observed": self.triple.mu_ab_observed,
            },
            "extension": self.extension.value,
            "interference": {
                "lo": self.interference.lo,
                "hi": self.interference.hi,
                "raw_lo": self.interference.raw_lo,
                "raw_hi": self.interference.raw_hi,
            },
            "interference_only_feasible": self.interference_only_feasible,
            "context_only_feasible": self.context_only_feasible,
            "fit": self.fit.as_dict(),
        }


def build_report(table: CountTable) -> AnalysisReport:
    """Run the whole pipeline on one table; the fit is always attempted."""
    triple = probabilities(table)
    interval = interference_interval(table)
    observed = triple.mu_ab_observed
    return AnalysisReport(
        table=table,
        triple=triple,
        extension=classify_extension(triple.mu_a, triple.mu_b, observed),
        interference=interval,
        interference_only_feasible=fits_interference_only(table),
        context_only_feasible=(
            min(triple.mu_a, triple.mu_b) <= observed <= max(triple.mu_a, triple.mu_b)
        ),
        fit=fit_params(triple.mu_a, triple.mu_b, observed),
    )
