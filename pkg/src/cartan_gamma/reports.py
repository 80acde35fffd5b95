"""Verification reports: residual vectors with a tolerance and a verdict."""

from __future__ import annotations

from dataclasses import dataclass, field

from mpmath import mp, mpf


def decimal_string(x, digits: int = 30) -> str:
    """Deterministic decimal rendering of an mpmath number.

    Conversion runs above the requested print precision so that values
    computed at a higher working precision are not silently re-rounded to
    the ambient context before formatting.
    """
    with mp.workdps(digits + 10):
        return mp.nstr(mpf(x), digits)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one named check on one root system (or on a fixed suite).

    ``passed`` is always derived from the data: every residual must be
    strictly below the tolerance.  ``labels`` names the residuals for
    diagnostics and is not part of the serialized schema.
    """

    theorem: str
    system: str
    residuals: tuple
    tolerance: object
    labels: tuple = field(default=(), compare=False)

    @property
    def passed(self) -> bool:
        return all(mpf(r) < mpf(self.tolerance) for r in self.residuals)

    @property
    def max_residual(self):
        return max((mpf(r) for r in self.residuals), default=mpf(0))

    def worst(self) -> str:
        """Label and value of the largest residual, for diagnostics."""
        if not self.residuals:
            return "no residuals"
        idx = max(range(len(self.residuals)), key=lambda i: mpf(self.residuals[i]))
        name = self.labels[idx] if idx < len(self.labels) else f"#{idx}"
        return f"{name}: {decimal_string(self.residuals[idx], 10)}"

    def to_json_dict(self, digits: int = 30) -> dict:
        return {
            "theorem": self.theorem,
            "type": self.system,
            "residuals": [decimal_string(r, digits) for r in self.residuals],
            "tolerance": decimal_string(self.tolerance, digits),
            "pass": self.passed,
        }
