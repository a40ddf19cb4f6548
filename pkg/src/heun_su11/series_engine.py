"""Truncated power-series solutions on the one-sided ladders.

On the ascending ladder (base annihilated by the lowering generator) a
solution for a chosen accessory value q is y = sum_m b_m z^(p0+m); on the
descending ladder it is a series in 1/z.  Matching coefficients of the
operator image gives the three-term recurrence

    up(p0+m-1) b_(m-1) + [A(p0+m) - q] b_m + down(p0+m+1) b_(m+1) = 0

(ascending; with up and down swapped and the exponent stepping down for the
descending case), solved forward from b_(-1)=0, b_0=1.  No quantization of
q occurs here: any real q yields a formal solution, convergent inside the
stated domain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Mapping, NamedTuple, Sequence, Tuple

from .errors import OutOfDomain, RecurrenceBreakdown, UnsupportedClass
from .monomials import MonomialSum, fsum_values
from .representations import (
    RepresentationClass,
    RepresentationDescriptor,
    split_even_odd,
)
from .su11_algebra import MonomialAction, Su11Decomposition, monomial_action

DEFAULT_TRUNCATION = 60
BOUNDARY_TOL = 1e-9

ASCENDING = "ascending"
DESCENDING = "descending"


@dataclass(frozen=True)
class SeriesSolution:
    """Truncated series y = sum_m coefficients[m] * z^(p0 +/- m)."""

    p0: float
    direction: str
    parity: str
    q: float
    coefficients: Tuple[float, ...]
    domain: Tuple[float, float]

    @property
    def truncation(self) -> int:
        return len(self.coefficients) - 1

    def exponent(self, m: int) -> float:
        sign = 1.0 if self.direction == ASCENDING else -1.0
        return self.p0 + sign * m

    def as_monomial_sum(self) -> MonomialSum:
        step = 2 if self.direction == ASCENDING else -2
        return MonomialSum(
            self.p0,
            {step * m: b for m, b in enumerate(self.coefficients) if b != 0.0},
        )

    def to_json_dict(self) -> dict:
        return {
            "p0": self.p0,
            "direction": self.direction,
            "parity": self.parity,
            "q": self.q,
            "K": self.truncation,
            "coefficients": list(self.coefficients),
            "domain": list(self.domain),
        }

    @classmethod
    def from_json_dict(cls, doc: Mapping) -> "SeriesSolution":
        lo, hi = doc["domain"]
        return cls(
            p0=float(doc["p0"]),
            direction=str(doc["direction"]),
            parity=str(doc["parity"]),
            q=float(doc["q"]),
            coefficients=tuple(float(b) for b in doc["coefficients"]),
            domain=(float(lo), math.inf if hi is None else float(hi)),
        )


class EvaluatedSeries(NamedTuple):
    value: float
    tail_estimate: float


def _direction_for(rep: RepresentationDescriptor) -> str:
    if rep.rep_class is RepresentationClass.POSITIVE_DISCRETE:
        return ASCENDING
    if rep.rep_class is RepresentationClass.NEGATIVE_DISCRETE:
        return DESCENDING
    raise UnsupportedClass(
        f"series are generated on the discrete ladders, not {rep.rep_class.value}"
    )


def convergence_domain(
    dec: Su11Decomposition,
    rep: RepresentationDescriptor | None = None,
    direction: str | None = None,
) -> Tuple[float, float]:
    """Open interval of convergence: up to the nearest other singularity.

    Ascending series converge on (0, min(1,|a|)), descending ones on
    (max(1,|a|), inf); |a| covers singularity locations off the positive
    axis (a < 0), where the radius is still the distance to the origin.
    """
    if rep is not None:
        rep_direction = _direction_for(rep)
        if direction is None:
            direction = rep_direction
        elif direction != rep_direction:
            raise ValueError(
                f"direction {direction!r} contradicts the {rep.rep_class.value} ladder"
            )
    a = 4.0 * dec.c_minus
    if direction == ASCENDING:
        return (0.0, min(1.0, abs(a)))
    if direction == DESCENDING:
        return (max(1.0, abs(a)), math.inf)
    raise ValueError(f"unknown direction {direction!r}")


def series_solution(
    dec: Su11Decomposition,
    rep: RepresentationDescriptor,
    parity: str,
    q: float,
    truncation: int = DEFAULT_TRUNCATION,
) -> SeriesSolution:
    """Forward-solve the three-term recurrence for b_1..b_truncation."""
    direction = _direction_for(rep)
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    if truncation < 1:
        raise ValueError("truncation must be at least 1")
    q = float(q)
    split = split_even_odd(rep)
    grid = split.even if parity == "even" else split.odd
    p0 = grid.base
    action = monomial_action(dec)
    sign = 1.0 if direction == ASCENDING else -1.0
    into_ladder = action.down if direction == ASCENDING else action.up

    # The base must be annihilated in the outward direction, else the ladder
    # does not start here and the ansatz is wrong for this decomposition.
    scale = max(1.0, abs(action.up(p0)), abs(action.down(p0)), abs(action.diag_base(p0)))
    if abs(into_ladder(p0)) > BOUNDARY_TOL * scale:
        raise ValueError(
            f"ladder base p0={p0} is not annihilated by the operator "
            "(grid and decomposition disagree)"
        )

    coeffs: List[float] = [1.0]
    b_prev = 0.0
    b_here = 1.0
    for m in range(truncation):
        p = p0 + sign * m
        if direction == ASCENDING:
            inward = action.up(p - 1.0)
            divisor = action.down(p + 1.0)
        else:
            inward = action.down(p + 1.0)
            divisor = action.up(p - 1.0)
        if divisor == 0.0:
            err = RecurrenceBreakdown(
                f"leading divisor vanished at step {m + 1}; the ladder "
                "truncates and the forward recurrence cannot continue"
            )
            err.step = m + 1
            raise err
        b_next = -(inward * b_prev + (action.diag_base(p) - q) * b_here) / divisor
        coeffs.append(b_next)
        b_prev, b_here = b_here, b_next
    return SeriesSolution(
        p0=p0,
        direction=direction,
        parity=parity,
        q=q,
        coefficients=tuple(coeffs),
        domain=convergence_domain(dec, rep),
    )


def recurrence_residual(dec: Su11Decomposition, sol: SeriesSolution) -> float:
    """Max relative defect of the three-term relation on re-substitution."""
    action = monomial_action(dec)
    sign = 1.0 if sol.direction == ASCENDING else -1.0
    b = sol.coefficients
    worst = 0.0
    for m in range(len(b) - 1):
        p = sol.p0 + sign * m
        if sol.direction == ASCENDING:
            inward, outward = action.up(p - 1.0), action.down(p + 1.0)
        else:
            inward, outward = action.down(p + 1.0), action.up(p - 1.0)
        t_in = inward * (b[m - 1] if m >= 1 else 0.0)
        t_mid = (action.diag_base(p) - sol.q) * b[m]
        t_out = outward * b[m + 1]
        scale = max(abs(t_in), abs(t_mid), abs(t_out))
        defect = abs(t_in + t_mid + t_out)
        worst = max(worst, defect / scale if scale > 0.0 else 0.0)
    return worst


def reference_scaled_coefficients(sol: SeriesSolution, a: float) -> Tuple[float, ...]:
    """Coefficients rescaled to the (z/a)^m (ascending) or (a/z)^m
    (descending) convention used by hand-written fixtures."""
    sign = 1 if sol.direction == ASCENDING else -1
    return tuple(b * a ** (sign * m) for m, b in enumerate(sol.coefficients))


def evaluate_series(sol: SeriesSolution, z: float) -> EvaluatedSeries:
    """Compensated-sum value plus a geometric tail bound from the last few
    term ratios; the bound is infinite when the terms are not decaying."""
    lo, hi = sol.domain
    if not (lo < z < hi):
        raise OutOfDomain(f"z={z} is outside the open domain ({lo:g}, {hi:g})")
    value = fsum_values(
        b * z ** sol.exponent(m) for m, b in enumerate(sol.coefficients)
    )
    magnitudes = [abs(b) * z ** sol.exponent(m) for m, b in enumerate(sol.coefficients)]
    last = magnitudes[-1]
    if last == 0.0:
        return EvaluatedSeries(value=value, tail_estimate=0.0)
    ratios = [
        magnitudes[m] / magnitudes[m - 1]
        for m in range(max(1, len(magnitudes) - 5), len(magnitudes))
        if magnitudes[m - 1] > 0.0
    ]
    rho = max(ratios, default=1.0)
    if rho >= 1.0:
        return EvaluatedSeries(value=value, tail_estimate=math.inf)
    return EvaluatedSeries(value=value, tail_estimate=last * rho / (1.0 - rho))
