"""Closed-form error and concentration bounds, evaluated in log-space.

Every evaluator returns a BoundReport rather than throwing on out-of-domain
input: `valid` is False when a precondition such as M > ec/2 fails, and the
numeric fields then carry no meaning. All formulas are implemented exactly as
their source states them, including constants whose sharpness is questionable;
empirical comparisons elsewhere report (not assert) tightness for the
concentration family.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass, field

from .errors import DomainError

# floor used when a value clamps to exact zero and no finite closed-form log
# exists; log of the smallest normal double
_LOG_FLOOR = math.log(sys.float_info.min)

# b = 2 sqrt(pi) e^(-3/2) / sqrt(3)
_LOG_B = math.log(2.0) + 0.5 * math.log(math.pi) - 1.5 - 0.5 * math.log(3.0)


@dataclass(frozen=True)
class BoundReport:
    """One evaluated bound: value, its log, validity, and the inputs echoed back.

    log_value is always finite; when value is exactly zero (clamped probability
    or true underflow with no retained closed form) it is floored at
    log(smallest normal double) ~ -708.396.
    """

    name: str
    value: float
    log_value: float
    valid: bool
    inputs: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "value": self.value,
            "log_value": self.log_value,
            "valid": self.valid,
            "inputs": self.inputs,
        }


def _finite_log(log_value: float) -> float:
    if math.isfinite(log_value):
        return log_value
    return _LOG_FLOOR


def _from_log(name, log_value, valid, inputs) -> BoundReport:
    value = math.exp(log_value) if log_value < 700.0 else math.inf
    return BoundReport(name, value, _finite_log(log_value), valid, inputs)


def bound_rM(c: float, M: int, normF: float) -> BoundReport:
    """Truncation-tail bound (2 sqrt(pi) e^(-3/2) / (sqrt(3) c)) (ec/2M)^(M+3/2)
    (1 - (ec/2M)^2)^(-1/2) * normF, valid for M > ec/2."""
    if not c > 0:
        raise DomainError("c must be positive")
    if normF < 0:
        raise DomainError("normF must be nonnegative")
    inputs = {"c": c, "M": M, "normF": normF}
    r = math.e * c / (2.0 * M)
    if r >= 1.0:
        return BoundReport("bound_rM", math.nan, _LOG_FLOOR, False, inputs)
    if normF == 0.0:
        return BoundReport("bound_rM", 0.0, _LOG_FLOOR, True, inputs)
    log_v = (_LOG_B - math.log(c) + (M + 1.5) * math.log(r)
             - 0.5 * math.log1p(-r * r) + math.log(normF))
    return _from_log("bound_rM", log_v, True, inputs)


def bound_expected_R(N: int, M: int, c: float, normF: float) -> BoundReport:
    """N (M+1) times bound_rM: the expected Hilbert-Schmidt residual bound."""
    base = bound_rM(c, M, normF)
    inputs = {"N": N, "M": M, "c": c, "normF": normF}
    if not base.valid:
        return BoundReport("bound_expected_R", math.nan, _LOG_FLOOR, False, inputs)
    if base.value == 0.0:
        return BoundReport("bound_expected_R", 0.0, _LOG_FLOOR, True, inputs)
    log_v = math.log(N) + math.log(M + 1) + base.log_value
    return _from_log("bound_expected_R", log_v, True, inputs)


def mcdiarmid_probability(eps: float, c: float, M: int, N: int,
                          B: float) -> tuple[BoundReport, BoundReport]:
    """Bounded-difference constant D and the probability floor 1 - 2 exp(-2 eps^2 / D).

    D = (64 pi B^2)/(3 e^3 c^2) (ec/2M)^(2M+3) [(M+1)(2N-1)/(1 - ec/2M)]^2.
    Returns (D report, probability report); the probability is clamped to [0,1].
    """
    if not eps > 0:
        raise DomainError("eps must be positive")
    if M < 1 or N < 1:
        raise DomainError("M and N must be at least 1")
    if not B > 0:
        raise DomainError("B must be positive")
    inputs = {"eps": eps, "c": c, "M": M, "N": N, "B": B}
    r = math.e * c / (2.0 * M)
    if r >= 1.0:
        bad = BoundReport("mcdiarmid_D", math.nan, _LOG_FLOOR, False, inputs)
        return bad, BoundReport("mcdiarmid_probability", math.nan, _LOG_FLOOR,
                                False, inputs)
    log_d = (math.log(64.0) + math.log(math.pi) + 2.0 * math.log(B)
             - math.log(3.0) - 3.0 - 2.0 * math.log(c)
             + (2 * M + 3) * math.log(r)
             + 2.0 * (math.log(M + 1) + math.log(2 * N - 1) - math.log1p(-r)))
    d_report = _from_log("mcdiarmid_D", log_d, True, inputs)
    # exponent -2 eps^2 / D in log-space; D can underflow, the exponent then
    # floors the complementary term to zero and the probability to 1
    log_expo = math.log(2.0) + 2.0 * math.log(eps) - log_d
    if log_expo > math.log(700.0):
        prob = 1.0
    else:
        prob = max(0.0, 1.0 - 2.0 * math.exp(-math.exp(log_expo)))
    log_p = math.log(prob) if prob > 0 else _LOG_FLOOR
    return d_report, BoundReport("mcdiarmid_probability", prob, _finite_log(log_p),
                                 True, inputs)


def hermite_tail_R(l: int, c: float) -> BoundReport:
    """R_l(c) = (2c)^(l-1) / (sqrt(pi c) (l-1)!) * e^(-c), evaluated via lgamma.

    Underflow to zero is allowed; log_value retains the exact closed-form log.
    """
    if l < 1:
        raise DomainError("index l must be a positive integer")
    if not c > 0:
        raise DomainError("c must be positive")
    inputs = {"l": l, "c": c}
    log_v = ((l - 1) * math.log(2.0 * c) - math.lgamma(l) - c
             - 0.5 * math.log(math.pi * c))
    value = math.exp(log_v) if log_v < 700.0 else math.inf
    return BoundReport("hermite_tail_R", value, log_v, True, inputs)


def hermite_L2_err(c: float, n: int, normF: float) -> BoundReport:
    """Projection-error bound 34 c^(3/2) / sqrt(2n+1) * normF."""
    if not c > 0:
        raise DomainError("c must be positive")
    if n < 0:
        raise DomainError("n must be nonnegative")
    inputs = {"c": c, "n": n, "normF": normF}
    if normF == 0.0:
        return BoundReport("hermite_L2_err", 0.0, _LOG_FLOOR, True, inputs)
    log_v = (math.log(34.0) + 1.5 * math.log(c) - 0.5 * math.log(2 * n + 1)
             + math.log(normF))
    return _from_log("hermite_L2_err", log_v, True, inputs)


def hermite_sup_bound(c: float, M: int) -> float:
    """L(c, M) = M (c pi)^(1/4) e^(-c/2), the per-summand cap used by the
    concentration statement (reported against a measured sup elsewhere)."""
    return M * (c * math.pi) ** 0.25 * math.exp(-c / 2.0)


def chernoff_bounds(c: float, M: int,
                    delta: float) -> tuple[BoundReport, BoundReport]:
    """Eigenvalue thresholds and probability floors for the truncated Gram matrix.

    min side: P(lambda_min >= (1-delta) M (1 + M R_min)) >= 1 - M exp(e_min),
    e_min = -delta^2 (1 + M R_min) e^(c/2) / (2 (c pi)^(1/4)); the max side uses
    3 in the denominator and R_max, with threshold (1+delta) M (1 + M R_max).

    The tail constants are indexed by basis function: the k-th scaled Hermite
    function's constant is the closed form hermite_tail_R at l = k+1, so the
    min side uses l = M (last function) and the max side l = 1 (first).

    Each report's value is the clamped probability floor; the matching
    eigenvalue threshold is echoed in inputs["threshold"]. The min threshold
    may exceed the max threshold for some (c, M); callers record that rather
    than assert against it.
    """
    if not (0.0 < delta <= 1.0):
        raise DomainError("delta must lie in (0, 1]")
    if M < 1:
        raise DomainError("M must be at least 1")
    r_last = hermite_tail_R(M, c)
    r_first = hermite_tail_R(1, c)
    scale = math.exp(c / 2.0) / (c * math.pi) ** 0.25 if c < 1400 else math.inf

    def side(name, sign, r_rep, denom):
        growth = 1.0 + M * r_rep.value
        threshold = (1.0 + sign * delta) * M * growth
        expo = -(delta * delta) * growth / denom * scale
        prob = max(0.0, 1.0 - M * math.exp(expo)) if expo < 700 else 0.0
        inputs = {"c": c, "M": M, "delta": delta, "threshold": threshold}
        log_p = math.log(prob) if prob > 0 else _LOG_FLOOR
        return BoundReport(name, prob, _finite_log(log_p), True, inputs)

    return (side("chernoff_min", -1.0, r_last, 2.0),
            side("chernoff_max", +1.0, r_first, 3.0))


def landau_widom_M(c: float, alpha: float) -> int:
    """ceil(2c/pi + alpha log(max(c, 1+1e-9))), floored at 4.

    The number of coefficients needed to resolve the transition region of the
    bandlimited spectrum, with alpha controlling the logarithmic margin.
    """
    if not c > 0:
        raise DomainError("c must be positive")
    if alpha < 0:
        raise DomainError("alpha must be nonnegative")
    raw = 2.0 * c / math.pi + alpha * math.log(max(c, 1.0 + 1e-9))
    return max(4, math.ceil(raw))
