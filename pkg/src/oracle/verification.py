"""Cross-validation of every closed form against the brute-force oracle.

Mismatches are recorded in the report, never raised.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Sequence

from ..exactmath import NumberFieldElement, as_element, serialize_value
from ..formulas import (
    PowerSumRequest,
    WeightedSumRequest,
    alternating_sum,
    frobenius,
    genus,
    lambda_power_is_one,
    power_sum,
    sylvester_sum,
    two_gen_closed,
    weighted_power_sum,
    weighted_sum_lambda_root,
    weighted_sum_mu1,
    weighted_two_gen,
)
from ..semigroup import Generators, apery_set
from .complement import (
    ComplementSet,
    brute_alternating_sum,
    brute_frobenius,
    brute_genus,
    brute_power_sum,
    brute_sylvester_sum,
    brute_weighted_sum,
    complement_set,
)

logger = logging.getLogger(__name__)


@dataclass
class VerificationCheck:
    """One formula-versus-oracle comparison.

    Attributes:
        name: Formula being checked (e.g. "power_sum")
        params: Case descriptors (mu, lambda, ...)
        formula: Closed-form value
        oracle: Brute-force value
        match: True iff the two are exactly equal
    """
    name: str
    params: dict[str, Any]
    formula: Any
    oracle: Any
    match: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.name,
            "params": serialize_value(self.params),
            "formula": serialize_value(self.formula),
            "oracle": serialize_value(self.oracle),
            "match": self.match,
        }


@dataclass
class VerificationReport:
    """All checks run for one (generators, p) instance."""
    gens: Generators
    p: int
    checks: list[VerificationCheck] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    def record(self, name: str, params: dict[str, Any], formula: Any, oracle: Any) -> VerificationCheck:
        check = VerificationCheck(name=name, params=params, formula=formula, oracle=oracle,
                                  match=formula == oracle)
        if not check.match:
            logger.warning(
                f"Mismatch in {name} for {self.gens.values}, p={self.p}, {params}: "
                f"formula {formula} != oracle {oracle}"
            )
        self.checks.append(check)
        return check

    @property
    def all_match(self) -> bool:
        return all(c.match for c in self.checks)

    @property
    def mismatches(self) -> list[VerificationCheck]:
        return [c for c in self.checks if not c.match]

    def to_dict(self) -> dict[str, Any]:
        return {
            "checks": [c.to_dict() for c in self.checks],
            "skipped": list(self.skipped),
            "all_match": self.all_match,
        }


def verify(
    gens: Generators,
    p: int,
    mus: Sequence[int] = tuple(range(7)),
    lambdas: Sequence[NumberFieldElement | int] = (),
    lambda_labels: Sequence[str] | None = None,
) -> VerificationReport:
    """Run every applicable closed form against its brute-force counterpart.

    Args:
        gens: Validated generators
        p: Representation threshold
        mus: Power-sum exponents (0 checks the genus route)
        lambdas: Weights for the weighted sums
        lambda_labels: Optional display names for lambdas (defaults to str(lambda))

    Returns:
        VerificationReport; all_match is True iff every check matched
    """
    report = VerificationReport(gens=gens, p=p)
    ap = apery_set(gens, p)
    cs: ComplementSet = complement_set(gens, p)

    report.record("frobenius", {}, frobenius(gens, p, apery=ap), brute_frobenius(cs))
    report.record("genus", {}, genus(gens, p, apery=ap), brute_genus(cs))
    report.record("sylvester_sum", {}, sylvester_sum(gens, p, apery=ap), brute_sylvester_sum(cs))

    for mu in mus:
        value = power_sum(PowerSumRequest(gens, p, mu), apery=ap)
        report.record("power_sum", {"mu": mu}, value, brute_power_sum(cs, mu))

    a1 = gens.a1
    if a1 % 2 == 1:
        report.record("alternating_sum", {}, alternating_sum(gens, p, apery=ap), brute_alternating_sum(cs))

    if gens.k == 2:
        a, b = gens.values
        closed = two_gen_closed(a, b, p) if a >= 2 else None
        if closed is not None:
            report.record("two_gen_closed.frobenius", {}, closed.g, brute_frobenius(cs))
            report.record("two_gen_closed.genus", {}, closed.n, brute_genus(cs))
            report.record("two_gen_closed.sylvester_sum", {}, closed.s, brute_sylvester_sum(cs))

    labels = list(lambda_labels) if lambda_labels is not None else [str(lam) for lam in lambdas]
    for lam, label in zip(lambdas, labels):
        lam = as_element(lam)
        if lam.is_zero() or lam.is_one():
            report.skipped.append(f"lambda={label}: lambda must differ from 0 and 1")
            continue
        root = lambda_power_is_one(lam, a1)
        for mu in mus:
            if mu < 1:
                continue
            params = {"mu": mu, "lambda": label}
            oracle = brute_weighted_sum(cs, mu, lam)
            if not root:
                value = weighted_power_sum(WeightedSumRequest(gens, p, mu, lam), apery=ap)
                report.record("weighted_power_sum", params, value, oracle)
                if mu == 1:
                    report.record("weighted_sum_mu1", params, weighted_sum_mu1(gens, p, lam, apery=ap), oracle)
            elif mu == 1:
                report.record("weighted_sum_lambda_root", params,
                              weighted_sum_lambda_root(gens, p, lam, apery=ap), oracle)
            else:
                report.skipped.append(f"weighted_power_sum mu={mu} lambda={label}: lambda^a_1 = 1")
                logger.info(f"Skipping mu={mu} for lambda={label}: no closed form when lambda^a_1 = 1")
            if mu == 1 and gens.k == 2:
                a, b = gens.values
                report.record("weighted_two_gen", params, weighted_two_gen(a, b, p, lam), oracle)

    logger.info(
        f"Verification of {gens.values}, p={p}: {len(report.checks)} checks, "
        f"{len(report.mismatches)} mismatches, {len(report.skipped)} skipped"
    )
    return report
