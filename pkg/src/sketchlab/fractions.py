"""Inference steps, fraction composition, entailment checking, proofs."""

from __future__ import annotations

from dataclasses import dataclass, field

from .logic import DiagrammaticLogic, Fraction, Rule, identity_fraction
from .pushout import PushoutResult, pushout
from .saturation import (DEFAULT_BUDGET, DEFAULT_DEPTH_CAP, TRUNCATED,
                         saturate)
from .spec import (Specification, SpecMorphism, check_spec_morphism,
                   compose_morphisms, find_homomorphisms, identity_morphism,
                   specs_isomorphic)

CONFIRMED = "confirmed"
REFUTED = "refuted"
INCONCLUSIVE = "inconclusive"


class ProofError(Exception):
    pass


@dataclass
class ApplyResult:
    spec: Specification            # the enriched specification S_H
    instance: Fraction             # the conclusion's instance in S_H's source
    injection: SpecMorphism        # S -> S_H, an entailment
    pushout: PushoutResult


def apply_rule(rule: Rule, match: SpecMorphism) -> ApplyResult:
    """One inference step: push the rule's entailment out along a match."""
    if match.source != rule.hypothesis:
        raise ProofError(f"match does not start at the hypothesis of {rule.name}")
    problems = check_spec_morphism(match)
    if problems:
        raise ProofError(f"match is not a morphism: {'; '.join(problems)}")
    po = pushout(rule.tau, match)
    numerator = compose_morphisms(po.into_left, rule.s)
    instance = Fraction(
        source=rule.conclusion,
        target=match.target,
        numerator=numerator,
        denominator=po.into_right.as_entailment(),
    )
    return ApplyResult(spec=po.apex, instance=instance,
                       injection=po.into_right.as_entailment(), pushout=po)


def compose_fractions(second: Fraction, first: Fraction) -> Fraction:
    """Cospan composition ``second . first`` via a pushout.

    The pushout of ``first``'s denominator along ``second``'s numerator
    is again an entailment (the free functor preserves pushouts, and
    isomorphisms push out to isomorphisms), so the composite's
    denominator is one too.
    """
    if first.target != second.source:
        raise ValueError("fractions are not composable")
    po = pushout(first.denominator, second.numerator)
    numerator = compose_morphisms(po.into_left, first.numerator)
    denominator = compose_morphisms(po.into_right, second.denominator)
    return Fraction(source=first.source, target=second.target,
                    numerator=numerator,
                    denominator=denominator.as_entailment())


def check_entailment(logic: DiagrammaticLogic, tau: SpecMorphism,
                     budget: int = DEFAULT_BUDGET,
                     depth_cap: int = DEFAULT_DEPTH_CAP) -> str:
    """Decide whether ``tau`` becomes invertible in the theory.

    Both endpoints are saturated at the same budgets and compared up
    to isomorphism; running out of step budget on either side leaves
    the question open.
    """
    problems = check_spec_morphism(tau)
    if problems:
        raise ValueError("tau is not a morphism: " + "; ".join(problems))
    left = saturate(logic, tau.source, budget=budget, depth_cap=depth_cap)
    right = saturate(logic, tau.target, budget=budget, depth_cap=depth_cap)
    if left.status == TRUNCATED or right.status == TRUNCATED:
        return INCONCLUSIVE
    if specs_isomorphic(left.spec, right.spec) is not None:
        return CONFIRMED
    return REFUTED


# ---------------------------------------------------------------------------
# proof scripts


@dataclass(frozen=True)
class ProofStep:
    rule: str
    # explicit partial bindings hypothesis element -> target element,
    # per point; None or missing entries mean "first match wins"
    bindings: dict[str, dict[str, str]] | None = None


@dataclass(frozen=True)
class ProofScript:
    steps: tuple[ProofStep, ...]


@dataclass
class ProofTraceEntry:
    index: int
    rule: str
    match_key: tuple
    created: dict[str, tuple[str, ...]]


@dataclass
class ProofResult:
    spec: Specification
    trace: list[ProofTraceEntry]
    fraction: Fraction   # final spec as an instance in the start spec


def _select_match(rule: Rule, current: Specification, step: ProofStep):
    matches = find_homomorphisms(rule.hypothesis, current)
    if step.bindings:
        def keeps(m):
            for point, pairs in step.bindings.items():
                for h_elem, target in pairs.items():
                    if m.of(point, h_elem) != target:
                        return False
            return True
        matches = [m for m in matches if keeps(m)]
    return matches[0] if matches else None


def run_proof(logic: DiagrammaticLogic, script: ProofScript,
              start: Specification) -> ProofResult:
    current = start
    trace = []
    fraction = identity_fraction(start)
    for i, step in enumerate(script.steps):
        rule = logic.rule(step.rule)
        match = _select_match(rule, current, step)
        if match is None:
            raise ProofError(f"step {i}: no match for rule {step.rule}")
        result = apply_rule(rule, match)
        created = {}
        for point in current.sketch.points:
            before = {result.injection.of(point, e)
                      for e in current.carrier(point)}
            new = tuple(e for e in result.spec.carrier(point)
                        if e not in before)
            if new:
                created[point] = new
        trace.append(ProofTraceEntry(index=i, rule=step.rule,
                                     match_key=match.key(), created=created))
        step_fraction = Fraction(
            source=result.spec, target=current,
            numerator=identity_morphism(result.spec),
            denominator=result.injection,
        )
        fraction = compose_fractions(fraction, step_fraction)
        current = result.spec
    return ProofResult(spec=current, trace=trace, fraction=fraction)
