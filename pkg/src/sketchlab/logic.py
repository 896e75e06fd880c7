"""Diagrammatic logics: a source sketch plus inference rules.

A rule is a fraction conclusion -> hypothesis: the entailment ``tau``
embeds the hypothesis in the enriched intermediate specification, the
numerator ``s`` locates the conclusion inside it.  The (implicit)
target sketch of the logic is the source sketch with an inverse added
for each rule's entailment.
"""

from __future__ import annotations

from dataclasses import dataclass

from .sketch import LimitSketch
from .spec import (Specification, SpecMorphism, check_spec_morphism,
                   validate_spec)


@dataclass(frozen=True)
class Fraction:
    """An instance of ``source`` in ``target``: a cospan whose
    denominator leg is an entailment."""
    source: Specification
    target: Specification
    numerator: SpecMorphism    # source -> shared apex
    denominator: SpecMorphism  # target -> shared apex, entailment

    def __post_init__(self):
        if self.numerator.target != self.denominator.target:
            raise ValueError("numerator and denominator must share a target")


def identity_fraction(spec: Specification) -> Fraction:
    from .spec import identity_morphism
    ident = identity_morphism(spec)
    return Fraction(source=spec, target=spec, numerator=ident,
                    denominator=ident.as_entailment())


@dataclass(frozen=True)
class Rule:
    name: str
    hypothesis: Specification
    intermediate: Specification
    conclusion: Specification
    tau: SpecMorphism  # hypothesis -> intermediate, the declared entailment
    s: SpecMorphism    # conclusion -> intermediate

    def fraction(self) -> Fraction:
        return Fraction(source=self.conclusion, target=self.hypothesis,
                        numerator=self.s, denominator=self.tau.as_entailment())


def check_rule(rule: Rule) -> list[str]:
    out = []
    for label, spec in (("hypothesis", rule.hypothesis),
                        ("intermediate", rule.intermediate),
                        ("conclusion", rule.conclusion)):
        for d in validate_spec(spec):
            out.append(f"{rule.name}: {label}: {d}")
    for d in check_spec_morphism(rule.tau):
        out.append(f"{rule.name}: tau: {d}")
    for d in check_spec_morphism(rule.s):
        out.append(f"{rule.name}: s: {d}")
    if rule.tau.source != rule.hypothesis or rule.tau.target != rule.intermediate:
        out.append(f"{rule.name}: tau must run hypothesis -> intermediate")
    if rule.s.source != rule.conclusion or rule.s.target != rule.intermediate:
        out.append(f"{rule.name}: s must run conclusion -> intermediate")
    return out


@dataclass(frozen=True)
class DepthWitness:
    """How generated elements acquire a size, for the saturation cap.

    A record at ``point`` witnesses that the element reached by
    ``result_arrow`` was built from the elements reached by the
    ``component_arrows`` (``None`` meaning the record element itself);
    its depth is ``offset`` plus the component depths.  Elements with
    no witness have depth 1.
    """
    point: str
    result_arrow: str
    component_arrows: tuple[str | None, ...]
    offset: int = 0


@dataclass(frozen=True)
class DiagrammaticLogic:
    name: str
    sketch: LimitSketch
    rules: tuple[Rule, ...]
    depth_witnesses: tuple[DepthWitness, ...] = ()

    def rule(self, name: str) -> Rule:
        for r in self.rules:
            if r.name == name:
                return r
        raise KeyError(f"logic {self.name} has no rule {name}")


def check_logic(logic: DiagrammaticLogic) -> list[str]:
    out = []
    seen = set()
    for rule in logic.rules:
        if rule.name in seen:
            out.append(f"duplicate rule name {rule.name}")
        seen.add(rule.name)
        for spec in (rule.hypothesis, rule.intermediate, rule.conclusion):
            if spec.sketch.name != logic.sketch.name:
                out.append(f"rule {rule.name}: specification over foreign sketch "
                           f"{spec.sketch.name}")
        out.extend(check_rule(rule))
    return out
