import pytest

from sketchlab import (CONFIRMED, INCONCLUSIVE, REFUTED, ProofScript,
                       ProofStep, SpecMorphism, apply_rule, check_entailment,
                       check_spec_morphism, compose_fractions, get_logic,
                       identity_fraction, mp_spec, run_proof)
from sketchlab.builtin import EqBuilder
from sketchlab.fractions import ProofError
from sketchlab.spec import find_homomorphisms


def mp_facts():
    return mp_spec("facts", formulas=("A", "A⇒B", "B"),
                   implications={"w": ("A", "B", "A⇒B")},
                   provable={"pA": "A", "pAB": "A⇒B"})


def test_apply_rule_enriches_without_renaming_the_target():
    logic = get_logic("mp")
    rule = logic.rule("modus-ponens")
    facts = mp_facts()
    match = find_homomorphisms(rule.hypothesis, facts)[0]
    res = apply_rule(rule, match)
    # the matched spec keeps its names in the enriched spec
    for p in facts.sketch.points:
        for e in facts.carrier(p):
            assert res.injection.of(p, e) == e
    assert res.injection.entailment
    assert len(res.spec.carrier("Prv")) == 3


def test_apply_rule_rejects_foreign_match():
    logic = get_logic("mp")
    rule = logic.rule("modus-ponens")
    facts = mp_facts()
    not_a_match = SpecMorphism(facts, facts,
                               {p: {e: e for e in facts.carrier(p)}
                                for p in facts.sketch.points})
    with pytest.raises(ProofError):
        apply_rule(rule, not_a_match)


def test_run_proof_records_a_trace_and_a_fraction():
    logic = get_logic("mp")
    script = ProofScript(steps=(ProofStep(rule="modus-ponens"),))
    result = run_proof(logic, script, mp_facts())
    assert [t.rule for t in result.trace] == ["modus-ponens"]
    assert result.fraction.denominator.entailment
    assert check_spec_morphism(result.fraction.numerator) == []
    assert check_spec_morphism(result.fraction.denominator) == []


def test_run_proof_with_explicit_bindings():
    logic = get_logic("mp")
    script = ProofScript(steps=(
        ProofStep(rule="modus-ponens",
                  bindings={"Prv": {"pA": "pA", "pAB": "pAB"}}),))
    result = run_proof(logic, script, mp_facts())
    assert len(result.spec.carrier("Prv")) == 3


def test_run_proof_fails_without_a_match():
    logic = get_logic("mp")
    empty = mp_spec("empty", formulas=("A",))
    script = ProofScript(steps=(ProofStep(rule="modus-ponens"),))
    with pytest.raises(ProofError):
        run_proof(logic, script, empty)


def test_identity_fraction_composes_neutrally():
    facts = mp_facts()
    ident = identity_fraction(facts)
    again = compose_fractions(ident, ident)
    assert again.source.carriers == facts.carriers
    assert again.numerator.maps == ident.numerator.maps


def test_entailment_confirms_modus_ponens_tau():
    logic = get_logic("mp")
    tau = logic.rule("modus-ponens").tau
    assert check_entailment(logic, tau) == CONFIRMED


def test_entailment_confirms_composition_tau():
    logic = get_logic("eq")
    tau = logic.rule("compose").tau
    assert check_entailment(logic, tau, depth_cap=3) == CONFIRMED


def bare_type_inclusion():
    small = EqBuilder(name="one-type")
    small.type("X")
    big = EqBuilder(name="two-types")
    big.type("X")
    big.type("Y")
    src, tgt = small.build(), big.build()
    maps = {p: {} for p in src.sketch.points}
    maps["Type"]["X"] = "X"
    return SpecMorphism(src, tgt, maps)


def test_entailment_refutes_bare_type_inclusion():
    logic = get_logic("eq")
    assert check_entailment(logic, bare_type_inclusion(),
                            depth_cap=2) == REFUTED


def test_entailment_inconclusive_when_truncated():
    logic = get_logic("eq")
    tau = logic.rule("compose").tau
    assert check_entailment(logic, tau, budget=3,
                            depth_cap=3) == INCONCLUSIVE
