"""Service handlers: plain functions over plain data.

Each handler takes strings and numbers, returns a JSON-ready dict with
an ``ok`` flag, and raises :class:`InputError` for malformed input.
The HTTP app and the command line are both thin wrappers over these.
"""

from __future__ import annotations

from ..builtin import builtin_logics
from ..fractions import CONFIRMED, ProofError, check_entailment, run_proof
from ..logic import check_logic, check_rule
from ..minilang import MiniLangError, evaluate_program, parse_program
from ..saturation import DEFAULT_BUDGET, DEFAULT_DEPTH_CAP, saturate
from ..semantics import StateFunction, sequential_product
from ..spec import validate_spec
from ..textio import (ParseError, morphism_to_json, parse_document,
                      spec_to_json)
from ..translate import erase_decorations, thread_state


class InputError(Exception):
    pass


def _parse(document: str):
    try:
        return parse_document(document)
    except ParseError as exc:
        raise InputError(str(exc)) from exc


def _get_logic(doc, name: str):
    if name in doc.logics:
        return doc.logics[name]
    builtins = builtin_logics()
    if name in builtins:
        return builtins[name]
    known = sorted(set(doc.logics) | set(builtins))
    raise InputError(f"unknown logic {name!r}; known: " + ", ".join(known))


def _get_spec(doc, name: str | None, what="spec"):
    if name is None:
        if len(doc.specs) == 1:
            return next(iter(doc.specs.values()))
        raise InputError(f"document has {len(doc.specs)} specs; "
                         f"name the {what} explicitly")
    if name not in doc.specs:
        raise InputError(f"unknown spec {name!r}; document has: "
                         + ", ".join(sorted(doc.specs)))
    return doc.specs[name]


def handle_health() -> dict:
    return {"ok": True, "logics": sorted(builtin_logics())}


def handle_check(document: str) -> dict:
    """Validate every block of a document (parsing already validates
    sketches, morphisms within rules, and specs' totality via the rule
    and morphism constructors; this re-checks specs, rules, logics)."""
    doc = _parse(document)
    problems = {}
    for name, spec in sorted(doc.specs.items()):
        found = validate_spec(spec)
        if found:
            problems[f"spec {name}"] = found
    for name, rule in sorted(doc.rules.items()):
        found = check_rule(rule)
        if found:
            problems[f"rule {name}"] = found
    for name, logic in sorted(doc.logics.items()):
        found = check_logic(logic)
        if found:
            problems[f"logic {name}"] = found
    return {
        "ok": not problems,
        "problems": problems,
        "counts": {
            "sketches": len(doc.sketches),
            "specs": len(doc.specs),
            "rules": len(doc.rules),
            "logics": len(doc.logics),
            "morphisms": len(doc.morphisms),
            "proofs": len(doc.proofs),
        },
    }


def handle_saturate(document: str, spec: str | None = None,
                    logic: str = "eq", budget: int = DEFAULT_BUDGET,
                    depth: int = DEFAULT_DEPTH_CAP) -> dict:
    doc = _parse(document)
    the_logic = _get_logic(doc, logic)
    the_spec = _get_spec(doc, spec)
    if the_spec.sketch.name != the_logic.sketch.name:
        raise InputError(f"spec {the_spec.name!r} is over sketch "
                         f"{the_spec.sketch.name!r}, not the sketch of "
                         f"logic {logic!r}")
    result = saturate(the_logic, the_spec, budget=budget, depth_cap=depth)
    return {
        "ok": result.status == "fixpoint",
        "status": result.status,
        "steps": result.steps,
        "depth_skipped": result.depth_skipped,
        "spec": spec_to_json(result.spec),
    }


def handle_prove(document: str, spec: str | None = None,
                 logic: str = "eq") -> dict:
    doc = _parse(document)
    if not doc.proofs:
        raise InputError("document has no prove block")
    the_logic = _get_logic(doc, logic)
    the_spec = _get_spec(doc, spec, what="start spec")
    try:
        result = run_proof(the_logic, doc.proofs[0], the_spec)
    except ProofError as exc:
        return {"ok": False, "error": str(exc)}
    return {
        "ok": True,
        "steps": [
            {"index": t.index, "rule": t.rule,
             "created": {p: list(es) for p, es in sorted(t.created.items())
                         if es}}
            for t in result.trace
        ],
        "spec": spec_to_json(result.spec),
        "fraction": {
            "source": result.fraction.source.name,
            "target": result.fraction.target.name,
            "numerator": morphism_to_json(result.fraction.numerator),
            "denominator": morphism_to_json(result.fraction.denominator),
        },
    }


def handle_entail(document: str, morphism: str | None = None,
                  logic: str = "eq", budget: int = DEFAULT_BUDGET,
                  depth: int = DEFAULT_DEPTH_CAP) -> dict:
    doc = _parse(document)
    if morphism is None:
        if len(doc.morphisms) == 1:
            morphism = next(iter(doc.morphisms))
        else:
            raise InputError(f"document has {len(doc.morphisms)} morphisms; "
                             "name one explicitly")
    if morphism not in doc.morphisms:
        raise InputError(f"unknown morphism {morphism!r}; document has: "
                         + ", ".join(sorted(doc.morphisms)))
    the_logic = _get_logic(doc, logic)
    tau = doc.morphisms[morphism]
    if tau.source.sketch.name != the_logic.sketch.name:
        raise InputError(f"morphism {morphism!r} is not over the sketch of "
                         f"logic {logic!r}")
    status = check_entailment(the_logic, tau, budget=budget, depth_cap=depth)
    return {"ok": status == CONFIRMED, "status": status,
            "morphism": morphism, "logic": logic}


def handle_translate(document: str, spec: str | None = None,
                     via: str = "far") -> dict:
    doc = _parse(document)
    the_spec = _get_spec(doc, spec)
    dec_sketch = builtin_logics()["dec"].sketch
    if the_spec.sketch.name != dec_sketch.name:
        raise InputError(f"spec {the_spec.name!r} is over sketch "
                         f"{the_spec.sketch.name!r}; translation starts "
                         f"from the decorated sketch {dec_sketch.name!r}")
    if via == "far":
        result = erase_decorations(the_spec)
    elif via == "near":
        result = thread_state(the_spec)
    else:
        raise InputError("via must be 'far' or 'near'")
    return {
        "ok": True,
        "via": via,
        "spec": spec_to_json(result.spec),
        "point_map": dict(sorted(result.point_map.items())),
        "element_map": {p: dict(sorted(m.items()))
                        for p, m in sorted(result.element_map.items())},
    }


def handle_eval(program: str, state: dict[str, int] | None = None,
                order: str = "left", modulus: int = 2 ** 16) -> dict:
    if order not in ("left", "right"):
        raise InputError("order must be 'left' or 'right'")
    try:
        node = parse_program(program)
        result = evaluate_program(node, dict(state or {}), order=order,
                                  modulus=modulus)
    except MiniLangError as exc:
        raise InputError(str(exc)) from exc
    out = {"ok": True, "order": order}
    out.update(result.as_json())
    return out


def _demo_mp() -> dict:
    """Derive a provability witness for B from A and A⇒B."""
    doc = _parse("""
        spec facts over mp {
          Fml: A, A⇒B, B
          Imp: w
          i_lhs(w) = A
          i_rhs(w) = B
          i_res(w) = A⇒B
          Prv: pA, pAB
          prv_f(pA) = A
          prv_f(pAB) = A⇒B
        }
        prove { apply modus-ponens first }
    """)
    logic = builtin_logics()["mp"]
    rule = logic.rule("modus-ponens")
    result = run_proof(logic, doc.proofs[0], doc.specs["facts"])
    derived = [e for e in result.spec.carrier("Prv")
               if e not in doc.specs["facts"].carrier("Prv")]
    lines = [
        "rule modus-ponens:",
        "  hypothesis     Fml: A, A⇒B, B   Prv: pA, pAB   Imp: w",
        "  conclusion     Fml: C            Prv: pC",
        "  s maps         C -> " + rule.s.of("Fml", "C")
        + "   pC -> " + rule.s.of("Prv", "pC"),
        "applied to the facts spec:",
        "  new provability witnesses: " + ", ".join(derived),
        "  " + ", ".join(f"prv_f({e}) = {result.spec.act('prv_f', e)}"
                         for e in derived),
    ]
    return {"ok": True, "demo": "mp", "lines": lines,
            "spec": spec_to_json(result.spec)}


def _demo_seqprod() -> dict:
    """The worked sequential product: state 2, inputs (3, 4)."""
    states = (2, 5)
    f1 = StateFunction(states=states, src=(3,), tgt=(2,),
                       table={(2, 3): (5, 2), (5, 3): (5, 2)})
    f2 = StateFunction(states=states, src=(4,), tgt=(20,),
                       table={(2, 4): (2, 20), (5, 4): (5, 20)})
    seq = sequential_product(f1, f2)
    s_out, pair = seq(2, (3, 4))
    lines = [
        "f1 first, then f2, threading the state:",
        f"  f1(2, 3) = {f1(2, 3)}",
        f"  f2(5, 4) = {f2(5, 4)}",
        f"  (f1 ; f2)(2, (3, 4)) = ({s_out}, {pair})",
    ]
    return {"ok": True, "demo": "seqprod", "lines": lines,
            "result": {"state": s_out, "values": list(pair)}}


def handle_demo(name: str) -> dict:
    if name == "mp":
        return _demo_mp()
    if name == "seqprod":
        return _demo_seqprod()
    raise InputError(f"unknown demo {name!r}; available: mp, seqprod")
