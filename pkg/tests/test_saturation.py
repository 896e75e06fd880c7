from sketchlab import FIXPOINT, TRUNCATED, get_logic, mp_spec, saturate
from sketchlab.builtin import EqBuilder

from conftest import random_eq_spec


def endo_spec():
    b = EqBuilder(name="endo")
    b.type("X")
    b.term("f", "X", "X")
    return b.build()


def mp_facts():
    return mp_spec("facts", formulas=("A", "A⇒B", "B"),
                   implications={"w": ("A", "B", "A⇒B")},
                   provable={"pA": "A", "pAB": "A⇒B"})


def test_mp_saturation_derives_the_provability_witness():
    logic = get_logic("mp")
    res = saturate(logic, mp_facts())
    assert res.status == FIXPOINT
    derived = set(res.spec.carrier("Prv")) - {"pA", "pAB"}
    assert len(derived) == 1
    assert res.spec.act("prv_f", derived.pop()) == "B"


def test_mp_saturation_is_idempotent():
    logic = get_logic("mp")
    once = saturate(logic, mp_facts())
    twice = saturate(logic, once.spec)
    assert twice.steps == 0
    assert twice.spec.carriers == once.spec.carriers
    assert twice.spec.actions == once.spec.actions


def test_saturation_inclusion_embeds_the_start_spec():
    logic = get_logic("mp")
    start = mp_facts()
    res = saturate(logic, start)
    for p in start.sketch.points:
        for e in start.carrier(p):
            assert res.inclusion.of(p, e) == e


def test_endo_saturation_reaches_fixpoint_with_depth_cap():
    logic = get_logic("eq")
    res = saturate(logic, endo_spec(), depth_cap=3)
    assert res.status == FIXPOINT
    assert res.depth_skipped            # deeper terms exist but were capped
    # an identity record for X and a composition record for (f, f)
    ids = {res.spec.act("id_type", i) for i in res.spec.carrier("Id")}
    assert "X" in ids
    pairs = {(res.spec.act("c_fst", c), res.spec.act("c_snd", c))
             for c in res.spec.carrier("Cmp")}
    assert ("f", "f") in pairs


def test_endo_saturation_is_idempotent():
    logic = get_logic("eq")
    once = saturate(logic, endo_spec(), depth_cap=3)
    twice = saturate(logic, once.spec, depth_cap=3)
    assert twice.steps == 0
    assert twice.spec.carriers == once.spec.carriers


def test_budget_exhaustion_reports_truncation():
    logic = get_logic("eq")
    res = saturate(logic, endo_spec(), budget=10, depth_cap=3)
    assert res.status == TRUNCATED


def test_composition_records_are_total_after_saturation(rng):
    logic = get_logic("eq")
    for _ in range(5):
        spec = random_eq_spec(rng, max_types=2, max_terms=2)
        res = saturate(logic, spec, depth_cap=2)
        if res.status != FIXPOINT:
            continue
        out = res.spec
        # the depth cap bounds how far composites of composites reach;
        # every consecutive pair of *generating* terms must be composed
        terms = {t: (out.act("dom", t), out.act("cod", t))
                 for t in spec.carrier("Term")}
        pairs = {(out.act("c_fst", c), out.act("c_snd", c))
                 for c in out.carrier("Cmp")}
        for f, (_, ft) in terms.items():
            for g, (gs, _) in terms.items():
                if gs == ft:
                    assert (f, g) in pairs, (f, g)
        ids = {out.act("id_type", i) for i in out.carrier("Id")}
        assert set(spec.carrier("Type")) <= ids


def test_saturation_trace_is_deterministic():
    logic = get_logic("eq")
    a = saturate(logic, endo_spec(), depth_cap=3)
    b = saturate(logic, endo_spec(), depth_cap=3)
    assert a.steps == b.steps
    assert a.spec.carriers == b.spec.carriers
    assert a.trace == b.trace
