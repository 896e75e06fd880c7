import json

import pytest

from sketchlab import check_logic, validate_spec
from sketchlab.textio import (ParseError, morphism_to_json, parse_document,
                              sketch_to_json, spec_to_json)


SKETCH_DOC = """
sketch pair {
  point P
  point Q
  point PQ
  arrow pr1 : PQ -> P
  arrow pr2 : PQ -> Q
  cone c apex PQ product of (P, Q) with (pr1, pr2)
}
"""


def test_sketch_block_with_cone():
    doc = parse_document(SKETCH_DOC)
    sk = doc.sketches["pair"]
    assert sk.arrows["pr1"] == ("PQ", "P")
    assert sk.cones[0].shape == "product"
    assert sk.cones[0].projections == ("pr1", "pr2")


def test_spec_block_over_builtin_sketch():
    doc = parse_document("""
        spec s over eq {
          Type: X
          Term: f
          dom(f) = X
          cod(f) = X
        }
    """)
    spec = doc.specs["s"]
    assert validate_spec(spec) == []
    assert spec.act("dom", "f") == "X"


def test_comments_and_separators_are_ignored():
    doc = parse_document("""
        # leading comment
        spec s over mp {
          Fml: A   # trailing comment
          Prv: p
          prv_f(p) = A
        }
    """)
    assert doc.specs["s"].carrier("Fml") == ("A",)


def test_rule_and_logic_blocks_build_a_checkable_logic():
    doc = parse_document("""
        sketch g { point P arrow a : P -> P }
        spec small over g { P: x  a(x) = x }
        spec big over g { P: x, y  a(x) = x a(y) = y }
        rule grow { hypothesis small intermediate big conclusion big }
        logic L { sketch g rules (grow) witness P via a from (_) offset 1 }
    """)
    assert check_logic(doc.logics["L"]) == []
    witness = doc.logics["L"].depth_witnesses[0]
    assert witness.component_arrows == (None,)
    assert witness.offset == 1


def test_morphism_defaults_to_same_name_images():
    doc = parse_document("""
        sketch g { point P }
        spec a over g { P: x }
        spec b over g { P: x, y }
        morphism inc { source a target b }
    """)
    assert doc.morphisms["inc"].of("P", "x") == "x"


def test_morphism_with_explicit_map():
    doc = parse_document("""
        sketch g { point P }
        spec a over g { P: x }
        spec b over g { P: u }
        morphism m { source a target b map { P: x -> u } }
    """)
    assert doc.morphisms["m"].of("P", "x") == "u"


def test_prove_block_with_bindings():
    doc = parse_document("""
        prove {
          apply compose with { Term: f -> t0 } ;
          apply identity first
        }
    """)
    steps = doc.proofs[0].steps
    assert steps[0].bindings == {"Term": {"f": "t0"}}
    assert steps[1].bindings is None


@pytest.mark.parametrize("source,line,col", [
    ("sketch x {", 1, 11),
    ("spec s over nowhere { }", 1, 13),
    ("sketch y { arrow a : P -> }", 1, 27),
    ("spec s over eq {\n  Nope: x\n}", 2, 3),
])
def test_errors_carry_line_and_column(source, line, col):
    with pytest.raises(ParseError) as err:
        parse_document(source)
    assert (err.value.line, err.value.col) == (line, col)


def test_non_morphism_is_rejected_with_diagnostics():
    with pytest.raises(ParseError) as err:
        parse_document("""
            sketch g { point P point Q arrow a : P -> Q }
            spec small over g { P: x  Q: y  a(x) = y }
            spec big over g { P: x  Q: y, z  a(x) = z }
            morphism bad { source small target big }
        """)
    assert "not a morphism" in err.value.message


def test_json_export_is_serializable_and_ordered():
    doc = parse_document(SKETCH_DOC + """
        spec s over pair { P: p  Q: q  PQ: pq  pr1(pq) = p  pr2(pq) = q }
        morphism i { source s target s }
    """)
    blob = json.dumps({
        "sketch": sketch_to_json(doc.sketches["pair"]),
        "spec": spec_to_json(doc.specs["s"]),
        "morphism": morphism_to_json(doc.morphisms["i"]),
    }, sort_keys=True)
    assert json.loads(blob)["spec"]["carriers"]["PQ"] == ["pq"]
