import pytest

from sketchlab import (TruncationError, generate_category, make_sketch,
                       representable, validate_sketch)


def idem_sketch():
    """One point, one endo-arrow f with f∘f = f."""
    return make_sketch("idem", ["X"], {"f": ("X", "X")},
                       composites=[("f", "f", "f")])


def test_validate_sketch_reports_bad_endpoints():
    sk = make_sketch("bad", ["X"], {"f": ("X", "Y")})
    problems = validate_sketch(sk)
    assert problems and any("f" in p for p in problems)


def test_validate_sketch_accepts_idem():
    assert validate_sketch(idem_sketch()) == []


def test_free_category_of_idempotent_arrow():
    cat = generate_category(idem_sketch(), depth_budget=6)
    homs = cat.hom("X", "X")
    assert [c.name for c in homs] == ["id_X", "f"]
    assert not cat.truncated


def test_composition_table_respects_relation():
    cat = generate_category(idem_sketch(), depth_budget=6)
    f = cat.arrow_class("X", ("f",))
    assert cat.compose(f, f).name == "f"
    assert cat.compose(cat.identity("X"), f).name == "f"


def test_explain_certificate_replays_to_equal_words():
    cat = generate_category(idem_sketch(), depth_budget=6)
    chain = cat.explain(("X", ("f", "f")), ("X", ("f",)))
    assert chain is not None and len(chain) >= 1
    # each edge carries a reason and adjacent word keys
    for a, b, reason in chain:
        assert reason and a != b


def test_explain_returns_none_for_distinct_classes():
    cat = generate_category(idem_sketch(), depth_budget=6)
    assert cat.explain(("X", ()), ("X", ("f",))) is None


def test_truncation_is_flagged_not_silent():
    free = make_sketch("free", ["X"], {"f": ("X", "X")})
    cat = generate_category(free, depth_budget=3)
    assert cat.truncated
    f3 = cat.arrow_class("X", ("f", "f", "f"))
    assert cat.compose(f3, f3) is None


def test_composite_names_read_right_to_left():
    two = make_sketch("two", ["X", "Y", "Z"],
                      {"f": ("X", "Y"), "g": ("Y", "Z")})
    cat = generate_category(two, depth_budget=4)
    assert [c.name for c in cat.hom("X", "Z")] == ["g∘f"]


def test_representable_of_idem_point():
    res = representable(idem_sketch(), "X", depth_budget=6)
    assert res.diagnostics == []
    assert set(res.spec.carrier("X")) == {"f", "id_X"}
    # the action of f precomposes: f . id = f, f . f = f
    assert res.spec.act("f", "id_X") == "f"
    assert res.spec.act("f", "f") == "f"


def test_representable_rejects_unknown_point():
    with pytest.raises(ValueError):
        representable(idem_sketch(), "nope", depth_budget=3)


def test_generate_category_rejects_invalid_sketch():
    sk = make_sketch("bad", ["X"], {"f": ("X", "Y")})
    with pytest.raises(ValueError):
        generate_category(sk, depth_budget=2)


def test_truncation_error_type_exists():
    assert issubclass(TruncationError, Exception)
