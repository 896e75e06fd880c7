import itertools

import pytest

from sketchlab import generate_category, make_sketch
from sketchlab.builtin import EqBuilder
from sketchlab.elements import (CategoryView, SetFunctor,
                                category_of_elements, check_category_view,
                                check_functor, view_from_presented,
                                view_from_spec)


def idem_view():
    """Objects {D}; arrows p (identity) and m with m∘m = m, p∘m = m∘p = m."""
    return CategoryView(
        objects=("D",),
        arrows={"p": ("D", "D"), "m": ("D", "D")},
        identity={"D": "p"},
        table={("p", "p"): "p", ("p", "m"): "m",
               ("m", "p"): "m", ("m", "m"): "m"},
    )


def test_idem_view_is_a_category():
    assert check_category_view(idem_view()) == []


def test_check_view_catches_broken_unit_law():
    bad = CategoryView(objects=("D",),
                       arrows={"p": ("D", "D"), "m": ("D", "D")},
                       identity={"D": "p"},
                       table={("p", "p"): "p", ("p", "m"): "m",
                              ("m", "p"): "p", ("m", "m"): "m"})
    assert any("unit" in p for p in check_category_view(bad))


def test_view_from_presented_free_category():
    sk = make_sketch("idem", ["X"], {"f": ("X", "X")},
                     composites=[("f", "f", "f")])
    view = view_from_presented(generate_category(sk, depth_budget=6))
    assert check_category_view(view) == []
    assert view.compose("f", "f") == "f"
    assert view.identity["X"] == "id_X"


def idem_spec():
    b = EqBuilder(name="idem-theory")
    b.type("D")
    b.term("p", "D", "D")
    b.term("m", "D", "D")
    b.ident("i", "D", "p")
    b.comp("cpp", "p", "p", "p")
    b.comp("cpm", "p", "m", "m")
    b.comp("cmp", "m", "p", "m")
    b.comp("cmm", "m", "m", "m")
    return b.build()


def test_view_from_spec_reads_records_as_tables():
    view = view_from_spec(idem_spec())
    assert view.identity["D"] == "p"
    assert view.compose("m", "m") == "m"


def test_view_from_spec_rejects_missing_records():
    b = EqBuilder(name="gappy")
    b.type("D")
    b.term("p", "D", "D")
    b.ident("i", "D", "p")
    # no composition record for (p, p)
    with pytest.raises(ValueError):
        view_from_spec(b.build())


def functor_on_idem(fiber, idem_map):
    return SetFunctor(objects={"D": tuple(fiber)},
                      arrows={"p": {e: e for e in fiber},
                              "m": dict(idem_map)})


def test_category_of_elements_of_an_idempotent_action():
    view = idem_view()
    p = functor_on_idem(("a", "b"), {"a": "a", "b": "a"})
    el = category_of_elements(view, p)
    assert set(el.objects) == {("D", "a"), ("D", "b")}
    # m lifts once per fiber element
    assert el.lifts_of("m") == [("m", "a"), ("m", "b")]
    assert el.arrows[("m", "b")] == (("D", "b"), ("D", "a"))


def test_lifts_compose_as_their_bases_do():
    view = idem_view()
    p = functor_on_idem(("a", "b"), {"a": "a", "b": "a"})
    el = category_of_elements(view, p)
    first = ("m", "b")
    second = el.lift("m", "a")
    assert el.compose(first, second) == ("m", "b")


def test_unique_lift_property_exhaustively():
    view = idem_view()
    fiber = ("a", "b", "c")
    for images in itertools.product(fiber, repeat=3):
        m_map = dict(zip(fiber, images))
        # only idempotent actions are functorial for m∘m = m
        if any(m_map[m_map[e]] != m_map[e] for e in fiber):
            continue
        el = category_of_elements(view, functor_on_idem(fiber, m_map))
        for arrow in view.arrows:
            lifts = el.lifts_of(arrow)
            assert sorted(e for _, e in lifts) == sorted(fiber)


def test_check_functor_catches_non_functoriality():
    view = idem_view()
    p = functor_on_idem(("a", "b"), {"a": "b", "b": "a"})  # not idempotent
    assert any("functoriality" in msg for msg in check_functor(view, p))


def test_projection_forgets_the_fiber():
    view = idem_view()
    p = functor_on_idem(("a",), {"a": "a"})
    el = category_of_elements(view, p)
    assert el.project_object(("D", "a")) == "D"
    assert el.project_arrow(("m", "a")) == "m"
