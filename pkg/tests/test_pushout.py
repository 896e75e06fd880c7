import pytest

from sketchlab import (PushoutError, SpecMorphism, check_spec_morphism,
                       compose_morphisms, find_homomorphisms,
                       identity_morphism, make_sketch, make_spec, pushout,
                       specs_isomorphic)
from sketchlab.pushout import amalgamate, count_mediators, mediating_morphism

from conftest import random_span, random_spec, random_sketch


ARROW = make_sketch("arrow", ["P", "Q"], {"a": ("P", "Q")})


def spec_pq(name, p_elems, q_elems, action):
    return make_spec(ARROW, {"P": p_elems, "Q": q_elems}, {"a": action},
                     name=name)


def incl(small, big):
    return SpecMorphism(small, big, {p: {e: e for e in small.carrier(p)}
                                     for p in small.sketch.points})


def test_pushout_of_identity_is_isomorphic_to_other_leg():
    a = spec_pq("A", ["x"], ["y"], {"x": "y"})
    b = spec_pq("B", ["x", "x2"], ["y"], {"x": "y", "x2": "y"})
    res = pushout(incl(a, b), identity_morphism(a))
    assert specs_isomorphic(res.apex, b)


def test_pushout_keeps_right_leg_names_verbatim():
    # rule application relies on this: the enriched spec must contain
    # the matched spec's elements under their own names.
    a = spec_pq("A", ["x"], ["y"], {"x": "y"})
    b = spec_pq("B", ["x", "y"], ["y"], {"x": "y", "y": "y"})  # fresh "y" at P
    c = spec_pq("C", ["x"], ["y", "z"], {"x": "y"})
    res = pushout(incl(a, b), incl(a, c))
    for point in ("P", "Q"):
        for e in c.carrier(point):
            assert res.into_right.of(point, e) == e


def test_pushout_glues_along_shared_part():
    a = spec_pq("A", ["x"], ["y"], {"x": "y"})
    b = spec_pq("B", ["x", "u"], ["y"], {"x": "y", "u": "y"})
    c = spec_pq("C", ["x"], ["y", "w"], {"x": "y"})
    res = pushout(incl(a, b), incl(a, c))
    assert len(res.apex.carrier("P")) == 2   # x (shared), u
    assert len(res.apex.carrier("Q")) == 2   # y (shared), w
    # the square commutes
    left = compose_morphisms(res.into_left, incl(a, b))
    right = compose_morphisms(res.into_right, incl(a, c))
    assert left.maps == right.maps


def test_pushout_quotients_when_legs_identify():
    a = spec_pq("A", ["x1", "x2"], ["y"], {"x1": "y", "x2": "y"})
    b = spec_pq("B", ["x"], ["y"], {"x": "y"})
    fold = SpecMorphism(a, b, {"P": {"x1": "x", "x2": "x"}, "Q": {"y": "y"}})
    res = pushout(fold, identity_morphism(a))
    # x1 and x2 become one element of the apex
    assert res.into_right.of("P", "x1") == res.into_right.of("P", "x2")
    assert len(res.apex.carrier("P")) == 1


def test_pushout_rejects_mismatched_span():
    a = spec_pq("A", ["x"], ["y"], {"x": "y"})
    a2 = spec_pq("A2", ["w"], ["y"], {"w": "y"})
    with pytest.raises(PushoutError):
        pushout(identity_morphism(a), identity_morphism(a2))


def test_every_cocone_through_random_target_has_one_mediator(rng):
    checked = 0
    for _ in range(8):
        f, g = random_span(rng)
        res = pushout(f, g)
        d = random_spec(rng, f.source.sketch, max_carrier=2, name="D")
        for h in find_homomorphisms(res.apex, d, limit=3):
            u = compose_morphisms(h, res.into_left)
            v = compose_morphisms(h, res.into_right)
            assert count_mediators(res, u, v) == 1
            med = mediating_morphism(res, u, v)
            assert check_spec_morphism(med) == []
            assert med.maps == h.maps
            checked += 1
    assert checked >= 1


def test_pushout_is_symmetric_up_to_isomorphism(rng):
    for _ in range(10):
        f, g = random_span(rng)
        assert specs_isomorphic(pushout(f, g).apex, pushout(g, f).apex)


def test_amalgamate_three_legs(rng):
    sketch = random_sketch(rng)
    from conftest import random_extension
    base = random_spec(rng, sketch, max_carrier=2, name="base")
    legs = [random_extension(rng, base, name=f"l{i}") for i in range(3)]
    wide = amalgamate([m.target for m in legs], legs)
    for m in legs:
        for p in sketch.points:
            # every leg's elements survive into the amalgam
            assert set(base.carrier(p)) <= set(wide.carrier(p))
