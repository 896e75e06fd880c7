import random

from sketchlab import (compose_morphisms, find_homomorphisms,
                       identity_morphism, make_sketch, make_spec,
                       check_spec_morphism, specs_isomorphic, validate_spec)

from conftest import random_sketch, random_spec


ARROW = make_sketch("arrow", ["P", "Q"], {"a": ("P", "Q")})


def spec_pq(p_elems, q_elems, action):
    return make_spec(ARROW, {"P": p_elems, "Q": q_elems}, {"a": action})


def test_validate_spec_flags_partial_action():
    s = make_spec(ARROW, {"P": ["x"], "Q": ["y"]}, {"a": {}})
    assert any("a" in p for p in validate_spec(s))


def test_validate_spec_flags_off_carrier_value():
    s = make_spec(ARROW, {"P": ["x"], "Q": ["y"]}, {"a": {"x": "z"}})
    assert validate_spec(s)


def test_hom_count_matches_hand_count():
    # source: one P-element; target: two P-elements over two Q-elements.
    src = spec_pq(["x"], ["y"], {"x": "y"})
    dst = spec_pq(["u", "v"], ["s", "t"], {"u": "s", "v": "t"})
    homs = find_homomorphisms(src, dst)
    # x may go to u (forcing y -> s) or to v (forcing y -> t); the
    # remaining Q-element of the target is not constrained, but y has
    # only one image each time: 2 morphisms in total.
    assert len(homs) == 2
    assert all(check_spec_morphism(h) == [] for h in homs)


def test_homomorphisms_commute_with_actions(rng):
    for _ in range(25):
        sk = random_sketch(rng)
        src = random_spec(rng, sk, max_carrier=2)
        dst = random_spec(rng, sk, max_carrier=3)
        for h in find_homomorphisms(src, dst, limit=20):
            assert check_spec_morphism(h) == []


def test_homomorphism_results_are_deterministic(rng):
    sk = random_sketch(rng)
    src = random_spec(rng, sk, max_carrier=2)
    dst = random_spec(rng, sk, max_carrier=3)
    first = [h.key() for h in find_homomorphisms(src, dst)]
    second = [h.key() for h in find_homomorphisms(src, dst)]
    assert first == second == sorted(first)


def test_identity_and_composition_of_morphisms():
    s = spec_pq(["x"], ["y"], {"x": "y"})
    i = identity_morphism(s)
    assert compose_morphisms(i, i).maps == i.maps


def test_specs_isomorphic_detects_renaming():
    a = spec_pq(["x"], ["y"], {"x": "y"})
    b = spec_pq(["u"], ["v"], {"u": "v"})
    assert specs_isomorphic(a, b)


def test_specs_isomorphic_rejects_different_shape():
    a = spec_pq(["x"], ["y"], {"x": "y"})
    b = spec_pq(["x", "z"], ["y"], {"x": "y", "z": "y"})
    assert not specs_isomorphic(a, b)


def test_no_homomorphism_into_empty_target():
    src = spec_pq(["x"], ["y"], {"x": "y"})
    dst = spec_pq([], [], {})
    assert find_homomorphisms(src, dst) == []


def test_search_limit_is_respected():
    src = make_spec(ARROW, {"P": [], "Q": ["y"]}, {"a": {}})
    dst = make_spec(ARROW, {"P": [], "Q": ["q1", "q2", "q3"]}, {"a": {}})
    assert len(find_homomorphisms(src, dst, limit=2)) == 2


def test_seeded_generator_is_reproducible():
    a = random_spec(random.Random(7), ARROW)
    b = random_spec(random.Random(7), ARROW)
    assert a.carriers == b.carriers and a.actions == b.actions
