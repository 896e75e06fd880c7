import random

import pytest

from sketchlab.semantics import (FiniteModel, StateFunction, DecoratedTerm,
                                 all_state_functions,
                                 check_decorated_equation, compose, convert,
                                 identity_function, pure_function,
                                 semi_pure_product, sequential_product)


def lookup_increment(states, carrier):
    """A modifier reading the state and one writing it, for the tests."""
    read = StateFunction(states=states, src=carrier, tgt=states,
                         table={(s, x): (s, s) for s in states
                                for x in carrier})
    bump = StateFunction(states=states, src=carrier, tgt=carrier,
                         table={(s, x): (states[(states.index(s) + 1)
                                                % len(states)], x)
                                for s in states for x in carrier})
    return read, bump


def test_pure_function_fixes_the_state():
    f = pure_function({0: 1, 1: 0}, (0, 1), (0, 1), states=("s", "t"))
    assert f("s", 0) == ("s", 1)
    assert f.decoration == "p"


def test_pure_constructor_rejects_state_movement():
    with pytest.raises(ValueError):
        StateFunction(states=(0, 1), src=("x",), tgt=("x",),
                      table={(0, "x"): (1, "x"), (1, "x"): (1, "x")},
                      decoration="p")


def test_conversion_keeps_the_table():
    f = pure_function({0: 0}, (0,), (0,), states=(0, 1))
    m = convert(f)
    assert m.decoration == "m" and m.table == f.table


def test_compose_threads_the_state():
    states = (0, 1)
    _, bump = lookup_increment(states, ("x",))
    twice = compose(bump, bump)
    assert twice(0, "x") == (0, "x")   # two bumps wrap around
    assert twice.decoration == "m"


def test_worked_sequential_product_triple():
    states = tuple(range(10))
    f1 = StateFunction(states=states, src=(3,), tgt=states,
                       table={(s, 3): (min(s + 3, 9), s) for s in states})
    f2 = StateFunction(states=states, src=(4,), tgt=tuple(range(40)),
                       table={(s, 4): (s, s * 4) for s in states})
    seq = sequential_product(f1, f2)
    assert seq(2, (3, 4)) == (5, (2, 20))


def test_semi_pure_product_rejects_pure_active_factor():
    f = pure_function({0: 0}, (0,), (0,), states=(0, 1))
    with pytest.raises(ValueError):
        semi_pure_product(f, (0, 1))


def test_semi_pure_product_flavors():
    states = (0, 1)
    read, _ = lookup_increment(states, ("x",))
    prod = semi_pure_product(read, ("u", "v"), side="right")
    # active track: projecting the first component recovers read
    for s in states:
        for x2 in ("u", "v"):
            s1, (y1, y2) = prod(s, ("x", x2))
            assert (s1, y1) == read(s, "x")
            assert y2 == x2                      # passenger untouched


def test_passenger_track_is_weakly_but_not_strongly_identity():
    states = (0, 1)
    _, bump = lookup_increment(states, ("x",))
    prod = semi_pure_product(bump, ("u",), side="right")
    src = prod.src
    # passenger projection after the product
    after = compose(prod, convert(pure_function(
        {p: p[1] for p in prod.tgt}, prod.tgt, ("u",), states)))
    # bare passenger projection, state untouched
    bare = convert(pure_function({p: p[1] for p in src}, src, ("u",), states))
    assert check_decorated_equation(after, bare, "~")
    assert not check_decorated_equation(after, bare, "=")


def test_consistency_vs_plain_equality_separation():
    states = (0, 1)
    same_value_diff_state = StateFunction(
        states=states, src=("x",), tgt=("x",),
        table={(0, "x"): (1, "x"), (1, "x"): (0, "x")})
    ident = convert(identity_function(("x",), states))
    assert check_decorated_equation(same_value_diff_state, ident, "~")
    assert not check_decorated_equation(same_value_diff_state, ident, "=")


def test_sequential_product_formula_on_random_pairs():
    rng = random.Random(42)
    states = (0, 1, 2)
    xs, ys = (10, 11), (20, 21)
    fns_x = list(all_state_functions(states, xs, xs))
    fns_y = list(all_state_functions(states, ys, ys))
    for _ in range(30):
        f1, f2 = rng.choice(fns_x), rng.choice(fns_y)
        seq = sequential_product(f1, f2)
        for s in states:
            for x1 in xs:
                for x2 in ys:
                    s1, y1 = f1(s, x1)
                    s2, y2 = f2(s1, x2)
                    assert seq(s, (x1, x2)) == (s2, (y1, y2))


def test_finite_model_interpret_checks_decorations():
    states = (0, 1)
    model = FiniteModel(
        carriers={"A": ("x",)}, states=states,
        functions={"m": convert(identity_function(("x",), states))})
    term = DecoratedTerm(name="m", src="A", tgt="A", decoration="m")
    assert model.evaluate(term, 0, "x") == (0, "x")
    wrong = DecoratedTerm(name="m", src="A", tgt="A", decoration="p")
    with pytest.raises(ValueError):
        model.interpret(wrong)


def test_all_state_functions_counts():
    fns = list(all_state_functions((0, 1), ("x",), ("y",)))
    # two inputs (s,x) each with 2 possible outputs -> 4 tables
    assert len(fns) == 4
