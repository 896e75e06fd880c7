"""Shared generators for the randomized suites.

Everything is driven by explicitly seeded ``random.Random`` instances
so every run sees the same cases.
"""

from __future__ import annotations

import random

import pytest

from sketchlab import SpecMorphism, make_sketch, make_spec
from sketchlab.builtin import EqBuilder


def random_sketch(rng: random.Random, min_points: int = 3):
    """A plain finite graph sketch (no identities, composites, cones)."""
    n_points = rng.randint(min_points, min_points + 1)
    points = [f"P{i}" for i in range(n_points)]
    arrows = {}
    for i in range(rng.randint(1, 3)):
        arrows[f"a{i}"] = (rng.choice(points), rng.choice(points))
    return make_sketch(f"rand{rng.randint(0, 10**6)}", points, arrows)


def random_spec(rng: random.Random, sketch, max_carrier: int = 4, name=""):
    carriers = {p: [f"{p.lower()}{i}" for i in range(rng.randint(1, max_carrier))]
                for p in sketch.points}
    actions = {}
    for a, (src, tgt) in sketch.arrows.items():
        actions[a] = {e: rng.choice(carriers[tgt]) for e in carriers[src]}
    return make_spec(sketch, carriers, actions, name=name)


def random_extension(rng: random.Random, base, max_new: int = 2, name=""):
    """Grow ``base`` by fresh elements; returns the inclusion morphism."""
    sketch = base.sketch
    carriers = {p: list(base.carrier(p)) for p in sketch.points}
    for p in sketch.points:
        for i in range(rng.randint(0, max_new)):
            carriers[p].append(f"{name}{p.lower()}{i}")
    actions = {a: dict(base.actions.get(a, {})) for a in sketch.arrows}
    for a, (src, tgt) in sketch.arrows.items():
        for e in carriers[src]:
            if e not in actions[a]:
                actions[a][e] = rng.choice(carriers[tgt])
    bigger = make_spec(sketch, carriers, actions, name=name)
    maps = {p: {e: e for e in base.carrier(p)} for p in sketch.points}
    return SpecMorphism(base, bigger, maps)


def random_span(rng: random.Random, base_max: int = 1, new_max: int = 1):
    """A span B <- A -> C of inclusions over a random sketch.

    Kept small on purpose: universal-property checks enumerate every
    morphism out of the pushout apex, which is exponential in its size.
    """
    sketch = random_sketch(rng)
    a = random_spec(rng, sketch, max_carrier=base_max, name="A")
    f = random_extension(rng, a, max_new=new_max, name="b")
    g = random_extension(rng, a, max_new=new_max, name="c")
    return f, g


def random_eq_spec(rng: random.Random, max_types: int = 3,
                   max_terms: int = 4, name=""):
    """A random plain equational presentation: types, terms, a few
    equations between parallel terms; no identity or composition
    records (saturation is expected to create those)."""
    b = EqBuilder(name=name)
    types = [f"T{i}" for i in range(rng.randint(1, max_types))]
    for t in types:
        b.type(t)
    terms = []
    for i in range(rng.randint(1, max_terms)):
        src, tgt = rng.choice(types), rng.choice(types)
        b.term(f"t{i}", src, tgt)
        terms.append((f"t{i}", src, tgt))
    parallel = [(f, g) for (f, fs, ft) in terms for (g, gs, gt) in terms
                if f < g and fs == gs and ft == gt]
    for i, (f, g) in enumerate(parallel):
        if rng.random() < 0.3:
            b.equation(f"e{i}", f, g)
    return b.build()


@pytest.fixture
def rng():
    return random.Random(20260823)
