"""Finite realizations of a sketch and their morphisms.

A specification interprets every point as a finite set of named
elements and every arrow as a total function.  Homomorphism search is
a backtracking CSP with forward checking; the public entry point
returns matches in a fixed lexicographic order so that everything
downstream (rule application, proofs, golden output) is reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .sketch import LimitSketch, PRODUCT, PULLBACK, TERMINAL


def tuple_name(parts) -> str:
    return "(" + ",".join(parts) + ")"


@dataclass(frozen=True)
class Specification:
    sketch: LimitSketch
    carriers: dict[str, tuple[str, ...]]
    actions: dict[str, dict[str, str]]
    name: str = ""

    def carrier(self, point: str) -> tuple[str, ...]:
        return self.carriers.get(point, ())

    def act(self, arrow: str, elem: str) -> str:
        return self.actions[arrow][elem]

    def elements(self):
        for point in sorted(self.carriers):
            for elem in self.carriers[point]:
                yield (point, elem)

    def size(self) -> int:
        return sum(len(c) for c in self.carriers.values())

    def __repr__(self):
        label = self.name or "spec"
        sizes = {p: len(c) for p, c in sorted(self.carriers.items()) if c}
        return f"<{label} over {self.sketch.name} {sizes}>"


def make_spec(sketch, carriers, actions, name=""):
    """Normalizing constructor: sorted carriers, all points present."""
    full = {}
    for point in sketch.points:
        full[point] = tuple(sorted(carriers.get(point, ())))
    acts = {a: dict(actions.get(a, {})) for a in sketch.arrows}
    return Specification(sketch=sketch, carriers=full, actions=acts, name=name)


def validate_spec(spec: Specification) -> list[str]:
    out = []
    sketch = spec.sketch
    for point in sketch.points:
        if point not in spec.carriers:
            out.append(f"missing carrier for point {point}")
    for point in spec.carriers:
        if point not in set(sketch.points):
            out.append(f"carrier for undeclared point {point}")
        elems = spec.carriers[point]
        if len(set(elems)) != len(elems):
            out.append(f"duplicate element names at {point}")
    if out:
        return out

    for a, (s, t) in sorted(sketch.arrows.items()):
        action = spec.actions.get(a, {})
        src_elems = set(spec.carrier(s))
        tgt_elems = set(spec.carrier(t))
        for e in sorted(src_elems):
            if e not in action:
                out.append(f"action of {a} undefined on {e}")
            elif action[e] not in tgt_elems:
                out.append(f"action of {a} maps {e} outside the carrier of {t}")
        for e in sorted(set(action) - src_elems):
            out.append(f"action of {a} defined on stray element {e}")
    if out:
        return out

    for (a, p) in sorted(sketch.identities):
        for e in spec.carrier(p):
            if spec.act(a, e) != e:
                out.append(f"potential identity {a} moves {e}")
    for (h, f, g) in sorted(sketch.composites):
        for e in spec.carrier(sketch.src(f)):
            if spec.act(h, e) != spec.act(g, spec.act(f, e)):
                out.append(f"potential composite {h} = {g}.{f} fails at {e}")

    out.extend(check_cones(spec))
    return out


def cone_solutions(spec: Specification, cone) -> list[tuple[str, ...]]:
    """Tuples over the cone base that a limit carrier must biject onto."""
    if cone.shape == TERMINAL:
        return [()]
    if cone.shape == PRODUCT:
        return list(itertools.product(*(spec.carrier(p) for p in cone.base_points)))
    p, q, _r = cone.base_points
    f, g = cone.base_arrows
    return [
        (x, y)
        for x in spec.carrier(p)
        for y in spec.carrier(q)
        if spec.act(f, x) == spec.act(g, y)
    ]


def check_cones(spec: Specification) -> list[str]:
    out = []
    for cone in spec.sketch.cones:
        apex_elems = spec.carrier(cone.apex)
        wanted = cone_solutions(spec, cone)
        if cone.shape == TERMINAL:
            if len(apex_elems) != 1:
                out.append(f"cone {cone.name}: terminal carrier has "
                           f"{len(apex_elems)} elements, expected 1")
            continue
        seen = {}
        for e in apex_elems:
            key = tuple(spec.act(proj, e) for proj in cone.projections)
            if key in seen:
                out.append(f"cone {cone.name}: elements {seen[key]} and {e} "
                           f"project to the same base tuple")
            seen[key] = e
        for key in wanted:
            if tuple(key) not in seen:
                out.append(f"cone {cone.name}: no apex element projects to "
                           f"{tuple_name(key)}")
        for key in seen:
            if list(key) not in [list(w) for w in wanted]:
                out.append(f"cone {cone.name}: apex element {seen[key]} projects "
                           f"to incompatible tuple {tuple_name(key)}")
    return out


# ---------------------------------------------------------------------------
# morphisms


@dataclass(frozen=True)
class SpecMorphism:
    source: Specification
    target: Specification
    maps: dict[str, dict[str, str]]
    entailment: bool = False

    def of(self, point: str, elem: str) -> str:
        return self.maps[point][elem]

    def key(self) -> tuple:
        """Canonical image tuple, for ordering and deduplication."""
        return tuple(
            self.maps[p][e]
            for (p, e) in self.source.elements()
        )

    def as_entailment(self) -> "SpecMorphism":
        return SpecMorphism(self.source, self.target, self.maps, entailment=True)


def identity_morphism(spec: Specification) -> SpecMorphism:
    return SpecMorphism(spec, spec, {p: {e: e for e in spec.carrier(p)}
                                     for p in spec.sketch.points})


def compose_morphisms(second: SpecMorphism, first: SpecMorphism) -> SpecMorphism:
    if first.target is not second.source and first.target != second.source:
        raise ValueError("morphisms are not composable")
    maps = {
        p: {e: second.maps[p][v] for e, v in first.maps[p].items()}
        for p in first.source.sketch.points
    }
    return SpecMorphism(first.source, second.target, maps,
                        entailment=first.entailment and second.entailment)


def check_spec_morphism(m: SpecMorphism) -> list[str]:
    out = []
    if m.source.sketch.name != m.target.sketch.name:
        out.append("source and target live over different sketches")
        return out
    for point in m.source.sketch.points:
        pm = m.maps.get(point, {})
        tgt = set(m.target.carrier(point))
        for e in m.source.carrier(point):
            if e not in pm:
                out.append(f"element {e} at {point} has no image")
            elif pm[e] not in tgt:
                out.append(f"element {e} at {point} maps outside the target carrier")
    if out:
        return out
    for a, (s, t) in sorted(m.source.sketch.arrows.items()):
        for e in m.source.carrier(s):
            if m.maps[t][m.source.act(a, e)] != m.target.act(a, m.maps[s][e]):
                out.append(f"does not commute with {a} at {e}")
    return out


# ---------------------------------------------------------------------------
# homomorphism search


class _Searcher:
    def __init__(self, src: Specification, dst: Specification, injective=False):
        self.src = src
        self.dst = dst
        self.injective = injective
        sketch = src.sketch
        self.elements = [(p, e) for p in sorted(sketch.points)
                         for e in src.carrier(p)]
        # src structure: for each element, arrows out of it and into it
        self.out_edges = {key: [] for key in self.elements}
        self.in_edges = {key: [] for key in self.elements}
        for a, (s, t) in sketch.arrows.items():
            for e in src.carrier(s):
                y = src.act(a, e)
                self.out_edges[(s, e)].append((a, (t, y)))
                self.in_edges[(t, y)].append((a, (s, e)))
        # dst indexes: preimages per arrow
        self.preimage = {}
        for a, (s, _t) in sketch.arrows.items():
            index = {}
            for e in dst.carrier(s):
                index.setdefault(dst.act(a, e), []).append(e)
            self.preimage[a] = index

    def solve(self, limit=None, pinned=None, restrict=None):
        domains = {key: list(self.dst.carrier(key[0])) for key in self.elements}
        if pinned:
            for key, value in pinned.items():
                domains[key] = [value] if value in domains[key] else []
        if restrict:
            for key, allowed in restrict.items():
                domains[key] = [v for v in domains[key] if v in allowed]
        assignment = {}
        used = {p: set() for p in self.src.sketch.points} if self.injective else None
        results = []

        def pick():
            best = None
            for key in self.elements:
                if key in assignment:
                    continue
                n = len(domains[key])
                if best is None or n < best[0] or (n == best[0] and key < best[1]):
                    best = (n, key)
            return best[1] if best else None

        def consistent(key, value):
            if self.injective and value in used[key[0]]:
                return False
            for a, other in self.out_edges[key]:
                # a self-loop (other == key) constrains value directly
                expected = value if other == key else assignment.get(other)
                if expected is not None and self.dst.act(a, value) != expected:
                    return False
            for a, other in self.in_edges[key]:
                if other == key:
                    continue  # covered above as an out-edge
                if other in assignment:
                    if self.dst.act(a, assignment[other]) != value:
                        return False
            return True

        def prune(key, value, trail):
            # forward-check neighbours of the freshly assigned element
            for a, other in self.out_edges[key]:
                if other in assignment:
                    continue
                forced = self.dst.act(a, value)
                old = domains[other]
                new = [forced] if forced in old else []
                if new != old:
                    trail.append((other, old))
                    domains[other] = new
            for a, other in self.in_edges[key]:
                if other in assignment:
                    continue
                allowed = set(self.preimage[a].get(value, ()))
                old = domains[other]
                new = [v for v in old if v in allowed]
                if len(new) != len(old):
                    trail.append((other, old))
                    domains[other] = new
            return all(domains[k] for k in domains if k not in assignment)

        def search():
            if limit is not None and len(results) >= limit:
                return
            key = pick()
            if key is None:
                results.append(dict(assignment))
                return
            for value in domains[key]:
                if not consistent(key, value):
                    continue
                assignment[key] = value
                if self.injective:
                    used[key[0]].add(value)
                trail = []
                ok = prune(key, value, trail)
                if ok:
                    search()
                # a prune can shrink the same domain twice; undo in
                # reverse so the first-recorded (widest) state wins
                for other, old in reversed(trail):
                    domains[other] = old
                if self.injective:
                    used[key[0]].discard(value)
                del assignment[key]
                if limit is not None and len(results) >= limit:
                    return

        search()
        return results

    def as_morphism(self, assignment) -> SpecMorphism:
        maps = {p: {} for p in self.src.sketch.points}
        for (p, e), v in assignment.items():
            maps[p][e] = v
        return SpecMorphism(self.src, self.dst, maps)


def find_homomorphisms(src: Specification, dst: Specification,
                       limit: int | None = None) -> list[SpecMorphism]:
    """All morphisms src -> dst, sorted by their image tuples.

    With ``limit`` set, the first ``limit`` morphisms of that same
    order are returned (the search still enumerates everything; the
    order contract wins over early exit).
    """
    if src.sketch.name != dst.sketch.name:
        raise ValueError("specifications live over different sketches")
    searcher = _Searcher(src, dst)
    morphisms = [searcher.as_morphism(a) for a in searcher.solve()]
    morphisms.sort(key=lambda m: m.key())
    if limit is not None:
        morphisms = morphisms[:limit]
    return morphisms


def exists_extension(base: SpecMorphism, tau: SpecMorphism) -> bool:
    """Is there h': tau.target -> base.target with h' . tau == base?

    Used by the saturator's restricted-chase check; ``tau`` is assumed
    injective (rule inclusions are).
    """
    searcher = _Searcher(tau.target, base.target)
    pinned = {}
    for p in tau.source.sketch.points:
        for e in tau.source.carrier(p):
            pinned[(p, tau.of(p, e))] = base.of(p, e)
    return bool(searcher.solve(limit=1, pinned=pinned))


def specs_isomorphic(a: Specification, b: Specification):
    """A mutually inverse morphism pair, or None.

    Cardinality pruning first; then a backtracking bijection search.
    A bijective homomorphism of realizations is automatically an
    isomorphism, so only the forward direction is searched.
    """
    if a.sketch.name != b.sketch.name:
        raise ValueError("specifications live over different sketches")
    for p in a.sketch.points:
        if len(a.carrier(p)) != len(b.carrier(p)):
            return None
    searcher = _Searcher(a, b, injective=True)
    solutions = searcher.solve(limit=1)
    if not solutions:
        return None
    forward = searcher.as_morphism(solutions[0])
    inverse_maps = {
        p: {v: e for e, v in forward.maps[p].items()}
        for p in a.sketch.points
    }
    backward = SpecMorphism(b, a, inverse_maps)
    assert not check_spec_morphism(backward), "inverse of a bijective morphism must commute"
    return forward, backward
