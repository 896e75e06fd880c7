"""Pushouts and wide pushouts (amalgamation) of specifications.

Computed pointwise: the apex carrier at each point is the quotient of
the disjoint union of the two legs by the equivalence generated by
``f(a) ~ g(a)``.  Limit-cone apexes flagged ``derived`` are exempt
from the pointwise rule and recomputed from their base instead, which
keeps pointwise colimits correct at limit-constrained points.
"""

from __future__ import annotations

from dataclasses import dataclass

from .spec import (Specification, SpecMorphism, check_spec_morphism,
                   cone_solutions, find_homomorphisms, tuple_name)


class PushoutError(Exception):
    pass


@dataclass
class PushoutResult:
    apex: Specification
    into_left: SpecMorphism    # B -> apex
    into_right: SpecMorphism   # C -> apex
    # apex element -> tuple of ("left"/"right", element) it quotients
    provenance: dict[str, dict[str, tuple[tuple[str, str], ...]]]


def pushout(f: SpecMorphism, g: SpecMorphism) -> PushoutResult:
    """Pushout of the span B <-f- A -g-> C.

    Fresh apex elements are named after the lexicographically least
    member of their class, preferring right-leg names so that applying
    a rule to a specification keeps its element names stable.
    """
    if f.source is not g.source and f.source != g.source:
        raise PushoutError("legs do not share a source")
    a_spec, b_spec, c_spec = f.source, f.target, g.target
    sketch = a_spec.sketch
    if b_spec.sketch.name != sketch.name or c_spec.sketch.name != sketch.name:
        raise PushoutError("all three specifications must share one sketch")

    derived = sketch.derived_points

    class_of = {}    # point -> tagged elem -> class id
    members = {}     # point -> class id -> [tagged elems]
    names = {}       # point -> class id -> apex name
    carriers = {}
    provenance = {}

    for point in sketch.points:
        if point in derived:
            continue
        parent = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        tagged = [("left", e) for e in b_spec.carrier(point)] + \
                 [("right", e) for e in c_spec.carrier(point)]
        for t in tagged:
            parent[t] = t
        for e in a_spec.carrier(point):
            x, y = find(("left", f.of(point, e))), find(("right", g.of(point, e)))
            if x != y:
                parent[y] = x

        grouped = {}
        for t in tagged:
            grouped.setdefault(find(t), []).append(t)

        def base_name(group):
            right = sorted(e for side, e in group if side == "right")
            if right:
                return right[0]
            return sorted(e for _side, e in group)[0]

        # classes touching the right leg keep their right-leg name
        # verbatim (they cannot collide: each right element belongs to
        # exactly one class); only fresh left-only classes get suffixed
        with_right = [grp for grp in grouped.values()
                      if any(side == "right" for side, _ in grp)]
        left_only = [grp for grp in grouped.values()
                     if all(side == "left" for side, _ in grp)]
        ordered = sorted(with_right, key=lambda grp: (base_name(grp), sorted(grp))) + \
                  sorted(left_only, key=lambda grp: (base_name(grp), sorted(grp)))
        taken = set()
        point_names = {}
        point_members = {}
        point_prov = {}
        point_class_of = {}
        for i, group in enumerate(ordered):
            name = base_name(group)
            if name in taken:
                k = 1
                while f"{name}#{k}" in taken:
                    k += 1
                name = f"{name}#{k}"
            taken.add(name)
            point_names[i] = name
            point_members[i] = group
            point_prov[name] = tuple(sorted(group))
            for t in group:
                point_class_of[t] = i
        class_of[point] = point_class_of
        members[point] = point_members
        names[point] = point_names
        carriers[point] = tuple(sorted(taken))
        provenance[point] = point_prov

    def apex_name(point, side, elem):
        return names[point][class_of[point][(side, elem)]]

    actions = {}
    for arrow, (s, t) in sketch.arrows.items():
        if s in derived or t in derived:
            continue
        action = {}
        for cid, group in members[s].items():
            values = set()
            for side, e in group:
                leg = b_spec if side == "left" else c_spec
                values.add(apex_name(t, side, leg.act(arrow, e)))
            if len(values) != 1:
                raise PushoutError(
                    f"induced action of {arrow} is ill-defined on class "
                    f"{names[s][cid]}: {sorted(values)}")
            action[names[s][cid]] = values.pop()
        actions[arrow] = action

    # second pass: recompute derived apexes and everything touching them
    partial = Specification(sketch=sketch, carriers={**carriers,
                            **{d: () for d in derived}}, actions=actions)
    derived_tuples = {}
    for cone in sketch.cones:
        if not cone.derived:
            continue
        solutions = cone_solutions(partial, cone)
        elems = {}
        for sol in solutions:
            elems[tuple(sol)] = tuple_name(sol)
        carriers[cone.apex] = tuple(sorted(elems.values()))
        derived_tuples[cone.apex] = elems
        for proj, idx in zip(cone.projections, range(len(cone.projections))):
            actions[proj] = {name: sol[idx] for sol, name in elems.items()}
        for arrow in sketch.arrows_into(cone.apex):
            if arrow in cone.projections:
                continue
            comp_arrows = []
            for proj in cone.projections:
                found = [h for (h, ff, gg) in sketch.composites
                         if ff == arrow and gg == proj]
                comp_arrows.append(found[0])
            src_point = sketch.src(arrow)
            action = {}
            for e in carriers[src_point]:
                key = tuple(actions[h][e] for h in comp_arrows)
                if key not in elems:
                    raise PushoutError(
                        f"recomputed derived apex {cone.apex} has no element "
                        f"for image {tuple_name(key)} of {e} under {arrow}")
                action[e] = elems[key]
            actions[arrow] = action

    apex = Specification(sketch=sketch, carriers=carriers, actions=actions,
                         name=f"po({b_spec.name or 'B'},{c_spec.name or 'C'})")

    # non-derived points first so derived injections can look up base images
    ordered_points = [p for p in sketch.points if p not in derived] + \
                     [p for p in sketch.points if p in derived]

    def injection(leg_spec, side):
        maps = {}
        cone_by_apex = {c.apex: c for c in sketch.cones}
        for point in ordered_points:
            if point in derived:
                cone = cone_by_apex[point]
                pm = {}
                for e in leg_spec.carrier(point):
                    key = tuple(
                        maps[sketch.tgt(proj)][leg_spec.act(proj, e)]
                        for proj in cone.projections)
                    pm[e] = derived_tuples[point][key]
                maps[point] = pm
            else:
                maps[point] = {e: apex_name(point, side, e)
                               for e in leg_spec.carrier(point)}
        return SpecMorphism(leg_spec, apex, maps)

    into_left = injection(b_spec, "left")
    into_right = injection(c_spec, "right")
    return PushoutResult(apex=apex, into_left=into_left, into_right=into_right,
                         provenance=provenance)


def amalgamate(specs, sharing) -> Specification:
    """Wide pushout of the legs over their common interface.

    ``sharing[i]`` must be a morphism from one shared interface
    specification into ``specs[i]``.  Computed by iterated binary
    pushout; the result is independent of the order up to isomorphism.
    """
    specs = list(specs)
    sharing = list(sharing)
    if not specs:
        raise ValueError("nothing to amalgamate")
    if len(specs) != len(sharing):
        raise ValueError("one sharing morphism per specification is required")
    interface = sharing[0].source
    for leg in sharing:
        if leg.source != interface:
            raise ValueError("sharing morphisms must have a common source")
        if check_spec_morphism(leg):
            raise ValueError("sharing leg is not a specification morphism")
    acc = specs[0]
    acc_leg = sharing[0]
    from .spec import compose_morphisms
    for spec, leg in zip(specs[1:], sharing[1:]):
        result = pushout(acc_leg, leg)
        acc = result.apex
        acc_leg = compose_morphisms(result.into_left, acc_leg)
    return acc


def mediating_morphism(result: PushoutResult, u: SpecMorphism,
                       v: SpecMorphism) -> SpecMorphism:
    """The unique mediator apex -> D for a commuting cocone (u, v)."""
    apex = result.apex
    sketch = apex.sketch
    derived = sketch.derived_points
    maps = {}
    for point in sketch.points:
        if point in derived:
            continue
        pm = {}
        for name, group in result.provenance[point].items():
            values = set()
            for side, e in group:
                leg = u if side == "left" else v
                values.add(leg.of(point, e))
            if len(values) != 1:
                raise PushoutError("cocone does not commute; no mediator exists")
            pm[name] = values.pop()
        maps[point] = pm
    for cone in sketch.cones:
        if not cone.derived:
            continue
        pm = {}
        # a derived element is determined by its projections
        tgt_index = {}
        for e in u.target.carrier(cone.apex):
            key = tuple(u.target.act(p, e) for p in cone.projections)
            tgt_index[key] = e
        for e in apex.carrier(cone.apex):
            key = tuple(maps[sketch.tgt(p)][apex.act(p, e)]
                        for p in cone.projections)
            pm[e] = tgt_index[key]
        maps[cone.apex] = pm
    mediator = SpecMorphism(apex, u.target, maps)
    problems = check_spec_morphism(mediator)
    if problems:
        raise PushoutError("constructed mediator is not a morphism: "
                           + "; ".join(problems))
    return mediator


def count_mediators(result: PushoutResult, u: SpecMorphism,
                    v: SpecMorphism) -> int:
    """Brute-force count of mediators, for universal-property tests."""
    from .spec import compose_morphisms
    count = 0
    for h in find_homomorphisms(result.apex, u.target):
        if compose_morphisms(h, result.into_left).maps == u.maps and \
           compose_morphisms(h, result.into_right).maps == v.maps:
            count += 1
    return count
