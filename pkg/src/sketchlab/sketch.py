"""Finite limit sketches and their morphisms.

A sketch is a named graph with *potential* identities, composites and
limit cones.  Nothing is computed here beyond validation; the free
category a sketch generates lives in :mod:`sketchlab.category`.
"""

from __future__ import annotations

from dataclasses import dataclass, field


TERMINAL = "terminal"
PRODUCT = "product"
PULLBACK = "pullback"

CONE_SHAPES = (TERMINAL, PRODUCT, PULLBACK)


@dataclass(frozen=True)
class Cone:
    """A potential limit cone.

    ``base_points`` lists the factor points for a product, or the
    cospan ``(P, Q, R)`` for a pullback (with ``base_arrows = (f, g)``,
    ``f: P -> R`` and ``g: Q -> R``).  ``projections`` are the arrows
    out of the apex, one per non-terminal base point.  A ``derived``
    apex has its carrier recomputed from the base instead of stored.
    """

    name: str
    apex: str
    shape: str
    base_points: tuple[str, ...] = ()
    base_arrows: tuple[str, ...] = ()
    projections: tuple[str, ...] = ()
    derived: bool = False


@dataclass(frozen=True)
class LimitSketch:
    name: str
    points: tuple[str, ...]
    arrows: dict[str, tuple[str, str]] = field(default_factory=dict)
    identities: frozenset[tuple[str, str]] = frozenset()
    composites: frozenset[tuple[str, str, str]] = frozenset()
    cones: tuple[Cone, ...] = ()

    def src(self, arrow: str) -> str:
        return self.arrows[arrow][0]

    def tgt(self, arrow: str) -> str:
        return self.arrows[arrow][1]

    def arrows_from(self, point: str) -> list[str]:
        return sorted(a for a, (s, _) in self.arrows.items() if s == point)

    def arrows_into(self, point: str) -> list[str]:
        return sorted(a for a, (_, t) in self.arrows.items() if t == point)

    def cone_at(self, apex: str) -> Cone | None:
        for cone in self.cones:
            if cone.apex == apex:
                return cone
        return None

    @property
    def derived_points(self) -> frozenset[str]:
        return frozenset(c.apex for c in self.cones if c.derived)

    def composites_of(self, arrow: str) -> list[tuple[str, str]]:
        """Declared decompositions ``arrow = g . f`` as ``(f, g)`` pairs."""
        return sorted((f, g) for (h, f, g) in self.composites if h == arrow)


def make_sketch(name, points, arrows, identities=(), composites=(), cones=()):
    """Convenience constructor from plain containers."""
    return LimitSketch(
        name=name,
        points=tuple(points),
        arrows=dict(arrows),
        identities=frozenset(tuple(i) for i in identities),
        composites=frozenset(tuple(c) for c in composites),
        cones=tuple(cones),
    )


def validate_sketch(sketch: LimitSketch) -> list[str]:
    """Return one diagnostic per invariant violation, empty when valid."""
    out = []
    points = set(sketch.points)
    if len(sketch.points) != len(points):
        out.append("duplicate point names")

    for a, (s, t) in sorted(sketch.arrows.items()):
        if s not in points:
            out.append(f"arrow {a}: undeclared source point {s}")
        if t not in points:
            out.append(f"arrow {a}: undeclared target point {t}")

    for (a, p) in sorted(sketch.identities):
        if a not in sketch.arrows:
            out.append(f"identity ({a}, {p}): undeclared arrow {a}")
        elif p not in points:
            out.append(f"identity ({a}, {p}): undeclared point {p}")
        elif sketch.arrows[a] != (p, p):
            out.append(f"identity ({a}, {p}): arrow is not an endo-arrow of {p}")

    for (h, f, g) in sorted(sketch.composites):
        missing = [x for x in (h, f, g) if x not in sketch.arrows]
        if missing:
            out.append(f"composite ({h}, {f}, {g}): undeclared arrows {missing}")
            continue
        if sketch.tgt(f) != sketch.src(g):
            out.append(f"composite ({h}, {f}, {g}): composite endpoint mismatch "
                       f"(target of {f} is {sketch.tgt(f)}, source of {g} is {sketch.src(g)})")
        if sketch.src(h) != sketch.src(f):
            out.append(f"composite ({h}, {f}, {g}): source of {h} differs from source of {f}")
        if sketch.tgt(h) != sketch.tgt(g):
            out.append(f"composite ({h}, {f}, {g}): target of {h} differs from target of {g}")

    seen_cone_names = set()
    seen_apexes = set()
    for cone in sketch.cones:
        if cone.name in seen_cone_names:
            out.append(f"cone {cone.name}: duplicate cone name")
        seen_cone_names.add(cone.name)
        if cone.apex in seen_apexes:
            out.append(f"cone {cone.name}: apex {cone.apex} already carries a cone")
        seen_apexes.add(cone.apex)
        out.extend(_validate_cone(sketch, cone, points))
    return out


def _validate_cone(sketch, cone, points):
    out = []
    tag = f"cone {cone.name}"
    if cone.shape not in CONE_SHAPES:
        return [f"{tag}: unsupported shape {cone.shape}"]
    if cone.apex not in points:
        out.append(f"{tag}: undeclared apex {cone.apex}")
        return out
    for p in cone.base_points:
        if p not in points:
            out.append(f"{tag}: undeclared base point {p}")
    for a in cone.base_arrows + cone.projections:
        if a not in sketch.arrows:
            out.append(f"{tag}: undeclared arrow {a}")
    if out:
        return out

    if cone.shape == TERMINAL:
        if cone.base_points or cone.base_arrows or cone.projections:
            out.append(f"{tag}: terminal cone must have empty base and no projections")
        return out

    if cone.shape == PRODUCT:
        if cone.base_arrows:
            out.append(f"{tag}: product base must be discrete")
        legs = cone.base_points
    else:  # pullback: base_points = (P, Q, R), base_arrows = (f: P->R, g: Q->R)
        if len(cone.base_points) != 3 or len(cone.base_arrows) != 2:
            return [f"{tag}: pullback base must be a cospan (P, Q, R) with two arrows"]
        p, q, r = cone.base_points
        f, g = cone.base_arrows
        if sketch.arrows[f] != (p, r):
            out.append(f"{tag}: base arrow {f} is not {p} -> {r}")
        if sketch.arrows[g] != (q, r):
            out.append(f"{tag}: base arrow {g} is not {q} -> {r}")
        legs = (p, q)

    if len(cone.projections) != len(legs):
        out.append(f"{tag}: expected {len(legs)} projections, got {len(cone.projections)}")
        return out
    for proj, leg in zip(cone.projections, legs):
        if sketch.src(proj) != cone.apex:
            out.append(f"{tag}: projection {proj} does not start at apex {cone.apex}")
        if sketch.tgt(proj) != leg:
            out.append(f"{tag}: projection {proj} does not land in base point {leg}")

    if cone.derived:
        out.extend(_validate_derived_apex(sketch, cone))
    return out


def _validate_derived_apex(sketch, cone):
    """A derived apex must be fully determined by its projections.

    Every non-projection arrow leaving the apex is forbidden, and every
    arrow into the apex needs a declared composite with each projection
    so its action can be recomputed componentwise.
    """
    out = []
    tag = f"cone {cone.name}"
    projs = set(cone.projections)
    for a in sketch.arrows_from(cone.apex):
        if a not in projs:
            out.append(f"{tag}: derived apex has non-projection outgoing arrow {a}")
    for a in sketch.arrows_into(cone.apex):
        if a in projs and sketch.src(a) == sketch.tgt(a):
            continue
        for proj in cone.projections:
            if not any(f == a and g == proj for (_, f, g) in sketch.composites):
                out.append(f"{tag}: arrow {a} into derived apex lacks a declared "
                           f"composite with projection {proj}")
    return out


@dataclass(frozen=True)
class SketchMorphism:
    source: LimitSketch
    target: LimitSketch
    point_map: dict[str, str]
    arrow_map: dict[str, str]

    def p(self, point: str) -> str:
        return self.point_map[point]

    def a(self, arrow: str) -> str:
        return self.arrow_map[arrow]


def identity_sketch_morphism(sketch: LimitSketch) -> SketchMorphism:
    return SketchMorphism(
        source=sketch,
        target=sketch,
        point_map={p: p for p in sketch.points},
        arrow_map={a: a for a in sketch.arrows},
    )


def check_sketch_morphism(m: SketchMorphism) -> list[str]:
    out = []
    src, tgt = m.source, m.target
    for p in src.points:
        if p not in m.point_map:
            out.append(f"point {p} has no image")
        elif m.point_map[p] not in set(tgt.points):
            out.append(f"point {p} maps to undeclared point {m.point_map[p]}")
    for a in src.arrows:
        if a not in m.arrow_map:
            out.append(f"arrow {a} has no image")
        elif m.arrow_map[a] not in tgt.arrows:
            out.append(f"arrow {a} maps to undeclared arrow {m.arrow_map[a]}")
    if out:
        return out

    for a, (s, t) in sorted(src.arrows.items()):
        img = m.arrow_map[a]
        if tgt.src(img) != m.point_map[s]:
            out.append(f"arrow {a}: source not preserved")
        if tgt.tgt(img) != m.point_map[t]:
            out.append(f"arrow {a}: target not preserved")

    for (a, p) in sorted(src.identities):
        if (m.arrow_map[a], m.point_map[p]) not in tgt.identities:
            out.append(f"identity ({a}, {p}) not preserved")
    for (h, f, g) in sorted(src.composites):
        image = (m.arrow_map[h], m.arrow_map[f], m.arrow_map[g])
        if image not in tgt.composites:
            out.append(f"composite ({h}, {f}, {g}) not preserved")

    tgt_cones = {}
    for cone in tgt.cones:
        tgt_cones[cone.apex] = cone
    for cone in src.cones:
        image_apex = m.point_map[cone.apex]
        img = tgt_cones.get(image_apex)
        if img is None:
            out.append(f"cone {cone.name}: image apex {image_apex} carries no cone")
            continue
        if img.shape != cone.shape:
            out.append(f"cone {cone.name}: image cone has shape {img.shape}, "
                       f"expected {cone.shape}")
            continue
        if tuple(m.point_map[p] for p in cone.base_points) != img.base_points:
            out.append(f"cone {cone.name}: base points not preserved")
        if tuple(m.arrow_map[a] for a in cone.base_arrows) != img.base_arrows:
            out.append(f"cone {cone.name}: base arrows not preserved")
        if tuple(m.arrow_map[a] for a in cone.projections) != img.projections:
            out.append(f"cone {cone.name}: projections not preserved")
    return out
