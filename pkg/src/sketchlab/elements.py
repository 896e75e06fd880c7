"""Categories of elements of finite set-valued functors.

A :class:`CategoryView` is a small category given by tables: objects,
arrows, identities, and a total composition table.  It can be read off
a generated free category (when nothing is truncated) or off an
equational specification whose composition and identity records are
total and functional.

Given a functor ``P`` assigning a finite set to each object and a
function to each arrow, :func:`category_of_elements` builds the
category whose objects are pairs ``(X, x)`` with ``x ∈ P(X)`` and
whose arrows are lifts ``(f, x): (X, x) -> (Y, P f (x))``.  The
projection back to the base forgets the second component; every arrow
lifts uniquely from every element of its source fiber.
"""

from __future__ import annotations

from dataclasses import dataclass

from .category import PresentedCategory, TruncationError
from .spec import Specification


@dataclass(frozen=True)
class CategoryView:
    objects: tuple[str, ...]
    arrows: dict[str, tuple[str, str]]
    identity: dict[str, str]                  # object -> identity arrow
    table: dict[tuple[str, str], str]         # (f, g) -> g∘f

    def src(self, arrow: str) -> str:
        return self.arrows[arrow][0]

    def tgt(self, arrow: str) -> str:
        return self.arrows[arrow][1]

    def compose(self, f: str, g: str) -> str:
        """``g`` after ``f``."""
        return self.table[(f, g)]


def check_category_view(view: CategoryView) -> list[str]:
    out = []
    for a, (s, t) in sorted(view.arrows.items()):
        if s not in view.objects or t not in view.objects:
            out.append(f"arrow {a}: undeclared endpoint")
    for x in view.objects:
        if x not in view.identity:
            out.append(f"object {x}: no identity arrow")
        elif view.arrows.get(view.identity[x]) != (x, x):
            out.append(f"object {x}: identity arrow is not an endo-arrow")
    if out:
        return out
    for f, (fs, ft) in sorted(view.arrows.items()):
        for g, (gs, gt) in sorted(view.arrows.items()):
            if gs != ft:
                continue
            if (f, g) not in view.table:
                out.append(f"composition table misses ({f}, {g})")
                continue
            h = view.table[(f, g)]
            if view.arrows.get(h) != (fs, gt):
                out.append(f"composite of ({f}, {g}) has wrong endpoints")
    if out:
        return out
    for x in view.objects:
        i = view.identity[x]
        for f, (fs, ft) in sorted(view.arrows.items()):
            if fs == x and view.table[(i, f)] != f:
                out.append(f"left unit law fails at ({i}, {f})")
            if ft == x and view.table[(f, i)] != f:
                out.append(f"right unit law fails at ({f}, {i})")
    for f in sorted(view.arrows):
        for g in sorted(view.arrows):
            if view.src(g) != view.tgt(f):
                continue
            for h in sorted(view.arrows):
                if view.src(h) != view.tgt(g):
                    continue
                if view.table[(view.table[(f, g)], h)] != \
                        view.table[(f, view.table[(g, h)])]:
                    out.append(f"associativity fails at ({f}, {g}, {h})")
    return out


def view_from_presented(cat: PresentedCategory) -> CategoryView:
    """Read a generated free category as tables; truncation is an error."""
    if cat.truncated:
        raise TruncationError("cannot tabulate a truncated category")
    classes = sorted(cat.classes.values(), key=lambda c: (c.name, c.rep))
    arrows = {c.name: (c.source, c.target) for c in classes}
    identity = {p: cat.identity(p).name for p in cat.objects}
    table = {}
    for f in classes:
        for g in classes:
            if g.source != f.target:
                continue
            h = cat.compose(f, g)
            if h is None:
                raise TruncationError(
                    f"composite of {f.name} and {g.name} leaves the budget")
            table[(f.name, g.name)] = h.name
    return CategoryView(objects=tuple(cat.objects), arrows=arrows,
                        identity=identity, table=table)


def view_from_spec(spec: Specification) -> CategoryView:
    """Read an equational specification as a category.

    Objects are the types, arrows the terms; identities come from the
    identity records (exactly one per type required) and composition
    from the composition records (exactly one per composable pair).
    """
    objects = spec.carrier("Type")
    arrows = {t: (spec.act("dom", t), spec.act("cod", t))
              for t in spec.carrier("Term")}
    problems = []
    identity = {}
    for i in spec.carrier("Id"):
        x = spec.act("id_type", i)
        term = spec.act("id_term", i)
        if x in identity and identity[x] != term:
            problems.append(f"type {x}: conflicting identity records")
        identity[x] = term
    for x in objects:
        if x not in identity:
            problems.append(f"type {x}: no identity record")
    table = {}
    for c in spec.carrier("Cmp"):
        key = (spec.act("c_fst", c), spec.act("c_snd", c))
        res = spec.act("c_res", c)
        if key in table and table[key] != res:
            problems.append(f"pair {key}: conflicting composition records")
        table[key] = res
    for f, (_, ft) in sorted(arrows.items()):
        for g, (gs, _) in sorted(arrows.items()):
            if gs == ft and (f, g) not in table:
                problems.append(f"pair ({f}, {g}): no composition record")
    if problems:
        raise ValueError("specification is not a category: "
                         + "; ".join(problems))
    view = CategoryView(objects=objects, arrows=arrows,
                        identity=identity, table=table)
    problems = check_category_view(view)
    if problems:
        raise ValueError("specification is not a category: "
                         + "; ".join(problems))
    return view


@dataclass(frozen=True)
class SetFunctor:
    """Finite set-valued functor data over a CategoryView."""
    objects: dict[str, tuple[str, ...]]       # object -> fiber elements
    arrows: dict[str, dict[str, str]]         # arrow -> element map


def check_functor(view: CategoryView, p: SetFunctor) -> list[str]:
    out = []
    for x in view.objects:
        if x not in p.objects:
            out.append(f"object {x}: no fiber")
    for a, (s, t) in sorted(view.arrows.items()):
        fn = p.arrows.get(a)
        if fn is None:
            out.append(f"arrow {a}: no function")
            continue
        for e in p.objects.get(s, ()):
            if e not in fn:
                out.append(f"arrow {a}: undefined on {e}")
            elif fn[e] not in p.objects.get(t, ()):
                out.append(f"arrow {a}: maps {e} outside the fiber of {t}")
    if out:
        return out
    for x in view.objects:
        i = view.identity[x]
        for e in p.objects[x]:
            if p.arrows[i][e] != e:
                out.append(f"identity {i} moves {e}")
    for (f, g), h in sorted(view.table.items()):
        for e in p.objects[view.src(f)]:
            if p.arrows[h][e] != p.arrows[g][p.arrows[f][e]]:
                out.append(f"functoriality fails: P({h}) != P({g})∘P({f}) at {e}")
    return out


@dataclass(frozen=True)
class ElementsCategory:
    base: CategoryView
    functor: SetFunctor
    objects: tuple[tuple[str, str], ...]              # (X, x)
    arrows: dict[tuple[str, str], tuple[tuple[str, str], tuple[str, str]]]

    def lift(self, arrow: str, elem: str) -> tuple[str, str]:
        """The unique lift of ``arrow`` starting at fiber element ``elem``."""
        key = (arrow, elem)
        if key not in self.arrows:
            raise KeyError(f"no lift of {arrow} at {elem}")
        return key

    def lifts_of(self, arrow: str) -> list[tuple[str, str]]:
        return sorted(k for k in self.arrows if k[0] == arrow)

    def project_object(self, obj: tuple[str, str]) -> str:
        return obj[0]

    def project_arrow(self, arrow: tuple[str, str]) -> str:
        return arrow[0]

    def compose(self, first: tuple[str, str],
                second: tuple[str, str]) -> tuple[str, str]:
        """``second`` after ``first``; lifts compose as their bases do."""
        if self.arrows[first][1] != self.arrows[second][0]:
            raise ValueError("lifts are not composable")
        return (self.base.compose(first[0], second[0]), first[1])


def category_of_elements(view: CategoryView, p: SetFunctor) -> ElementsCategory:
    problems = check_category_view(view)
    if problems:
        raise ValueError("base is not a category: " + "; ".join(problems))
    problems = check_functor(view, p)
    if problems:
        raise ValueError("functor data invalid: " + "; ".join(problems))
    objects = tuple((x, e) for x in view.objects for e in p.objects[x])
    arrows = {}
    for a, (s, t) in sorted(view.arrows.items()):
        for e in p.objects[s]:
            arrows[(a, e)] = ((s, e), (t, p.arrows[a][e]))
    return ElementsCategory(base=view, functor=p, objects=objects,
                            arrows=arrows)
