"""Bounded free-category generation and Yoneda representables.

Arrows of the generated category are equivalence classes of composable
words of sketch arrows, up to the sketch's declared identity and
composite equations.  The quotient is a congruence closure over all
words of length <= the depth budget; every identification is backed by
a chain of single rewrite steps that can be replayed (see
:func:`PresentedCategory.explain`).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .sketch import LimitSketch, validate_sketch

COMPOSE_SIGN = "∘"  # ∘


class TruncationError(Exception):
    """A hom-set needed in full was cut off by the depth budget."""


def word_name(point: str, word: tuple[str, ...]) -> str:
    if not word:
        return f"id_{point}"
    return COMPOSE_SIGN.join(reversed(word))


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # keep the shortlex-least representative as root
            if _shortlex_key(rb) < _shortlex_key(ra):
                ra, rb = rb, ra
            self.parent[rb] = ra


def _shortlex_key(key):
    point, word = key
    return (len(word), word, point)


@dataclass
class ArrowClass:
    rep: tuple[str, tuple[str, ...]]  # (source point, canonical word)
    source: str
    target: str
    name: str
    members: tuple[tuple[str, tuple[str, ...]], ...]
    truncated: bool


class PresentedCategory:
    """Finite presentation of the category a sketch generates.

    Composition is partial: composing two classes whose concatenated
    word exceeds the budget returns ``None`` (an explicit truncation,
    never a silent wrong answer).
    """

    def __init__(self, sketch, budget, classes, class_of, edges):
        self.sketch = sketch
        self.budget = budget
        self.objects = tuple(sketch.points)
        self.classes = classes            # rep key -> ArrowClass
        self._class_of = class_of         # word key -> rep key
        self._edges = edges               # word key -> [(word key, reason)]

    def class_of(self, point, word):
        return self._class_of.get((point, tuple(word)))

    def arrow_class(self, point, word):
        rep = self.class_of(point, word)
        return None if rep is None else self.classes[rep]

    def identity(self, point):
        return self.classes[(point, ())]

    def hom(self, source, target):
        return sorted(
            (c for c in self.classes.values()
             if c.source == source and c.target == target),
            key=lambda c: _shortlex_key(c.rep),
        )

    def compose(self, first: ArrowClass, then: ArrowClass) -> ArrowClass | None:
        """Class of ``then`` after ``first``; None when out of budget."""
        if first.target != then.source:
            raise ValueError("classes are not composable")
        point, word = first.rep
        combined = word + then.rep[1]
        if len(combined) > self.budget:
            return None
        rep = self.class_of(point, combined)
        return None if rep is None else self.classes[rep]

    @property
    def truncated(self) -> bool:
        return any(c.truncated for c in self.classes.values())

    def explain(self, key_a, key_b):
        """Replayable chain of rewrite steps identifying two words.

        Returns a list of ``(word_key, word_key, reason)`` edges, or
        None when the words are not identified.
        """
        key_a = (key_a[0], tuple(key_a[1]))
        key_b = (key_b[0], tuple(key_b[1]))
        if key_a == key_b:
            return []
        prev = {key_a: None}
        queue = deque([key_a])
        while queue:
            cur = queue.popleft()
            for nxt, reason in self._edges.get(cur, ()):
                if nxt not in prev:
                    prev[nxt] = (cur, reason)
                    if nxt == key_b:
                        steps = []
                        node = key_b
                        while prev[node] is not None:
                            parent, why = prev[node]
                            steps.append((parent, node, why))
                            node = parent
                        steps.reverse()
                        return steps
                    queue.append(nxt)
        return None


def generate_category(sketch: LimitSketch, depth_budget: int) -> PresentedCategory:
    if depth_budget < 1:
        raise ValueError("depth budget must be positive")
    problems = validate_sketch(sketch)
    if problems:
        raise ValueError("invalid sketch: " + "; ".join(problems))

    identity_arrows = {a for (a, _) in sketch.identities}

    # enumerate all composable words of length <= budget
    words = []
    by_point = {p: [()] for p in sketch.points}
    frontier = {p: [()] for p in sketch.points}
    for p in sketch.points:
        words.append((p, ()))
    for _ in range(depth_budget):
        new_frontier = {p: [] for p in sketch.points}
        for p in sketch.points:
            for word in frontier[p]:
                end = sketch.tgt(word[-1]) if word else p
                for a in sketch.arrows_from(end):
                    grown = word + (a,)
                    words.append((p, grown))
                    new_frontier[p].append(grown)
                    by_point[p].append(grown)
        frontier = new_frontier

    uf = _UnionFind()
    edges: dict = {}
    for key in words:
        uf.add(key)

    def connect(k1, k2, reason):
        uf.union(k1, k2)
        edges.setdefault(k1, []).append((k2, reason))
        edges.setdefault(k2, []).append((k1, reason))

    decomposition = {}
    for (h, f, g) in sketch.composites:
        decomposition.setdefault((f, g), []).append(h)

    for (point, word) in words:
        if not word:
            continue
        for i, a in enumerate(word):
            if a in identity_arrows:
                shrunk = word[:i] + word[i + 1:]
                connect((point, word), (point, shrunk), ("identity", a))
        for i in range(len(word) - 1):
            for h in decomposition.get((word[i], word[i + 1]), ()):
                shrunk = word[:i] + (h,) + word[i + 2:]
                connect((point, word), (point, shrunk), ("composite", (h, word[i], word[i + 1])))

    members_by_root: dict = {}
    for key in words:
        members_by_root.setdefault(uf.find(key), []).append(key)

    classes = {}
    class_of = {}
    for root, members in members_by_root.items():
        members.sort(key=_shortlex_key)
        rep = members[0]
        point, word = rep
        target = sketch.tgt(word[-1]) if word else point
        min_len = len(word)
        truncated = (
            min_len == depth_budget
            and bool(sketch.arrows_from(target))
        )
        cls = ArrowClass(
            rep=rep,
            source=point,
            target=target,
            name=word_name(point, word),
            members=tuple(members),
            truncated=truncated,
        )
        classes[rep] = cls
        for member in members:
            class_of[member] = rep

    return PresentedCategory(sketch, depth_budget, classes, class_of, edges)


@dataclass
class RepresentableResult:
    spec: "Specification"
    diagnostics: list[str]


def representable(sketch: LimitSketch, point: str, depth_budget: int) -> RepresentableResult:
    """The Yoneda realization at ``point``: carriers are hom-sets out of it."""
    from .spec import Specification, check_cones

    if point not in sketch.points:
        raise ValueError(f"undeclared point {point}")
    cat = generate_category(sketch, depth_budget)

    from_point = [c for c in cat.classes.values() if c.source == point]
    for c in from_point:
        if c.truncated:
            raise TruncationError(
                f"hom-set from {point} is truncated at budget {depth_budget} "
                f"(class {c.name}); the representable would be under-approximated")

    carriers = {}
    for q in sketch.points:
        carriers[q] = tuple(c.name for c in cat.hom(point, q))

    name_of = {c.rep: c.name for c in from_point}
    actions = {}
    for a, (s, t) in sketch.arrows.items():
        action = {}
        for c in cat.hom(point, s):
            extended = cat.class_of(point, c.rep[1] + (a,))
            if extended is None:
                raise TruncationError(
                    f"action of {a} leaves the budget at element {c.name}")
            action[c.name] = name_of[extended]
        actions[a] = action

    spec = Specification(sketch=sketch, carriers=carriers, actions=actions)
    diagnostics = check_cones(spec)
    return RepresentableResult(spec=spec, diagnostics=diagnostics)
