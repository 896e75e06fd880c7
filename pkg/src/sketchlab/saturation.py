"""Bounded saturation: the free-theory chase.

Rules are applied in declaration order, matches in the deterministic
homomorphism order, each (rule, match) pair at most once.  A match
whose conclusion is already present (the restricted-chase check) is a
no-op; a match whose fresh elements would exceed the structural depth
cap is skipped and flagged.  The run stops at a fixpoint, or reports
truncation when the step budget runs out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .logic import DiagrammaticLogic, Rule
from .pushout import pushout
from .spec import (Specification, SpecMorphism, compose_morphisms,
                   find_homomorphisms, identity_morphism)

FIXPOINT = "fixpoint"
TRUNCATED = "truncated"

_EMPTY = frozenset()

DEFAULT_BUDGET = 10000
DEFAULT_DEPTH_CAP = 4


@dataclass
class SaturationResult:
    spec: Specification
    status: str
    steps: int
    depth_skipped: bool
    inclusion: SpecMorphism           # start -> result
    trace: list = field(default_factory=list)

    @property
    def reached_fixpoint(self) -> bool:
        return self.status == FIXPOINT


def structural_depths(spec: Specification, witnesses) -> dict:
    """Least-fixpoint depth of every element of a witnessed point.

    Unwitnessed elements are generators (depth 1); witnessed ones take
    the cheapest derivation their witness records offer.  Elements
    only witnessed circularly stay at infinity, which conservatively
    blocks building on top of them.
    """
    sketch = spec.sketch
    tracked = set()
    for w in witnesses:
        tracked.add(sketch.tgt(w.result_arrow))

    depth = {}
    witnessed = set()
    for w in witnesses:
        for r in spec.carrier(w.point):
            witnessed.add((sketch.tgt(w.result_arrow), spec.act(w.result_arrow, r)))
    for point in tracked:
        for e in spec.carrier(point):
            depth[(point, e)] = 1 if (point, e) not in witnessed else math.inf

    def component_depth(point, elem):
        return depth.get((point, elem), 1)

    changed = True
    while changed:
        changed = False
        for w in witnesses:
            result_point = sketch.tgt(w.result_arrow)
            for r in spec.carrier(w.point):
                total = w.offset
                for ca in w.component_arrows:
                    if ca is None:
                        total += component_depth(w.point, r)
                    else:
                        total += component_depth(sketch.tgt(ca), spec.act(ca, r))
                key = (result_point, spec.act(w.result_arrow, r))
                if total < depth[key]:
                    depth[key] = total
                    changed = True
    return depth


class _PreimageIndex:
    """Incrementally maintained arrow preimages of a growing spec."""

    def __init__(self, spec: Specification):
        self.index = {a: {} for a in spec.sketch.arrows}
        self.known = {p: set() for p in spec.sketch.points}
        # out_arrows fixes a per-point arrow order; profiles collects the
        # image tuple of every element under it, for O(1) presence tests
        self.out_arrows = {p: tuple(sorted(spec.sketch.arrows_from(p)))
                           for p in spec.sketch.points}
        self.profiles = {p: set() for p in spec.sketch.points}
        self.extend(spec)

    def extend(self, spec: Specification):
        for p in spec.sketch.points:
            known = self.known[p]
            profile = self.profiles[p]
            arrows = self.out_arrows[p]
            for e in spec.carrier(p):
                if e in known:
                    continue
                for a in arrows:
                    self.index[a].setdefault(spec.act(a, e), set()).add(e)
                profile.add(tuple(spec.act(a, e) for a in arrows))
            known.update(spec.carrier(p))

    def add_cells(self, spec: Specification, cells):
        """Index freshly added elements without rescanning the spec."""
        for p, e in cells:
            arrows = self.out_arrows[p]
            for a in arrows:
                self.index[a].setdefault(spec.act(a, e), set()).add(e)
            self.profiles[p].add(tuple(spec.act(a, e) for a in arrows))
            self.known[p].add(e)

    def preimages(self, arrow, value):
        return self.index[arrow].get(value, ())


class _RulePrep:
    """Match-independent data reused across every application of a rule."""

    def __init__(self, rule: Rule, witnesses):
        inter = rule.intermediate
        sketch = inter.sketch
        image = {p: {rule.tau.of(p, e) for e in rule.hypothesis.carrier(p)}
                 for p in rule.hypothesis.sketch.points}
        # elements of the intermediate spec outside the hypothesis image
        self.created = [(p, e)
                        for p in sorted(sketch.points)
                        for e in inter.carrier(p)
                        if e not in image[p]]
        self.created_set = set(self.created)
        # intermediate element -> the hypothesis element tau sends there
        self.tau_pre = {}
        for p in sketch.points:
            for e in rule.hypothesis.carrier(p):
                self.tau_pre[(p, rule.tau.of(p, e))] = e
        # presence search assigns the best-constrained elements first
        cs = self.created_set
        self.ordered = sorted(
            self.created,
            key=lambda pe: (-sum(1 for a in sketch.arrows_from(pe[0])
                                 if (sketch.tgt(a),
                                     inter.act(a, pe[1])) not in cs),
                            pe))
        self.tracked = {sketch.tgt(w.result_arrow) for w in witnesses}
        self.witnessed = set()
        for w in witnesses:
            for r in inter.carrier(w.point):
                self.witnessed.add((sketch.tgt(w.result_arrow),
                                    inter.act(w.result_arrow, r)))
        self.depth_template = {
            pe: (math.inf if pe in self.witnessed else 1)
            for pe in self.created if pe[0] in self.tracked}
        # rules creating nothing depth-tracked can skip the cap check
        self.tracks_depth = bool(self.depth_template)
        # a rule creating one loop-free cell admits a non-backtracking
        # presence check: intersect the arrow preimage sets directly
        self.single = None
        if len(self.created) == 1:
            point, elem = self.created[0]
            outs, ins = [], []
            simple = True
            for a in sorted(sketch.arrows_from(point)):
                t, v = sketch.tgt(a), inter.act(a, elem)
                if (t, v) == (point, elem):
                    simple = False
                    break
                outs.append((a, t, self.tau_pre[(t, v)]))
            if simple:
                for a in sketch.arrows_into(point):
                    sp = sketch.src(a)
                    for x in inter.carrier(sp):
                        if inter.act(a, x) != elem or (sp, x) == (point, elem):
                            continue
                        ins.append((a, sp, self.tau_pre[(sp, x)]))
                self.single = (point, outs, ins)


def _conclusion_present(rule, prep, match, current, index) -> bool:
    """Restricted-chase check: does the match extend to the intermediate?"""
    if prep.single is not None:
        point, outs, ins = prep.single
        maps = match.maps
        if not ins:
            # outs follows the index's per-point arrow order, so the
            # profile set answers presence in one lookup
            return tuple(maps[tp][te] for _a, tp, te in outs) \
                in index.profiles[point]
        cands = None
        for a, tp, te in outs:
            pool = index.index[a].get(match.maps[tp][te], _EMPTY)
            cands = pool if cands is None else cands & pool
            if not cands:
                return False
        for a, sp, se in ins:
            forced = current.act(a, match.maps[sp][se])
            if cands is None:
                cands = {forced} if forced in current.carrier(point) else set()
            elif forced in cands:
                cands = {forced}
            else:
                return False
        if cands is None:
            return bool(current.carrier(point))
        return bool(cands)
    sketch = rule.intermediate.sketch
    inter = rule.intermediate
    created_set = prep.created_set
    tau_pre = prep.tau_pre

    def image_of(point, elem, assignment):
        if (point, elem) in created_set:
            return assignment.get((point, elem))
        return match.of(point, tau_pre[(point, elem)])

    def search(remaining, assignment):
        if not remaining:
            return True
        point, elem = remaining[0]
        candidates = None
        for a in sketch.arrows_from(point):
            target_img = image_of(sketch.tgt(a), inter.act(a, elem), assignment)
            if target_img is None:
                continue
            pool = index.preimages(a, target_img)
            candidates = set(pool) if candidates is None else candidates & set(pool)
            if not candidates:
                return False
        for a in sketch.arrows_into(point):
            src_point = sketch.src(a)
            for x in inter.carrier(src_point):
                if inter.act(a, x) != elem:
                    continue
                x_img = image_of(src_point, x, assignment)
                if x_img is not None:
                    forced = current.act(a, x_img)
                    candidates = {forced} if candidates is None \
                        else candidates & {forced}
                    if not candidates:
                        return False
        if candidates is None:
            candidates = set(current.carrier(point))
        for value in sorted(candidates):
            assignment[(point, elem)] = value
            if search(remaining[1:], assignment):
                return True
            del assignment[(point, elem)]
        return False

    return search(prep.ordered, {})


def _created_depths(rule, prep, match, depths, witnesses):
    """Structural depth each fresh element would get, given the match."""
    if not prep.tracks_depth:
        return {}
    sketch = rule.intermediate.sketch
    inter = rule.intermediate
    created_set = prep.created_set
    tau_pre = prep.tau_pre
    result = dict(prep.depth_template)

    def host_depth(point, elem):
        # depth of an intermediate element: fresh ones from `result`,
        # hypothesis-image ones from the ambient spec's depth table
        if (point, elem) in created_set:
            return result.get((point, elem), 1)
        return depths.get((point, match.of(point, tau_pre[(point, elem)])), 1)

    changed = True
    while changed:
        changed = False
        for w in witnesses:
            result_point = sketch.tgt(w.result_arrow)
            for r in inter.carrier(w.point):
                key = (result_point, inter.act(w.result_arrow, r))
                if key not in result:
                    continue
                total = w.offset
                for ca in w.component_arrows:
                    if ca is None:
                        total += host_depth(w.point, r)
                    else:
                        total += host_depth(sketch.tgt(ca), inter.act(ca, r))
                if total < result[key]:
                    result[key] = total
                    changed = True
    return result


def _delta_matches(rule: Rule, current: Specification, old) -> list:
    """Matches of the hypothesis that touch an element outside ``old``.

    ``old`` maps points to the carrier sets the rule has already been
    scanned against; matches landing entirely inside them are in the
    done set already.  Decomposed by the first hypothesis cell whose
    image is new, so no match is produced twice.  Returns sorted
    (image key, maps) pairs.
    """
    from .spec import _Searcher
    searcher = _Searcher(rule.hypothesis, current)
    cells = searcher.elements
    matches = []
    for i, pivot in enumerate(cells):
        fresh = set(current.carrier(pivot[0])) - old.get(pivot[0], set())
        if not fresh:
            continue
        restrict = {c: old.get(c[0], set()) for c in cells[:i]}
        restrict[pivot] = fresh
        for assignment in searcher.solve(restrict=restrict):
            maps = {p: {} for p in rule.hypothesis.sketch.points}
            for (p, e), v in assignment.items():
                maps[p][e] = v
            matches.append((tuple(assignment[c] for c in cells), maps))
    matches.sort(key=lambda t: t[0])
    return matches


def _tau_is_injective(rule: Rule) -> bool:
    for point in rule.hypothesis.sketch.points:
        values = [rule.tau.of(point, e)
                  for e in rule.hypothesis.carrier(point)]
        if len(set(values)) != len(values):
            return False
    return True


def _extend_in_place(rule: Rule, prep, match: SpecMorphism,
                     current: Specification):
    """Fast path for an injective tau: the pushout along the match is
    the current spec plus fresh copies of the rule's created cells.

    Mutates ``current`` (the saturator's private working copy) and
    returns the fresh (point, name) cells.  Reproduces the generic
    pushout's naming exactly: existing elements keep their names
    verbatim; fresh cells take their intermediate name, suffixed
    ``#k`` on collision, assigned in sorted order.
    """
    inter = rule.intermediate
    sketch = inter.sketch
    tau_pre = prep.tau_pre
    maps = match.maps

    fresh = {}
    added = []
    by_point = {}
    for p, e in prep.created:
        by_point.setdefault(p, []).append(e)
    for p, elems in by_point.items():
        taken = set(current.carrier(p))
        for e in sorted(elems):
            name = e
            if name in taken:
                k = 1
                while f"{name}#{k}" in taken:
                    k += 1
                name = f"{name}#{k}"
            taken.add(name)
            fresh[(p, e)] = name
            added.append((p, name))
        current.carriers[p] = tuple(sorted(taken))

    def image(point, elem):
        if (point, elem) in fresh:
            return fresh[(point, elem)]
        return maps[point][tau_pre[(point, elem)]]

    for a, (s, t) in sketch.arrows.items():
        for e in by_point.get(s, ()):
            current.actions[a][fresh[(s, e)]] = image(t, inter.act(a, e))
    return added


def saturate(logic: DiagrammaticLogic, spec: Specification,
             budget: int = DEFAULT_BUDGET,
             depth_cap: int = DEFAULT_DEPTH_CAP) -> SaturationResult:
    if spec.sketch.name != logic.sketch.name:
        raise ValueError("specification is not over the logic's sketch")

    current = spec
    inclusion = identity_morphism(spec)
    done = set()          # (rule name, match key): applied, satisfied or capped
    depth_skipped = False
    steps = 0
    trace = []
    index = _PreimageIndex(current)
    preps = {r.name: _RulePrep(r, logic.depth_witnesses)
             for r in logic.rules}
    # a rule can only change existing depths when it creates elements at
    # a witnessed point; everything else defaults to depth 1 on lookup
    witness_points = {w.point for w in logic.depth_witnesses}
    refreshes_depths = {
        r.name: any(p in witness_points for p, _ in preps[r.name].created)
        for r in logic.rules
    }
    # with an injective tau and no derived points the pushout is a pure
    # extension, which _extend_with_rule builds directly and much faster
    fast_rule = {r.name: _tau_is_injective(r) for r in logic.rules} \
        if not spec.sketch.derived_points else {r.name: False
                                                for r in logic.rules}
    scanned = {}          # rule name -> carriers at its last match scan
    owned = False         # may `current` be mutated in place?

    while True:
        changed = False
        depths = structural_depths(current, logic.depth_witnesses)
        for rule in logic.rules:
            snapshot = {p: set(current.carrier(p))
                        for p in current.sketch.points}
            old = scanned.get(rule.name)
            if old is None:
                matches = [(m.key(), m.maps)
                           for m in find_homomorphisms(rule.hypothesis,
                                                       current)]
            else:
                matches = _delta_matches(rule, current, old)
            scanned[rule.name] = snapshot
            prep = preps[rule.name]
            for img, maps in matches:
                key = (rule.name, img)
                if key in done:
                    continue
                live = SpecMorphism(rule.hypothesis, current, maps)
                fresh_depths = _created_depths(rule, prep, live, depths,
                                               logic.depth_witnesses)
                if any(d > depth_cap for d in fresh_depths.values()):
                    # only flag when the capped conclusion is truly absent;
                    # once flagged, the check is no longer needed
                    if not depth_skipped and \
                            not _conclusion_present(rule, prep, live,
                                                    current, index):
                        depth_skipped = True
                    done.add(key)
                    continue
                if _conclusion_present(rule, prep, live, current, index):
                    done.add(key)
                    continue
                if fast_rule[rule.name]:
                    if not owned:
                        current = Specification(
                            sketch=current.sketch,
                            carriers=dict(current.carriers),
                            actions={a: dict(d)
                                     for a, d in current.actions.items()},
                            name=current.name)
                        owned = True
                    added = _extend_in_place(rule, prep, live, current)
                    inclusion = SpecMorphism(inclusion.source, current,
                                             inclusion.maps)
                    index.add_cells(current, added)
                else:
                    po = pushout(rule.tau, live)
                    current = po.apex
                    owned = True
                    inclusion = compose_morphisms(po.into_right, inclusion)
                    index.extend(current)
                if refreshes_depths[rule.name]:
                    depths = structural_depths(current,
                                               logic.depth_witnesses)
                done.add(key)
                trace.append((rule.name, img))
                steps += 1
                changed = True
                if steps >= budget:
                    return SaturationResult(spec=current, status=TRUNCATED,
                                            steps=steps,
                                            depth_skipped=depth_skipped,
                                            inclusion=inclusion, trace=trace)
        if not changed:
            break

    return SaturationResult(spec=current, status=FIXPOINT, steps=steps,
                            depth_skipped=depth_skipped,
                            inclusion=inclusion, trace=trace)
