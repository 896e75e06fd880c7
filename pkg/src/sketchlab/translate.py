"""Morphisms between the builtin logics and model transposition.

Two translations out of the decorated equational logic are provided:

- the *erasing* translation drops decorations: pure terms and their
  modifier views collapse onto plain terms, both equation flavors
  become plain equations;
- the *state-threading* translation sends a modifier ``f: X -> Y`` to
  a term ``f: S×X -> S×Y`` over the pointed equational logic, pins
  converted pure terms to act as identity on the state component, and
  reads a weak equation as equality after projecting the state away.

Each translation comes with a re-reading in the other direction
(precomposition, materialized only on demand) and with transposition
of models: a model of the translated specification corresponds to a
model of the original one over the re-read theory, bijectively.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .builtin import (DEC_SKETCH, POINTED_SKETCH, DecBuilder, EqBuilder,
                      POINT_ELEM, STATE_TYPE)
from .logic import DiagrammaticLogic
from .spec import SpecMorphism, Specification, check_spec_morphism


@dataclass
class TranslationResult:
    """A translated specification plus the cell bookkeeping.

    ``element_map`` records, per source point, where each source
    element went (element names are preserved by both translations, so
    the map is an identity on names — kept explicit for transposition).
    ``point_map`` is the point-level relabelling where it is uniform.
    """
    spec: Specification
    point_map: dict[str, str]
    element_map: dict[str, dict[str, str]]


@dataclass(frozen=True)
class LogicMorphism:
    name: str
    source: DiagrammaticLogic
    target: DiagrammaticLogic
    translate: Callable[[Specification], TranslationResult]


# ---------------------------------------------------------------------------
# erasing translation (decorated -> equational)


def _fresh(name, taken):
    if name not in taken:
        taken.add(name)
        return name
    k = 1
    while f"{name}#{k}" in taken:
        k += 1
    taken.add(f"{name}#{k}")
    return f"{name}#{k}"


def erase_decorations(spec: Specification) -> TranslationResult:
    """Collapse pure/modifier onto plain terms, both flavors onto Eq.

    A modifier that is the conversion image of pure terms takes the
    least pure name (the decoration was a view, not a new term).
    """
    if spec.sketch.name != DEC_SKETCH.name:
        raise ValueError("expected a specification over the decorated sketch")

    conv_pre = {}
    for p in spec.carrier("TermP"):
        conv_pre.setdefault(spec.act("conv", p), []).append(p)

    taken = set()
    term_of_mod = {}
    for m in spec.carrier("TermM"):
        preferred = min(conv_pre[m]) if m in conv_pre else m
        term_of_mod[m] = _fresh(preferred, taken)

    def term_of_pure(p):
        return term_of_mod[spec.act("conv", p)]

    b = EqBuilder(name=spec.name and f"erased({spec.name})")
    for t in spec.carrier("Type"):
        b.type(t)
    for m in spec.carrier("TermM"):
        b.term(term_of_mod[m], spec.act("m_dom", m), spec.act("m_cod", m))

    eq_names = set()
    eq_map_s, eq_map_w = {}, {}
    for e in spec.carrier("EqS"):
        name = _fresh(e, eq_names)
        eq_map_s[e] = name
        b.equation(name, term_of_mod[spec.act("s_lhs", e)],
                   term_of_mod[spec.act("s_rhs", e)])
    for e in spec.carrier("EqW"):
        name = _fresh(e, eq_names)
        eq_map_w[e] = name
        b.equation(name, term_of_mod[spec.act("w_lhs", e)],
                   term_of_mod[spec.act("w_rhs", e)])

    for i in spec.carrier("Id"):
        b.ident(i, spec.act("di_type", i), term_of_pure(spec.act("di_term", i)))

    cmp_names = set()
    cmp_map_p, cmp_map_m = {}, {}
    for c in spec.carrier("CmpP"):
        name = _fresh(c, cmp_names)
        cmp_map_p[c] = name
        b.comp(name, term_of_pure(spec.act("pc_fst", c)),
               term_of_pure(spec.act("pc_snd", c)),
               term_of_pure(spec.act("pc_res", c)))
    for c in spec.carrier("CmpM"):
        name = _fresh(c, cmp_names)
        cmp_map_m[c] = name
        b.comp(name, term_of_mod[spec.act("mc_fst", c)],
               term_of_mod[spec.act("mc_snd", c)],
               term_of_mod[spec.act("mc_res", c)])

    element_map = {
        "Type": {t: t for t in spec.carrier("Type")},
        "TermP": {p: term_of_pure(p) for p in spec.carrier("TermP")},
        "TermM": dict(term_of_mod),
        "EqS": eq_map_s, "EqW": eq_map_w,
        "Id": {i: i for i in spec.carrier("Id")},
        "CmpP": cmp_map_p, "CmpM": cmp_map_m,
    }
    point_map = {"Type": "Type", "TermP": "Term", "TermM": "Term",
                 "EqS": "Eq", "EqW": "Eq", "Id": "Id",
                 "CmpP": "Cmp", "CmpM": "Cmp"}
    return TranslationResult(spec=b.build(), point_map=point_map,
                             element_map=element_map)


def forget_decorations(spec: Specification) -> Specification:
    return erase_decorations(spec).spec


# ---------------------------------------------------------------------------
# state-threading translation (decorated -> pointed equational)


def prod_type(x: str) -> str:
    return f"S×{x}"


def proj1(x: str) -> str:
    return f"π1@{x}"


def proj2(x: str) -> str:
    return f"π2@{x}"


def thread_state(spec: Specification) -> TranslationResult:
    """Expand modifiers to state-passing terms over the pointed logic.

    Every type gets a state product ``S×X`` with pure projections; a
    modifier ``f: X -> Y`` becomes a term ``f: S×X -> S×Y``; a
    converted pure term is pinned by equations saying it fixes the
    state and acts as the pure term on values; a weak equation becomes
    equality of the value projections.
    """
    if spec.sketch.name != DEC_SKETCH.name:
        raise ValueError("expected a specification over the decorated sketch")

    b = EqBuilder(POINTED_SKETCH, name=spec.name and f"threaded({spec.name})")
    for t in spec.carrier("Type"):
        b.type(t)
        b.type(prod_type(t))
        b.term(proj1(t), prod_type(t), STATE_TYPE)
        b.term(proj2(t), prod_type(t), t)
        b.sprod(f"sp@{t}", t, prod_type(t), proj1(t), proj2(t))

    for p in spec.carrier("TermP"):
        b.term(p, spec.act("p_dom", p), spec.act("p_cod", p))
    for m in spec.carrier("TermM"):
        b.term(m, prod_type(spec.act("m_dom", m)),
               prod_type(spec.act("m_cod", m)))

    value_proj = {}   # modifier -> name of its value projection π2∘m

    def ensure_value_proj(m):
        if m in value_proj:
            return value_proj[m]
        x, y = spec.act("m_dom", m), spec.act("m_cod", m)
        t = b.term(f"π2∘{m}", prod_type(x), y)
        b.comp(f"c2@{m}", m, proj2(y), t)
        value_proj[m] = t
        return t

    pure_after_proj = {}   # pure term -> name of p∘π2

    def ensure_pure_after_proj(p):
        if p in pure_after_proj:
            return pure_after_proj[p]
        x, y = spec.act("p_dom", p), spec.act("p_cod", p)
        t = b.term(f"{p}∘π2", prod_type(x), y)
        b.comp(f"c3@{p}", proj2(x), p, t)
        pure_after_proj[p] = t
        return t

    # pin conversion images: state untouched, value acts as the pure term
    state_pinned = set()
    for p in sorted(spec.carrier("TermP")):
        m = spec.act("conv", p)
        x, y = spec.act("m_dom", m), spec.act("m_cod", m)
        if m not in state_pinned:
            t1 = b.term(f"π1∘{m}", prod_type(x), STATE_TYPE)
            b.comp(f"c1@{m}", m, proj1(y), t1)
            b.equation(f"e1@{m}", t1, proj1(x))
            state_pinned.add(m)
        b.equation(f"e2@{m}:{p}", ensure_value_proj(m),
                   ensure_pure_after_proj(p))

    for e in spec.carrier("EqS"):
        b.equation(e, spec.act("s_lhs", e), spec.act("s_rhs", e))
    for e in spec.carrier("EqW"):
        b.equation(e, ensure_value_proj(spec.act("w_lhs", e)),
                   ensure_value_proj(spec.act("w_rhs", e)))

    for i in spec.carrier("Id"):
        b.ident(i, spec.act("di_type", i), spec.act("di_term", i))
    for c in spec.carrier("CmpP"):
        b.comp(c, spec.act("pc_fst", c), spec.act("pc_snd", c),
               spec.act("pc_res", c))
    for c in spec.carrier("CmpM"):
        b.comp(c, spec.act("mc_fst", c), spec.act("mc_snd", c),
               spec.act("mc_res", c))

    element_map = {
        "Type": {t: t for t in spec.carrier("Type")},
        "TermP": {p: p for p in spec.carrier("TermP")},
        "TermM": {m: m for m in spec.carrier("TermM")},
        "EqS": {e: e for e in spec.carrier("EqS")},
        "EqW": {e: e for e in spec.carrier("EqW")},
        "Id": {i: i for i in spec.carrier("Id")},
        "CmpP": {c: c for c in spec.carrier("CmpP")},
        "CmpM": {c: c for c in spec.carrier("CmpM")},
    }
    return TranslationResult(spec=b.build(), point_map={"Type": "Type"},
                             element_map=element_map)


def state_expand(spec: Specification) -> Specification:
    return thread_state(spec).spec


def far_morphism(source: DiagrammaticLogic,
                 target: DiagrammaticLogic) -> LogicMorphism:
    return LogicMorphism(name="far", source=source, target=target,
                         translate=erase_decorations)


def near_morphism(source: DiagrammaticLogic,
                  target: DiagrammaticLogic) -> LogicMorphism:
    return LogicMorphism(name="near", source=source, target=target,
                         translate=thread_state)


# ---------------------------------------------------------------------------
# re-reading an equational theory as a decorated one (erasing direction)


def reread_as_decorated(spec: Specification) -> Specification:
    """Precompose with the erasure: each term is both pure and its own
    modifier view, each equation is both strong and weak."""
    b = DecBuilder(name=spec.name and f"reread({spec.name})")
    for t in spec.carrier("Type"):
        b.type(t)
    for t in spec.carrier("Term"):
        b.pure(t, spec.act("dom", t), spec.act("cod", t), conv=t)
    for e in spec.carrier("Eq"):
        b.eq_strong(e, spec.act("eq_lhs", e), spec.act("eq_rhs", e))
        b.eq_weak(e, spec.act("eq_lhs", e), spec.act("eq_rhs", e))
    for i in spec.carrier("Id"):
        b.ident(i, spec.act("id_type", i), spec.act("id_term", i))
    for c in spec.carrier("Cmp"):
        b.comp_p(c, spec.act("c_fst", c), spec.act("c_snd", c),
                 spec.act("c_res", c))
        b.comp_m(c, spec.act("c_fst", c), spec.act("c_snd", c),
                 spec.act("c_res", c))
    return b.build()


def far_transpose_to_decorated(s1: Specification,
                               t2: Specification,
                               m: SpecMorphism) -> SpecMorphism:
    """Turn a model of erase(s1) in t2 into a model of s1 in reread(t2)."""
    tr = erase_decorations(s1)
    if m.source.carriers != tr.spec.carriers:
        raise ValueError("model is not over the erasure of s1")
    u = reread_as_decorated(t2)
    em = tr.element_map
    maps = {
        point: {e: m.of(tr.point_map[point], em[point][e])
                for e in s1.carrier(point)}
        for point in s1.sketch.points
    }
    out = SpecMorphism(s1, u, maps)
    problems = check_spec_morphism(out)
    if problems:
        raise ValueError("transposed assignment is not a morphism: "
                         + "; ".join(problems))
    return out


def far_transpose_to_plain(s1: Specification,
                           t2: Specification,
                           m_dec: SpecMorphism) -> SpecMorphism:
    """Inverse direction: a model of s1 in reread(t2) induces a model
    of erase(s1) in t2 (conversion constraints make it well-defined)."""
    tr = erase_decorations(s1)
    u = reread_as_decorated(t2)
    if m_dec.source.carriers != s1.carriers or \
            m_dec.target.carriers != u.carriers:
        raise ValueError("expected a model of s1 over the re-read theory")
    em = tr.element_map
    maps = {p: {} for p in tr.spec.sketch.points}
    for point in s1.sketch.points:
        tgt_point = tr.point_map[point]
        for e in s1.carrier(point):
            # re-read carriers share element names with t2's carriers
            maps[tgt_point][em[point][e]] = m_dec.of(point, e)
    out = SpecMorphism(tr.spec, t2, maps)
    problems = check_spec_morphism(out)
    if problems:
        raise ValueError("transposed assignment is not a morphism: "
                         + "; ".join(problems))
    return out


# ---------------------------------------------------------------------------
# set-valued fragment theories (state-threading direction)


def _fn_name(src: str, tgt: str, outputs: tuple[str, ...]) -> str:
    return f"{src}→{tgt}[{','.join(outputs)}]"


@dataclass
class SetFragment:
    """A finite fragment of state-passing set semantics as a pointed
    equational specification.

    Carriers: the state sort, the given base types, and one state
    product per base type.  Every function between every pair of those
    sets is a term; a composition record exists for every composable
    pair, an equation for every term (reflexivity), an identity record
    per type, a state-product record per base type.
    """
    spec: Specification
    state: tuple[str, ...]
    base: dict[str, tuple[str, ...]]           # base type -> elements
    elems: dict[str, tuple[str, ...]]          # every type -> elements
    fn_graph: dict[str, tuple[str, str, tuple[str, ...]]]  # term -> (src, tgt, outputs)
    fn_by_graph: dict[tuple[str, str, tuple[str, ...]], str]
    cmp_record: dict[tuple[str, str], str]     # (f, g) -> Cmp element
    eq_record: dict[str, str]                  # term -> Eq element
    id_record: dict[str, str]                  # type -> Id element
    id_term: dict[str, str]                    # type -> identity term
    sprod_record: dict[str, str]               # base type -> SProd element

    def compose(self, f: str, g: str) -> str:
        """The term for ``g after f``."""
        fs, ft, fo = self.fn_graph[f]
        gs, gt, go = self.fn_graph[g]
        if gs != ft:
            raise ValueError(f"{g} does not follow {f}")
        src_elems = self.elems[fs]
        mid_elems = self.elems[ft]
        outputs = tuple(go[mid_elems.index(fo[i])]
                        for i in range(len(src_elems)))
        return self.fn_by_graph[(fs, gt, outputs)]

    def projection1(self, base: str) -> str:
        prod = prod_type(base)
        outputs = tuple(e.split("|")[0] for e in self.elems[prod])
        return self.fn_by_graph[(prod, STATE_TYPE, outputs)]

    def projection2(self, base: str) -> str:
        prod = prod_type(base)
        outputs = tuple(e.split("|")[1] for e in self.elems[prod])
        return self.fn_by_graph[(prod, base, outputs)]

    def threaded(self, pure_term: str) -> str:
        """The state-fixing product-level version of a base-type function."""
        src, tgt, outputs = self.fn_graph[pure_term]
        ps, pt = prod_type(src), prod_type(tgt)
        out = []
        for e in self.elems[ps]:
            s, x = e.split("|")
            out.append(f"{s}|{outputs[self.elems[src].index(x)]}")
        return self.fn_by_graph[(ps, pt, tuple(out))]

    def weakly_equal(self, f: str, g: str) -> bool:
        """Equal value components (final state projected away)."""
        fs, _ft, fo = self.fn_graph[f]
        gs, _gt, go = self.fn_graph[g]
        if fs != gs:
            return False
        return all(a.split("|")[1] == b.split("|")[1]
                   for a, b in zip(fo, go))


def set_fragment_theory(base_sizes: dict[str, int],
                        state_size: int = 2) -> SetFragment:
    state = tuple(f"s{i}" for i in range(state_size))
    base = {t: tuple(f"{t}{i}" for i in range(n))
            for t, n in sorted(base_sizes.items())}
    elems = {STATE_TYPE: state}
    elems.update(base)
    for t in base:
        elems[prod_type(t)] = tuple(f"{s}|{x}" for s in state for x in base[t])

    types = sorted(elems)
    b = EqBuilder(POINTED_SKETCH, name="set-fragment")
    for t in types:
        b.type(t)

    fn_graph = {}
    fn_by_graph = {}
    for src in types:
        for tgt in types:
            for outputs in itertools.product(elems[tgt],
                                             repeat=len(elems[src])):
                name = _fn_name(src, tgt, outputs)
                fn_graph[name] = (src, tgt, outputs)
                fn_by_graph[(src, tgt, outputs)] = name
                b.term(name, src, tgt)

    frag = SetFragment(spec=None, state=state, base=base, elems=elems,
                       fn_graph=fn_graph, fn_by_graph=fn_by_graph,
                       cmp_record={}, eq_record={}, id_record={},
                       id_term={}, sprod_record={})

    for f in sorted(fn_graph):
        for g in sorted(fn_graph):
            if fn_graph[g][0] != fn_graph[f][1]:
                continue
            name = f"cmp[{f};{g}]"
            b.comp(name, f, g, frag.compose(f, g))
            frag.cmp_record[(f, g)] = name

    for f in sorted(fn_graph):
        name = f"eq[{f}]"
        b.equation(name, f, f)
        frag.eq_record[f] = name

    for t in types:
        ident = fn_by_graph[(t, t, tuple(elems[t]))]
        name = f"id[{t}]"
        b.ident(name, t, ident)
        frag.id_record[t] = name
        frag.id_term[t] = ident

    for t in sorted(base):
        name = f"sp[{t}]"
        b.sprod(name, t, prod_type(t), frag.projection1(t),
                frag.projection2(t))
        frag.sprod_record[t] = name

    frag.spec = b.build()
    return frag


@dataclass
class DecoratedFragment:
    """The fragment theory re-read over the decorated sketch: pure
    terms are base-type functions, modifiers are product-level
    functions keyed by their base endpoints."""
    spec: Specification
    fragment: SetFragment
    conv_of: dict[str, str]                    # pure -> modifier
    eq_s_record: dict[str, str]                # modifier -> EqS element
    eq_w_record: dict[tuple[str, str], str]    # (f, g) -> EqW element
    id_record: dict[str, str]
    cmp_p_record: dict[tuple[str, str], str]
    cmp_m_record: dict[tuple[str, str], str]


def reread_as_decorated_fragment(frag: SetFragment) -> DecoratedFragment:
    bases = sorted(frag.base)
    prods = {prod_type(t) for t in bases}
    b = DecBuilder(name="reread(set-fragment)")
    for t in bases:
        b.type(t)

    pures = [f for f, (s, t, _o) in sorted(frag.fn_graph.items())
             if s in frag.base and t in frag.base]
    mods = [f for f, (s, t, _o) in sorted(frag.fn_graph.items())
            if s in prods and t in prods]
    base_of_prod = {prod_type(t): t for t in bases}

    conv_of = {}
    for f in pures:
        conv_of[f] = frag.threaded(f)
    for f in mods:
        s, t, _o = frag.fn_graph[f]
        b.modifier(f, base_of_prod[s], base_of_prod[t])
    for f in pures:
        s, t, _o = frag.fn_graph[f]
        b.pure(f, s, t, conv=conv_of[f])

    out = DecoratedFragment(spec=None, fragment=frag, conv_of=conv_of,
                            eq_s_record={}, eq_w_record={}, id_record={},
                            cmp_p_record={}, cmp_m_record={})

    for f in mods:
        name = f"eqs[{f}]"
        b.eq_strong(name, f, f)
        out.eq_s_record[f] = name
    for f in mods:
        for g in mods:
            if frag.fn_graph[f][0] != frag.fn_graph[g][0] or \
                    frag.fn_graph[f][1] != frag.fn_graph[g][1]:
                continue
            if not frag.weakly_equal(f, g):
                continue
            name = f"eqw[{f};{g}]"
            b.eq_weak(name, f, g)
            out.eq_w_record[(f, g)] = name
    for t in bases:
        name = f"id[{t}]"
        b.ident(name, t, frag.id_term[t])
        out.id_record[t] = name
    for f in pures:
        for g in pures:
            if frag.fn_graph[g][0] != frag.fn_graph[f][1]:
                continue
            name = f"cmpp[{f};{g}]"
            b.comp_p(name, f, g, frag.compose(f, g))
            out.cmp_p_record[(f, g)] = name
    for f in mods:
        for g in mods:
            if frag.fn_graph[g][0] != frag.fn_graph[f][1]:
                continue
            name = f"cmpm[{f};{g}]"
            b.comp_m(name, f, g, frag.compose(f, g))
            out.cmp_m_record[(f, g)] = name

    out.spec = b.build()
    return out


def near_transpose_to_decorated(s1: Specification, frag: SetFragment,
                                m: SpecMorphism,
                                reread: DecoratedFragment | None = None
                                ) -> SpecMorphism:
    """Turn a model of thread(s1) in the fragment into a decorated
    model of s1 over the re-read fragment."""
    if reread is None:
        reread = reread_as_decorated_fragment(frag)
    tr = thread_state(s1)
    if m.source.carriers != tr.spec.carriers:
        raise ValueError("model is not over the state-threading of s1")

    maps = {
        "Type": {t: m.of("Type", t) for t in s1.carrier("Type")},
        "TermP": {p: m.of("Term", p) for p in s1.carrier("TermP")},
        "TermM": {f: m.of("Term", f) for f in s1.carrier("TermM")},
        "EqS": {e: reread.eq_s_record[m.of("Term", s1.act("s_lhs", e))]
                for e in s1.carrier("EqS")},
        "EqW": {e: reread.eq_w_record[(m.of("Term", s1.act("w_lhs", e)),
                                       m.of("Term", s1.act("w_rhs", e)))]
                for e in s1.carrier("EqW")},
        "Id": {i: reread.id_record[m.of("Type", s1.act("di_type", i))]
               for i in s1.carrier("Id")},
        "CmpP": {c: reread.cmp_p_record[(m.of("Term", s1.act("pc_fst", c)),
                                         m.of("Term", s1.act("pc_snd", c)))]
                 for c in s1.carrier("CmpP")},
        "CmpM": {c: reread.cmp_m_record[(m.of("Term", s1.act("mc_fst", c)),
                                         m.of("Term", s1.act("mc_snd", c)))]
                 for c in s1.carrier("CmpM")},
    }
    out = SpecMorphism(s1, reread.spec, maps)
    problems = check_spec_morphism(out)
    if problems:
        raise ValueError("transposed assignment is not a morphism: "
                         + "; ".join(problems))
    return out


def near_transpose_to_pointed(s1: Specification, frag: SetFragment,
                              m_dec: SpecMorphism,
                              reread: DecoratedFragment | None = None
                              ) -> SpecMorphism:
    """Inverse direction: a decorated model of s1 over the re-read
    fragment induces a model of thread(s1) in the fragment itself."""
    if reread is None:
        reread = reread_as_decorated_fragment(frag)
    if m_dec.source.carriers != s1.carriers or \
            m_dec.target.carriers != reread.spec.carriers:
        raise ValueError("expected a decorated model over the re-read fragment")
    tr = thread_state(s1)

    type_map = {STATE_TYPE: STATE_TYPE}
    for t in s1.carrier("Type"):
        img = m_dec.of("Type", t)
        type_map[t] = img
        type_map[prod_type(t)] = prod_type(img)

    term_map = {}
    for p in s1.carrier("TermP"):
        term_map[p] = m_dec.of("TermP", p)
    for f in s1.carrier("TermM"):
        term_map[f] = m_dec.of("TermM", f)
    for t in s1.carrier("Type"):
        img = m_dec.of("Type", t)
        term_map[proj1(t)] = frag.projection1(img)
        term_map[proj2(t)] = frag.projection2(img)
    # generated composite terms: value/state projections of modifiers,
    # pure terms after a projection — all are semantic composites
    for f in s1.carrier("TermM"):
        if f"π2∘{f}" in tr.spec.carrier("Term"):
            term_map[f"π2∘{f}"] = frag.compose(
                term_map[f], frag.projection2(m_dec.of("Type", s1.act("m_cod", f))))
        if f"π1∘{f}" in tr.spec.carrier("Term"):
            term_map[f"π1∘{f}"] = frag.compose(
                term_map[f], frag.projection1(m_dec.of("Type", s1.act("m_cod", f))))
    for p in s1.carrier("TermP"):
        if f"{p}∘π2" in tr.spec.carrier("Term"):
            term_map[f"{p}∘π2"] = frag.compose(
                frag.projection2(m_dec.of("Type", s1.act("p_dom", p))),
                term_map[p])

    def cmp_of(c):
        fst = term_map[tr.spec.act("c_fst", c)]
        snd = term_map[tr.spec.act("c_snd", c)]
        return frag.cmp_record[(fst, snd)]

    def eq_of(e):
        lhs = term_map[tr.spec.act("eq_lhs", e)]
        rhs = term_map[tr.spec.act("eq_rhs", e)]
        if lhs != rhs:
            raise ValueError(f"equation {e} maps to distinct functions "
                             f"{lhs} and {rhs}")
        return frag.eq_record[lhs]

    maps = {
        "Type": {t: type_map[t] for t in tr.spec.carrier("Type")},
        "Term": {t: term_map[t] for t in tr.spec.carrier("Term")},
        "Eq": {e: eq_of(e) for e in tr.spec.carrier("Eq")},
        "Id": {i: frag.id_record[type_map[tr.spec.act("id_type", i)]]
               for i in tr.spec.carrier("Id")},
        "Cmp": {c: cmp_of(c) for c in tr.spec.carrier("Cmp")},
        "One": {POINT_ELEM: POINT_ELEM},
        "SProd": {s: frag.sprod_record[type_map[tr.spec.act("sp_base", s)]]
                  for s in tr.spec.carrier("SProd")},
    }
    out = SpecMorphism(tr.spec, frag.spec, maps)
    problems = check_spec_morphism(out)
    if problems:
        raise ValueError("transposed assignment is not a morphism: "
                         + "; ".join(problems))
    return out
