"""Builtin logics: equational, pointed equational, decorated, modus ponens.

Equational data is encoded record-style: composition facts, selected
identities and equations are elements of their own points (Cmp, Id,
Eq) with arrows to the terms they relate; auxiliary arrows declared as
shared composites force the usual endpoint coherences in every
realization.
"""

from __future__ import annotations

from .logic import DepthWitness, DiagrammaticLogic, Rule
from .sketch import Cone, TERMINAL, make_sketch
from .spec import SpecMorphism, make_spec

TYPE, TERM, EQ, ID, CMP = "Type", "Term", "Eq", "Id", "Cmp"
ONE, SPROD = "One", "SProd"
STATE_TYPE = "S"
POINT_ELEM = "pt"

EQ_LOGIC, POINTED_LOGIC, DEC_LOGIC, MP_LOGIC = "eq", "eq*", "dec", "mp"


def equational_sketch(pointed: bool = False):
    points = [TYPE, TERM, EQ, ID, CMP]
    arrows = {
        "dom": (TERM, TYPE), "cod": (TERM, TYPE),
        "eq_lhs": (EQ, TERM), "eq_rhs": (EQ, TERM),
        "eq_dom": (EQ, TYPE), "eq_cod": (EQ, TYPE),
        "id_term": (ID, TERM), "id_type": (ID, TYPE),
        "c_fst": (CMP, TERM), "c_snd": (CMP, TERM), "c_res": (CMP, TERM),
        "c_src": (CMP, TYPE), "c_mid": (CMP, TYPE), "c_tgt": (CMP, TYPE),
    }
    composites = [
        ("eq_dom", "eq_lhs", "dom"), ("eq_dom", "eq_rhs", "dom"),
        ("eq_cod", "eq_lhs", "cod"), ("eq_cod", "eq_rhs", "cod"),
        ("id_type", "id_term", "dom"), ("id_type", "id_term", "cod"),
        ("c_src", "c_fst", "dom"), ("c_src", "c_res", "dom"),
        ("c_mid", "c_fst", "cod"), ("c_mid", "c_snd", "dom"),
        ("c_tgt", "c_snd", "cod"), ("c_tgt", "c_res", "cod"),
    ]
    cones = []
    if pointed:
        points += [ONE, SPROD]
        arrows.update({
            "st": (ONE, TYPE),
            "sp_base": (SPROD, TYPE), "sp_res": (SPROD, TYPE),
            "sp_st": (SPROD, TYPE), "sp_one": (SPROD, ONE),
            "sp_p1": (SPROD, TERM), "sp_p2": (SPROD, TERM),
        })
        composites += [
            ("sp_st", "sp_one", "st"),
            ("sp_st", "sp_p1", "cod"),
            ("sp_res", "sp_p1", "dom"),
            ("sp_res", "sp_p2", "dom"),
            ("sp_base", "sp_p2", "cod"),
        ]
        cones.append(Cone(name="one", apex=ONE, shape=TERMINAL))
    name = "pointed-equational" if pointed else "equational"
    return make_sketch(name, points, arrows, composites=composites, cones=cones)


EQ_SKETCH = equational_sketch(pointed=False)
POINTED_SKETCH = equational_sketch(pointed=True)


class EqBuilder:
    """Assemble a specification over the (pointed) equational sketch."""

    def __init__(self, sketch=EQ_SKETCH, name=""):
        self.sketch = sketch
        self.name = name
        self.pointed = ONE in sketch.points
        self.types = []
        self.terms = {}        # name -> (src, tgt)
        self.eqs = {}          # name -> (lhs, rhs)
        self.ids = {}          # name -> (type, term)
        self.cmps = {}         # name -> (fst, snd, res)
        self.sprods = {}       # name -> (base, res, p1, p2)
        if self.pointed:
            self.type(STATE_TYPE)

    def type(self, name):
        if name not in self.types:
            self.types.append(name)
        return name

    def term(self, name, src, tgt):
        self.terms[name] = (src, tgt)
        return name

    def equation(self, name, lhs, rhs):
        self.eqs[name] = (lhs, rhs)
        return name

    def ident(self, name, type_, term):
        self.ids[name] = (type_, term)
        return name

    def comp(self, name, fst, snd, res):
        self.cmps[name] = (fst, snd, res)
        return name

    def sprod(self, name, base, res, p1, p2):
        self.sprods[name] = (base, res, p1, p2)
        return name

    def build(self):
        carriers = {
            TYPE: self.types, TERM: list(self.terms),
            EQ: list(self.eqs), ID: list(self.ids), CMP: list(self.cmps),
        }
        src = {t: s for t, (s, _) in self.terms.items()}
        tgt = {t: g for t, (_, g) in self.terms.items()}
        actions = {
            "dom": src, "cod": tgt,
            "eq_lhs": {e: l for e, (l, _) in self.eqs.items()},
            "eq_rhs": {e: r for e, (_, r) in self.eqs.items()},
            "eq_dom": {e: src[l] for e, (l, _) in self.eqs.items()},
            "eq_cod": {e: tgt[l] for e, (l, _) in self.eqs.items()},
            "id_term": {i: t for i, (_, t) in self.ids.items()},
            "id_type": {i: ty for i, (ty, _) in self.ids.items()},
            "c_fst": {c: f for c, (f, _, _) in self.cmps.items()},
            "c_snd": {c: s for c, (_, s, _) in self.cmps.items()},
            "c_res": {c: r for c, (_, _, r) in self.cmps.items()},
            "c_src": {c: src[f] for c, (f, _, _) in self.cmps.items()},
            "c_mid": {c: tgt[f] for c, (f, _, _) in self.cmps.items()},
            "c_tgt": {c: tgt[r] for c, (_, _, r) in self.cmps.items()},
        }
        if self.pointed:
            carriers[ONE] = [POINT_ELEM]
            carriers[SPROD] = list(self.sprods)
            actions["st"] = {POINT_ELEM: STATE_TYPE}
            actions["sp_base"] = {p: b for p, (b, _, _, _) in self.sprods.items()}
            actions["sp_res"] = {p: r for p, (_, r, _, _) in self.sprods.items()}
            actions["sp_st"] = {p: STATE_TYPE for p in self.sprods}
            actions["sp_one"] = {p: POINT_ELEM for p in self.sprods}
            actions["sp_p1"] = {p: p1 for p, (_, _, p1, _) in self.sprods.items()}
            actions["sp_p2"] = {p: p2 for p, (_, _, _, p2) in self.sprods.items()}
        return make_spec(self.sketch, carriers, actions, name=self.name)


def _rule_morphism(small, big, **overrides):
    """Name-based morphism between two builder outputs; overrides remap."""
    maps = {}
    for point in small.sketch.points:
        pm = {}
        for e in small.carrier(point):
            pm[e] = overrides.get(point, {}).get(e, e)
        maps[point] = pm
    return SpecMorphism(small, big, maps)


def _eq_rules(sketch):
    def builder(name=""):
        return EqBuilder(sketch, name=name)

    rules = []

    # composition: consecutive terms compose
    h = builder("compose-H")
    for t in ("X", "Y", "Z"):
        h.type(t)
    h.term("f", "X", "Y")
    h.term("g", "Y", "Z")
    hi = builder("compose-H'")
    for t in ("X", "Y", "Z"):
        hi.type(t)
    hi.term("f", "X", "Y")
    hi.term("g", "Y", "Z")
    hi.term("g∘f", "X", "Z")
    hi.comp("w", "f", "g", "g∘f")
    c = builder("compose-C")
    for t in ("CA", "CB", "CC"):
        c.type(t)
    c.term("cu", "CA", "CB")
    c.term("cv", "CB", "CC")
    c.term("cw", "CA", "CC")
    c.comp("cc", "cu", "cv", "cw")
    h, hi, c = h.build(), hi.build(), c.build()
    rules.append(Rule(
        name="compose", hypothesis=h, intermediate=hi, conclusion=c,
        tau=_rule_morphism(h, hi).as_entailment(),
        s=_rule_morphism(c, hi,
                         Type={"CA": "X", "CB": "Y", "CC": "Z"},
                         Term={"cu": "f", "cv": "g", "cw": "g∘f"},
                         Cmp={"cc": "w"}),
    ))

    # identity: every type has a selected identity term
    h = builder("identity-H")
    h.type("X")
    hi = builder("identity-H'")
    hi.type("X")
    hi.term("id", "X", "X")
    hi.ident("j", "X", "id")
    c = builder("identity-C")
    c.type("IA")
    c.term("ii", "IA", "IA")
    c.ident("ij", "IA", "ii")
    h, hi, c = h.build(), hi.build(), c.build()
    rules.append(Rule(
        name="identity", hypothesis=h, intermediate=hi, conclusion=c,
        tau=_rule_morphism(h, hi).as_entailment(),
        s=_rule_morphism(c, hi, Type={"IA": "X"}, Term={"ii": "id"},
                         Id={"ij": "j"}),
    ))

    def eq_conclusion():
        c = builder("eq-C")
        c.type("EA")
        c.type("EB")
        c.term("el", "EA", "EB")
        c.term("er", "EA", "EB")
        c.equation("ee", "el", "er")
        return c.build()

    def eq_rule(name, h_builder, lhs, rhs, type_map, term_map):
        h = h_builder.build()
        hi_builder = builder(f"{name}-H'")
        hi_builder.types = list(h_builder.types)
        hi_builder.terms = dict(h_builder.terms)
        hi_builder.eqs = dict(h_builder.eqs)
        hi_builder.ids = dict(h_builder.ids)
        hi_builder.cmps = dict(h_builder.cmps)
        new_eq = f"e[{name}]"
        hi_builder.equation(new_eq, lhs, rhs)
        hi = hi_builder.build()
        c = eq_conclusion()
        return Rule(
            name=name, hypothesis=h, intermediate=hi, conclusion=c,
            tau=_rule_morphism(h, hi).as_entailment(),
            s=_rule_morphism(c, hi, Type=type_map,
                             Term={"el": term_map[0], "er": term_map[1]},
                             Eq={"ee": new_eq}),
        )

    # reflexivity
    h = builder("eq-refl-H")
    h.type("X"); h.type("Y")
    h.term("f", "X", "Y")
    rules.append(eq_rule("eq-refl", h, "f", "f",
                         {"EA": "X", "EB": "Y"}, ("f", "f")))

    # symmetry
    h = builder("eq-sym-H")
    h.type("X"); h.type("Y")
    h.term("f", "X", "Y"); h.term("g", "X", "Y")
    h.equation("e", "f", "g")
    rules.append(eq_rule("eq-sym", h, "g", "f",
                         {"EA": "X", "EB": "Y"}, ("g", "f")))

    # transitivity
    h = builder("eq-trans-H")
    h.type("X"); h.type("Y")
    h.term("f", "X", "Y"); h.term("g", "X", "Y"); h.term("h", "X", "Y")
    h.equation("e1", "f", "g"); h.equation("e2", "g", "h")
    rules.append(eq_rule("eq-trans", h, "f", "h",
                         {"EA": "X", "EB": "Y"}, ("f", "h")))

    # unit laws for selected identities
    h = builder("unit-left-H")
    h.type("X"); h.type("Y")
    h.term("i", "X", "X"); h.term("f", "X", "Y"); h.term("r", "X", "Y")
    h.ident("j", "X", "i")
    h.comp("w", "i", "f", "r")
    rules.append(eq_rule("unit-left", h, "r", "f",
                         {"EA": "X", "EB": "Y"}, ("r", "f")))

    h = builder("unit-right-H")
    h.type("X"); h.type("Y")
    h.term("i", "Y", "Y"); h.term("f", "X", "Y"); h.term("r", "X", "Y")
    h.ident("j", "Y", "i")
    h.comp("w", "f", "i", "r")
    rules.append(eq_rule("unit-right", h, "r", "f",
                         {"EA": "X", "EB": "Y"}, ("r", "f")))

    # associativity of recorded composites
    h = builder("assoc-H")
    for t in ("X", "Y", "Z", "W"):
        h.type(t)
    h.term("f", "X", "Y"); h.term("g", "Y", "Z"); h.term("h", "Z", "W")
    h.term("gf", "X", "Z"); h.term("hg", "Y", "W")
    h.term("h(gf)", "X", "W"); h.term("(hg)f", "X", "W")
    h.comp("w1", "f", "g", "gf")
    h.comp("w2", "gf", "h", "h(gf)")
    h.comp("w3", "g", "h", "hg")
    h.comp("w4", "f", "hg", "(hg)f")
    rules.append(eq_rule("assoc", h, "h(gf)", "(hg)f",
                         {"EA": "X", "EB": "W"}, ("h(gf)", "(hg)f")))

    # congruence: composing equal terms gives equal composites
    h = builder("cong-left-H")
    for t in ("X", "Y", "Z"):
        h.type(t)
    h.term("f", "X", "Y"); h.term("g", "X", "Y"); h.term("k", "Y", "Z")
    h.term("r1", "X", "Z"); h.term("r2", "X", "Z")
    h.equation("e", "f", "g")
    h.comp("w1", "f", "k", "r1"); h.comp("w2", "g", "k", "r2")
    rules.append(eq_rule("cong-left", h, "r1", "r2",
                         {"EA": "X", "EB": "Z"}, ("r1", "r2")))

    h = builder("cong-right-H")
    for t in ("W", "X", "Y"):
        h.type(t)
    h.term("k", "W", "X")
    h.term("f", "X", "Y"); h.term("g", "X", "Y")
    h.term("r1", "W", "Y"); h.term("r2", "W", "Y")
    h.equation("e", "f", "g")
    h.comp("w1", "k", "f", "r1"); h.comp("w2", "k", "g", "r2")
    rules.append(eq_rule("cong-right", h, "r1", "r2",
                         {"EA": "W", "EB": "Y"}, ("r1", "r2")))

    return rules


EQ_DEPTH_WITNESSES = (
    DepthWitness(point=CMP, result_arrow="c_res",
                 component_arrows=("c_fst", "c_snd"), offset=0),
    DepthWitness(point=ID, result_arrow="id_term",
                 component_arrows=(), offset=1),
)


def builtin_equational_logic() -> DiagrammaticLogic:
    return DiagrammaticLogic(
        name=EQ_LOGIC,
        sketch=EQ_SKETCH,
        rules=tuple(_eq_rules(EQ_SKETCH)),
        depth_witnesses=EQ_DEPTH_WITNESSES,
    )


def builtin_pointed_equational_logic() -> DiagrammaticLogic:
    rules = _eq_rules(POINTED_SKETCH)

    h = EqBuilder(POINTED_SKETCH, "sprod-H")
    h.type("X")
    hb = h.build()
    hi = EqBuilder(POINTED_SKETCH, "sprod-H'")
    hi.type("X")
    hi.type("S×X")
    hi.term("π1", "S×X", STATE_TYPE)
    hi.term("π2", "S×X", "X")
    hi.sprod("sp", "X", "S×X", "π1", "π2")
    hib = hi.build()
    c = EqBuilder(POINTED_SKETCH, "sprod-C")
    c.type("PB")
    c.type("PR")
    c.term("q1", "PR", STATE_TYPE)
    c.term("q2", "PR", "PB")
    c.sprod("pp", "PB", "PR", "q1", "q2")
    cb = c.build()
    rules.append(Rule(
        name="state-product", hypothesis=hb, intermediate=hib, conclusion=cb,
        tau=_rule_morphism(hb, hib).as_entailment(),
        s=_rule_morphism(cb, hib,
                         Type={"PB": "X", "PR": "S×X"},
                         Term={"q1": "π1", "q2": "π2"},
                         SProd={"pp": "sp"}),
    ))

    witnesses = EQ_DEPTH_WITNESSES + (
        DepthWitness(point=SPROD, result_arrow="sp_res",
                     component_arrows=("sp_base",), offset=1),
    )
    return DiagrammaticLogic(
        name=POINTED_LOGIC,
        sketch=POINTED_SKETCH,
        rules=tuple(rules),
        depth_witnesses=witnesses,
    )


# ---------------------------------------------------------------------------
# decorated equational logic: pure terms, modifiers, strong and weak equations


TERM_P, TERM_M, EQ_S, EQ_W = "TermP", "TermM", "EqS", "EqW"
CMP_P, CMP_M = "CmpP", "CmpM"


def decorated_sketch():
    points = [TYPE, TERM_P, TERM_M, EQ_S, EQ_W, ID, CMP_P, CMP_M]
    arrows = {
        "p_dom": (TERM_P, TYPE), "p_cod": (TERM_P, TYPE),
        "m_dom": (TERM_M, TYPE), "m_cod": (TERM_M, TYPE),
        "conv": (TERM_P, TERM_M),
        "s_lhs": (EQ_S, TERM_M), "s_rhs": (EQ_S, TERM_M),
        "s_dom": (EQ_S, TYPE), "s_cod": (EQ_S, TYPE),
        "w_lhs": (EQ_W, TERM_M), "w_rhs": (EQ_W, TERM_M),
        "w_dom": (EQ_W, TYPE), "w_cod": (EQ_W, TYPE),
        "di_term": (ID, TERM_P), "di_type": (ID, TYPE),
        "pc_fst": (CMP_P, TERM_P), "pc_snd": (CMP_P, TERM_P),
        "pc_res": (CMP_P, TERM_P),
        "pc_src": (CMP_P, TYPE), "pc_mid": (CMP_P, TYPE),
        "pc_tgt": (CMP_P, TYPE),
        "mc_fst": (CMP_M, TERM_M), "mc_snd": (CMP_M, TERM_M),
        "mc_res": (CMP_M, TERM_M),
        "mc_src": (CMP_M, TYPE), "mc_mid": (CMP_M, TYPE),
        "mc_tgt": (CMP_M, TYPE),
    }
    composites = [
        ("p_dom", "conv", "m_dom"), ("p_cod", "conv", "m_cod"),
        ("s_dom", "s_lhs", "m_dom"), ("s_dom", "s_rhs", "m_dom"),
        ("s_cod", "s_lhs", "m_cod"), ("s_cod", "s_rhs", "m_cod"),
        ("w_dom", "w_lhs", "m_dom"), ("w_dom", "w_rhs", "m_dom"),
        ("w_cod", "w_lhs", "m_cod"), ("w_cod", "w_rhs", "m_cod"),
        ("di_type", "di_term", "p_dom"), ("di_type", "di_term", "p_cod"),
        ("pc_src", "pc_fst", "p_dom"), ("pc_src", "pc_res", "p_dom"),
        ("pc_mid", "pc_fst", "p_cod"), ("pc_mid", "pc_snd", "p_dom"),
        ("pc_tgt", "pc_snd", "p_cod"), ("pc_tgt", "pc_res", "p_cod"),
        ("mc_src", "mc_fst", "m_dom"), ("mc_src", "mc_res", "m_dom"),
        ("mc_mid", "mc_fst", "m_cod"), ("mc_mid", "mc_snd", "m_dom"),
        ("mc_tgt", "mc_snd", "m_cod"), ("mc_tgt", "mc_res", "m_cod"),
    ]
    return make_sketch("decorated-equational", points, arrows,
                       composites=composites)


DEC_SKETCH = decorated_sketch()


class DecBuilder:
    """Assemble a specification over the decorated equational sketch.

    Every pure term automatically receives an image modifier under the
    conversion arrow (named ``<term>^m`` unless overridden).
    """

    def __init__(self, name=""):
        self.sketch = DEC_SKETCH
        self.name = name
        self.types = []
        self.pures = {}      # name -> (src, tgt)
        self.modifiers = {}  # name -> (src, tgt)
        self.conv = {}       # pure name -> modifier name
        self.eqs_s = {}      # name -> (lhs modifier, rhs modifier)
        self.eqs_w = {}
        self.ids = {}        # name -> (type, pure term)
        self.cmps_p = {}     # name -> (fst, snd, res) pure terms
        self.cmps_m = {}     # name -> (fst, snd, res) modifiers

    def type(self, name):
        if name not in self.types:
            self.types.append(name)
        return name

    def pure(self, name, src, tgt, conv=None):
        self.pures[name] = (src, tgt)
        image = conv if conv is not None else f"{name}^m"
        if image not in self.modifiers:
            self.modifiers[image] = (src, tgt)
        self.conv[name] = image
        return name

    def modifier(self, name, src, tgt):
        self.modifiers[name] = (src, tgt)
        return name

    def eq_strong(self, name, lhs, rhs):
        self.eqs_s[name] = (lhs, rhs)
        return name

    def eq_weak(self, name, lhs, rhs):
        self.eqs_w[name] = (lhs, rhs)
        return name

    def ident(self, name, type_, term):
        self.ids[name] = (type_, term)
        return name

    def comp_p(self, name, fst, snd, res):
        self.cmps_p[name] = (fst, snd, res)
        return name

    def comp_m(self, name, fst, snd, res):
        self.cmps_m[name] = (fst, snd, res)
        return name

    def build(self):
        carriers = {
            TYPE: self.types, TERM_P: list(self.pures),
            TERM_M: list(self.modifiers),
            EQ_S: list(self.eqs_s), EQ_W: list(self.eqs_w),
            ID: list(self.ids),
            CMP_P: list(self.cmps_p), CMP_M: list(self.cmps_m),
        }
        psrc = {t: s for t, (s, _) in self.pures.items()}
        ptgt = {t: g for t, (_, g) in self.pures.items()}
        msrc = {t: s for t, (s, _) in self.modifiers.items()}
        mtgt = {t: g for t, (_, g) in self.modifiers.items()}
        actions = {
            "p_dom": psrc, "p_cod": ptgt,
            "m_dom": msrc, "m_cod": mtgt,
            "conv": dict(self.conv),
            "s_lhs": {e: l for e, (l, _) in self.eqs_s.items()},
            "s_rhs": {e: r for e, (_, r) in self.eqs_s.items()},
            "s_dom": {e: msrc[l] for e, (l, _) in self.eqs_s.items()},
            "s_cod": {e: mtgt[l] for e, (l, _) in self.eqs_s.items()},
            "w_lhs": {e: l for e, (l, _) in self.eqs_w.items()},
            "w_rhs": {e: r for e, (_, r) in self.eqs_w.items()},
            "w_dom": {e: msrc[l] for e, (l, _) in self.eqs_w.items()},
            "w_cod": {e: mtgt[l] for e, (l, _) in self.eqs_w.items()},
            "di_term": {i: t for i, (_, t) in self.ids.items()},
            "di_type": {i: ty for i, (ty, _) in self.ids.items()},
            "pc_fst": {c: f for c, (f, _, _) in self.cmps_p.items()},
            "pc_snd": {c: s for c, (_, s, _) in self.cmps_p.items()},
            "pc_res": {c: r for c, (_, _, r) in self.cmps_p.items()},
            "pc_src": {c: psrc[f] for c, (f, _, _) in self.cmps_p.items()},
            "pc_mid": {c: ptgt[f] for c, (f, _, _) in self.cmps_p.items()},
            "pc_tgt": {c: ptgt[r] for c, (_, _, r) in self.cmps_p.items()},
            "mc_fst": {c: f for c, (f, _, _) in self.cmps_m.items()},
            "mc_snd": {c: s for c, (_, s, _) in self.cmps_m.items()},
            "mc_res": {c: r for c, (_, _, r) in self.cmps_m.items()},
            "mc_src": {c: msrc[f] for c, (f, _, _) in self.cmps_m.items()},
            "mc_mid": {c: mtgt[f] for c, (f, _, _) in self.cmps_m.items()},
            "mc_tgt": {c: mtgt[r] for c, (_, _, r) in self.cmps_m.items()},
        }
        return make_spec(self.sketch, carriers, actions, name=self.name)


def _dec_rules():
    rules = []

    def eq_conclusion(strong):
        c = DecBuilder("dec-eq-C")
        c.type("EA"); c.type("EB")
        c.modifier("el", "EA", "EB")
        c.modifier("er", "EA", "EB")
        if strong:
            c.eq_strong("ee", "el", "er")
        else:
            c.eq_weak("ee", "el", "er")
        return c.build()

    def eq_rule(name, h_builder, strong, lhs, rhs, type_map):
        h = h_builder.build()
        hi_builder = DecBuilder(f"{name}-H'")
        hi_builder.types = list(h_builder.types)
        hi_builder.pures = dict(h_builder.pures)
        hi_builder.modifiers = dict(h_builder.modifiers)
        hi_builder.conv = dict(h_builder.conv)
        hi_builder.eqs_s = dict(h_builder.eqs_s)
        hi_builder.eqs_w = dict(h_builder.eqs_w)
        hi_builder.ids = dict(h_builder.ids)
        hi_builder.cmps_p = dict(h_builder.cmps_p)
        hi_builder.cmps_m = dict(h_builder.cmps_m)
        new_eq = f"e[{name}]"
        if strong:
            hi_builder.eq_strong(new_eq, lhs, rhs)
        else:
            hi_builder.eq_weak(new_eq, lhs, rhs)
        hi = hi_builder.build()
        c = eq_conclusion(strong)
        eq_point = EQ_S if strong else EQ_W
        return Rule(
            name=name, hypothesis=h, intermediate=hi, conclusion=c,
            tau=_rule_morphism(h, hi).as_entailment(),
            s=_rule_morphism(c, hi, Type=type_map,
                             TermM={"el": lhs, "er": rhs},
                             **{eq_point: {"ee": new_eq}}),
        )

    # composition of modifiers
    h = DecBuilder("compose-m-H")
    for t in ("X", "Y", "Z"):
        h.type(t)
    h.modifier("a", "X", "Y"); h.modifier("b", "Y", "Z")
    hi = DecBuilder("compose-m-H'")
    for t in ("X", "Y", "Z"):
        hi.type(t)
    hi.modifier("a", "X", "Y"); hi.modifier("b", "Y", "Z")
    hi.modifier("b∘a", "X", "Z")
    hi.comp_m("w", "a", "b", "b∘a")
    c = DecBuilder("compose-m-C")
    for t in ("MA", "MB", "MC"):
        c.type(t)
    c.modifier("mu", "MA", "MB"); c.modifier("mv", "MB", "MC")
    c.modifier("mw", "MA", "MC")
    c.comp_m("mc", "mu", "mv", "mw")
    h, hi, c = h.build(), hi.build(), c.build()
    rules.append(Rule(
        name="compose-m", hypothesis=h, intermediate=hi, conclusion=c,
        tau=_rule_morphism(h, hi).as_entailment(),
        s=_rule_morphism(c, hi,
                         Type={"MA": "X", "MB": "Y", "MC": "Z"},
                         TermM={"mu": "a", "mv": "b", "mw": "b∘a"},
                         CmpM={"mc": "w"}),
    ))

    # composition of pure terms, with the converted composite recorded too
    h = DecBuilder("compose-p-H")
    for t in ("X", "Y", "Z"):
        h.type(t)
    h.pure("a", "X", "Y"); h.pure("b", "Y", "Z")
    hi = DecBuilder("compose-p-H'")
    for t in ("X", "Y", "Z"):
        hi.type(t)
    hi.pure("a", "X", "Y"); hi.pure("b", "Y", "Z")
    hi.pure("b∘a", "X", "Z")
    hi.comp_p("w", "a", "b", "b∘a")
    hi.comp_m("wm", "a^m", "b^m", "b∘a^m")
    c = DecBuilder("compose-p-C")
    for t in ("PA", "PB", "PC"):
        c.type(t)
    c.pure("pu", "PA", "PB"); c.pure("pv", "PB", "PC")
    c.pure("pw", "PA", "PC")
    c.comp_p("pc", "pu", "pv", "pw")
    h, hi, c = h.build(), hi.build(), c.build()
    rules.append(Rule(
        name="compose-p", hypothesis=h, intermediate=hi, conclusion=c,
        tau=_rule_morphism(h, hi).as_entailment(),
        s=_rule_morphism(c, hi,
                         Type={"PA": "X", "PB": "Y", "PC": "Z"},
                         TermP={"pu": "a", "pv": "b", "pw": "b∘a"},
                         TermM={"pu^m": "a^m", "pv^m": "b^m",
                                "pw^m": "b∘a^m"},
                         CmpP={"pc": "w"}),
    ))

    # every type has a selected pure identity
    h = DecBuilder("identity-p-H")
    h.type("X")
    hi = DecBuilder("identity-p-H'")
    hi.type("X")
    hi.pure("id", "X", "X")
    hi.ident("j", "X", "id")
    c = DecBuilder("identity-p-C")
    c.type("IA")
    c.pure("ii", "IA", "IA")
    c.ident("ij", "IA", "ii")
    h, hi, c = h.build(), hi.build(), c.build()
    rules.append(Rule(
        name="identity-p", hypothesis=h, intermediate=hi, conclusion=c,
        tau=_rule_morphism(h, hi).as_entailment(),
        s=_rule_morphism(c, hi, Type={"IA": "X"},
                         TermP={"ii": "id"}, TermM={"ii^m": "id^m"},
                         Id={"ij": "j"}),
    ))

    # strong equations: an equivalence relation
    h = DecBuilder("eqs-refl-H")
    h.type("X"); h.type("Y")
    h.modifier("f", "X", "Y")
    rules.append(eq_rule("eqs-refl", h, True, "f", "f",
                         {"EA": "X", "EB": "Y"}))

    h = DecBuilder("eqs-sym-H")
    h.type("X"); h.type("Y")
    h.modifier("f", "X", "Y"); h.modifier("g", "X", "Y")
    h.eq_strong("e", "f", "g")
    rules.append(eq_rule("eqs-sym", h, True, "g", "f",
                         {"EA": "X", "EB": "Y"}))

    h = DecBuilder("eqs-trans-H")
    h.type("X"); h.type("Y")
    h.modifier("f", "X", "Y"); h.modifier("g", "X", "Y")
    h.modifier("h", "X", "Y")
    h.eq_strong("e1", "f", "g"); h.eq_strong("e2", "g", "h")
    rules.append(eq_rule("eqs-trans", h, True, "f", "h",
                         {"EA": "X", "EB": "Y"}))

    # strong equations weaken
    h = DecBuilder("eqs-to-eqw-H")
    h.type("X"); h.type("Y")
    h.modifier("f", "X", "Y"); h.modifier("g", "X", "Y")
    h.eq_strong("e", "f", "g")
    rules.append(eq_rule("eqs-to-eqw", h, False, "f", "g",
                         {"EA": "X", "EB": "Y"}))

    # weak equations: an equivalence relation too
    h = DecBuilder("eqw-refl-H")
    h.type("X"); h.type("Y")
    h.modifier("f", "X", "Y")
    rules.append(eq_rule("eqw-refl", h, False, "f", "f",
                         {"EA": "X", "EB": "Y"}))

    h = DecBuilder("eqw-sym-H")
    h.type("X"); h.type("Y")
    h.modifier("f", "X", "Y"); h.modifier("g", "X", "Y")
    h.eq_weak("e", "f", "g")
    rules.append(eq_rule("eqw-sym", h, False, "g", "f",
                         {"EA": "X", "EB": "Y"}))

    h = DecBuilder("eqw-trans-H")
    h.type("X"); h.type("Y")
    h.modifier("f", "X", "Y"); h.modifier("g", "X", "Y")
    h.modifier("h", "X", "Y")
    h.eq_weak("e1", "f", "g"); h.eq_weak("e2", "g", "h")
    rules.append(eq_rule("eqw-trans", h, False, "f", "h",
                         {"EA": "X", "EB": "Y"}))

    # a weak equation between converted pure terms is strong
    h = DecBuilder("pure-eqw-to-eqs-H")
    h.type("X"); h.type("Y")
    h.pure("a", "X", "Y"); h.pure("b", "X", "Y")
    h.eq_weak("e", "a^m", "b^m")
    rules.append(eq_rule("pure-eqw-to-eqs", h, True, "a^m", "b^m",
                         {"EA": "X", "EB": "Y"}))

    # strong equations are congruences for recorded composition
    h = DecBuilder("eqs-cong-left-H")
    for t in ("X", "Y", "Z"):
        h.type(t)
    h.modifier("f", "X", "Y"); h.modifier("g", "X", "Y")
    h.modifier("k", "Y", "Z")
    h.modifier("r1", "X", "Z"); h.modifier("r2", "X", "Z")
    h.eq_strong("e", "f", "g")
    h.comp_m("w1", "f", "k", "r1"); h.comp_m("w2", "g", "k", "r2")
    rules.append(eq_rule("eqs-cong-left", h, True, "r1", "r2",
                         {"EA": "X", "EB": "Z"}))

    h = DecBuilder("eqs-cong-right-H")
    for t in ("W", "X", "Y"):
        h.type(t)
    h.modifier("k", "W", "X")
    h.modifier("f", "X", "Y"); h.modifier("g", "X", "Y")
    h.modifier("r1", "W", "Y"); h.modifier("r2", "W", "Y")
    h.eq_strong("e", "f", "g")
    h.comp_m("w1", "k", "f", "r1"); h.comp_m("w2", "k", "g", "r2")
    rules.append(eq_rule("eqs-cong-right", h, True, "r1", "r2",
                         {"EA": "W", "EB": "Y"}))

    return rules


DEC_DEPTH_WITNESSES = (
    DepthWitness(point=CMP_M, result_arrow="mc_res",
                 component_arrows=("mc_fst", "mc_snd"), offset=0),
    DepthWitness(point=CMP_P, result_arrow="pc_res",
                 component_arrows=("pc_fst", "pc_snd"), offset=0),
    DepthWitness(point=ID, result_arrow="di_term",
                 component_arrows=(), offset=1),
    DepthWitness(point=TERM_P, result_arrow="conv",
                 component_arrows=(None,), offset=0),
)


def builtin_decorated_logic() -> DiagrammaticLogic:
    return DiagrammaticLogic(
        name=DEC_LOGIC,
        sketch=DEC_SKETCH,
        rules=tuple(_dec_rules()),
        depth_witnesses=DEC_DEPTH_WITNESSES,
    )


# ---------------------------------------------------------------------------
# minimal propositional logic: formulas, provability, implication records


FML, PRV, IMP = "Fml", "Prv", "Imp"


def mp_sketch():
    return make_sketch("modus-ponens", [FML, PRV, IMP], {
        "prv_f": (PRV, FML),
        "i_lhs": (IMP, FML), "i_rhs": (IMP, FML), "i_res": (IMP, FML),
    })


MP_SKETCH = mp_sketch()


def mp_spec(name="", formulas=(), implications=None, provable=None):
    """Specification over the propositional sketch.

    ``implications`` maps a record name to ``(A, B, C)`` where the
    record asserts that ``C`` is the formula ``A => B``; ``provable``
    maps a provability witness name to the formula it proves.
    """
    implications = implications or {}
    provable = provable or {}
    carriers = {FML: list(formulas), IMP: list(implications),
                PRV: list(provable)}
    actions = {
        "prv_f": dict(provable),
        "i_lhs": {w: a for w, (a, _, _) in implications.items()},
        "i_rhs": {w: b for w, (_, b, _) in implications.items()},
        "i_res": {w: c for w, (_, _, c) in implications.items()},
    }
    return make_spec(MP_SKETCH, carriers, actions, name=name)


def builtin_mp_logic() -> DiagrammaticLogic:
    h = mp_spec("mp-H", formulas=("A", "A⇒B", "B"),
                implications={"w": ("A", "B", "A⇒B")},
                provable={"pA": "A", "pAB": "A⇒B"})
    hi = mp_spec("mp-H'", formulas=("A", "A⇒B", "B"),
                 implications={"w": ("A", "B", "A⇒B")},
                 provable={"pA": "A", "pAB": "A⇒B", "pB": "B"})
    # the conclusion is a single provable formula; its numerator image
    # picks out the implication A⇒B (and its provability witness)
    c = mp_spec("mp-C", formulas=("C",), provable={"pC": "C"})
    rule = Rule(
        name="modus-ponens", hypothesis=h, intermediate=hi, conclusion=c,
        tau=_rule_morphism(h, hi).as_entailment(),
        s=_rule_morphism(c, hi, Fml={"C": "A⇒B"}, Prv={"pC": "pAB"}),
    )
    return DiagrammaticLogic(name=MP_LOGIC, sketch=MP_SKETCH, rules=(rule,),
                             depth_witnesses=())


# ---------------------------------------------------------------------------
# registry


def builtin_logics() -> dict[str, DiagrammaticLogic]:
    return {
        EQ_LOGIC: builtin_equational_logic(),
        POINTED_LOGIC: builtin_pointed_equational_logic(),
        DEC_LOGIC: builtin_decorated_logic(),
        MP_LOGIC: builtin_mp_logic(),
    }


def get_logic(name: str) -> DiagrammaticLogic:
    logics = builtin_logics()
    if name not in logics:
        raise KeyError(f"unknown logic {name!r}; builtins: "
                       + ", ".join(sorted(logics)))
    return logics[name]
