"""Textual input formats and JSON export.

A document is a sequence of blocks::

    sketch NAME {
      point P
      arrow a : P -> Q
      identity a @ P
      composite h = g . f
      cone [NAME] apex A terminal
      cone [NAME] apex A product of (P, Q) with (pr1, pr2) [derived]
      cone [NAME] apex A pullback of (P, Q, R) via (f, g) with (p1, p2) [derived]
    }

    spec NAME over SKETCH {
      P: e1, e2
      a(e1) = e2
    }

    rule NAME {
      hypothesis SPEC
      intermediate SPEC
      conclusion SPEC
      tau { P: e -> e' ... }     # omitted pairs default to same-name
      s { P: e -> e' ... }
    }

    logic NAME {
      sketch SKETCH               # reference, or an inline sketch block
      rules (r1, r2, ...)
      witness P via a from (a1, _, ...) offset N
    }

    morphism NAME {
      source SPEC
      target SPEC
      map { P: e -> e' ... }
    }

    prove {
      apply RULE with { P: h -> e, ... } ;
      apply RULE first
    }

SKETCH and SPEC positions accept names declared earlier in the same
document or the builtin logic names (eq, eq*, dec, mp) for their
sketches.  Names may not contain whitespace or the punctuation
``{ } ( ) : , ; = . @``.  Errors carry line and column.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .fractions import ProofScript, ProofStep
from .logic import DepthWitness, DiagrammaticLogic, Rule
from .sketch import Cone, LimitSketch, make_sketch, validate_sketch
from .spec import SpecMorphism, Specification, check_spec_morphism, make_spec


class ParseError(Exception):
    def __init__(self, message, line, col):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


_TOKEN = re.compile(r"->|[{}():,;=.@]|[^\s{}():,;=.@]+")


def _tokenize(source):
    tokens = []
    for lineno, text in enumerate(source.split("\n"), start=1):
        body = text.split("#", 1)[0]
        for m in _TOKEN.finditer(body):
            tokens.append((m.group(), lineno, m.start() + 1))
    last = (1, 1) if not tokens else (tokens[-1][1], tokens[-1][2] + len(tokens[-1][0]))
    tokens.append(("", last[0], last[1]))
    return tokens


@dataclass
class Document:
    sketches: dict[str, LimitSketch] = field(default_factory=dict)
    specs: dict[str, Specification] = field(default_factory=dict)
    rules: dict[str, Rule] = field(default_factory=dict)
    logics: dict[str, DiagrammaticLogic] = field(default_factory=dict)
    morphisms: dict[str, SpecMorphism] = field(default_factory=dict)
    proofs: list[ProofScript] = field(default_factory=list)


class _Reader:
    def __init__(self, source, builtins=None):
        self.tokens = _tokenize(source)
        self.pos = 0
        self.doc = Document()
        self.builtins = builtins or {}

    def peek(self):
        return self.tokens[self.pos][0]

    def next(self):
        tok = self.tokens[self.pos]
        self.last = (tok[1], tok[2])
        if tok[0]:
            self.pos += 1
        return tok

    def error(self, message):
        _text, line, col = self.tokens[self.pos]
        raise ParseError(message, line, col)

    def error_last(self, message):
        """Report at the most recently consumed token."""
        line, col = getattr(self, "last", (1, 1))
        raise ParseError(message, line, col)

    def keyword(self, context):
        tok, line, col = self.next()
        if not tok:
            raise ParseError(f"unexpected end of input in {context}",
                             line, col)
        return tok

    def expect(self, text):
        tok, line, col = self.next()
        if tok != text:
            found = repr(tok) if tok else "end of input"
            raise ParseError(f"expected {text!r}, found {found}", line, col)
        return tok

    def name(self, what="a name"):
        tok, line, col = self.next()
        if not tok or tok in "{}():,;=.@" or tok == "->":
            found = repr(tok) if tok else "end of input"
            raise ParseError(f"expected {what}, found {found}", line, col)
        return tok

    def name_list(self):
        self.expect("(")
        names = []
        if self.peek() != ")":
            names.append(self.name())
            while self.peek() == ",":
                self.next()
                names.append(self.name())
        self.expect(")")
        return tuple(names)

    # -- documents ---------------------------------------------------------

    def document(self):
        while self.peek():
            kw = self.peek()
            if kw == "sketch":
                sketch = self.sketch_block()
                self.doc.sketches[sketch.name] = sketch
            elif kw == "spec":
                spec = self.spec_block()
                self.doc.specs[spec.name] = spec
            elif kw == "rule":
                rule = self.rule_block()
                self.doc.rules[rule.name] = rule
            elif kw == "logic":
                logic = self.logic_block()
                self.doc.logics[logic.name] = logic
            elif kw == "morphism":
                name, morphism = self.morphism_block()
                self.doc.morphisms[name] = morphism
            elif kw == "prove":
                self.doc.proofs.append(self.proof_block())
            else:
                self.error(f"unknown block {kw!r}")
        return self.doc

    def resolve_sketch(self, name):
        if name in self.doc.sketches:
            return self.doc.sketches[name]
        if name in self.builtins:
            return self.builtins[name].sketch
        self.error_last(f"unknown sketch {name!r}")

    def resolve_spec(self, name):
        if name not in self.doc.specs:
            self.error_last(f"unknown spec {name!r}")
        return self.doc.specs[name]

    # -- sketches ----------------------------------------------------------

    def sketch_block(self):
        self.expect("sketch")
        name = self.name("a sketch name")
        self.expect("{")
        points, arrows, identities, composites, cones = [], {}, [], [], []
        while self.peek() != "}":
            kw = self.keyword("sketch block")
            if kw == "point":
                points.append(self.name("a point name"))
            elif kw == "arrow":
                a = self.name("an arrow name")
                self.expect(":")
                src = self.name("a point name")
                self.expect("->")
                tgt = self.name("a point name")
                arrows[a] = (src, tgt)
            elif kw == "identity":
                a = self.name("an arrow name")
                self.expect("@")
                identities.append((a, self.name("a point name")))
            elif kw == "composite":
                h = self.name("an arrow name")
                self.expect("=")
                g = self.name("an arrow name")
                self.expect(".")
                f = self.name("an arrow name")
                composites.append((h, f, g))
            elif kw == "cone":
                cones.append(self.cone_decl())
            else:
                self.error(f"unknown sketch item {kw!r}")
        self.expect("}")
        sketch = make_sketch(name, points, arrows, identities, composites,
                             cones)
        problems = validate_sketch(sketch)
        if problems:
            self.error(f"invalid sketch {name}: " + "; ".join(problems))
        return sketch

    def cone_decl(self):
        cone_name = None
        if self.peek() != "apex":
            cone_name = self.name("a cone name")
        self.expect("apex")
        apex = self.name("a point name")
        shape = self.next()[0]
        base_points, base_arrows, projections = (), (), ()
        if shape == "terminal":
            pass
        elif shape == "product":
            self.expect("of")
            base_points = self.name_list()
            self.expect("with")
            projections = self.name_list()
        elif shape == "pullback":
            self.expect("of")
            base_points = self.name_list()
            self.expect("via")
            base_arrows = self.name_list()
            self.expect("with")
            projections = self.name_list()
        else:
            self.error(f"unknown cone shape {shape!r}")
        derived = False
        if self.peek() == "derived":
            self.next()
            derived = True
        return Cone(name=cone_name or apex, apex=apex, shape=shape,
                    base_points=base_points, base_arrows=base_arrows,
                    projections=projections, derived=derived)

    # -- specs -------------------------------------------------------------

    def spec_block(self):
        self.expect("spec")
        name = self.name("a spec name")
        self.expect("over")
        sketch = self.resolve_sketch(self.name("a sketch name"))
        self.expect("{")
        carriers = {}
        actions = {}
        while self.peek() != "}":
            head = self.name()
            head_at = self.last
            if self.peek() == ":":          # carrier line:  P: e1, e2
                self.next()
                if head not in sketch.points:
                    raise ParseError(f"unknown point {head!r}", *head_at)
                elems = [self.name("an element name")]
                while self.peek() == ",":
                    self.next()
                    elems.append(self.name("an element name"))
                carriers.setdefault(head, []).extend(elems)
            elif self.peek() == "(":        # action line:  a(e1) = e2
                self.next()
                elem = self.name("an element name")
                self.expect(")")
                self.expect("=")
                value = self.name("an element name")
                if head not in sketch.arrows:
                    raise ParseError(f"unknown arrow {head!r}", *head_at)
                actions.setdefault(head, {})[elem] = value
            else:
                self.error("expected ':' (carrier) or '(' (action)")
        self.expect("}")
        return make_spec(sketch, carriers, actions, name=name)

    # -- rules and logics ----------------------------------------------------

    def binding_block(self):
        """{ P: e -> e', ... } as maps per point."""
        self.expect("{")
        maps = {}
        while self.peek() != "}":
            point = self.name("a point name")
            self.expect(":")
            src = self.name("an element name")
            self.expect("->")
            tgt = self.name("an element name")
            maps.setdefault(point, {})[src] = tgt
            if self.peek() in (",", ";"):
                self.next()
        self.expect("}")
        return maps

    def spec_morphism(self, source, target, partial_maps, label):
        maps = {}
        for point in source.sketch.points:
            pm = dict(partial_maps.get(point, {}))
            for e in source.carrier(point):
                if e not in pm:
                    if e in target.carrier(point):
                        pm[e] = e
                    else:
                        self.error(f"{label}: element {e} at {point} has no "
                                   f"image and no same-name default")
            maps[point] = pm
        m = SpecMorphism(source, target, maps)
        problems = check_spec_morphism(m)
        if problems:
            self.error(f"{label} is not a morphism: " + "; ".join(problems))
        return m

    def rule_block(self):
        self.expect("rule")
        name = self.name("a rule name")
        self.expect("{")
        parts = {}
        binding = {}
        while self.peek() != "}":
            kw = self.keyword("rule block")
            if kw in ("hypothesis", "intermediate", "conclusion"):
                parts[kw] = self.resolve_spec(self.name("a spec name"))
            elif kw in ("tau", "s"):
                binding[kw] = self.binding_block()
            else:
                self.error(f"unknown rule item {kw!r}")
        self.expect("}")
        for kw in ("hypothesis", "intermediate", "conclusion"):
            if kw not in parts:
                self.error(f"rule {name}: missing {kw}")
        tau = self.spec_morphism(parts["hypothesis"], parts["intermediate"],
                                 binding.get("tau", {}), f"rule {name}: tau")
        s = self.spec_morphism(parts["conclusion"], parts["intermediate"],
                               binding.get("s", {}), f"rule {name}: s")
        return Rule(name=name, hypothesis=parts["hypothesis"],
                    intermediate=parts["intermediate"],
                    conclusion=parts["conclusion"],
                    tau=tau.as_entailment(), s=s)

    def logic_block(self):
        self.expect("logic")
        name = self.name("a logic name")
        self.expect("{")
        sketch = None
        rules = []
        witnesses = []
        while self.peek() != "}":
            kw = self.peek()
            if kw == "sketch":
                save = self.pos
                self.next()
                sketch_name = self.name("a sketch name")
                if self.peek() == "{":
                    self.pos = save
                    sketch = self.sketch_block()
                    self.doc.sketches[sketch.name] = sketch
                else:
                    sketch = self.resolve_sketch(sketch_name)
            elif kw == "rules":
                self.next()
                for rule_name in self.name_list():
                    if rule_name not in self.doc.rules:
                        self.error(f"unknown rule {rule_name!r}")
                    rules.append(self.doc.rules[rule_name])
            elif kw == "witness":
                self.next()
                point = self.name("a point name")
                self.expect("via")
                result = self.name("an arrow name")
                self.expect("from")
                components = tuple(None if c == "_" else c
                                   for c in self.name_list())
                self.expect("offset")
                offset = int(self.name("a number"))
                witnesses.append(DepthWitness(point=point,
                                              result_arrow=result,
                                              component_arrows=components,
                                              offset=offset))
            else:
                self.error(f"unknown logic item {kw!r}")
        self.expect("}")
        if sketch is None:
            self.error(f"logic {name}: missing sketch")
        return DiagrammaticLogic(name=name, sketch=sketch,
                                 rules=tuple(rules),
                                 depth_witnesses=tuple(witnesses))

    # -- morphisms and proofs ------------------------------------------------

    def morphism_block(self):
        self.expect("morphism")
        name = self.name("a morphism name")
        self.expect("{")
        source = target = None
        maps = {}
        while self.peek() != "}":
            kw = self.keyword("morphism block")
            if kw == "source":
                source = self.resolve_spec(self.name("a spec name"))
            elif kw == "target":
                target = self.resolve_spec(self.name("a spec name"))
            elif kw == "map":
                maps = self.binding_block()
            else:
                self.error(f"unknown morphism item {kw!r}")
        self.expect("}")
        if source is None or target is None:
            self.error(f"morphism {name}: missing source or target")
        return name, self.spec_morphism(source, target, maps,
                                        f"morphism {name}")

    def proof_block(self):
        self.expect("prove")
        self.expect("{")
        steps = []
        while self.peek() != "}":
            self.expect("apply")
            rule = self.name("a rule name")
            bindings = None
            if self.peek() == "with":
                self.next()
                bindings = self.binding_block()
            elif self.peek() == "first":
                self.next()
            if self.peek() == ";":
                self.next()
            steps.append(ProofStep(rule=rule, bindings=bindings))
        self.expect("}")
        return ProofScript(steps=tuple(steps))


def parse_document(source: str, builtins=None) -> Document:
    """Parse a document; ``builtins`` maps logic names to logics whose
    sketches are referenceable."""
    if builtins is None:
        from .builtin import builtin_logics
        builtins = builtin_logics()
    return _Reader(source, builtins).document()


# ---------------------------------------------------------------------------
# JSON export


def sketch_to_json(sketch: LimitSketch) -> dict:
    return {
        "name": sketch.name,
        "points": list(sketch.points),
        "arrows": {a: {"source": s, "target": t}
                   for a, (s, t) in sorted(sketch.arrows.items())},
        "identities": sorted(list(i) for i in sketch.identities),
        "composites": sorted(list(c) for c in sketch.composites),
        "cones": [{"name": c.name, "apex": c.apex, "shape": c.shape,
                   "base_points": list(c.base_points),
                   "base_arrows": list(c.base_arrows),
                   "projections": list(c.projections),
                   "derived": c.derived}
                  for c in sketch.cones],
    }


def spec_to_json(spec: Specification) -> dict:
    return {
        "name": spec.name,
        "sketch": spec.sketch.name,
        "carriers": {p: list(spec.carrier(p)) for p in sorted(spec.carriers)},
        "actions": {a: dict(sorted(spec.actions.get(a, {}).items()))
                    for a in sorted(spec.sketch.arrows)},
    }


def morphism_to_json(m: SpecMorphism) -> dict:
    return {
        "source": m.source.name,
        "target": m.target.name,
        "entailment": m.entailment,
        "maps": {p: dict(sorted(m.maps.get(p, {}).items()))
                 for p in sorted(m.source.sketch.points)},
    }
