"""A tiny imperative language with a state-passing interpreter.

Grammar::

    prog := stmt (";" stmt)*
    stmt := IDENT ":=" expr | expr
    expr := term (("+" | "*") term)*
    term := NUM | IDENT | IDENT "(" expr ("," expr)* ")" | "(" expr ")"

"+" and "*" share one precedence level and associate left, exactly as
the grammar says.  Values are machine integers wrapping at a modulus
(default 2**16); the state is a total map from the declared variables
to values.  Literals and arithmetic are pure; variable lookup and
assignment touch the state and are decorated as modifiers.  The only
builtin function is ``pair``; argument evaluation order is a parameter
(left- or right-sequential), which is observable when an argument
writes a variable another argument reads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

DEFAULT_MODULUS = 2 ** 16
BUILTIN_FUNCTIONS = ("pair",)


class MiniLangError(Exception):
    def __init__(self, message, line, col):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


# ---------------------------------------------------------------------------
# syntax


@dataclass(frozen=True)
class Node:
    line: int
    col: int
    text: str


@dataclass(frozen=True)
class Lit(Node):
    value: int


@dataclass(frozen=True)
class Var(Node):
    name: str


@dataclass(frozen=True)
class Assign(Node):
    name: str
    expr: Node


@dataclass(frozen=True)
class BinOp(Node):
    op: str
    left: Node
    right: Node


@dataclass(frozen=True)
class App(Node):
    fn: str
    args: tuple[Node, ...]


@dataclass(frozen=True)
class Seq(Node):
    stmts: tuple[Node, ...]


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(:=|[+*();,])|(\S))")


def _tokenize(source):
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(source):
        m = _TOKEN.match(source, i)
        if m is None:
            break
        ws = source[i:m.start(m.lastindex)]
        for ch in ws:
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
        text = m.group(m.lastindex)
        if m.lastindex == 4:
            raise MiniLangError(f"unexpected character {text!r}", line, col)
        kind = ("NUM", "IDENT", "PUNCT")[m.lastindex - 1]
        tokens.append((kind, text, line, col))
        col += len(text)
        i = m.end()
    tokens.append(("EOF", "", line, col))
    return tokens


class _Parser:
    def __init__(self, source, variables):
        self.source = source
        self.variables = variables
        self.tokens = _tokenize(source)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, text):
        kind, value, line, col = self.peek()
        if value != text:
            found = repr(value) if value else "end of input"
            raise MiniLangError(f"expected {text!r}, found {found}", line, col)
        return self.next()

    def error(self, message):
        _kind, _value, line, col = self.peek()
        raise MiniLangError(message, line, col)

    def slice_from(self, start_pos):
        first = self.tokens[start_pos]
        last = self.tokens[self.pos - 1]
        # reconstruct the exact source slice covering the node
        start = self._offset(first)
        end = self._offset(last) + len(last[1])
        return self.source[start:end]

    def _offset(self, token):
        _kind, _text, line, col = token
        lines = self.source.split("\n")
        return sum(len(l) + 1 for l in lines[:line - 1]) + col - 1

    def check_variable(self, name, line, col):
        if self.variables is not None and name not in self.variables:
            raise MiniLangError(f"unknown variable {name!r}", line, col)

    def parse_program(self):
        start = self.pos
        stmts = [self.parse_stmt()]
        while self.peek()[1] == ";":
            self.next()
            stmts.append(self.parse_stmt())
        kind, value, line, col = self.peek()
        if kind != "EOF":
            raise MiniLangError(f"unexpected {value!r}", line, col)
        if len(stmts) == 1:
            return stmts[0]
        first = stmts[0]
        return Seq(line=first.line, col=first.col,
                   text=self.slice_from(start), stmts=tuple(stmts))

    def parse_stmt(self):
        kind, value, line, col = self.peek()
        if kind == "IDENT" and self.tokens[self.pos + 1][1] == ":=":
            start = self.pos
            self.next()
            self.next()
            self.check_variable(value, line, col)
            expr = self.parse_expr()
            return Assign(line=line, col=col, text=self.slice_from(start),
                          name=value, expr=expr)
        return self.parse_expr()

    def parse_expr(self):
        start = self.pos
        node = self.parse_term()
        while self.peek()[1] in ("+", "*"):
            _kind, op, line, col = self.next()
            right = self.parse_term()
            node = BinOp(line=node.line, col=node.col,
                         text=self.slice_from(start),
                         op=op, left=node, right=right)
            _ = (line, col)
        return node

    def parse_term(self):
        kind, value, line, col = self.peek()
        if kind == "NUM":
            self.next()
            return Lit(line=line, col=col, text=value, value=int(value))
        if kind == "IDENT":
            start = self.pos
            self.next()
            if self.peek()[1] == "(":
                if value not in BUILTIN_FUNCTIONS:
                    raise MiniLangError(f"unknown function {value!r}",
                                        line, col)
                self.next()
                # arguments admit assignments so that effects in
                # argument position (the evaluation-order demos) parse
                args = [self.parse_stmt()]
                while self.peek()[1] == ",":
                    self.next()
                    args.append(self.parse_stmt())
                self.expect(")")
                return App(line=line, col=col, text=self.slice_from(start),
                           fn=value, args=tuple(args))
            self.check_variable(value, line, col)
            return Var(line=line, col=col, text=value, name=value)
        if value == "(":
            self.next()
            node = self.parse_expr()
            self.expect(")")
            return node
        found = repr(value) if value else "end of input"
        self.error(f"expected a term, found {found}")


def parse_program(source: str, variables=None) -> Node:
    """Parse; with ``variables`` given, undeclared names are errors."""
    if not source.strip():
        raise MiniLangError("empty program", 1, 1)
    return _Parser(source, variables).parse_program()


def program_variables(node: Node) -> tuple[str, ...]:
    names = set()

    def walk(n):
        if isinstance(n, Var):
            names.add(n.name)
        elif isinstance(n, Assign):
            names.add(n.name)
            walk(n.expr)
        elif isinstance(n, BinOp):
            walk(n.left)
            walk(n.right)
        elif isinstance(n, App):
            for a in n.args:
                walk(a)
        elif isinstance(n, Seq):
            for s in n.stmts:
                walk(s)

    walk(node)
    return tuple(sorted(names))


# ---------------------------------------------------------------------------
# decoration


def is_pure(node: Node) -> bool:
    """A term is pure when no part of it reads or writes the state."""
    if isinstance(node, Lit):
        return True
    if isinstance(node, (Var, Assign)):
        return False
    if isinstance(node, BinOp):
        return is_pure(node.left) and is_pure(node.right)
    if isinstance(node, App):
        return all(is_pure(a) for a in node.args)
    if isinstance(node, Seq):
        return all(is_pure(s) for s in node.stmts)
    raise TypeError(f"not a syntax node: {node!r}")


def _skeleton(program: Node):
    """Shared cell layout of the decorated and the plain grammar spec.

    Every node becomes a term ``unit -> int``; sequencing is genuine
    unary composition via a pure value-dropping term, recorded as
    composition records.  Returns (term table, composition table, root).
    """
    terms = {}      # name -> (src, tgt, pure)
    cmps = {}       # name -> (fst, snd, res)
    taken = set()

    def fresh(name):
        if name not in taken:
            taken.add(name)
            return name
        candidate = f"{name}@{len(taken)}"
        taken.add(candidate)
        return candidate

    def emit(node):
        name = fresh(node.text)
        terms[name] = ("unit", "int", is_pure(node))
        if isinstance(node, Seq):
            children = [emit(s) for s in node.stmts]
            if "drop" not in terms:
                terms["drop"] = ("int", "unit", True)
                taken.add("drop")
            acc = children[0]
            for i, nxt in enumerate(children[1:]):
                dropped = fresh(f"drop∘{acc}")
                terms[dropped] = ("unit", "unit", terms[acc][2])
                cmps[fresh(f"c-drop@{name}.{i}")] = (acc, "drop", dropped)
                last = i == len(children) - 2
                stepped = name if last else fresh(f"{nxt}∘{dropped}")
                if not last:
                    terms[stepped] = ("unit", "int",
                                      terms[dropped][2] and terms[nxt][2])
                cmps[fresh(f"c-seq@{name}.{i}")] = (dropped, nxt, stepped)
                acc = stepped
        else:
            for child in _children(node):
                emit(child)
        return name

    def _children(node):
        if isinstance(node, Assign):
            return (node.expr,)
        if isinstance(node, BinOp):
            return (node.left, node.right)
        if isinstance(node, App):
            return node.args
        return ()

    root = emit(program)
    return terms, cmps, root


def decorate_program(program: Node):
    """The decorated specification of a program, plus its root term."""
    from .builtin import DecBuilder

    terms, cmps, root = _skeleton(program)
    b = DecBuilder(name="program")
    b.type("unit")
    b.type("int")
    for name, (src, tgt, pure) in terms.items():
        if pure:
            b.pure(name, src, tgt)
        else:
            b.modifier(name, src, tgt)

    def view(name):
        # the modifier-side view of any term (pure ones via conversion)
        return b.conv[name] if name in b.pures else name

    for cname, (fst, snd, res) in cmps.items():
        if terms[fst][2] and terms[snd][2] and terms[res][2]:
            b.comp_p(cname, fst, snd, res)
        else:
            b.comp_m(cname, view(fst), view(snd), view(res))
    return b.build(), root


def grammar_spec(program: Node):
    """The undecorated equational specification of the same program."""
    from .builtin import EqBuilder

    terms, cmps, root = _skeleton(program)
    b = EqBuilder(name="program")
    b.type("unit")
    b.type("int")
    for name, (src, tgt, _pure) in terms.items():
        b.term(name, src, tgt)
    for cname, (fst, snd, res) in cmps.items():
        b.comp(cname, fst, snd, res)
    return b.build(), root


# ---------------------------------------------------------------------------
# evaluation


@dataclass
class EvalResult:
    value: object
    state: dict[str, int]
    trace: list = field(default_factory=list)

    def as_json(self):
        return {"final_state": dict(sorted(self.state.items())),
                "value": self.value,
                "trace": self.trace}


def evaluate_program(program: Node, state: dict[str, int],
                     order: str = "left",
                     modulus: int = DEFAULT_MODULUS) -> EvalResult:
    """Run the program, threading the state through every modifier.

    ``order`` fixes the evaluation order of multi-argument positions
    (binary operators and function applications): ``left`` evaluates
    leftmost-first, ``right`` rightmost-first.
    """
    if order not in ("left", "right"):
        raise ValueError("order must be 'left' or 'right'")
    for name in program_variables(program):
        if name not in state:
            raise MiniLangError(f"variable {name!r} missing from the "
                                f"initial state", program.line, program.col)
    current = dict(state)
    trace = []

    def eval_args(nodes):
        indexed = list(enumerate(nodes))
        if order == "right":
            indexed.reverse()
        values = {}
        for i, n in indexed:
            values[i] = walk(n)
        return [values[i] for i in range(len(nodes))]

    def walk(node):
        if isinstance(node, Lit):
            return node.value % modulus
        if isinstance(node, Var):
            value = current[node.name]
            trace.append({"event": "read", "var": node.name, "value": value})
            return value
        if isinstance(node, Assign):
            value = walk(node.expr)
            current[node.name] = value
            trace.append({"event": "assign", "var": node.name, "value": value})
            return value
        if isinstance(node, BinOp):
            left, right = eval_args((node.left, node.right))
            if node.op == "+":
                return (left + right) % modulus
            return (left * right) % modulus
        if isinstance(node, App):
            args = eval_args(node.args)
            return args  # pair (and any n-ary tuple) evaluates to its parts
        if isinstance(node, Seq):
            value = None
            for s in node.stmts:
                value = walk(s)
                trace.append({"event": "stmt", "text": s.text, "value": value})
            return value
        raise TypeError(f"not a syntax node: {node!r}")

    value = walk(program)
    return EvalResult(value=value, state=current, trace=trace)
