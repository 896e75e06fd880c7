"""Finite state-passing semantics: models, products, equation checks.

A :class:`StateFunction` is a total table ``(state, input) -> (state,
output)`` over finite carriers, tagged with its decoration.  Pure
functions are built state-free and threaded on demand; the conversion
to a modifier is explicit.  The product builders implement the
pairing disciplines for effectful computation:

- the *semi-pure product* runs a modifier on one component while a
  passenger rides along unchanged;
- the *sequential product* runs two modifiers one after the other,
  threading the state: first the left factor, then the right one in
  the state the left one produced.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


PURE = "p"
MODIFIER = "m"


@dataclass(frozen=True)
class DecoratedTerm:
    name: str
    src: str
    tgt: str
    decoration: str  # "p" or "m"


@dataclass(frozen=True)
class StateFunction:
    """A total function 𝕊×X -> 𝕊×Y over finite carriers."""
    states: tuple
    src: tuple
    tgt: tuple
    table: dict  # (s, x) -> (s', y)
    decoration: str = MODIFIER

    def __post_init__(self):
        for s in self.states:
            for x in self.src:
                if (s, x) not in self.table:
                    raise ValueError(f"table undefined at {(s, x)}")
        if self.decoration == PURE:
            for (s, x), (s2, _y) in self.table.items():
                if s2 != s:
                    raise ValueError("a pure function may not move the state")

    def __call__(self, s, x):
        return self.table[(s, x)]

    def value(self, s, x):
        return self.table[(s, x)][1]


def pure_function(fn: dict, src, tgt, states) -> StateFunction:
    """Lift a plain function X -> Y to a state-fixing StateFunction."""
    table = {(s, x): (s, fn[x]) for s in states for x in src}
    return StateFunction(states=tuple(states), src=tuple(src),
                         tgt=tuple(tgt), table=table, decoration=PURE)


def convert(f: StateFunction) -> StateFunction:
    """The conversion of a pure function into a modifier (same table)."""
    if f.decoration != PURE:
        raise ValueError("only pure functions are converted")
    return StateFunction(states=f.states, src=f.src, tgt=f.tgt,
                         table=dict(f.table), decoration=MODIFIER)


def compose(first: StateFunction, then: StateFunction) -> StateFunction:
    """``then`` after ``first``, threading the state."""
    if first.tgt != then.src or first.states != then.states:
        raise ValueError("functions are not composable")
    table = {}
    for (s, x), (s1, y) in first.table.items():
        table[(s, x)] = then.table[(s1, y)]
    decoration = PURE if (first.decoration == PURE
                          and then.decoration == PURE) else MODIFIER
    return StateFunction(states=first.states, src=first.src, tgt=then.tgt,
                         table=table, decoration=decoration)


def identity_function(carrier, states) -> StateFunction:
    return pure_function({x: x for x in carrier}, carrier, carrier, states)


def semi_pure_product(f1: StateFunction, passenger: tuple,
                      side: str = "right") -> StateFunction:
    """Run the modifier ``f1`` beside an untouched passenger component.

    ``side`` names where the passenger sits: ``right`` gives
    ``X1×X2 -> Y1×X2`` (passenger second), ``left`` gives
    ``X2×X1 -> X2×Y1``.  The active track satisfies a plain equality
    with ``f1``; the passenger track only an equality of values, since
    ``f1`` may move the state while the bare identity does not.
    """
    if f1.decoration == PURE:
        raise ValueError("semi-pure product needs a modifier; convert the "
                         "pure function explicitly first")
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    passenger = tuple(passenger)
    table = {}
    if side == "right":
        src = tuple(itertools.product(f1.src, passenger))
        tgt = tuple(itertools.product(f1.tgt, passenger))
        for s in f1.states:
            for (x1, x2) in src:
                s1, y1 = f1(s, x1)
                table[(s, (x1, x2))] = (s1, (y1, x2))
    else:
        src = tuple(itertools.product(passenger, f1.src))
        tgt = tuple(itertools.product(passenger, f1.tgt))
        for s in f1.states:
            for (x2, x1) in src:
                s1, y1 = f1(s, x1)
                table[(s, (x2, x1))] = (s1, (x2, y1))
    return StateFunction(states=f1.states, src=src, tgt=tgt, table=table,
                         decoration=MODIFIER)


def sequential_product(f1: StateFunction, f2: StateFunction) -> StateFunction:
    """First ``f1`` on the left component, then ``f2`` on the right.

    The composite of a right semi-pure product of ``f1`` with a left
    semi-pure product of ``f2``: ``(s, x1, x2)`` goes to
    ``(s2, y1, y2)`` where ``(s1, y1) = f1(s, x1)`` and
    ``(s2, y2) = f2(s1, x2)``.
    """
    if f1.decoration == PURE or f2.decoration == PURE:
        raise ValueError("sequential product needs modifiers; convert pure "
                         "functions explicitly first")
    if f1.states != f2.states:
        raise ValueError("state sets differ")
    step1 = semi_pure_product(f1, f2.src, side="right")
    step2 = semi_pure_product(f2, f1.tgt, side="left")
    return compose(step1, step2)


def check_decorated_equation(f: StateFunction, g: StateFunction,
                             flavor: str) -> bool:
    """Plain equality ("=") or equality of values only ("~")."""
    if f.states != g.states or f.src != g.src or f.tgt != g.tgt:
        raise ValueError("functions are not parallel")
    if flavor == "=":
        return f.table == g.table
    if flavor == "~":
        return all(f.value(s, x) == g.value(s, x)
                   for s in f.states for x in f.src)
    raise ValueError("flavor must be '=' or '~'")


@dataclass
class FiniteModel:
    """Named carriers, a finite state set, and named interpretations."""
    carriers: dict[str, tuple]
    states: tuple
    functions: dict[str, StateFunction]

    def interpret(self, term: DecoratedTerm) -> StateFunction:
        fn = self.functions[term.name]
        if fn.decoration != term.decoration:
            raise ValueError(f"{term.name}: decoration mismatch")
        if tuple(self.carriers[term.src]) != fn.src or \
                tuple(self.carriers[term.tgt]) != fn.tgt:
            raise ValueError(f"{term.name}: carrier mismatch")
        return fn

    def evaluate(self, term: DecoratedTerm, state, arg):
        """Apply a term's interpretation: returns (state', value)."""
        fn = self.interpret(term)
        if state not in self.states:
            raise ValueError(f"unknown state {state!r}")
        if arg not in fn.src:
            raise ValueError(f"argument {arg!r} outside the carrier "
                             f"of {term.src}")
        return fn(state, arg)


def all_state_functions(states, src, tgt):
    """Every total function 𝕊×X -> 𝕊×Y, in a deterministic order."""
    keys = [(s, x) for s in states for x in src]
    outs = [(s, y) for s in states for y in tgt]
    for choice in itertools.product(outs, repeat=len(keys)):
        yield StateFunction(states=tuple(states), src=tuple(src),
                            tgt=tuple(tgt),
                            table=dict(zip(keys, choice)))
