"""sketchlab: limit sketches, finite specifications, pushout-based inference.

The core layers, bottom up:

- :mod:`sketchlab.sketch` — finite limit sketches and their morphisms
- :mod:`sketchlab.category` — the free category a sketch presents
- :mod:`sketchlab.spec` — finite realizations and homomorphism search
- :mod:`sketchlab.pushout` — pointwise pushouts and amalgamation
- :mod:`sketchlab.logic` — logics as sketches with fraction-shaped rules
- :mod:`sketchlab.saturation` — bounded free-theory generation
- :mod:`sketchlab.fractions` — rule application, proofs, entailment
- :mod:`sketchlab.builtin` — the shipped logics (eq, eq*, dec, mp)
- :mod:`sketchlab.translate` — morphisms between logics and transposition
- :mod:`sketchlab.elements` — categories of elements of set-valued functors
- :mod:`sketchlab.semantics` — finite state-passing models and products
- :mod:`sketchlab.minilang` — a small imperative expression language
- :mod:`sketchlab.textio` — textual formats and JSON export
- :mod:`sketchlab.service` — handlers shared by the HTTP app and the CLI
"""

from .sketch import (Cone, LimitSketch, SketchMorphism, make_sketch,
                     validate_sketch, check_sketch_morphism,
                     identity_sketch_morphism)
from .category import (PresentedCategory, TruncationError, generate_category,
                       representable)
from .spec import (SpecMorphism, Specification, check_spec_morphism,
                   compose_morphisms, find_homomorphisms, identity_morphism,
                   make_spec, specs_isomorphic, validate_spec)
from .pushout import PushoutError, PushoutResult, amalgamate, pushout
from .logic import (DepthWitness, DiagrammaticLogic, Fraction, Rule,
                    check_logic, check_rule, identity_fraction)
from .saturation import (DEFAULT_BUDGET, DEFAULT_DEPTH_CAP, FIXPOINT,
                         TRUNCATED, SaturationResult, saturate)
from .fractions import (CONFIRMED, INCONCLUSIVE, REFUTED, ProofError,
                        ProofResult, ProofScript, ProofStep, apply_rule,
                        check_entailment, compose_fractions, run_proof)
from .builtin import (DecBuilder, EqBuilder, builtin_logics, get_logic,
                      mp_spec)
from .translate import (LogicMorphism, TranslationResult, erase_decorations,
                        far_morphism, far_transpose_to_decorated,
                        far_transpose_to_plain, forget_decorations,
                        near_morphism, near_transpose_to_decorated,
                        near_transpose_to_pointed, reread_as_decorated,
                        set_fragment_theory, state_expand, thread_state)
from .elements import (CategoryView, ElementsCategory, SetFunctor,
                       category_of_elements, check_category_view,
                       check_functor, view_from_presented, view_from_spec)
from .semantics import (FiniteModel, StateFunction, all_state_functions,
                        check_decorated_equation, compose as compose_state,
                        convert, pure_function, semi_pure_product,
                        sequential_product)
from .minilang import (EvalResult, MiniLangError, decorate_program,
                       evaluate_program, grammar_spec, is_pure,
                       parse_program, program_variables)
from .textio import (Document, ParseError, morphism_to_json, parse_document,
                     sketch_to_json, spec_to_json)

__version__ = "0.1.0"
