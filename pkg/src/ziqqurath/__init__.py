"""Finite strict n-groupoids, homotopy pullbacks and the exact sequences built from them."""

from .core import (CellRef, Inconclusive, NCat, NotComposable, Report, compose_cells, hom,
                   iso_search, product, suspension_tilde, terminal, unit_cell, validate)
from .morphisms import (LawReport, Morphism, Transf2, Transf3, compose0_functors, compose2,
                        law_suite, star_compose, validate_morphism, vcompose,
                        whisker0_3cell, whisker1_3cell, whisker_functor_2cell)
from .limits import HFiber, HPullback, h_fiber, h_kernel, h_pullback, mediate, mediate2, strict_pullback
from .functors import (ComparisonS, LoopSpace, NotAGroupoid, comparison_S, discretize, eta,
                       eta_and_triangles, loop_monoid_check, omega, path_space, pi0, pi1)
from .exactness import (ExactTriple, Ziqqurath, classify, connecting, fibration_sequence,
                        is_exact, is_ngroupoid, kv_condition, weak_inverses, ziqqurath)

__version__ = "0.1.0"
