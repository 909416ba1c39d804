"""Exact arithmetic and verification toolkit for the H3 fusion category.

The package stores the complete two-parameter F-symbol solution with exact
algebraic numbers (a degree-8 tower of quadratic extensions), verifies the
pentagon, triangle, orthogonality and square-pop identities symbolically,
re-derives the skein constants from diagram evaluation, and re-solves small
fusion categories with a seeded constraint-propagation solver.
"""

from .exactnum import (FieldScalar, ParamScalar, Rational, TowerSpec, approx,
                       field_add, field_inv, field_mul, field_sqrt, is_zero,
                       named_constant, param_add, param_mul, param_substitute,
                       parse_scalar, render_scalar, tower_preset)
from .fsymbols import (FSymbolTable, GaugeAssignment, all_ones_table,
                       build_h3_table, parse)
from .fusionring import (FBlock, FKey, FusionRing, ObjectLabel, builtin_ring,
                         check_ring, enumerate_fkeys, f_blocks, n)
from .pentagon import (PentagonInstance, VerifyReport, check_additional,
                       check_addtriv, check_seeds, check_triangle, classify,
                       count_instances, enumerate_instances,
                       find_failing_instance, negate_entry, residual,
                       verify_all)
from .skein import (SkeinParams, TrivalentGraph, c4_basis, derive_square_pop,
                    evaluate_closed, gram_matrix, h3_constants, h3_params,
                    pair, square_graph, square_pop_closed_form)
from .solver import (PartialTable, SolveReport, compare_to_dataset, propagate,
                     seed, solve)

__version__ = "1.0.0"
