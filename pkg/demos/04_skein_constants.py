"""Deriving the square-pop coefficients from diagram evaluation.

Closed trivalent diagrams reduce by three local moves: a free circle is
worth d, a bigon face b, a triangle face t.  Pairing the four-point basis
diagrams against each other gives an exact Gram matrix; solving the linear
system expresses the square diagram over that basis.  At the category's
parameters the two coefficients are the constants that also appear in the
square-pop identities satisfied by the F-symbol table.
"""

from fusioncat import (SkeinParams, c4_basis, derive_square_pop,
                       evaluate_closed, gram_matrix, h3_constants, h3_params,
                       named_constant, pair, render_scalar, square_graph,
                       square_pop_closed_form)
from fusioncat.skein import circle_graph, tetrahedron_graph, theta_graph

params = SkeinParams.from_rationals(3, 2, 5)
print("closed evaluations at generic (d, b, t) = (3, 2, 5):")
print(f"  circle      -> {render_scalar(evaluate_closed(circle_graph(), params))}")
print(f"  theta       -> {render_scalar(evaluate_closed(theta_graph(), params))}")
print(f"  tetrahedron -> {render_scalar(evaluate_closed(tetrahedron_graph(), params))}")

basis = c4_basis()
gram = gram_matrix(basis, params)
print("\nGram matrix of the four-point basis:")
for row in gram:
    print("  " + "  ".join(f"{render_scalar(v):>8}" for v in row))

derived = derive_square_pop(params)
closed = square_pop_closed_form(params)
print(f"\nsquare over the basis, solved:  cup={render_scalar(derived[0])} "
      f"tri={render_scalar(derived[1])}")
print(f"printed closed forms:           cup={render_scalar(closed[0])} "
      f"tri={render_scalar(closed[1])}")

print("\nat the category's own parameters:")
c1, c2, t, b, d = h3_constants()
gamma_cup, gamma_tri = derive_square_pop(h3_params())
print(f"  cup coefficient = {render_scalar(gamma_cup)} "
      f"(the table constant c1: {gamma_cup == c1})")
print(f"  tri coefficient squared = {render_scalar(gamma_tri * gamma_tri)} "
      f"(equals c2^2: {gamma_tri == c2})")
print(f"  t / sqrt(d) = {render_scalar(t / b)} "
      f"(the all-rho diagonal entry -B: {t / b == -named_constant('B')})")
