"""A tour of the exact number tower behind the F-symbol data.

Every value in the data set lives in the degree-8 field obtained from the
rationals by adjoining, in order,

    r13 = sqrt(13)
    rA  = sqrt(A)            with A = (r13 - 3) / 2
    rE  = sqrt(6 * (r13 + 1))

Scalars are coordinate vectors over the eight monomials in these roots, so
every comparison below is exact: no floats are involved until we ask for an
approximation at the very end.
"""

from fusioncat import approx, field_sqrt, named_constant, render_scalar, tower_preset

tower = tower_preset("h3")
r13 = tower.gen(0)

print("The quantum dimension of the six-object category's big objects:")
d_rho = named_constant("dRho")
print(f"  d_rho = {render_scalar(d_rho)} ~ {approx(d_rho):.12f}")

print("\nIts inverse is the constant A from the data tables -- exactly:")
a = named_constant("A")
print(f"  A = {render_scalar(a)}")
print(f"  d_rho * A == 1?  {d_rho * a == 1}")

print("\nThe nested radicals D+- multiply out to -B/3:")
dp, dm, b = named_constant("Dplus"), named_constant("Dminus"), named_constant("B")
print(f"  D+ = {render_scalar(dp)}")
print(f"  D- = {render_scalar(dm)}")
print(f"  D+ * D- + B/3 == 0?  {(dp * dm + b / 3).is_zero()}")

print("\nOrthogonality row sums close exactly, e.g. D+^2 + D-^2 + C^2:")
c = named_constant("C")
print(f"  = {render_scalar(dp ** 2 + dm ** 2 + c ** 2)}")

print("\nSquare roots are found inside the tower when they exist:")
print(f"  sqrt(d_rho) = {render_scalar(field_sqrt(d_rho))}")
print(f"  sqrt(2) in this tower: {field_sqrt(tower.from_rational(2))}")

print("\nText round-trip uses the canonical grammar of the data-set files:")
print(f"  c1 renders as {render_scalar(named_constant('c1'))!r}")
