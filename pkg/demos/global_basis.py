"""Compute monomial vectors A(Y) and global basis vectors G(Y) for reduced walls.

    python demos/global_basis.py
"""

from c2fock import A_basis, G_basis, G_table, parse_wall
from c2fock.algebra import Weight
from c2fock.fock import divided_power_f
from c2fock.globalbasis import Q_closed_form, peel_sequence, q_context


def show(E):
    print(f"  {E.kind}({E.head.literal()}) = {E.vector!r}")
    for Z, c in E.gamma:
        print(f"    corrected by ({c}) G({Z.literal()})")


print("Peeling a reduced wall gives the operator word that builds it:")
for text in ("L1[3,1]", "L1[4,1]", "L2[2,2,2,2]"):
    print(f"  {text}: {peel_sequence(parse_wall(text)).monomial()}")

print("\nAll global basis vectors of weight Λ1 - (α0 + 2α1 + α2), highest first:")
for E in G_table(1, Weight(1, (1, 2, 1))):
    show(E)

print("\nAn eight-block wall over Λ2 where A(Y) is not yet G(Y):")
Y = parse_wall("L2[2,2,2,2]")
show(A_basis(Y))
show(G_basis(Y))

print("\nThe first correction needs seven blocks over Λ1:")
show(G_basis(parse_wall("L1[4,2:0,1]")))

print("\nCoefficients of divided powers factor over the unique chain of single moves:")
Y = parse_wall("L1[3]")
print(f"  f_1^(2) {Y.literal()} = {divided_power_f(1, 2, Y)!r}")
for Z in (parse_wall("L1[4,1]"), parse_wall("L1[5]")):
    ctx = q_context(Y, Z, 1)
    print(f"  chain {' -> '.join(W.literal() for W in ctx.chain)}: "
          f"step coefficients {[str(c) for c in ctx.step_coeffs]}, "
          f"J1={sorted(ctx.J1)} J2={sorted(ctx.J2)} J3={sorted(ctx.J3)}, "
          f"closed form {Q_closed_form(Y, Z, 1, 2)}")
