"""Walk through Young walls over each ground state and the crystal they form.

    python demos/walls_and_crystal.py
"""

from c2fock import crystal_graph, ground_wall, is_reduced, parse_wall, reduced_form
from c2fock.crystal import F_tilde, maximal_vectors, signature, wall_of_partition
from c2fock.youngwall import Partition, associated_partition, peel


def show(Y):
    print(f"  {Y.literal():<16} partition={associated_partition(Y).parts} "
          f"reduced={is_reduced(Y)} weight={Y.weight()}")


print("Ground states and their first few walls:")
for g in range(3):
    Y = ground_wall(g)
    show(Y)
    for i in (g, 1, 0, 2):
        Z = F_tilde(Y, i)
        if Z is not None:
            Y = Z
            show(Y)

print("\nSignatures decide where the crystal operators act. Over Λ1, after adding [3,1]:")
Y = parse_wall("L1[3,1]")
for i in range(3):
    s = signature(Y, i)
    print(f"  i={i}: eps={s.eps} phi={s.phi} F~ -> {F_tilde(Y, i) and F_tilde(Y, i).literal()}")

print("\nWalls that are not reduced slide to a reduced wall with the same weight:")
for text in ("L1[15,7,1]", "L2[6,6]", "L0[4:2]"):
    Y = parse_wall(text)
    print(f"  {text} -> {reduced_form(Y).literal()}")

print("\nPeeling removes one ladder of a single color:")
Y = parse_wall("L1[8,5,1]")
Ybar, i, r = peel(Y)
print(f"  {Y.literal()} loses {r} blocks of color {i}: {Ybar.literal()}")

graph = crystal_graph(1, 5)
print(f"\nReduced walls over Λ1 with at most 5 blocks: {len(graph.nodes)} nodes, {len(graph.edges)} arrows")
for a, b, i in graph.edges:
    print(f"  {a.literal()} --{i}--> {b.literal()}")

print("\nMaximal vectors of weight Λ1 - mδ are stacks of δ-columns, one per partition of m:")
for m in range(5):
    print(f"  m={m}: " + ", ".join(Y.literal() for Y in maximal_vectors(1, m)))
print(f"  the stack for (2,1,1) is {wall_of_partition(1, Partition((2, 1, 1))).literal()}")
