"""Apply the quantum group generators to walls and check the defining relations.

    python demos/fock_action.py
"""

from c2fock import FockVector, act_e, act_f, enumerate_walls, parse_wall, vacuum
from c2fock.fock import check_ef_relation, check_serre, divided_power_f, ef_commutator

print("Building up from the ground state over Λ1 with f_1, f_0, f_2, f_1:")
v = vacuum(1)
for i in (1, 0, 2, 1):
    v = act_f(i, v)
    print(f"  f_{i}: {v!r}")

print("\nRemoving a 1-block from a tall wall picks up powers of q from the neighbouring columns:")
Y = parse_wall("L1[5,4,4,4,1]")
print(f"  e_1 {Y.literal()} = {act_e(1, Y)!r}")

print("\nA half-block added over Λ2 can land in several places:")
Y = parse_wall("L2[4:0,4:2,4:0,3]")
print(f"  f_2 {Y.literal()} = {act_f(2, Y)!r}")

print("\nDivided powers stay integral:")
print(f"  f_1^(2) L1[3] = {divided_power_f(1, 2, parse_wall('L1[3]'))!r}")

print("\nThe commutator [e_i, f_i] acts on a wall by a quantum integer:")
Y = parse_wall("L1[3,1]")
for i in range(3):
    lhs, rhs = ef_commutator(Y, i, i)
    print(f"  i={i}: [e_i,f_i] {Y.literal()} = {lhs!r}")

checked = 0
for g in range(3):
    for Y in enumerate_walls(g, 6):
        for i in range(3):
            for j in range(3):
                assert check_ef_relation(Y, i, j)
                if i != j:
                    assert check_serre(i, j, Y)
                checked += 1
print(f"\nCommutator and Serre relations hold on {checked} (wall, i, j) cases with at most 6 blocks.")

print("\nVectors round-trip through JSON:")
v = act_e(1, parse_wall("L1[5,4,4,4,1]"))
text = v.to_json()
print(f"  {text}")
assert FockVector.from_json(text) == v
