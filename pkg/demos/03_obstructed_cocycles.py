"""
Cycles that fail to commute, up to an idempotent
================================================

Going once around a closed path of maps need not give the identity.  When
every map absorbs the loop at its source, the loop is an idempotent: the
obstruction.
"""

import random

from regobs import instances, obstruction_degree, verify_cocycle
from regobs.cocycle import cocycle_morphism_check, conjugate_cocycle, lift_construct
from regobs.generators import random_lift_data

for name, c in [("invertible pair", instances.invertible_pair()),
                ("projection pair", instances.idempotent_pair()),
                ("nilpotent triple", instances.nilpotent_triple())]:
    r = verify_cocycle(c)
    if r:
        print(f"{name}: regular, obstruction trivial = {r.trivial}")
    else:
        print(f"{name}: fails at f{r.failing_index}, witness {r.witness.to_lists()}")

# Obstruction degree: the shortest supplied cycle through X1 with a
# non-identity obstruction.
cat = instances.mixed_category()
cycles = [cat.cocycle("a", "a_inv"), cat.cocycle("p1", "p2", "p3")]
print("degree at X1 with the pair only:", obstruction_degree(cycles[:1], "X1"))
print("degree at X1 with the triangle :", obstruction_degree(cycles, "X1"))

# Any invertible cycle on small retracts lifts to a regular cycle on bigger
# spaces; the obstruction is inclusion after projection.
rng = random.Random(1)
data = random_lift_data(rng, 3)
_, c, ob = lift_construct(data)
print("lifted dims", data.big_dims, "retract dims", data.small_dims)
for i in range(c.n):
    print(f"  rank e_X{i + 1} = {ob[i].rank()}")

# Conjugating by invertible maps gives an equivalent cycle.
c = instances.idempotent_pair()
d = conjugate_cocycle(c, [instances.A, instances.A])
print("conjugate is", cocycle_morphism_check(c, d, [instances.A, instances.A]).value)
