"""
Tensor products, duals and the evaluation pairing
=================================================
"""

from regobs import dual_cocycle, instances, pairing_check, tensor_cocycles, verify_cocycle

pair, proj = instances.invertible_pair(), instances.idempotent_pair()
t = tensor_cocycles(pair, proj)
r = verify_cocycle(t)
print("tensor objects:", t.objects)
print("obstruction at", t.objects[0], "=\n" + r.obstruction[0].pretty("  "))
# The obstruction of the product is the product of obstructions.
print("equals I (x) P:", r.obstruction[0] == verify_cocycle(pair).obstruction[0].kron(instances.P))

d = dual_cocycle(proj)
print("dual arrows:", d.arrows, " double dual is the original:", dual_cocycle(d).same_data(proj))
print("pairing identities hold:", pairing_check(proj))

# The one-object Brandt semigroup: every element is regular with a unique
# partner, and each pair is a 2-cycle on a single object.
for c in instances.brandt_cocycles():
    e = verify_cocycle(c).obstruction[0]
    print(f"  {c.arrows}: obstruction {e.to_lists()}")
