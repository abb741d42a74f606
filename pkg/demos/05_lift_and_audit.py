"""
Lifting homomorphisms and auditing the extension property
==========================================================

"""

from meklerkit import (
    Hom,
    OmniQuery,
    Perm,
    PermGroup,
    cyclic_group,
    enumerate_homs,
    lift_hom,
    omni_audit,
    omni_check,
    symmetric_group,
)

# every homomorphism psi: F -> G factors as a surjection from a subgroup
# of F (+) G that contains an embedded copy of F
f, g = symmetric_group(3), cyclic_group(2)
homs = enumerate_homs(f, g)
print("homs S3 -> C2:", len(homs))
psi = next(h for h in homs if not h(f.gens[0]).is_identity())
wit = lift_hom(f, g, psi)
print("witness order:", wit.group.order())
print("embedding injective:", wit.embed.is_injective())
print("surjection onto C2:", wit.surj.is_surjective())
print("triangle commutes:", all(wit.surj(wit.embed(x)) == psi(x) for x in f.elements()))

# a single query: can psi(F) and one more element generate a C4 image
# inside some finite subgroup of the ambient group
s4 = symmetric_group(4)
f_sub = PermGroup(4, [Perm((1, 0, 3, 2))], known_order=2)
c4 = cyclic_group(4)
psi = Hom(f_sub, c4, [c4.gens[0] * c4.gens[0]])
q = OmniQuery(s4, f_sub, c4, psi, c4.gens[0])
q.validate()
found = omni_check(q, search_bound=24)
print("S4 carries the C4 extension:", found is not None)
print("witness subgroup order:", found.subgroup.order())

# inside S3 the same target is impossible: no subgroup order divides by 4,
# so the exhaustive answer None is a proof within the bound
s3 = symmetric_group(3)
triv = PermGroup(3, [], known_order=1)
q3 = OmniQuery(s3, triv, c4, Hom(triv, c4, []), c4.gens[0])
print("S3 carries it:", omni_check(q3, search_bound=6) is not None)

# the audit sweeps every subgroup F and every small catalog target G
report = omni_audit(symmetric_group(3), max_f=3, max_g=6)
print("rows:", len(report.rows), "unwitnessed:", len(report.unwitnessed))
print(report.format_text()[:400])
