"""
Growing a graph toward the extension property
==============================================

"""

from meklerkit import (
    GraphIso,
    audit_extension_property,
    check_extension_property,
    cycle_graph,
    extend,
    extend_iso,
)

# one extension round adjoins a fresh vertex for every subset of the old
# vertex set, joined to exactly that subset
g = cycle_graph(5)
big = extend(g)
print("C5:", g.n, "vertices ->", big.n, "vertices,", big.edge_count(), "edges")

# the new vertices carry their subset as a label
print("label of vertex 5:", big.labels[5])
print("label of vertex 20:", big.labels[20])

# after one round, every disjoint pair (A, B) of original vertex sets has
# a witness adjacent to all of A and none of B
w = check_extension_property(big, (0, 2), (1, 3, 4))
print("witness for A={0,2}, B={1,3,4}:", w)

# the audit quantifies over all 3^5 disjoint ordered pairs
audit = audit_extension_property(big, m=5, universe=range(5))
print("audited pairs:", audit.pair_count, "failures:", len(audit.failures))

# a graph automorphism extends canonically: subset vertices map elementwise
rot = GraphIso(g, g, (1, 2, 3, 4, 0))
blown_up = extend_iso(rot)
print("rotation extends to", len(blown_up.mapping), "vertices")
print("image of vertex 5 under the extended map:", blown_up.apply(5))

# iterating the extension explodes quickly: 5 -> 37 -> 37 + 2^37 vertices,
# so the second round is refused by the vertex budget
try:
    extend(big)
except Exception as exc:
    print("second round refused:", exc)
