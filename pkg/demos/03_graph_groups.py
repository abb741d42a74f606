"""
Class-2 exponent-p groups built from graphs
============================================

"""

from meklerkit import build_mekler, cycle_graph, path_graph, recover_graph

# vertices become generators; adjacent generators commute, non-adjacent
# ones get an independent central commutator coordinate
pc = build_mekler(cycle_graph(5), 3)
print("group order:", pc.order_expression(), "=", pc.order())
print("vertex coordinates:", pc.n, " pair coordinates:", pc.num_pairs)

# elements are (a, b) coordinate vectors; multiplication collects letters
# and pays for each swap with a commutator entry
g0, g1, g2 = pc.generator(0), pc.generator(1), pc.generator(2)
print("g0 * g2 :", (g0 * g2).a, (g0 * g2).b)
print("g2 * g0 :", (g2 * g0).a, (g2 * g0).b)

# the commutator of non-adjacent vertices is the corresponding basis vector
c = pc.commutator(g0, g2)
print("[g0, g2]:", c.b, "==", pc.commutator_basis(0, 2).b)

# adjacent vertices commute
print("[g0, g1] is identity:", pc.commutator(g0, g1) == pc.identity())

# every element has order p
u = pc.element((1, 2, 0, 0, 1), (2, 1, 0, 0, 2))
print("u^3 == e:", pc.power(u, 3) == pc.identity())

# the center of the pentagon group is exactly the commutator block
z = pc.center()
print("center order:", z.order_expression())

# the graph is recoverable from commutation of the generators, which is
# what makes the construction injective on nice graphs
back = recover_graph(pc)
print("recovered == original:", back == cycle_graph(5))

# a universal vertex (adjacent to everything) slips into the center
star = build_mekler(path_graph(3), 3)
print("P3 universal vertices:", star.center().universal_vertices)
