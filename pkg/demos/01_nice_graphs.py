"""
Nice graphs: triangle-free, square-free, separating
====================================================

"""

from meklerkit import (
    complete_graph,
    cycle_graph,
    find_square,
    find_triangle,
    is_nice,
    path_graph,
    petersen_graph,
)

# the pentagon is the smallest classic example of a nice graph
c5 = cycle_graph(5)
report = is_nice(c5)
print("C5 nice:", report.is_nice)
print("C5 strict (witness must differ from both endpoints):", report.strict_is_nice)

# the Petersen graph is nice too: girth 5 kills triangles and squares
print("Petersen nice:", is_nice(petersen_graph()).is_nice)

# a triangle cannot be nice; the report names the offending structure
k3 = complete_graph(3)
bad = is_nice(k3)
print("K3 nice:", bad.is_nice, "because of", bad.certificate)
print("triangle found directly:", find_triangle(k3))

# short paths pass the triangle and square tests but the endpoints of an
# edge may only be separated by each other; the strict reading rejects that
p2 = path_graph(2)
rep2 = is_nice(p2)
print("P2 nice:", rep2.is_nice, "strict:", rep2.strict_is_nice)
print("P2 pairs separated only by themselves:", rep2.self_only_pairs)

# squares are caught the same way as triangles
c4 = cycle_graph(4)
print("C4 nice:", is_nice(c4).is_nice, "square:", find_square(c4))
