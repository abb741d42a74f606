"""Class-2 exponent-p groups of graphs, in exact normal form.

For an odd prime p and a finite graph G, the group here is the quotient of
the free nilpotent-class-2 exponent-p group on the vertices by the relations
[x, y] = 1 for every edge x ~ y.  Elements have a unique normal form

    prod_v g_v^(a_v)  *  prod_(x<y non-edge) [g_x, g_y]^(b_xy)

so an element is the pair of exponent vectors (a, b) over Z_p, and the whole
group has exactly p^(n + C(n,2) - |E|) elements without ever enumerating.

The collection rule for multiplying normal forms picks up one commutator per
inversion when the right factor's generators move left past the left
factor's: with [u, v] = u^-1 v^-1 u v and central commutators,

    g_y^s * g_x^t = g_x^t * g_y^s * [g_x, g_y]^(-s t)      for x < y,

which gives the coordinate rule b''_xy = b_xy + b'_xy - a_y * a'_x.  The
sign convention is pinned by the exhaustive associativity and relation
oracle in the test suite, not trusted from the derivation above.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParseError
from .graphs import Graph

TABLE_LIMIT = 6561  # largest order for a dense multiplication table


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PcElement:
    group: "PcGroup"
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __mul__(self, other: "PcElement") -> "PcElement":
        return self.group.multiply(self, other)

    def __invert__(self) -> "PcElement":
        return self.group.inverse(self)

    def __pow__(self, k: int) -> "PcElement":
        return self.group.power(self, k)

    def is_identity(self) -> bool:
        return not any(self.a) and not any(self.b)

    def __repr__(self):
        return f"pc a={list(self.a)} b={list(self.b)}"


class PcGroup:
    """The graph group of (graph, p); arithmetic is pure coordinate algebra."""

    def __init__(self, graph: Graph, p: int):
        if not is_odd_prime(p):
            raise ValueError(f"exponent must be an odd prime, got {p}")
        self.graph = graph
        self.p = p
        self.nonedges = tuple(
            (x, y)
            for x in range(graph.n)
            for y in range(x + 1, graph.n)
            if not graph.adjacent(x, y)
        )
        self.pair_index = {pair: t for t, pair in enumerate(self.nonedges)}
        # per-pair component indices, used by the vectorized rules
        self._xs = np.array([x for x, _ in self.nonedges], dtype=np.int64)
        self._ys = np.array([y for _, y in self.nonedges], dtype=np.int64)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def num_pairs(self) -> int:
        return len(self.nonedges)

    def __eq__(self, other):
        return (
            isinstance(other, PcGroup)
            and self.graph == other.graph
            and self.p == other.p
        )

    def __hash__(self):
        return hash((self.graph, self.p))

    def order(self) -> int:
        return self.p ** (self.n + self.num_pairs)

    def order_expression(self) -> str:
        return f"{self.p}^{self.n + self.num_pairs}"

    # -- element constructors ------------------------------------------------

    def element(self, a, b) -> PcElement:
        a = tuple(int(x) % self.p for x in a)
        b = tuple(int(x) % self.p for x in b)
        if len(a) != self.n or len(b) != self.num_pairs:
            raise ValueError("coordinate vectors have wrong length")
        return PcElement(self, a, b)

    def identity(self) -> PcElement:
        return PcElement(self, (0,) * self.n, (0,) * self.num_pairs)

    def generator(self, x: int) -> PcElement:
        if not 0 <= x < self.n:
            raise ValueError(f"no vertex {x}")
        a = [0] * self.n
        a[x] = 1
        return PcElement(self, tuple(a), (0,) * self.num_pairs)

    def generators(self) -> list[PcElement]:
        return [self.generator(x) for x in range(self.n)]

    def commutator_basis(self, x: int, y: int) -> PcElement:
        """[g_x, g_y] for a non-adjacent pair x < y."""
        t = self.pair_index.get((x, y))
        if t is None:
            raise ValueError(f"({x},{y}) is not a non-edge pair with x < y")
        b = [0] * self.num_pairs
        b[t] = 1
        return PcElement(self, (0,) * self.n, tuple(b))

    def _own(self, u: PcElement):
        if u.group != self:
            raise ValueError("element belongs to a different group")

    # -- arithmetic ----------------------------------------------------------

    def multiply(self, u: PcElement, v: PcElement) -> PcElement:
        self._own(u)
        self._own(v)
        p = self.p
        a = tuple((x + y) % p for x, y in zip(u.a, v.a))
        b = tuple(
            (bu + bv - u.a[y] * v.a[x]) % p
            for (x, y), bu, bv in zip(self.nonedges, u.b, v.b)
        )
        return PcElement(self, a, b)

    def inverse(self, u: PcElement) -> PcElement:
        self._own(u)
        p = self.p
        a = tuple((-x) % p for x in u.a)
        b = tuple(
            (-bu - u.a[x] * u.a[y]) % p
            for (x, y), bu in zip(self.nonedges, u.b)
        )
        return PcElement(self, a, b)

    def commutator(self, u: PcElement, v: PcElement) -> PcElement:
        """[u, v] = u^-1 v^-1 u v, by the closed bilinear form."""
        self._own(u)
        self._own(v)
        p = self.p
        b = tuple(
            (u.a[x] * v.a[y] - u.a[y] * v.a[x]) % p
            for (x, y) in self.nonedges
        )
        return PcElement(self, (0,) * self.n, b)

    def power(self, u: PcElement, k: int) -> PcElement:
        self._own(u)
        p = self.p
        k = int(k)
        a = tuple((k * x) % p for x in u.a)
        c2 = k * (k - 1) // 2  # exact for negative k too; checked against repeated products
        b = tuple(
            (k * bu - c2 * u.a[x] * u.a[y]) % p
            for (x, y), bu in zip(self.nonedges, u.b)
        )
        return PcElement(self, a, b)

    def element_order(self, u: PcElement) -> int:
        return 1 if u.is_identity() else self.p

    # -- center --------------------------------------------------------------

    def universal_vertices(self) -> tuple[int, ...]:
        """Vertices adjacent to every other vertex."""
        return tuple(
            v for v in range(self.n) if len(self.graph.neighbors(v)) == self.n - 1
        )

    def center(self) -> "CenterReport":
        return CenterReport(self.p, self.universal_vertices(), self.num_pairs)

    def is_central(self, u: PcElement) -> bool:
        self._own(u)
        universal = set(self.universal_vertices())
        return all(u.a[v] == 0 for v in range(self.n) if v not in universal)

    # -- enumeration and dense tables (small groups only) ---------------------

    def coordinate_count(self) -> int:
        return self.n + self.num_pairs

    def all_elements(self):
        """Iterate all elements in mixed-radix order (index order)."""
        for idx in range(self.order()):
            yield self.element_from_index(idx)

    def element_index(self, u: PcElement) -> int:
        self._own(u)
        idx = 0
        for digit in u.a + u.b:
            idx = idx * self.p + digit
        return idx

    def element_from_index(self, idx: int) -> PcElement:
        dims = self.coordinate_count()
        digits = [0] * dims
        for t in range(dims - 1, -1, -1):
            idx, digits[t] = divmod(idx, self.p)
        return PcElement(self, tuple(digits[: self.n]), tuple(digits[self.n:]))

    def coordinate_matrix(self) -> tuple[np.ndarray, np.ndarray]:
        """All elements as stacked coordinate arrays (A: N x n, B: N x m)."""
        total = self.order()
        if total > TABLE_LIMIT:
            raise ValueError(f"group order {total} exceeds table limit {TABLE_LIMIT}")
        dims = self.coordinate_count()
        grid = np.zeros((total, dims), dtype=np.int64)
        idx = np.arange(total)
        for t in range(dims - 1, -1, -1):
            grid[:, t] = idx % self.p
            idx //= self.p
        return grid[:, : self.n], grid[:, self.n:]

    # -- vectorized coordinate rules ------------------------------------------

    def multiply_arrays(self, a1, b1, a2, b2):
        p = self.p
        a = (a1 + a2) % p
        if self.num_pairs:
            corr = a1[..., self._ys] * a2[..., self._xs]
            b = (b1 + b2 - corr) % p
        else:
            b = (b1 + b2) % p
        return a, b

    def inverse_arrays(self, a1, b1):
        p = self.p
        a = (-a1) % p
        if self.num_pairs:
            b = (-b1 - a1[..., self._xs] * a1[..., self._ys]) % p
        else:
            b = (-b1) % p
        return a, b

    def commutator_arrays(self, a1, a2):
        p = self.p
        if self.num_pairs:
            return (a1[..., self._xs] * a2[..., self._ys]
                    - a1[..., self._ys] * a2[..., self._xs]) % p
        shape = np.broadcast_shapes(a1.shape[:-1], a2.shape[:-1])
        return np.zeros(shape + (0,), dtype=np.int64)

    def rank_arrays(self, a, b) -> np.ndarray:
        """Mixed-radix element indices for stacked coordinate arrays."""
        dims = self.coordinate_count()
        if dims and self.p ** dims > 2 ** 62:
            raise ValueError("group too large for int64 element indices")
        weights = self.p ** np.arange(dims - 1, -1, -1, dtype=np.int64)
        coords = np.concatenate([a, b], axis=-1)
        return coords @ weights

    def multiplication_table(self) -> np.ndarray:
        """Dense index table T[i, j] = index of element_i * element_j."""
        A, B = self.coordinate_matrix()
        total = A.shape[0]
        table = np.empty((total, total), dtype=np.int64)
        for i in range(total):
            a, b = self.multiply_arrays(A[i], B[i], A, B)
            table[i] = self.rank_arrays(a, b)
        return table


def build_mekler(graph: Graph, p: int) -> PcGroup:
    """The graph group of (graph, p); rejects p = 2 and composite p."""
    return PcGroup(graph, p)


def recover_graph(pc: PcGroup) -> Graph:
    """Reconstruct the graph from commutation of designated generators.

    Edges are read off the arithmetic (x ~ y iff [g_x, g_y] = 1), not copied
    from the input, so building and recovering is a genuine round trip.
    """
    gens = pc.generators()
    edges = [
        (x, y)
        for x in range(pc.n)
        for y in range(x + 1, pc.n)
        if pc.commutator(gens[x], gens[y]).is_identity()
    ]
    return Graph(pc.graph.labels, edges)


@dataclass(frozen=True)
class CenterReport:
    """The center: all (a, b) with a supported on universal vertices only."""

    p: int
    universal_vertices: tuple[int, ...]
    pair_count: int

    @property
    def log_order(self) -> int:
        return len(self.universal_vertices) + self.pair_count

    def order(self) -> int:
        return self.p**self.log_order

    def order_expression(self) -> str:
        return f"{self.p}^{self.log_order}"


# ---------------------------------------------------------------------------
# transport along graph inclusions
# ---------------------------------------------------------------------------

class PcHom:
    """The hom induced by an adjacency-preserving-and-reflecting injection.

    Generators map to generators along the vertex injection.  Preserving
    adjacency makes the map well defined (edge relations stay edge
    relations); reflecting it keeps non-edge commutator coordinates alive,
    which is what makes the transport injective.
    """

    def __init__(self, source: PcGroup, target: PcGroup, vertex_map):
        vm = tuple(int(v) for v in vertex_map)
        if len(vm) != source.n:
            raise ValueError("vertex map must cover every source vertex")
        if len(set(vm)) != len(vm):
            raise ValueError("vertex map must be injective")
        for v in vm:
            if not 0 <= v < target.n:
                raise ValueError(f"target vertex {v} out of range")
        for x in range(source.n):
            for y in range(x + 1, source.n):
                if source.graph.adjacent(x, y) != target.graph.adjacent(vm[x], vm[y]):
                    raise ValueError(
                        f"vertex map does not preserve and reflect adjacency "
                        f"on pair ({x},{y})"
                    )
        if source.p != target.p:
            raise ValueError("source and target exponents differ")
        self.source = source
        self.target = target
        self.vertex_map = vm
        self.monotone = all(vm[i] < vm[i + 1] for i in range(len(vm) - 1))

    def apply(self, u: PcElement) -> PcElement:
        self.source._own(u)
        if self.monotone:
            a, b = self._transport(np.array(u.a), np.array(u.b))
            return self.target.element(a.tolist(), b.tolist())
        # general injections may reorder vertices; rebuild through the
        # target arithmetic so collection corrections are never skipped
        acc = self.target.identity()
        for x in range(self.source.n):
            if u.a[x]:
                acc = acc * self.target.power(
                    self.target.generator(self.vertex_map[x]), u.a[x]
                )
        b = [0] * self.target.num_pairs
        for (x, y), coeff in zip(self.source.nonedges, u.b):
            tx, ty = self.vertex_map[x], self.vertex_map[y]
            if tx < ty:
                b[self.target.pair_index[(tx, ty)]] += coeff
            else:
                b[self.target.pair_index[(ty, tx)]] -= coeff
        return acc * self.target.element((0,) * self.target.n, b)

    def _transport(self, a, b):
        """Pure coordinate transport; valid when the injection is monotone."""
        ta = np.zeros(a.shape[:-1] + (self.target.n,), dtype=np.int64)
        ta[..., list(self.vertex_map)] = a
        tb = np.zeros(b.shape[:-1] + (self.target.num_pairs,), dtype=np.int64)
        cols = [
            self.target.pair_index[(self.vertex_map[x], self.vertex_map[y])]
            for x, y in self.source.nonedges
        ]
        if cols:
            tb[..., cols] = b
        return ta, tb

    def apply_arrays(self, a, b):
        if not self.monotone:
            raise ValueError("vectorized transport requires a monotone injection")
        return self._transport(np.asarray(a), np.asarray(b))


def embed_gamma_prime(
    source_graph: Graph, target_graph: Graph, inclusion, p: int
) -> PcHom:
    """Group transport along an induced-subgraph inclusion."""
    return PcHom(PcGroup(source_graph, p), PcGroup(target_graph, p), inclusion)


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def format_pc_element(u: PcElement) -> str:
    return (
        "pc a=[" + ",".join(str(x) for x in u.a) + "]"
        + " b=[" + ",".join(str(x) for x in u.b) + "]"
    )


def parse_pc_element(pc: PcGroup, text: str) -> PcElement:
    tokens = text.strip().split()
    if len(tokens) != 3 or tokens[0] != "pc":
        raise ParseError("expected `pc a=[...] b=[...]`")

    def vector(token: str, tag: str) -> list[int]:
        prefix = tag + "=["
        if not token.startswith(prefix) or not token.endswith("]"):
            raise ParseError(f"expected `{tag}=[...]`, got {token!r}")
        body = token[len(prefix):-1]
        if not body:
            return []
        try:
            return [int(t) for t in body.split(",")]
        except ValueError:
            raise ParseError(f"bad integer in {token!r}")

    a = vector(tokens[1], "a")
    b = vector(tokens[2], "b")
    try:
        return pc.element(a, b)
    except ValueError as exc:
        raise ParseError(str(exc))
