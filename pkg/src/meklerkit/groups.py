"""Finite permutation groups with exact brute-force structural queries.

Everything here enumerates honestly: element listings come from
breadth-first product closure, homomorphisms are verified against every
(generator, element) pair (a complete proof, by induction on word length),
and structural searches (simplicity, subgroup lattices, isomorphism,
automorphisms) are exhaustive.  Queries that would pass the element budget
fail loudly with EnumerationBudgetError instead of degrading.

Composition convention: (p * q)(i) = p(q(i)), i.e. q acts first.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass

from .errors import EnumerationBudgetError, ParseError

DEFAULT_ENUM_BUDGET = 20_000


class Perm:
    """Permutation of range(degree), stored as the tuple of images."""

    __slots__ = ("images", "_hash")

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if len(set(images)) != n or any(not (0 <= x < n) for x in images):
            raise ValueError(f"not a permutation of range({n}): {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _make(cls, images: tuple) -> "Perm":
        # trusted fast path: products/inverses of valid perms are valid
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Perm") -> "Perm":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        im = self.images
        return Perm._make(tuple(im[x] for x in other.images))

    def __invert__(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Perm._make(tuple(inv))

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Perm"):
        return self.images < other.images

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images))

    def order(self) -> int:
        result = 1
        for c in self.cycles(trivial=False):
            result = result * len(c) // math.gcd(result, len(c))
        return result

    def cycles(self, trivial: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            if trivial or len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def is_even(self) -> bool:
        flips = sum(len(c) - 1 for c in self.cycles(trivial=False))
        return flips % 2 == 0

    def extend(self, degree: int) -> "Perm":
        """Pad with fixed points up to `degree`."""
        if degree < self.degree:
            raise ValueError("cannot shrink a permutation")
        return Perm._make(self.images + tuple(range(self.degree, degree)))

    @staticmethod
    def identity(degree: int) -> "Perm":
        return Perm._make(tuple(range(degree)))

    @staticmethod
    def from_cycles(degree: int, *cycles) -> "Perm":
        images = list(range(degree))
        for cyc in cycles:
            for k, i in enumerate(cyc):
                images[i] = cyc[(k + 1) % len(cyc)]
        return Perm(images)

    def __repr__(self):
        cycs = self.cycles(trivial=False)
        if not cycs:
            return "Perm(id)"
        return "Perm(" + "".join("(" + " ".join(map(str, c)) + ")" for c in cycs) + ")"


def closure_elements(gens, degree: int, maxsize: int | None = None):
    """BFS product closure; deterministic order, identity first.

    Returns the element list, or None once the closure exceeds `maxsize`.
    """
    ident = Perm.identity(degree)
    seen = {ident}
    order = [ident]
    frontier = [ident]
    while frontier:
        fresh = []
        for a in frontier:
            for g in gens:
                c = a * g
                if c not in seen:
                    seen.add(c)
                    order.append(c)
                    fresh.append(c)
                    if maxsize is not None and len(order) > maxsize:
                        return None
        frontier = fresh
    return order


class PermGroup:
    """Permutation group given by generators; enumeration is lazy and budgeted.

    `known_order`, `known_simple` and `contains_hook` let constructions such
    as large alternating groups answer order/membership questions without
    ever enumerating.
    """

    def __init__(
        self,
        degree: int,
        gens,
        name: str | None = None,
        known_order: int | None = None,
        known_simple: bool = False,
        contains_hook=None,
        enum_budget: int = DEFAULT_ENUM_BUDGET,
    ):
        self.degree = degree
        self.gens = tuple(gens)
        for g in self.gens:
            if g.degree != degree:
                raise ValueError("generator degree mismatch")
        self.name = name
        self.known_order = known_order
        self.known_simple = known_simple
        self.contains_hook = contains_hook
        self.enum_budget = enum_budget
        self._elements = None
        self._element_set = None

    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def is_enumerable(self) -> bool:
        if self._elements is not None:
            return True
        if self.known_order is not None:
            return self.known_order <= self.enum_budget
        return True  # unknown order: enumeration will try, budget-guarded

    def elements(self) -> tuple[Perm, ...]:
        if self._elements is None:
            if self.known_order is not None and self.known_order > self.enum_budget:
                raise EnumerationBudgetError(
                    f"group of order {self.known_order} exceeds element budget "
                    f"{self.enum_budget}"
                )
            els = closure_elements(self.gens, self.degree, maxsize=self.enum_budget)
            if els is None:
                raise EnumerationBudgetError(
                    f"enumeration exceeded element budget {self.enum_budget}"
                )
            self._elements = tuple(els)
        return self._elements

    def element_set(self) -> frozenset:
        if self._element_set is None:
            self._element_set = frozenset(self.elements())
        return self._element_set

    def order(self) -> int:
        if self.known_order is not None:
            return self.known_order
        return len(self.elements())

    def __contains__(self, p: Perm) -> bool:
        if p.degree != self.degree:
            return False
        if self._elements is not None:
            return p in self.element_set()
        if self.contains_hook is not None:
            return self.contains_hook(p)
        return p in self.element_set()

    def is_abelian(self) -> bool:
        return all(a * b == b * a for a, b in itertools.combinations(self.gens, 2))

    def label(self) -> str:
        return self.name or f"group<deg {self.degree}, {len(self.gens)} gens>"

    @classmethod
    def from_elements(cls, degree, gens, elements, **kw) -> "PermGroup":
        g = cls(degree, gens, known_order=len(elements), **kw)
        g._elements = tuple(elements)
        return g

    def __repr__(self):
        if self.name:
            return f"PermGroup({self.name})"
        return f"PermGroup(degree={self.degree}, gens={len(self.gens)})"


# ---------------------------------------------------------------------------
# standard groups
# ---------------------------------------------------------------------------

def trivial_group(degree: int = 1) -> PermGroup:
    return PermGroup(degree, [], name="1", known_order=1)


def cyclic_group(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("cyclic order must be >= 1")
    if n == 1:
        return trivial_group()
    return PermGroup(n, [Perm.from_cycles(n, tuple(range(n)))], name=f"C{n}", known_order=n)


def symmetric_group(n: int) -> PermGroup:
    if n <= 2:
        return cyclic_group(max(n, 1))
    gens = [Perm.from_cycles(n, (0, 1)), Perm.from_cycles(n, tuple(range(n)))]
    return PermGroup(n, gens, name=f"S{n}", known_order=math.factorial(n))


def alternating_group(n: int) -> PermGroup:
    """Alt(n) via consecutive 3-cycles; order and membership never enumerate."""
    if n < 3:
        return PermGroup(max(n, 1), [], name=f"Alt({n})", known_order=1)
    gens = [Perm.from_cycles(n, (i, i + 1, i + 2)) for i in range(n - 2)]

    def contains(p: Perm) -> bool:
        return p.degree == n and p.is_even()

    return PermGroup(
        n,
        gens,
        name=f"Alt({n})",
        known_order=math.factorial(n) // 2,
        known_simple=n >= 5,
        contains_hook=contains,
    )


def klein_four_group() -> PermGroup:
    gens = [Perm.from_cycles(4, (0, 1), (2, 3)), Perm.from_cycles(4, (0, 2), (1, 3))]
    return PermGroup(4, gens, name="C2xC2", known_order=4)


def dihedral_group(n: int) -> PermGroup:
    """Symmetries of the n-gon, order 2n (n >= 3)."""
    if n < 3:
        raise ValueError("dihedral rank must be >= 3")
    rot = Perm.from_cycles(n, tuple(range(n)))
    ref = Perm([0] + [n - i for i in range(1, n)])
    return PermGroup(n, [rot, ref], name=f"D{n}", known_order=2 * n)


def quaternion_group() -> PermGroup:
    """Order-8 quaternion group via its left regular representation."""
    units = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    base = {
        ("1", "1"): ("+", "1"), ("1", "i"): ("+", "i"), ("1", "j"): ("+", "j"), ("1", "k"): ("+", "k"),
        ("i", "1"): ("+", "i"), ("i", "i"): ("-", "1"), ("i", "j"): ("+", "k"), ("i", "k"): ("-", "j"),
        ("j", "1"): ("+", "j"), ("j", "i"): ("-", "k"), ("j", "j"): ("-", "1"), ("j", "k"): ("+", "i"),
        ("k", "1"): ("+", "k"), ("k", "i"): ("+", "j"), ("k", "j"): ("-", "i"), ("k", "k"): ("-", "1"),
    }

    def mul(a: str, b: str) -> str:
        sa, ua = ("-", a[1:]) if a.startswith("-") else ("+", a)
        sb, ub = ("-", b[1:]) if b.startswith("-") else ("+", b)
        sc, uc = base[(ua, ub)]
        neg = [sa, sb, sc].count("-") % 2
        return ("-" if neg else "") + uc

    idx = {u: t for t, u in enumerate(units)}
    gens = []
    for gen in ("i", "j"):
        gens.append(Perm([idx[mul(gen, u)] for u in units]))
    return PermGroup(8, gens, name="Q8", known_order=8)


def direct_sum_gens(a: PermGroup, b: PermGroup):
    da, db = a.degree, b.degree
    left = [Perm._make(g.images + tuple(range(da, da + db))) for g in a.gens]
    right = [
        Perm._make(tuple(range(da)) + tuple(x + da for x in g.images)) for g in b.gens
    ]
    return left, right


@dataclass
class DirectSum:
    group: PermGroup
    inject_a: "Hom"
    inject_b: "Hom"
    project_a: "Hom"
    project_b: "Hom"


def direct_sum(a: PermGroup, b: PermGroup) -> DirectSum:
    """Block direct sum with injections and projections as homs.

    The maps are verified on use (building a hom's element table is itself
    the complete verification); for factors past the element budget they
    stay symbolic and any forced evaluation raises the budget error.
    """
    da, db = a.degree, b.degree
    left, right = direct_sum_gens(a, b)
    known = None
    try:
        known = a.order() * b.order()
    except EnumerationBudgetError:
        known = None

    hook = None
    a_hook = a.contains_hook
    b_hook = b.contains_hook

    def block_hook(p: Perm) -> bool:
        pa = p.images[:da]
        pb = tuple(x - da for x in p.images[da:])
        try:
            qa, qb = Perm(pa), Perm(pb)
        except ValueError:
            return False  # mixes the two blocks
        in_a = a_hook(qa) if a_hook else (qa in a)
        in_b = b_hook(qb) if b_hook else (qb in b)
        return in_a and in_b

    if (a_hook or a.is_enumerable()) and (b_hook or b.is_enumerable()):
        hook = block_hook

    name = f"{a.label()}(+){b.label()}"
    group = PermGroup(
        da + db, left + right, name=name, known_order=known, contains_hook=hook
    )
    ia = Hom(a, group, left, name="inject_a")
    ib = Hom(b, group, right, name="inject_b")
    pa = Hom(group, a, list(a.gens) + [a.identity()] * len(right), name="project_a")
    pb = Hom(group, b, [b.identity()] * len(left) + list(b.gens), name="project_b")
    return DirectSum(group, ia, ib, pa, pb)


# ---------------------------------------------------------------------------
# homomorphisms
# ---------------------------------------------------------------------------

class Hom:
    """Homomorphism fixed by generator images; table built lazily.

    Building the table walks every (element, generator) product and checks
    consistency on each collision; a conflict-free build is a complete proof
    of the homomorphism property (induction on word length), so a Hom whose
    `mapping` exists needs no further verification.
    """

    def __init__(self, domain: PermGroup, codomain: PermGroup, gen_images, name=None):
        self.domain = domain
        self.codomain = codomain
        self.gen_images = tuple(gen_images)
        self.name = name
        if len(self.gen_images) != len(domain.gens):
            raise ValueError("need one image per domain generator")
        for im in self.gen_images:
            if im.degree != codomain.degree:
                raise ValueError("image degree mismatch")
            if im not in codomain:
                raise ValueError("generator image outside codomain")
        self._mapping = None

    @property
    def mapping(self) -> dict:
        if self._mapping is None:
            els = self.domain.elements()
            table = {self.domain.identity(): self.codomain.identity()}
            frontier = [self.domain.identity()]
            while frontier:
                fresh = []
                for x in frontier:
                    fx = table[x]
                    for g, fg in zip(self.domain.gens, self.gen_images):
                        y = x * g
                        fy = fx * fg
                        cur = table.get(y)
                        if cur is None:
                            table[y] = fy
                            fresh.append(y)
                        elif cur != fy:
                            raise ValueError(
                                f"generator images do not define a homomorphism "
                                f"(conflict at {y!r})"
                            )
                frontier = fresh
            if len(table) != len(els):
                raise AssertionError("hom table does not cover the domain")
            self._mapping = table
        return self._mapping

    def __call__(self, x: Perm) -> Perm:
        if self._mapping is None:
            # generator and identity images need no table; this keeps block
            # injections usable when the domain is past the element budget
            if x == self.domain.identity():
                return self.codomain.identity()
            for g, fg in zip(self.domain.gens, self.gen_images):
                if x == g:
                    return fg
        return self.mapping[x]

    def verify(self) -> "Hom":
        self.mapping
        return self

    def is_injective(self) -> bool:
        m = self.mapping
        return len(set(m.values())) == len(m)

    def image_elements(self) -> tuple[Perm, ...]:
        m = self.mapping
        seen = set()
        out = []
        for x in self.domain.elements():
            y = m[x]
            if y not in seen:
                seen.add(y)
                out.append(y)
        return tuple(out)

    def is_surjective(self) -> bool:
        return set(self.image_elements()) == self.codomain.element_set()

    def kernel_elements(self) -> tuple[Perm, ...]:
        ident = self.codomain.identity()
        return tuple(x for x in self.domain.elements() if self.mapping[x] == ident)

    def __repr__(self):
        nm = f" {self.name}" if self.name else ""
        return f"Hom({self.domain.label()} -> {self.codomain.label()}{nm})"


def compose_homs(outer: Hom, inner: Hom) -> Hom:
    """outer after inner, as a Hom on inner's domain."""
    if inner.codomain.degree != outer.domain.degree:
        raise ValueError("composition degree mismatch")
    images = [outer(inner(g)) for g in inner.domain.gens]
    return Hom(inner.domain, outer.codomain, images)


def verify_hom_table(h: Hom, pair_limit: int = 1024) -> bool:
    """Redundant all-pairs table check: f(xy) == f(x)f(y) for all x, y.

    The lazy table build already proves the hom property; this is the
    belt-and-braces full multiplication-table pass, used before returning
    isomorphisms.  Falls back to the (complete) generator-pair proof when
    the square table would be too large.
    """
    m = h.mapping
    els = h.domain.elements()
    if len(els) <= pair_limit:
        for x in els:
            mx = m[x]
            for y in els:
                if m[x * y] != mx * m[y]:
                    return False
        return True
    for x in els:
        mx = m[x]
        for g, fg in zip(h.domain.gens, h.gen_images):
            if m[x * g] != mx * fg:
                return False
    return True


# ---------------------------------------------------------------------------
# structural queries
# ---------------------------------------------------------------------------

def conjugacy_classes(g: PermGroup) -> list[tuple[Perm, ...]]:
    """Conjugacy classes in deterministic order (by first element found)."""
    els = g.elements()
    seen = set()
    classes = []
    for x in els:
        if x in seen:
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for s in g.gens:
                z = s * y * ~s
                if z not in orbit:
                    orbit.add(z)
                    frontier.append(z)
        seen |= orbit
        classes.append(tuple(sorted(orbit)))
    return classes


def center_elements(g: PermGroup) -> tuple[Perm, ...]:
    els = g.elements()
    return tuple(x for x in els if all(x * s == s * x for s in g.gens))


def derived_subgroup_elements(g: PermGroup) -> tuple[Perm, ...]:
    els = g.elements()
    comms = []
    seen = set()
    for a in els:
        for b in g.gens:
            c = ~a * ~b * a * b
            if c not in seen:
                seen.add(c)
                comms.append(c)
    closed = closure_elements(comms, g.degree, maxsize=g.enum_budget)
    if closed is None:
        raise EnumerationBudgetError("derived subgroup exceeded element budget")
    # commutators of generators with all elements generate the derived subgroup
    return tuple(closed)


def normal_closure(g: PermGroup, x: Perm) -> PermGroup:
    """Smallest normal subgroup of g containing x."""
    if x not in g:
        raise ValueError("element outside the group")
    orbit = {x}
    order = [x]
    frontier = [x]
    while frontier:
        y = frontier.pop(0)
        for s in g.gens:
            z = s * y * ~s
            if z not in orbit:
                orbit.add(z)
                order.append(z)
                frontier.append(z)
    closed = closure_elements(order, g.degree, maxsize=g.enum_budget)
    if closed is None:
        raise EnumerationBudgetError("normal closure exceeded element budget")
    return PermGroup.from_elements(g.degree, tuple(order), closed)


@dataclass(frozen=True)
class SimplicityReport:
    simple: bool
    witness: PermGroup | None  # proper nontrivial normal subgroup, if any


def is_simple(g: PermGroup) -> SimplicityReport:
    """Exhaustive: normal closure of one representative per conjugacy class."""
    n = g.order()
    if n == 1:
        return SimplicityReport(False, None)  # trivial group: not simple
    for cls in conjugacy_classes(g):
        rep = cls[0]
        if rep.is_identity():
            continue
        nc = normal_closure(g, rep)
        if nc.order() < n:
            return SimplicityReport(False, nc)
    return SimplicityReport(True, None)


def _subgroup_key(elements) -> tuple:
    return tuple(sorted(p.images for p in elements))


def subgroups_containing(
    g: PermGroup, seed_gens, order_bound: int
) -> list[PermGroup]:
    """All subgroups H with <seed_gens> <= H <= g and |H| <= order_bound.

    Cyclic-extension search: grow by one generator at a time, deduplicate by
    element set.  Every target subgroup is reached because each partial
    closure sits inside it, hence under the bound.
    """
    base = closure_elements(list(seed_gens), g.degree, maxsize=order_bound)
    if base is None:
        return []
    start_gens = tuple(seed_gens)
    seen = {frozenset(base)}
    found = [(start_gens, base)]
    queue = [(start_gens, base)]
    all_els = g.elements()
    while queue:
        gens, els = queue.pop(0)
        els_set = set(els)
        for x in all_els:
            if x in els_set:
                continue
            bigger = closure_elements(list(gens) + [x], g.degree, maxsize=order_bound)
            if bigger is None:
                continue
            key = frozenset(bigger)
            if key not in seen:
                seen.add(key)
                entry = (tuple(gens) + (x,), bigger)
                found.append(entry)
                queue.append(entry)
    found.sort(key=lambda t: (len(t[1]), _subgroup_key(t[1])))
    return [
        PermGroup.from_elements(g.degree, gens if gens else [], els)
        for gens, els in found
    ]


def subgroups(g: PermGroup, order_bound: int) -> list[PermGroup]:
    """All subgroups of g with order <= order_bound, smallest first."""
    return subgroups_containing(g, [], order_bound)


def order_profile(g: PermGroup) -> tuple:
    return tuple(sorted(Counter(x.order() for x in g.elements()).items()))


def _iso_invariants(g: PermGroup):
    return {
        "order": g.order(),
        "abelian": g.is_abelian(),
        "element order profile": order_profile(g),
        "center size": len(center_elements(g)),
        "derived subgroup size": len(derived_subgroup_elements(g)),
        "conjugacy class sizes": tuple(sorted(len(c) for c in conjugacy_classes(g))),
    }


def iso_invariant_mismatch(g: PermGroup, h: PermGroup):
    """Name and values of the first cheap invariant separating g and h."""
    gi, hi = _iso_invariants(g), _iso_invariants(h)
    for key in gi:
        if gi[key] != hi[key]:
            return (key, gi[key], hi[key])
    return None


def _generating_sequence(g: PermGroup) -> list[Perm]:
    """Greedy small generating sequence from the element list."""
    seq = []
    current = {g.identity()}
    for x in g.elements():
        if x not in current:
            seq.append(x)
            current = set(closure_elements(seq, g.degree, maxsize=g.enum_budget))
            if len(current) == g.order():
                break
    return seq


def _iso_search(g: PermGroup, h: PermGroup, find_all: bool):
    """Backtracking generator-image search for isomorphisms g -> h.

    Candidates are pruned by element order and conjugacy class size (both
    preserved by any isomorphism, so pruning is sound for negatives too).
    Every returned map passes the full table check.
    """
    if iso_invariant_mismatch(g, h) is not None:
        return []
    seq = _generating_sequence(g)
    h_els = h.elements()
    class_size_h = {}
    for cls in conjugacy_classes(h):
        for x in cls:
            class_size_h[x] = len(cls)
    class_size_g = {}
    for cls in conjugacy_classes(g):
        for x in cls:
            class_size_g[x] = len(cls)
    cand = []
    for x in seq:
        cand.append(
            [
                y
                for y in h_els
                if y.order() == x.order() and class_size_h[y] == class_size_g[x]
            ]
        )
    results = []
    domain = PermGroup.from_elements(g.degree, seq, g.elements())

    def attempt(images) -> Hom | None:
        try:
            hom = Hom(domain, h, images)
            hom.verify()
        except ValueError:
            return None
        if not hom.is_injective():
            return None
        if len(hom.mapping) != h.order():
            return None
        if not verify_hom_table(hom):
            return None
        return hom

    for images in itertools.product(*cand):
        hom = attempt(images)
        if hom is not None:
            if not find_all:
                return [hom]
            results.append(hom)
    return results


def brute_iso(g: PermGroup, h: PermGroup) -> Hom | None:
    """First isomorphism g -> h in deterministic search order, or None."""
    found = _iso_search(g, h, find_all=False)
    return found[0] if found else None


def automorphisms(g: PermGroup) -> PermGroup:
    """Automorphism group acting on g's element list by position."""
    els = g.elements()
    index = {x: i for i, x in enumerate(els)}
    homs = _iso_search(g, g, find_all=True)
    perms = sorted(Perm(tuple(index[hom.mapping[x]] for x in els)) for hom in homs)
    if not perms:
        raise AssertionError("identity automorphism missing")
    return PermGroup.from_elements(len(els), perms, perms, name=f"Aut({g.label()})")


def cayley_embedding_even(g: PermGroup) -> Hom:
    """Left-regular embedding into Alt(|g| + 2).

    Left multiplication permutes the element list; whenever that permutation
    is odd, the two auxiliary points are swapped to repair parity.  The
    correction is itself a homomorphism into C2 (parity is multiplicative),
    so the combined map is an injective hom landing in the alternating group.
    """
    els = g.elements()
    m = len(els)
    index = {x: i for i, x in enumerate(els)}
    target = alternating_group(m + 2)

    def embed(x: Perm) -> Perm:
        images = [index[x * y] for y in els]
        base = Perm(images)
        if base.is_even():
            images += [m, m + 1]
        else:
            images += [m + 1, m]
        return Perm(images)

    return Hom(g, target, [embed(x) for x in g.gens], name="cayley_even")


# ---------------------------------------------------------------------------
# quotients
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Quotient:
    group: PermGroup             # left regular action on the coset list
    cosets: tuple                # tuple of frozensets, deterministic order
    projection: dict             # element -> coset index


def quotient_group(g: PermGroup, normal_elements) -> Quotient:
    """Quotient by a normal subgroup, as the regular action on cosets."""
    nset = frozenset(normal_elements)
    for s in g.gens:
        for x in nset:
            if s * x * ~s not in nset:
                raise ValueError("subgroup is not normal")
    assigned = {}
    cosets = []
    for x in g.elements():
        if x in assigned:
            continue
        coset = frozenset(x * k for k in nset)
        idx = len(cosets)
        cosets.append(coset)
        for y in coset:
            assigned[y] = idx
    reps = [min(c) for c in cosets]
    gens = []
    for s in g.gens:
        gens.append(Perm(tuple(assigned[s * reps[i]] for i in range(len(cosets)))))
    grp = PermGroup(len(cosets), gens, known_order=len(cosets))
    return Quotient(grp, tuple(cosets), assigned)


# ---------------------------------------------------------------------------
# hom enumeration (used by lifting and the extension-property audits)
# ---------------------------------------------------------------------------

def enumerate_homs(
    f: PermGroup, g: PermGroup, injective_only: bool = False
) -> list[Hom]:
    """All homomorphisms f -> g by exhaustive generator-image search.

    Order-divisibility prunes candidates (the image order divides the
    argument's); for injective search orders must match exactly.  Pruning
    cannot lose homs, so the listing is complete.
    """
    seq = list(f.gens)
    if not seq:
        return [Hom(f, g, [])]
    g_els = g.elements()
    cand = []
    for x in seq:
        ox = x.order()
        if injective_only:
            cand.append([y for y in g_els if y.order() == ox])
        else:
            cand.append([y for y in g_els if ox % y.order() == 0])
    out = []
    for images in itertools.product(*cand):
        try:
            hom = Hom(f, g, images).verify()
        except ValueError:
            continue
        if injective_only and not hom.is_injective():
            continue
        out.append(hom)
    return out


# ---------------------------------------------------------------------------
# the small-group catalog (orders 1..11, complete up to isomorphism)
# ---------------------------------------------------------------------------

CATALOG_MAX_ORDER = 11


def small_groups_catalog(max_order: int) -> list[PermGroup]:
    """Every group of order <= max_order up to isomorphism (max_order <= 11)."""
    if max_order > CATALOG_MAX_ORDER:
        raise ValueError(
            f"catalog covers orders up to {CATALOG_MAX_ORDER}, asked {max_order}"
        )
    def c2xc4():
        return PermGroup(
            6,
            [Perm.from_cycles(6, (0, 1, 2, 3)), Perm.from_cycles(6, (4, 5))],
            name="C4xC2",
            known_order=8,
        )

    def c2cubed():
        return PermGroup(
            6,
            [
                Perm.from_cycles(6, (0, 1)),
                Perm.from_cycles(6, (2, 3)),
                Perm.from_cycles(6, (4, 5)),
            ],
            name="C2xC2xC2",
            known_order=8,
        )

    def c3xc3():
        return PermGroup(
            6,
            [Perm.from_cycles(6, (0, 1, 2)), Perm.from_cycles(6, (3, 4, 5))],
            name="C3xC3",
            known_order=9,
        )

    catalog = [
        (1, trivial_group),
        (2, lambda: cyclic_group(2)),
        (3, lambda: cyclic_group(3)),
        (4, lambda: cyclic_group(4)),
        (4, klein_four_group),
        (5, lambda: cyclic_group(5)),
        (6, lambda: cyclic_group(6)),
        (6, lambda: symmetric_group(3)),
        (7, lambda: cyclic_group(7)),
        (8, lambda: cyclic_group(8)),
        (8, c2xc4),
        (8, c2cubed),
        (8, lambda: dihedral_group(4)),
        (8, quaternion_group),
        (9, lambda: cyclic_group(9)),
        (9, c3xc3),
        (10, lambda: cyclic_group(10)),
        (10, lambda: dihedral_group(5)),
        (11, lambda: cyclic_group(11)),
    ]
    return [build() for order, build in catalog if order <= max_order]


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------

def format_perm(p: Perm) -> str:
    return f"perm {p.degree}: " + " ".join(str(x) for x in p.images)


def parse_perm(text: str, lineno: int | None = None) -> Perm:
    head, sep, body = text.partition(":")
    parts = head.split()
    if not sep or len(parts) != 2 or parts[0] != "perm":
        raise ParseError("expected `perm <degree>: <images>`", lineno)
    try:
        degree = int(parts[1])
        images = [int(tok) for tok in body.split()]
    except ValueError:
        raise ParseError("permutation entries must be integers", lineno)
    if len(images) != degree:
        raise ParseError(f"expected {degree} images, found {len(images)}", lineno)
    try:
        return Perm(images)
    except ValueError as exc:
        raise ParseError(str(exc), lineno)


def format_group(g: PermGroup) -> str:
    lines = [f"p group {g.degree}"]
    for gen in g.gens:
        lines.append("g: " + " ".join(str(x) for x in gen.images))
    return "\n".join(lines) + "\n"


def parse_group(text: str) -> PermGroup:
    degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("p "):
            parts = line.split()
            if degree is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(parts) != 3 or parts[1] != "group":
                raise ParseError("expected `p group <degree>`", lineno)
            try:
                degree = int(parts[2])
            except ValueError:
                raise ParseError(f"bad degree {parts[2]!r}", lineno)
            if degree < 1:
                raise ParseError("degree must be >= 1", lineno)
        elif line.startswith("g:"):
            if degree is None:
                raise ParseError("generator before problem line", lineno)
            try:
                images = [int(tok) for tok in line[2:].split()]
            except ValueError:
                raise ParseError("generator images must be integers", lineno)
            if len(images) != degree:
                raise ParseError(
                    f"expected {degree} images, found {len(images)}", lineno
                )
            try:
                gens.append(Perm(images))
            except ValueError as exc:
                raise ParseError(str(exc), lineno)
        else:
            raise ParseError(f"unrecognized line {line!r}", lineno)
    if degree is None:
        raise ParseError("missing `p group <degree>` line")
    return PermGroup(degree, gens)
