"""Permutation kernel: Perm algebra, closures, homs, subgroups, isomorphism.

Classical counts (subgroup totals, automorphism group orders, hom counts)
are re-derived here by literal brute force rather than trusted.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter

import pytest

from conftest import random_perm, subgroup_sets_by_subsets
from meklerkit import (
    EnumerationBudgetError,
    Hom,
    ParseError,
    Perm,
    PermGroup,
    alternating_group,
    automorphisms,
    brute_iso,
    cayley_embedding_even,
    center_elements,
    compose_homs,
    conjugacy_classes,
    cyclic_group,
    derived_subgroup_elements,
    dihedral_group,
    direct_sum,
    enumerate_homs,
    format_group,
    format_perm,
    is_simple,
    iso_invariant_mismatch,
    klein_four_group,
    normal_closure,
    parse_group,
    parse_perm,
    quaternion_group,
    quotient_group,
    small_groups_catalog,
    subgroups,
    subgroups_containing,
    symmetric_group,
    trivial_group,
    verify_hom_table,
)


def test_perm_composition_convention():
    p = Perm((1, 2, 0))
    q = Perm((0, 2, 1))
    pq = p * q
    for i in range(3):
        assert pq(i) == p(q(i))
    assert (~p) * p == Perm.identity(3)
    assert p * ~p == Perm.identity(3)


def test_perm_algebra_random():
    rng = random.Random(11)
    for _ in range(300):
        d = rng.randrange(1, 9)
        p, q, r = (random_perm(rng, d) for _ in range(3))
        assert (p * q) * r == p * (q * r)
        assert ~(p * q) == ~q * ~p
        k = p.order()
        acc = Perm.identity(d)
        for _ in range(k):
            acc = acc * p
        assert acc == Perm.identity(d)


def inversion_parity(p: Perm) -> bool:
    inv = sum(
        1
        for i, j in itertools.combinations(range(len(p.images)), 2)
        if p.images[i] > p.images[j]
    )
    return inv % 2 == 0


def test_perm_parity_oracle():
    rng = random.Random(13)
    for _ in range(200):
        p = random_perm(rng, rng.randrange(1, 9))
        assert p.is_even() == inversion_parity(p)
    assert Perm((1, 0, 2)).is_even() is False
    assert Perm((1, 2, 0)).is_even() is True


def test_perm_cycles_and_from_cycles():
    p = Perm.from_cycles(5, (0, 1, 2), (3, 4))
    assert p.images == (1, 2, 0, 4, 3)
    assert p.order() == 6
    rng = random.Random(17)
    for _ in range(100):
        p = random_perm(rng, rng.randrange(1, 10))
        rebuilt = Perm.from_cycles(len(p.images), *p.cycles())
        assert rebuilt == p


def test_perm_validation():
    with pytest.raises(ValueError):
        Perm((0, 0, 1))
    with pytest.raises(ValueError):
        Perm((0, 3, 1))
    assert Perm((2, 0, 1)).extend(5).images == (2, 0, 1, 3, 4)


def group_axioms_full(g: PermGroup):
    els = g.elements()
    s = set(els)
    assert len(s) == len(els)
    e = Perm.identity(g.degree)
    assert e in s
    for a in els:
        assert ~a in s
        assert a * ~a == e
        for b in els:
            assert a * b in s


def test_group_axioms_catalog():
    for g in small_groups_catalog(11):
        group_axioms_full(g)
    group_axioms_full(symmetric_group(4))
    group_axioms_full(dihedral_group(6))
    # associativity holds elementwise on a seeded sample of larger groups
    rng = random.Random(19)
    els = symmetric_group(4).elements()
    for _ in range(500):
        a, b, c = (rng.choice(els) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_known_orders():
    assert symmetric_group(4).order() == 24
    assert len(symmetric_group(4).elements()) == 24
    assert alternating_group(4).order() == 12
    assert len(alternating_group(4).elements()) == 12
    assert alternating_group(5).order() == 60
    assert dihedral_group(4).order() == 8
    assert quaternion_group().order() == 8
    assert trivial_group(1).order() == 1
    # every member of Alt(n) is even
    assert all(p.is_even() for p in alternating_group(5).elements())


def test_quaternion_is_really_q8():
    q8 = quaternion_group()
    profile = sorted(Counter(x.order() for x in q8.elements()).items())
    assert profile == [(1, 1), (2, 1), (4, 6)]
    assert not q8.is_abelian()


def test_enumeration_budget():
    big = alternating_group(9)
    assert not big.is_enumerable()
    with pytest.raises(EnumerationBudgetError):
        big.elements()
    # order and membership still work without enumeration
    assert big.order() == 181440
    assert Perm.from_cycles(9, (0, 1, 2)) in big
    assert Perm.from_cycles(9, (0, 1)) not in big


def test_direct_sum_structure():
    c2, s3 = cyclic_group(2), symmetric_group(3)
    ds = direct_sum(c2, s3)
    assert ds.group.order() == 12
    assert ds.group.degree == 5
    for x in c2.elements():
        for y in s3.elements():
            u, v = ds.inject_a(x), ds.inject_b(y)
            assert u * v == v * u
            assert ds.project_a(u * v) == x
            assert ds.project_b(u * v) == y
    # the membership hook rejects block-mixing permutations
    swap = Perm((3, 1, 2, 0, 4))
    assert swap not in ds.group
    # and the hook answers without enumeration for huge factors
    huge = direct_sum(c2, alternating_group(9))
    gen = huge.inject_b(alternating_group(9).gens[0])
    assert gen in huge.group
    assert huge.group.order() == 2 * 181440


def test_hom_verify_and_kernel():
    s3, c2 = symmetric_group(3), cyclic_group(2)
    flip = c2.gens[0]
    sign = Hom(s3, c2, [flip if not g.is_even() else Perm.identity(2) for g in s3.gens])
    sign.verify()
    assert verify_hom_table(sign)
    ker = sign.kernel_elements()
    assert len(ker) == 3
    assert all(p.is_even() for p in ker)
    assert not sign.is_injective()
    assert sign.is_surjective()


def test_hom_rejects_non_homomorphism():
    c3, c2 = cyclic_group(3), cyclic_group(2)
    bad = Hom(c3, c2, [c2.gens[0]])
    with pytest.raises(ValueError):
        bad.verify()


def test_compose_homs():
    c4 = cyclic_group(4)
    c2 = cyclic_group(2)
    sq = Hom(c4, c2, [c2.gens[0]])
    sq.verify()
    inc = Hom(c2, c4, [c4.gens[0] * c4.gens[0]])
    inc.verify()
    comp = compose_homs(inc, sq)
    for x in c4.elements():
        assert comp(x) == inc(sq(x))


def test_conjugacy_classes_and_center():
    sizes = sorted(len(c) for c in conjugacy_classes(symmetric_group(3)))
    assert sizes == [1, 2, 3]
    sizes4 = sorted(len(c) for c in conjugacy_classes(symmetric_group(4)))
    assert sizes4 == [1, 3, 6, 6, 8]
    assert len(center_elements(dihedral_group(4))) == 2
    assert len(center_elements(quaternion_group())) == 2
    assert len(center_elements(cyclic_group(7))) == 7
    # literal centralizer oracle
    g = dihedral_group(4)
    els = g.elements()
    literal = [x for x in els if all(x * y == y * x for y in els)]
    assert set(literal) == set(center_elements(g))


def test_derived_subgroups():
    assert len(derived_subgroup_elements(symmetric_group(3))) == 3
    assert len(derived_subgroup_elements(symmetric_group(4))) == 12
    assert len(derived_subgroup_elements(cyclic_group(6))) == 1
    assert len(derived_subgroup_elements(quaternion_group())) == 2
    # oracle: the closure of all commutators, done literally
    g = symmetric_group(3)
    els = g.elements()
    comms = {(~a) * (~b) * a * b for a in els for b in els}
    assert comms <= set(derived_subgroup_elements(g))


def test_normal_closure_classics():
    s4 = symmetric_group(4)
    assert normal_closure(s4, Perm((1, 0, 2, 3))).order() == 24
    assert normal_closure(s4, Perm((1, 0, 3, 2))).order() == 4
    assert normal_closure(s4, Perm((1, 2, 0, 3))).order() == 12
    a5 = alternating_group(5)
    assert normal_closure(a5, Perm.from_cycles(5, (0, 1, 2))).order() == 60


def test_simplicity():
    assert is_simple(alternating_group(5)).simple
    assert not is_simple(symmetric_group(3)).simple
    assert is_simple(cyclic_group(5)).simple
    assert is_simple(cyclic_group(2)).simple
    assert not is_simple(cyclic_group(6)).simple
    assert not is_simple(trivial_group(1)).simple
    rep = is_simple(symmetric_group(4))
    assert not rep.simple and rep.witness is not None


def test_subgroup_enumeration_against_subset_oracle():
    for g in [
        symmetric_group(3),
        cyclic_group(4),
        dihedral_group(4),
        quaternion_group(),
        klein_four_group(),
        cyclic_group(12),
        alternating_group(4),
    ]:
        oracle = {s for s in subgroup_sets_by_subsets(g)}
        got = {frozenset(h.elements()) for h in subgroups(g, g.order())}
        assert got == oracle
    assert len(subgroups(symmetric_group(3), 6)) == 6
    assert len(subgroups(cyclic_group(4), 4)) == 3
    assert len(subgroups(dihedral_group(4), 8)) == 10
    assert len(subgroups(quaternion_group(), 8)) == 6


def test_subgroups_respect_bound_and_seed():
    s4 = symmetric_group(4)
    small = subgroups(s4, 4)
    assert all(h.order() <= 4 for h in small)
    assert all(h.order() in (1, 2, 3, 4) for h in small)
    seed = [Perm((1, 0, 2, 3))]
    containing = subgroups_containing(s4, seed, 8)
    for h in containing:
        assert seed[0] in h.element_set()
        assert tuple(h.gens[: len(seed)]) == tuple(seed)
    assert any(h.order() == 8 for h in containing)


def test_brute_iso_positive():
    c6 = cyclic_group(6)
    ds = direct_sum(cyclic_group(2), cyclic_group(3)).group
    iso = brute_iso(ds, c6)
    assert iso is not None
    assert verify_hom_table(iso) and iso.is_injective()
    assert brute_iso(symmetric_group(3), dihedral_group(3)) is not None
    assert brute_iso(trivial_group(1), trivial_group(3)) is not None


def test_brute_iso_negative():
    assert brute_iso(cyclic_group(4), klein_four_group()) is None
    assert brute_iso(dihedral_group(4), quaternion_group()) is None
    assert brute_iso(symmetric_group(3), cyclic_group(6)) is None
    name, left, right = iso_invariant_mismatch(cyclic_group(4), klein_four_group())
    assert left != right
    assert iso_invariant_mismatch(dihedral_group(4), quaternion_group()) is not None
    # same invariants everywhere we test does not imply isomorphic, but
    # different order must separate immediately
    got = iso_invariant_mismatch(cyclic_group(4), cyclic_group(5))
    assert got is not None and got[0] == "order"


def all_bijective_homs(g: PermGroup, h: PermGroup):
    """Literal automorphism/isomorphism oracle for tiny groups."""
    ge, he = list(g.elements()), list(h.elements())
    if len(ge) != len(he):
        return
    for images in itertools.permutations(he):
        table = dict(zip(ge, images))
        if all(
            table[a * b] == table[a] * table[b] for a in ge for b in ge
        ):
            yield table


def test_automorphism_counts_against_oracle():
    for g, expected in [
        (cyclic_group(5), 4),
        (klein_four_group(), 6),
        (symmetric_group(3), 6),
        (cyclic_group(6), 2),
        (quaternion_group(), 24),
    ]:
        auts = automorphisms(g)
        assert auts.order() == expected
        if g.order() <= 6:
            assert expected == sum(1 for _ in all_bijective_homs(g, g))


def test_automorphisms_form_group_on_element_indices():
    g = klein_four_group()
    auts = automorphisms(g)
    els = list(g.elements())
    for a in auts.elements():
        mapped = {els[i]: els[a(i)] for i in range(len(els))}
        for x in els:
            for y in els:
                assert mapped[x * y] == mapped[x] * mapped[y]


def test_cayley_embedding_even():
    for g in [
        cyclic_group(2),
        cyclic_group(3),
        klein_four_group(),
        symmetric_group(3),
        quaternion_group(),
    ]:
        f = cayley_embedding_even(g)
        m = g.order()
        assert f.codomain.degree == m + 2
        assert f.codomain.label() == alternating_group(m + 2).label()
        f.verify()
        assert f.is_injective()
        seen = set()
        for x in g.elements():
            img = f(x)
            assert img.is_even()
            assert img in f.codomain
            seen.add(img)
        assert len(seen) == m
        for x in g.elements():
            for y in g.elements():
                assert f(x * y) == f(x) * f(y)


def test_quotients():
    s4 = symmetric_group(4)
    v4 = frozenset(
        [Perm((0, 1, 2, 3)), Perm((1, 0, 3, 2)), Perm((2, 3, 0, 1)), Perm((3, 2, 1, 0))]
    )
    q = quotient_group(s4, v4)
    assert q.group.order() == 6
    assert brute_iso(q.group, symmetric_group(3)) is not None
    s3 = symmetric_group(3)
    a3 = frozenset(p for p in s3.elements() if p.is_even())
    q2 = quotient_group(s3, a3)
    assert brute_iso(q2.group, cyclic_group(2)) is not None
    with pytest.raises(ValueError):
        quotient_group(s3, frozenset([Perm((0, 1, 2)), Perm((1, 0, 2))]))


def test_quotient_projection_is_hom():
    s3 = symmetric_group(3)
    a3 = frozenset(p for p in s3.elements() if p.is_even())
    q = quotient_group(s3, a3)
    reps = [min(c) for c in q.cosets]

    def action(x):
        return Perm(tuple(q.projection[x * r] for r in reps))

    for x in s3.elements():
        assert action(x) in q.group
        for y in s3.elements():
            assert action(x * y) == action(x) * action(y)
            # cosets multiply independently of representatives
            assert q.projection[x * y] == q.projection[reps[q.projection[x]] * y]


def test_enumerate_homs_counts():
    # |Hom(C_m, H)| equals the number of h in H with h^m = e
    for m, h, expected in [
        (2, cyclic_group(2), 2),
        (2, symmetric_group(3), 4),
        (6, symmetric_group(3), 6),
        (4, cyclic_group(2), 2),
        (3, klein_four_group(), 1),
    ]:
        homs = enumerate_homs(cyclic_group(m), h)
        assert len(homs) == expected
        literal = [x for x in h.elements() if m % x.order() == 0]
        assert len(homs) == len(literal)
    assert len(enumerate_homs(symmetric_group(3), cyclic_group(2))) == 2
    injective = enumerate_homs(
        cyclic_group(3), symmetric_group(3), injective_only=True
    )
    assert len(injective) == 2


def test_catalog_complete_and_pairwise_distinct():
    cat = small_groups_catalog(11)
    per_order = Counter(g.order() for g in cat)
    assert dict(per_order) == {
        1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2, 11: 1,
    }
    for a, b in itertools.combinations(cat, 2):
        if a.order() == b.order():
            assert brute_iso(a, b) is None, (a.label(), b.label())
    assert [g.order() for g in cat] == sorted(g.order() for g in cat)


def test_format_parse_group_round_trip():
    for g in [symmetric_group(3), quaternion_group(), trivial_group(2)]:
        back = parse_group(format_group(g))
        assert back.degree == g.degree
        assert back.gens == g.gens
        assert set(back.elements()) == set(g.elements())
    p = Perm((2, 0, 1, 3))
    assert parse_perm(format_perm(p)) == p
    with pytest.raises(ParseError):
        parse_group("not a group")
    with pytest.raises(ParseError, match="line 2"):
        parse_group("p group 3\ng: 0 0 1")
