"""Hom lifting through block sums and the bounded extension-property audit."""

from __future__ import annotations

import itertools

import pytest

from meklerkit import (
    Hom,
    OmniQuery,
    Perm,
    PermGroup,
    alternating_group,
    build_D,
    cyclic_group,
    enumerate_homs,
    kernel_at_stage,
    klein_four_group,
    lift_hom,
    make_cayley_tower,
    omni_audit,
    omni_check,
    small_groups_catalog,
    subgroups,
    symmetric_group,
    trivial_group,
    verify_hom_table,
)


def test_lift_every_hom_in_catalog():
    pool = [
        cyclic_group(2),
        cyclic_group(3),
        cyclic_group(4),
        klein_four_group(),
        symmetric_group(3),
        cyclic_group(6),
    ]
    total = 0
    for f_group in pool:
        for g_group in pool:
            for psi in enumerate_homs(f_group, g_group):
                witness = lift_hom(f_group, g_group, psi)
                assert witness.group.order() == f_group.order() * g_group.order()
                assert witness.embed.is_injective()
                assert witness.surj.is_surjective()
                for x in f_group.elements():
                    assert witness.surj(witness.embed(x)) == psi(x)
                total += 1
    assert total > 100


def test_lift_requires_matching_domain():
    c2a = cyclic_group(2)
    c2b = cyclic_group(2)
    psi = Hom(c2b, c2a, [c2a.gens[0]])
    with pytest.raises(ValueError):
        lift_hom(c2a, c2a, psi)


def c4_in_s4():
    return PermGroup(4, [Perm((1, 2, 3, 0))], known_order=4)


def test_omni_query_validation():
    s4 = symmetric_group(4)
    c4 = cyclic_group(4)
    f_sub = c4_in_s4()
    psi = Hom(f_sub, c4, [c4.gens[0]])
    q = OmniQuery(s4, f_sub, c4, psi, c4.gens[0])
    q.validate()
    # generator that does not span the target together with psi(F)
    half = PermGroup(4, [Perm((2, 3, 0, 1))], known_order=2)
    psi_half = Hom(half, c4, [c4.gens[0] * c4.gens[0]])
    with pytest.raises(ValueError):
        OmniQuery(s4, half, c4, psi_half, c4.identity()).validate()
    # F must live inside gamma
    foreign = PermGroup(5, [Perm((1, 2, 3, 4, 0))])
    psi5 = Hom(foreign, cyclic_group(5), [cyclic_group(5).gens[0]])
    with pytest.raises(ValueError):
        OmniQuery(s4, foreign, cyclic_group(5), psi5, cyclic_group(5).gens[0]).validate()
    # psi must be injective
    flat = Hom(f_sub, cyclic_group(2), [cyclic_group(2).gens[0]])
    with pytest.raises(ValueError):
        OmniQuery(s4, f_sub, cyclic_group(2), flat, cyclic_group(2).gens[0]).validate()


def test_omni_witness_found_in_s4():
    s4 = symmetric_group(4)
    f_sub = PermGroup(4, [Perm((1, 0, 3, 2))], known_order=2)
    c4 = cyclic_group(4)
    psi = Hom(f_sub, c4, [c4.gens[0] * c4.gens[0]])
    q = OmniQuery(s4, f_sub, c4, psi, c4.gens[0])
    q.validate()
    wit = omni_check(q, 24)
    assert wit is not None
    assert wit.subgroup.order() % 4 == 0
    assert verify_hom_table(wit.surj)
    assert wit.surj.is_surjective()
    # the witness map restricted to F is psi
    for x in f_sub.elements():
        assert wit.surj(x) == psi(x)
    assert f_sub.gens[0] in wit.subgroup.element_set()


def test_omni_none_is_exhaustive_within_bound():
    s3 = symmetric_group(3)
    triv = PermGroup(3, [], known_order=1)
    c4 = cyclic_group(4)
    psi = Hom(triv, c4, [])
    q = OmniQuery(s3, triv, c4, psi, c4.gens[0])
    q.validate()
    assert omni_check(q, 6) is None
    # independent reason: no subgroup of S3 has order divisible by 4
    orders = {h.order() for h in subgroups(s3, 6)}
    assert all(o % 4 != 0 for o in orders)


def test_omni_check_respects_bound():
    s4 = symmetric_group(4)
    triv = PermGroup(4, [], known_order=1)
    c4 = cyclic_group(4)
    psi = Hom(triv, c4, [])
    q = OmniQuery(s4, triv, c4, psi, c4.gens[0])
    assert omni_check(q, 3) is None     # bound below |C4|
    assert omni_check(q, 4) is not None


def test_audit_rows_deterministic_and_verified():
    s3 = symmetric_group(3)
    r1 = omni_audit(s3, 3, 6)
    r2 = omni_audit(s3, 3, 6)
    assert r1.format_text() == r2.format_text()
    assert r1.rows
    assert len(r1.unwitnessed) == sum(1 for row in r1.rows if not row.witnessed)
    for row in r1.rows:
        assert row.f_order <= 3
        assert row.g_order <= 6
        if row.witnessed:
            assert row.witness_order is not None
            assert row.witness_order % row.g_order == 0
        else:
            assert row.witness_order is None


def test_audit_trivial_group_all_witnessed():
    rep = omni_audit(trivial_group(1), 1, 1)
    assert len(rep.rows) == 1
    assert not rep.unwitnessed
    assert rep.rows[0].g_name == "1"
    # widening the target catalog adds rows the trivial group cannot witness
    wide = omni_audit(trivial_group(1), 4, 4)
    assert len(wide.rows) == 4
    assert all(not row.witnessed for row in wide.rows if row.g_order > 1)


def test_audit_includes_every_subgroup_and_catalog_pair():
    s3 = symmetric_group(3)
    rep = omni_audit(s3, 6, 6)
    f_orders = sorted({row.f_order for row in rep.rows})
    assert f_orders == [1, 2, 3, 6]
    g_labels = {row.g_name for row in rep.rows}
    for g in small_groups_catalog(6):
        # every catalog group admitting a valid (psi, generator) pair shows up
        if g.order() <= 6:
            assert g.label() in g_labels or g.order() == 1 and "1" in g_labels


def test_audit_h_block_flags():
    tower = make_cayley_tower(cyclic_group(2), alternating_group(5), 0)
    sys = build_D(tower)
    gamma = sys.stages[0]
    kernel = kernel_at_stage(sys, 0)
    # with a tight search bound, S3 targets over kernel-supported F cannot
    # be witnessed below order 6, and S3 does embed into the block
    rep = omni_audit(gamma, 2, 6, search_bound=4, h_block=kernel)
    assert rep.flagged
    for row in rep.flagged:
        assert not row.witnessed
        assert row.flag == "h-lift-miss"
    # with the full bound those same rows become witnessed inside the kernel
    full = omni_audit(gamma, 2, 6, search_bound=120, h_block=kernel)
    assert not full.flagged


def test_audit_respects_lagrange_pruning_soundness():
    # pruned rows would have been misses anyway: brute-check tiny cases
    s3 = symmetric_group(3)
    rep = omni_audit(s3, 2, 4)
    for row in rep.rows:
        if row.g_order and s3.order() % row.g_order != 0:
            assert not row.witnessed
