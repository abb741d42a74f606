"""Homomorphism lifting and bounded extension-property audits for groups.

The group-side extension property asks: given a finite subgroup F of Gamma
and an embedding psi of F into a finite group G generated by psi(F) and one
more element, is there a subgroup H of Gamma containing F and a surjection
H -> G extending psi?  `lift_hom` answers the universal version with the
block-sum witness H = F (+) G; `omni_check` searches Gamma exhaustively up
to a subgroup-order bound, so its "none" answers are proofs within the
bound, not timeouts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .groups import (
    Hom,
    Perm,
    PermGroup,
    automorphisms,
    closure_elements,
    direct_sum,
    enumerate_homs,
    subgroups,
    subgroups_containing,
    verify_hom_table,
)


@dataclass(frozen=True)
class LiftWitness:
    group: PermGroup  # H
    embed: Hom        # i : F -> H, injective
    surj: Hom         # Psi : H -> G, surjective, Psi o i = psi


def lift_hom(f_group: PermGroup, g_group: PermGroup, psi: Hom) -> LiftWitness:
    """Universal lift of psi : F -> G through the block sum H = F (+) G.

    i sends x to (x, psi(x)); the second projection is the surjection, and
    Psi(i(x)) = psi(x) holds on the nose.  All three properties (injective,
    surjective, triangle) are verified by enumeration before returning.
    """
    if psi.domain is not f_group or psi.codomain is not g_group:
        raise ValueError("psi must map the given F into the given G")
    psi.verify()
    ds = direct_sum(f_group, g_group)
    embed_images = [
        ds.inject_a(x) * ds.inject_b(psi(x)) for x in f_group.gens
    ]
    embed = Hom(f_group, ds.group, embed_images, name="graph_embed")
    if not embed.verify().is_injective():
        raise AssertionError("lift embedding failed to be injective")
    surj = ds.project_b
    if not surj.verify().is_surjective():
        raise AssertionError("lift projection failed to be surjective")
    for x in f_group.elements():
        if surj(embed(x)) != psi(x):
            raise AssertionError("lift triangle failed")
    return LiftWitness(ds.group, embed, surj)


@dataclass(frozen=True)
class OmniQuery:
    """One extension-property instance inside an ambient group.

    `sub_f` must be a subgroup of `gamma` (same degree, elements inside);
    `psi` embeds it into `target`, and `gen` generates `target` together
    with psi(F).
    """

    gamma: PermGroup
    sub_f: PermGroup
    target: PermGroup
    psi: Hom
    gen: Perm

    def validate(self) -> "OmniQuery":
        if self.sub_f.degree != self.gamma.degree:
            raise ValueError("F must act on gamma's points")
        gamma_els = self.gamma.element_set()
        if not set(self.sub_f.elements()) <= gamma_els:
            raise ValueError("F is not a subgroup of gamma")
        if self.psi.domain is not self.sub_f or self.psi.codomain is not self.target:
            raise ValueError("psi must map F into the target")
        if not self.psi.verify().is_injective():
            raise ValueError("psi must be injective")
        if self.gen not in self.target:
            raise ValueError("distinguished generator is outside the target")
        seed = [self.psi(x) for x in self.sub_f.gens] + [self.gen]
        closed = closure_elements(seed, self.target.degree)
        if len(closed) != self.target.order():
            raise ValueError("psi(F) and the generator do not generate the target")
        return self


@dataclass(frozen=True)
class OmniWitness:
    subgroup: PermGroup  # H with F <= H <= gamma
    surj: Hom            # H -> target, surjective, extends psi


def _extensions_of_psi(h: PermGroup, query: OmniQuery):
    """Surjections h -> target restricted to psi on F, in deterministic order.

    h comes from the containment search, so its generator list starts with
    F's generators; those images are forced, and the remaining generators
    range over order-divisibility candidates.  Candidate pruning cannot
    create false negatives: images of an order-n element must have order
    dividing n in any homomorphism.
    """
    target = query.target
    n_fixed = len(query.sub_f.gens)
    fixed = [query.psi(x) for x in query.sub_f.gens]
    free_gens = h.gens[n_fixed:]
    pools = []
    for x in free_gens:
        ox = x.order()
        pools.append([y for y in target.elements() if ox % y.order() == 0])
    f_els = query.sub_f.elements()
    for choice in itertools.product(*pools):
        try:
            hom = Hom(h, target, fixed + list(choice)).verify()
        except ValueError:
            continue
        if not hom.is_surjective():
            continue
        if any(hom(x) != query.psi(x) for x in f_els):
            continue
        yield hom


def omni_check(query: OmniQuery, search_bound: int) -> OmniWitness | None:
    """Exhaustive bounded witness search; None is a proof within the bound.

    Subgroups H with F <= H <= gamma and |H| <= search_bound are visited in
    deterministic (order, element-set) order; |target| must divide |H| for a
    surjection to exist, so other orders are skipped soundly.
    """
    query.validate()
    t_order = query.target.order()
    for h in subgroups_containing(query.gamma, query.sub_f.gens, search_bound):
        if h.order() % t_order != 0:
            continue
        for hom in _extensions_of_psi(h, query):
            if not verify_hom_table(hom):
                raise AssertionError("witness failed the table check")
            return OmniWitness(h, hom)
    return None


# ---------------------------------------------------------------------------
# batch audit
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OmniAuditRow:
    f_order: int
    f_id: str          # sorted gamma element indices of F
    g_name: str
    g_order: int
    psi_fingerprint: str
    witnessed: bool
    witness_order: int | None
    search_bound: int
    flag: str


@dataclass(frozen=True)
class OmniAuditReport:
    gamma_label: str
    max_f: int
    max_g: int
    search_bound: int
    rows: tuple[OmniAuditRow, ...]

    @property
    def unwitnessed(self) -> tuple[OmniAuditRow, ...]:
        return tuple(r for r in self.rows if not r.witnessed)

    @property
    def flagged(self) -> tuple[OmniAuditRow, ...]:
        return tuple(r for r in self.rows if r.flag)

    def format_text(self) -> str:
        lines = [
            f"omni audit of {self.gamma_label}",
            f"bounds: |F| <= {self.max_f}, |G| <= {self.max_g}, "
            f"|H| <= {self.search_bound}",
            f"rows: {len(self.rows)}",
            f"unwitnessed: {len(self.unwitnessed)}",
            f"flagged: {len(self.flagged)}",
            "F-order | F-id | G | G-order | psi | verdict | H-order | bound | flag",
        ]
        for r in self.rows:
            lines.append(
                f"{r.f_order} | {r.f_id} | {r.g_name} | {r.g_order} | "
                f"{r.psi_fingerprint} | "
                f"{'witness' if r.witnessed else 'none'} | "
                f"{r.witness_order if r.witness_order is not None else '-'} | "
                f"{r.search_bound} | {r.flag or '-'}"
            )
        return "\n".join(lines) + "\n"


def _psi_orbit_representatives(f_sub: PermGroup, g_grp: PermGroup, auts: PermGroup):
    """Injective homs F -> G up to post-composition with Aut(G).

    Composing a witness surjection with an automorphism of G turns a witness
    for psi into one for alpha o psi, so auditing one representative per
    orbit loses nothing.
    """
    g_els = g_grp.elements()
    g_index = {x: i for i, x in enumerate(g_els)}
    f_els = f_sub.elements()
    reps = {}
    for hom in enumerate_homs(f_sub, g_grp, injective_only=True):
        key_raw = tuple(g_index[hom(x)] for x in f_els)
        canon = min(
            tuple(alpha.images[i] for i in key_raw) for alpha in auts.elements()
        )
        if canon not in reps:
            reps[canon] = hom
    return [reps[k] for k in sorted(reps)]


def omni_audit(
    gamma: PermGroup,
    max_f: int,
    max_g: int,
    search_bound: int | None = None,
    catalog=None,
    h_block: frozenset | None = None,
) -> OmniAuditReport:
    """Audit every bounded extension-property instance inside gamma.

    F runs over all subgroups of order <= max_f; G over a complete
    isomorphism catalog of orders <= max_g; psi over injective homs up to
    Aut(G), keeping only single-generator extensions (some g in G together
    with psi(F) generates G).  Each row records the `omni_check` verdict.

    `h_block` marks the {e} x H elements of a tower stage: rows with F
    inside that block, G embeddable into the block group, and no witness
    are flagged, since the limit argument promises a witness one stage up.
    """
    from .groups import small_groups_catalog  # local: avoids cycle in docs builds

    if search_bound is None:
        search_bound = gamma.order()
    if catalog is None:
        catalog = small_groups_catalog(max_g)
    else:
        catalog = [g for g in catalog if g.order() <= max_g]
    gamma_els = gamma.elements()
    gamma_index = {x: i for i, x in enumerate(gamma_els)}
    auts_cache = {}
    block_group = None
    if h_block is not None:
        block_list = [x for x in gamma_els if x in h_block]
        block_group = PermGroup.from_elements(gamma.degree, block_list, block_list)

    rows = []
    for f_sub in subgroups(gamma, max_f):
        f_id = ",".join(str(gamma_index[x]) for x in sorted(f_sub.elements()))
        f_in_block = h_block is not None and set(f_sub.elements()) <= h_block
        for g_grp in catalog:
            key = g_grp.label()
            if key not in auts_cache:
                auts_cache[key] = (g_grp, automorphisms(g_grp))
            g_ref, auts = auts_cache[key]
            g_els = g_ref.elements()
            embeds_in_block = None  # computed lazily per (F in block, no witness)
            for psi in _psi_orbit_representatives(f_sub, g_ref, auts):
                image = [psi(x) for x in f_sub.gens]
                gen = None
                for cand in g_els:
                    closed = closure_elements(image + [cand], g_ref.degree)
                    if len(closed) == g_ref.order():
                        gen = cand
                        break
                if gen is None:
                    continue  # not a single-generator extension of psi(F)
                query = OmniQuery(gamma, f_sub, g_ref, psi, gen)
                witness = omni_check(query, search_bound)
                flag = ""
                if witness is None and f_in_block:
                    if embeds_in_block is None:
                        embeds_in_block = bool(
                            enumerate_homs(g_ref, block_group, injective_only=True)
                        )
                    if embeds_in_block:
                        flag = "h-lift-miss"
                f_els = f_sub.elements()
                fingerprint = "[" + ",".join(
                    str(g_els.index(psi(x))) for x in f_els
                ) + "]"
                rows.append(
                    OmniAuditRow(
                        f_order=f_sub.order(),
                        f_id=f_id,
                        g_name=g_ref.label(),
                        g_order=g_ref.order(),
                        psi_fingerprint=fingerprint,
                        witnessed=witness is not None,
                        witness_order=(
                            witness.subgroup.order() if witness else None
                        ),
                        search_bound=search_bound,
                        flag=flag,
                    )
                )
    return OmniAuditReport(
        gamma_label=gamma.label(),
        max_f=max_f,
        max_g=max_g,
        search_bound=search_bound,
        rows=tuple(rows),
    )
