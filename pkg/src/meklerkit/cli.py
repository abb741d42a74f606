"""Command-line front end.

Exit codes: 0 success, 1 semantic negative (not nice, no isomorphism, an
unwitnessed audit row, a failed verification), 2 malformed input, 3 budget
overflow.  All output is deterministic: fixed version string, sorted
iteration everywhere, seeded randomness echoed into the manifests, and no
timestamps, so re-running a command reproduces its bytes exactly.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .errors import BudgetError, ParseError
from .graphs import (
    DEFAULT_VERTEX_BUDGET,
    audit_extension_property,
    extend,
    extend_tower,
    format_graph,
    is_nice,
    parse_graph,
)
from .groups import (
    DEFAULT_ENUM_BUDGET,
    alternating_group,
    brute_iso,
    cyclic_group,
    enumerate_homs,
    format_group,
    iso_invariant_mismatch,
    parse_group,
)
from .limits import (
    DEFAULT_POINT_BUDGET,
    build_D,
    check_normal_absorption,
    kernel_at_stage,
    make_cayley_tower,
    project_pi,
    quotient_is_A,
)
from .manifest import format_manifest, sha256_hex
from .mekler import PcGroup, build_mekler, embed_gamma_prime, recover_graph
from .omni import lift_hom, omni_audit


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}")


def _load_graph(path: str):
    return parse_graph(_read_text(path))


def _load_group(path: str, enum_budget: int):
    g = parse_group(_read_text(path))
    g.enum_budget = enum_budget
    return g


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# simple commands
# ---------------------------------------------------------------------------

def cmd_nice(args) -> int:
    g = _load_graph(args.graph)
    report = is_nice(g)
    lines = [
        f"vertices: {g.n}",
        f"edges: {g.edge_count()}",
        f"nice: {report.is_nice}",
        f"nice_strict: {report.strict_is_nice}",
        f"self_only_pairs: {len(report.self_only_pairs)}",
    ]
    cert = report.certificate
    if cert is not None:
        lines.append(f"violation: {cert[0]} {cert[1]}")
    print("\n".join(lines))
    return 0 if report.is_nice else 1


def cmd_extend(args) -> int:
    g = _load_graph(args.graph)
    result, inclusion = extend_tower(g, args.depth_k, args.budget_vertices)
    text = format_graph(result)
    header = (
        f"# extended {args.depth_k}x: {g.n} -> {result.n} vertices; "
        f"original vertices keep indices 0..{g.n - 1}\n"
    )
    _emit(header + text, args.out)
    return 0


def _mekler_sections(pc: PcGroup) -> list:
    return [
        [
            ("tool", "meklerkit"),
            ("version", __version__),
            ("object", "graph group"),
        ],
        [
            ("graph_key", pc.graph.key()),
            ("vertices", str(pc.n)),
            ("edges", str(pc.graph.edge_count())),
            ("p", str(pc.p)),
            ("vertex_coordinates", str(pc.n)),
            ("pair_coordinates", str(pc.num_pairs)),
            ("coordinate_order", str(pc.p)),
            ("order", pc.order_expression()),
            ("nonedge_pairs", ";".join(f"{x},{y}" for x, y in pc.nonedges) or "-"),
        ],
    ]


def cmd_mekler(args) -> int:
    g = _load_graph(args.graph)
    pc = build_mekler(g, args.p)
    _emit(format_manifest(_mekler_sections(pc)), args.out)
    return 0


def cmd_center(args) -> int:
    g = _load_graph(args.graph)
    pc = build_mekler(g, args.p)
    report = pc.center()
    print(f"group_order: {pc.order_expression()}")
    print(
        "universal_vertices: "
        + (",".join(map(str, report.universal_vertices)) or "-")
    )
    print(f"center_order: {report.order_expression()}")
    return 0


def cmd_recover(args) -> int:
    g = _load_graph(args.graph)
    pc = build_mekler(g, args.p)
    back = recover_graph(pc)
    sys.stdout.write(format_graph(back))
    ok = back.edges == g.edges and back.n == g.n
    print(f"round_trip: {'ok' if ok else 'MISMATCH'}")
    return 0 if ok else 1


def cmd_iso(args) -> int:
    a = _load_group(args.group_a, args.budget_enum)
    b = _load_group(args.group_b, args.budget_enum)
    hom = brute_iso(a, b)
    if hom is None:
        print("isomorphic: no")
        reason = iso_invariant_mismatch(a, b)
        if reason is not None:
            name, va, vb = reason
            print(f"separating_invariant: {name}")
            print(f"left: {va}")
            print(f"right: {vb}")
        else:
            print("separating_invariant: none (exhausted generator-image search)")
        return 1
    print("isomorphic: yes")
    for gen, image in zip(a.gens, hom.gen_images):
        print(f"map: {list(gen.images)} -> {list(image.images)}")
    return 0


def cmd_lift(args) -> int:
    f = _load_group(args.group_f, args.budget_enum)
    g = _load_group(args.group_g, args.budget_enum)
    homs = enumerate_homs(f, g)
    print(f"homs: {len(homs)}")
    for k, psi in enumerate(homs):
        witness = lift_hom(f, g, psi)
        images = ";".join(str(list(psi(x).images)) for x in f.gens) or "-"
        print(
            f"hom {k}: gen_images {images} -> witness order "
            f"{witness.group.order()} verified"
        )
    return 0


def cmd_omni(args) -> int:
    budget = args.budget_enum
    if args.dstage:
        base = _load_group(args.dstage, budget)
        tower = make_cayley_tower(base, alternating_group(5), 0)
        sys_d = build_D(tower)
        gamma = sys_d.stages[0]
        gamma.enum_budget = budget
        h_block = kernel_at_stage(sys_d, 0)
    else:
        gamma = _load_group(args.group, budget)
        h_block = None
    report = omni_audit(
        gamma,
        args.bound[0],
        args.bound[1],
        search_bound=args.h_bound,
        h_block=h_block,
    )
    _emit(report.format_text(), args.out)
    return 0 if not report.unwitnessed else 1


def _tower_sections(base, tower, sys_d, absorption_sample: int) -> tuple[list, bool]:
    g0 = sys_d.stages[0]
    checks_ok = True
    pi_ok = True
    for x in g0.elements():
        e0 = sys_d.element(0, x)
        if tower.depth >= 1:
            if project_pi(sys_d, sys_d.push(e0, 1)) != project_pi(sys_d, e0):
                pi_ok = False
                break
    kernel = kernel_at_stage(sys_d, 0)
    member_ok = all(
        (project_pi(sys_d, sys_d.element(0, x)).is_identity()) == (x in kernel)
        for x in g0.elements()
    )
    quo = quotient_is_A(sys_d, 0)
    absorb_all = True
    checked = 0
    h0 = tower.h_stages[0]
    inject = tower.sums[0].inject_b
    for t in h0.elements():
        if t.is_identity():
            continue
        rep = check_normal_absorption(sys_d, 0, inject(t))
        checked += 1
        if not rep.contains_kernel:
            absorb_all = False
        if absorption_sample and checked >= absorption_sample:
            break
    boundary = None
    for s in base.elements():
        if not s.is_identity():
            boundary = check_normal_absorption(
                sys_d, 0, tower.sums[0].inject_a(s)
            )
            break
    checks_ok = pi_ok and member_ok and quo.verified and absorb_all
    section = [
        ("base", base.label()),
        ("base_order", str(base.order())),
        ("h0", tower.h_stages[0].label()),
        ("depth", str(tower.depth)),
        ("stage0_order", str(g0.order())),
        ("stage_degrees", ";".join(str(s.degree) for s in sys_d.stages)),
        (
            "f_injective",
            ";".join("yes" for _ in tower.f_maps) or "-",
        ),
        ("pi_commutes", "yes" if pi_ok else "NO"),
        ("kernel_is_e_x_h", "yes" if member_ok else "NO"),
        ("quotient_is_base", "yes" if quo.verified else "NO"),
        ("absorption_checked", str(checked)),
        ("absorption_all_contain_kernel", "yes" if absorb_all else "NO"),
        (
            "base_coordinate_note",
            boundary.boundary_note or "absorbed"
            if boundary is not None
            else "-",
        ),
    ]
    return section, checks_ok


def cmd_tower(args) -> int:
    base = (
        _load_group(args.a, args.budget_enum) if args.a else cyclic_group(2)
    )
    tower = make_cayley_tower(
        base, alternating_group(5), args.depth_d, point_budget=args.budget_points
    )
    sys_d = build_D(tower)
    section, ok = _tower_sections(base, tower, sys_d, args.absorption_sample)
    sections = [
        [("tool", "meklerkit"), ("version", __version__), ("object", "tower")],
        section,
    ]
    sys.stdout.write(format_manifest(sections))
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# the full pipeline
# ---------------------------------------------------------------------------

def _kv(key, value):
    return (key, str(value))


def cmd_reduce(args) -> int:
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    artifacts: dict[str, str] = {}
    sections: list = [
        [
            _kv("tool", "meklerkit"),
            _kv("version", __version__),
            _kv("command", "reduce"),
        ],
        [
            _kv("p", args.p),
            _kv("depth_k", args.depth_k),
            _kv("depth_d", args.depth_d),
            _kv("seed", args.seed),
            _kv("bound_f", args.bound[0]),
            _kv("bound_g", args.bound[1]),
            _kv("h_bound", args.h_bound),
            _kv("force", args.force),
            _kv("budget_vertices", args.budget_vertices),
            _kv("budget_points", args.budget_points),
            _kv("base", args.a if args.a else "C2 (built in)"),
        ],
    ]
    verdicts: list[bool] = []

    def finish(status: str, code: int) -> int:
        sections.append(
            [_kv("artifact_" + name.replace(".", "_"), digest)
             for name, digest in sorted(artifacts.items())]
            or [_kv("artifacts", "none")]
        )
        sections.append([_kv("status", status)])
        text = format_manifest(sections)
        (outdir / "manifest.txt").write_text(text, encoding="utf-8", newline="\n")
        sys.stdout.write(text)
        return code

    def write_artifact(name: str, text: str) -> None:
        (outdir / name).write_text(text, encoding="utf-8", newline="\n")
        artifacts[name] = sha256_hex(text)

    try:
        g = _load_graph(args.graph)
        report = is_nice(g)
        input_section = [
            _kv("vertices", g.n),
            _kv("edges", g.edge_count()),
            _kv("graph_key", g.key()),
            _kv("nice", report.is_nice),
            _kv("nice_strict", report.strict_is_nice),
        ]
        cert = report.certificate
        if cert is not None:
            input_section.append(_kv("violation", f"{cert[0]} {cert[1]}"))
        if not report.is_nice and not args.force:
            input_section.append(_kv("gate", "refused: input graph is not nice"))
            sections.append(input_section)
            return finish("refused", 1)
        if not report.is_nice:
            input_section.append(_kv("nice_override", "forced"))
        sections.append(input_section)
        write_artifact("input_graph.txt", format_graph(g))

        # stage 1: graph extension toward the extension property
        stage_sizes = [g.n]
        cur = g
        for _ in range(args.depth_k):
            cur = extend(cur, args.budget_vertices)
            stage_sizes.append(cur.n)
        extended, inclusion = cur, tuple(range(g.n))
        audit = audit_extension_property(
            extended, m=g.n, universe=range(g.n)
        )
        verdicts.append(audit.ok)
        sections.append(
            [
                _kv("stage_sizes", " -> ".join(map(str, stage_sizes))),
                _kv("inclusion", "identity on 0.." + str(g.n - 1) if g.n else "-"),
                _kv("extension_audit_pairs", audit.pair_count),
                _kv("extension_audit_failures", len(audit.failures)),
            ]
        )
        write_artifact("extended_graph.txt", format_graph(extended))

        # stage 2: the graph group and its transport into the extended stage
        pc = build_mekler(g, args.p)
        write_artifact("mekler_group.txt", format_manifest(_mekler_sections(pc)))
        pc_big = build_mekler(extended, args.p)
        hom = embed_gamma_prime(g, extended, inclusion, args.p)
        rng = random.Random(args.seed)
        samples = 1000
        dims_a, dims_b = pc.n, pc.num_pairs
        def sample_block(width):
            flat = [rng.randrange(args.p) for _ in range(samples * width)]
            return np.array(flat, dtype=np.int64).reshape(samples, width)

        a1, b1 = sample_block(dims_a), sample_block(dims_b)
        a2, b2 = sample_block(dims_a), sample_block(dims_b)
        pa, pb = pc.multiply_arrays(a1, b1, a2, b2)
        ta1, tb1 = hom.apply_arrays(a1, b1)
        ta2, tb2 = hom.apply_arrays(a2, b2)
        tpa, tpb = pc_big.multiply_arrays(ta1, tb1, ta2, tb2)
        ha, hb = hom.apply_arrays(pa, pb)
        hom_failures = int(
            np.count_nonzero(np.any(tpa != ha, axis=-1) | np.any(tpb != hb, axis=-1))
        )
        source_keys = {
            tuple(row) for row in np.concatenate([a1, b1], axis=-1).tolist()
        }
        image_keys = {
            tuple(row) for row in np.concatenate([ta1, tb1], axis=-1).tolist()
        }
        distinct_sources = len(source_keys)
        distinct_images = len(image_keys)
        inj_ok = distinct_images == distinct_sources
        verdicts.append(hom_failures == 0 and inj_ok)
        sections.append(
            [
                _kv("gamma_order", pc.order_expression()),
                _kv("gamma_prime_order", pc_big.order_expression()),
                _kv("injection", "identity on vertex coordinates"),
                _kv("hom_samples", samples),
                _kv("hom_failures", hom_failures),
                _kv("injectivity_samples", distinct_sources),
                _kv("injectivity_clashes", distinct_sources - distinct_images),
            ]
        )
        write_artifact(
            "gamma_prime.txt",
            format_manifest(
                [
                    [
                        _kv("source_order", pc.order_expression()),
                        _kv("target_order", pc_big.order_expression()),
                        _kv("vertex_injection",
                            ",".join(map(str, inclusion)) or "-"),
                        _kv("hom_samples", samples),
                        _kv("hom_failures", hom_failures),
                    ]
                ]
            ),
        )

        # stage 3: the tower over the configured small base
        base = (
            _load_group(args.a, args.budget_enum)
            if args.a
            else cyclic_group(2)
        )
        tower = make_cayley_tower(
            base,
            alternating_group(5),
            args.depth_d,
            point_budget=args.budget_points,
        )
        sys_d = build_D(tower)
        tower_section, tower_ok = _tower_sections(base, tower, sys_d, 0)
        verdicts.append(tower_ok)
        write_artifact(
            "tower.txt",
            format_manifest(
                [
                    [
                        _kv("tool", "meklerkit"),
                        _kv("version", __version__),
                        _kv("object", "tower"),
                    ],
                    tower_section,
                ]
            ),
        )
        sections.append(tower_section)

        audit_report = omni_audit(
            sys_d.stages[0],
            args.bound[0],
            args.bound[1],
            search_bound=args.h_bound,
            h_block=kernel_at_stage(sys_d, 0),
        )
        write_artifact("omni_report.txt", audit_report.format_text())
        sections.append(
            [
                _kv("omni_rows", len(audit_report.rows)),
                _kv("omni_unwitnessed", len(audit_report.unwitnessed)),
                _kv("omni_flagged", len(audit_report.flagged)),
            ]
        )

        # the intended base is the transported graph group, recorded only
        sections.append(
            [
                _kv("intended_base", f"graph group of extended stage, p={args.p}"),
                _kv("intended_base_order", pc_big.order_expression()),
                _kv(
                    "binding",
                    "tower base stands in for the graph group; "
                    "the group itself is recorded symbolically, not enumerated",
                ),
            ]
        )
    except BudgetError as exc:
        sections.append([_kv("error", f"budget: {exc}")])
        finish("incomplete", 3)
        return 3
    ok = all(verdicts)
    return finish("complete" if ok else "verification-failure", 0 if ok else 1)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="meklerkit",
        description="graph towers, graph groups, direct-limit towers, "
        "and extension-property audits",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_budget_enum(p):
        p.add_argument(
            "--budget-enum",
            type=int,
            default=DEFAULT_ENUM_BUDGET,
            help="element enumeration budget",
        )

    p = sub.add_parser("nice", help="niceness report for a graph file")
    p.add_argument("graph")
    p.set_defaults(func=cmd_nice)

    p = sub.add_parser("extend", help="iterate the subset extension")
    p.add_argument("graph")
    p.add_argument("--depth-k", type=int, default=1)
    p.add_argument("--budget-vertices", type=int, default=DEFAULT_VERTEX_BUDGET)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("mekler", help="graph group descriptor")
    p.add_argument("graph")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_mekler)

    p = sub.add_parser("center", help="center of the graph group")
    p.add_argument("graph")
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_center)

    p = sub.add_parser("recover", help="rebuild the graph from commutation")
    p.add_argument("graph")
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("iso", help="brute-force isomorphism of two group files")
    p.add_argument("group_a")
    p.add_argument("group_b")
    add_budget_enum(p)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("lift", help="lift every hom F -> G through F (+) G")
    p.add_argument("group_f")
    p.add_argument("group_g")
    add_budget_enum(p)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("omni", help="bounded extension-property audit")
    p.add_argument("group", nargs="?")
    p.add_argument("--dstage", help="group file for the tower base A; "
                   "audits A (+) Alt(5) with kernel flagging")
    p.add_argument("--bound", type=int, nargs=2, metavar=("MAX_F", "MAX_G"),
                   required=True)
    p.add_argument("--h-bound", type=int, default=None)
    p.add_argument("-o", "--out")
    add_budget_enum(p)
    p.set_defaults(func=cmd_omni)

    p = sub.add_parser("tower", help="build and check the tower over a base")
    p.add_argument("--a", help="group file for the base (default: C2)")
    p.add_argument("--depth-d", type=int, default=1)
    p.add_argument("--budget-points", type=int, default=DEFAULT_POINT_BUDGET)
    p.add_argument("--absorption-sample", type=int, default=0,
                   help="check only this many kernel elements (0 = all)")
    add_budget_enum(p)
    p.set_defaults(func=cmd_tower)

    p = sub.add_parser("reduce", help="full pipeline with manifest output")
    p.add_argument("graph")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--depth-k", type=int, default=1)
    p.add_argument("--depth-d", type=int, default=1)
    p.add_argument("--a", help="group file for the tower base (default: C2)")
    p.add_argument("--bound", type=int, nargs=2, metavar=("MAX_F", "MAX_G"),
                   default=[2, 6])
    p.add_argument("--h-bound", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.add_argument("--force", action="store_true",
                   help="run even if the input graph is not nice")
    p.add_argument("--budget-vertices", type=int, default=DEFAULT_VERTEX_BUDGET)
    p.add_argument("--budget-points", type=int, default=DEFAULT_POINT_BUDGET)
    add_budget_enum(p)
    p.set_defaults(func=cmd_reduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "omni" and bool(args.group) == bool(args.dstage):
        parser.error("omni needs exactly one of GROUP or --dstage")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetError as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
