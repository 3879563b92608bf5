"""einets command line.

Subcommands: enumerate, classify, minimal, colourings, quotient,
signature, jacobian, simulate, verify-synchrony, catalog.

Network files use the JSON schema
  {"n": 2, "single_node_type": false, "node_types": ["E", "I"],
   "exc": [[...]], "inh": [[...]]}
where entry (i, j) counts arrows from node j to node i.
The default seed comes from $EINETS_SEED (0 when unset).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from einets import admissible, catalog, sim
from einets.enumeration import EnumerationSpec, enumerate_networks
from einets.network import EINetwork, classify_network, is_homogeneous
from einets.odeequiv import SearchExhausted, minimal_representatives, parametric_class_id, partition_classes
from einets.synchrony import Colouring, balanced_colourings, quotient

CLASSES = ["rei", "pei", "uei", "cei"]


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load_network(path: str) -> EINetwork:
    return EINetwork.from_json(_read_text(path))


def _arrow_text(net: EINetwork) -> str:
    return " ".join(f"{s}->{t}{k}" for s, t, k in net.arrows()) or "-"


def _emit_networks(nets, fmt: str, out):
    if fmt == "json":
        out.write(json.dumps([n.to_dict() for n in nets], sort_keys=True, indent=1) + "\n")
    elif fmt == "dot":
        for k, n in enumerate(nets):
            out.write(n.to_dot(f"G{k}"))
    else:
        for n in nets:
            classes = ",".join(sorted(c.value for c in classify_network(n)))
            out.write(f"{catalog.stable_id(n)}\t{classes}\t{_arrow_text(n)}\n")


def _spec(args) -> EnumerationSpec:
    return EnumerationSpec(args.nodes, args.cls.upper(), args.max_valence, True, not args.no_duality)


def cmd_enumerate(args, out):
    nets = enumerate_networks(_spec(args))
    _emit_networks(nets, args.format, out)
    if args.format == "table":
        out.write(f"# {len(nets)} networks\n")
    return 0


def cmd_classify(args, out):
    nets = enumerate_networks(_spec(args))
    part = partition_classes(nets, not args.no_duality, with_minimal=True, entry_bound=args.entry_bound)
    if args.format == "json":
        doc = [
            {
                "size": c.size,
                "signature": c.signature.to_dict(),
                "members": [m.to_dict() for m in c.members],
                "minimal_representatives": [m.to_dict() for m in c.minimal],
            }
            for c in part.classes
        ]
        out.write(json.dumps(doc, sort_keys=True, indent=1) + "\n")
        return 0
    sizes = " + ".join(str(s) for s in part.sizes())
    out.write(f"{len(nets)} networks, {len(part)} ODE-classes ({sizes})\n")
    for k, c in enumerate(part.classes):
        out.write(f"class {k}: {c.size} members, span dimension {c.signature.dim}\n")
        for row in c.signature.space.basis:
            out.write("  basis " + " ".join(str(x) for x in row) + "\n")
        for m in c.minimal:
            out.write(f"  minimal {catalog.stable_id(m)} ({m.arrow_count} arrows) {_arrow_text(m)}\n")
        for m in c.members:
            out.write(f"  member  {catalog.stable_id(m)} {_arrow_text(m)}\n")
    return 0


def cmd_minimal(args, out):
    net = _load_network(args.network)
    try:
        reps = minimal_representatives([net], entry_bound=args.entry_bound, modulo_duality=not args.no_duality)
    except SearchExhausted as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    _emit_networks(reps, args.format, out)
    return 0


def cmd_colourings(args, out):
    net = _load_network(args.network)
    cols = balanced_colourings(net)
    if args.format == "json":
        out.write(json.dumps([str(c) for c in cols]) + "\n")
    else:
        for c in cols:
            out.write(str(c) + "\n")
    return 0


def cmd_quotient(args, out):
    net = _load_network(args.network)
    q = quotient(net, Colouring.parse(args.colouring, net.n))
    if args.format == "dot":
        out.write(q.to_dot("Q"))
    else:
        out.write(q.to_json() + "\n")
    return 0


def cmd_signature(args, out):
    net = _load_network(args.network)
    sig = admissible.signature(net)
    if args.format == "json":
        out.write(json.dumps(sig.to_dict(), sort_keys=True, ensure_ascii=False) + "\n")
    else:
        out.write(sig.render(latex=args.format == "latex"))
    return 0


def cmd_jacobian(args, out):
    net = _load_network(args.network)
    jac = admissible.symbolic_jacobian(net)
    if args.format == "json":
        out.write(json.dumps(jac.to_dict(), sort_keys=True) + "\n")
    else:
        out.write(jac.render() + "\n")
    return 0


def _vector(text: str) -> np.ndarray:
    return np.array([float(x) for x in text.split(",")])


def cmd_simulate(args, out):
    net = _load_network(args.network)
    spec = admissible.CouplingSpec.from_json(_read_text(args.coupling))
    field = admissible.assemble_vector_field(net, spec)
    x0 = _vector(args.x0) if args.x0 else np.zeros(field.dim)
    if x0.size != field.dim:
        sys.stderr.write(f"error: x0 needs {field.dim} entries\n")
        return 2
    try:
        traj = sim.integrate(field, x0, args.dt, args.steps)
    except sim.DivergenceError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    rows = range(0, len(traj.times), args.every)
    if args.format == "json":
        doc = {"times": [float(traj.times[i]) for i in rows], "states": [traj.states[i].tolist() for i in rows]}
        out.write(json.dumps(doc) + "\n")
    else:
        for i in rows:
            out.write(f"{traj.times[i]:.6g}\t" + "\t".join(f"{v:.10g}" for v in traj.states[i]) + "\n")
    return 0


def cmd_verify_synchrony(args, out):
    net = _load_network(args.network)
    colouring = Colouring.parse(args.colouring, net.n)
    spec = admissible.CouplingSpec.from_json(_read_text(args.coupling)) if args.coupling else None
    try:
        report = sim.check_synchrony_invariance(
            net, colouring, spec, trials=args.trials, T=args.T, dt=args.dt, tol=args.tol, seed=args.seed
        )
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    out.write(report.summary() + "\n")
    return 0 if report.passed or not report.balanced else 1


def cmd_catalog(args, out):
    status = 0
    for table in [args.cls] if args.cls else CLASSES:
        if args.write:
            doc = catalog.build_catalog(table)
            path = catalog.golden_path(table, args.golden_dir)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(catalog.dumps(doc))
            out.write(f"{table.upper()}: {doc['summary']} (written to {path})\n")
            continue
        doc, problems = catalog.diff_golden(table, args.golden_dir)
        verdict = "OK" if not problems else "MISMATCH"
        out.write(f"{table.upper()}: {doc['summary']} [{verdict}]\n")
        for p in problems:
            out.write(f"  {p}\n")
        if problems:
            status = 1
    return status


def build_parser() -> argparse.ArgumentParser:
    default_seed = int(os.environ.get("EINETS_SEED", "0"))
    p = argparse.ArgumentParser(prog="einets", description="Excitatory-inhibitory network classification toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def catalog_flags(sp, formats):
        sp.add_argument("--class", dest="cls", choices=CLASSES, required=True)
        sp.add_argument("--nodes", type=int, default=2)
        sp.add_argument("--max-valence", type=int, default=2)
        sp.add_argument("--no-duality", action="store_true")
        sp.add_argument("--format", choices=formats, default="table")

    sp = sub.add_parser("enumerate", help="list canonical connected networks")
    catalog_flags(sp, ["json", "dot", "table"])
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("classify", help="partition a catalog into ODE-classes")
    catalog_flags(sp, ["json", "table"])
    sp.add_argument("--entry-bound", type=int, default=None)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("minimal", help="minimal networks ODE-equivalent to a network")
    sp.add_argument("network")
    sp.add_argument("--entry-bound", type=int, default=None)
    sp.add_argument("--no-duality", action="store_true")
    sp.add_argument("--format", choices=["json", "dot", "table"], default="table")
    sp.set_defaults(func=cmd_minimal)

    sp = sub.add_parser("colourings", help="balanced colourings of a network")
    sp.add_argument("network")
    sp.add_argument("--format", choices=["json", "table"], default="table")
    sp.set_defaults(func=cmd_colourings)

    sp = sub.add_parser("quotient", help="quotient network by a balanced colouring, e.g. '1,2|3'")
    sp.add_argument("network")
    sp.add_argument("colouring")
    sp.add_argument("--format", choices=["json", "dot"], default="json")
    sp.set_defaults(func=cmd_quotient)

    sp = sub.add_parser("signature", help="admissible ODE signature")
    sp.add_argument("network")
    sp.add_argument("--format", choices=["text", "latex", "json"], default="text")
    sp.set_defaults(func=cmd_signature)

    sp = sub.add_parser("jacobian", help="structured symbolic Jacobian")
    sp.add_argument("network")
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_jacobian)

    sp = sub.add_parser("simulate", help="integrate an admissible ODE with RK4")
    sp.add_argument("network")
    sp.add_argument("--coupling", required=True)
    sp.add_argument("--x0", default=None, help="comma-separated initial state")
    sp.add_argument("--dt", type=float, default=0.01)
    sp.add_argument("--steps", type=int, default=1000)
    sp.add_argument("--every", type=int, default=1, help="print every N-th step")
    sp.add_argument("--format", choices=["json", "table"], default="table")
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("verify-synchrony", help="numerically test flow invariance of a polydiagonal")
    sp.add_argument("network")
    sp.add_argument("--colouring", required=True)
    sp.add_argument("--coupling", default=None)
    sp.add_argument("--trials", type=int, default=50)
    sp.add_argument("--T", type=float, default=10.0)
    sp.add_argument("--dt", type=float, default=0.01)
    sp.add_argument("--tol", type=float, default=1e-8)
    sp.add_argument("--seed", type=int, default=default_seed)
    sp.set_defaults(func=cmd_verify_synchrony)

    sp = sub.add_parser("catalog", help="regenerate valence-2 catalogs and diff against golden files")
    sp.add_argument("--class", dest="cls", choices=CLASSES, default=None)
    sp.add_argument("--write", action="store_true", help="overwrite the golden files")
    sp.add_argument("--golden-dir", type=Path, default=None)
    sp.set_defaults(func=cmd_catalog)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
