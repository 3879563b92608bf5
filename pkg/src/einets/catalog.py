"""Valence-2 catalog documents and golden-file comparison."""
from __future__ import annotations

import json
from pathlib import Path

from einets import labels
from einets.enumeration import EnumerationSpec, canonical_form, enumerate_networks
from einets.network import EINetwork, NetworkClass, classify_network, is_homogeneous
from einets.odeequiv import parametric_class_id, partition_classes, signature
from einets.synchrony import balanced_colourings

GOLDEN_DIR = Path(__file__).parent / "golden"
DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


def stable_id(net: EINetwork) -> str:
    """Canonical flattening in base 36, e.g. '2T-EI-1010-0101'."""
    def enc(m):
        vals = [x for r in m for x in r]
        if all(v < 36 for v in vals):
            return "".join(DIGITS[v] for v in vals)
        return ".".join(str(v) for v in vals)

    kind = "S" if net.single_node_type else "T"
    types = "" if net.single_node_type else "".join(net.node_types) + "-"
    return f"{net.n}{kind}-{types}{enc(net.exc)}-{enc(net.inh)}"


def _class_label(table: str, members, modulo_duality: bool) -> list[str]:
    figure = {
        "rei": labels.REI_FIGURE,
        "pei": labels.PEI_FIGURE,
        "uei": labels.UEI_FIGURE,
        "cei": labels.CEI_FIGURE,
    }[table]
    return [name for name in figure if signature(labels.figure_network(table, name), modulo_duality) == members]


def build_catalog(table: str, max_valence: int = 2, modulo_duality: bool = True) -> dict:
    cls = NetworkClass.parse(table)
    table = cls.value.lower()
    spec = EnumerationSpec(2, cls, max_valence, True, modulo_duality)
    nets = enumerate_networks(spec)
    part = partition_classes(nets, modulo_duality, with_minimal=True)
    annotate: dict[EINetwork, list[str]] = {}
    if max_valence == 2:
        for name, net in labels.catalog_labels(table).items():
            annotate.setdefault(canonical_form(net, modulo_duality), []).append(name)
    class_of = {}
    for idx, c in enumerate(part.classes):
        for m in c.members:
            class_of[m] = idx
    networks = []
    for net in nets:
        networks.append({
            "id": stable_id(net),
            "labels": sorted(annotate.get(net, [])),
            "network": net.to_dict(),
            "classes": sorted(x.value for x in classify_network(net)),
            "homogeneous": is_homogeneous(net),
            "ode_class": class_of[net],
            "balanced_colourings": [str(c) for c in balanced_colourings(net)],
        })
    classes = []
    for idx, c in enumerate(part.classes):
        try:
            pid = str(parametric_class_id(c.members[0])) if cls != NetworkClass.CEI else None
        except ValueError:
            pid = None
        classes.append({
            "index": idx,
            "size": c.size,
            "figure_labels": _class_label(table, c.signature, modulo_duality) if max_valence == 2 else [],
            "parametric_id": pid,
            "signature": c.signature.to_dict(),
            "members": [stable_id(m) for m in c.members],
            "minimal_representatives": [
                {"id": stable_id(m), "arrows": m.arrow_count, "network": m.to_dict()} for m in c.minimal
            ],
        })
    sizes = " + ".join(str(c.size) for c in part.classes)
    return {
        "spec": {"class": cls.value, "n": 2, "max_valence": max_valence, "modulo_duality": modulo_duality},
        "summary": f"{len(nets)} networks, {len(part)} ODE-classes ({sizes})",
        "networks": networks,
        "ode_classes": classes,
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def golden_path(table: str, directory: Path | None = None) -> Path:
    return (directory or GOLDEN_DIR) / f"{table.lower()}.json"


def diff_golden(table: str, directory: Path | None = None) -> tuple[dict, list[str]]:
    """Regenerate a catalog and list differences against its golden file."""
    doc = build_catalog(table)
    path = golden_path(table, directory)
    if not path.exists():
        return doc, [f"missing golden file {path}"]
    golden = json.loads(path.read_text())
    problems = []
    for key in ("spec", "summary"):
        if golden.get(key) != doc[key]:
            problems.append(f"{key}: golden {golden.get(key)!r} != {doc[key]!r}")
    gids = [n["id"] for n in golden.get("networks", [])]
    ids = [n["id"] for n in doc["networks"]]
    for x in sorted(set(gids) - set(ids)):
        problems.append(f"network {x} missing from regenerated catalog")
    for x in sorted(set(ids) - set(gids)):
        problems.append(f"network {x} absent from golden file")
    if not problems and dumps(golden) != dumps(doc):
        problems.append("catalog content differs from golden file")
    return doc, problems
