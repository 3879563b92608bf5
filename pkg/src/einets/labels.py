"""Hand-entered reference networks with their figure labels.

Arrows are (source, target, type) with 1-based nodes.  In two-type
networks node 1 is excitatory and node 2 inhibitory.
"""
from __future__ import annotations

from einets.network import EINetwork

# REI valence-2 networks (a)-(o) as (alpha, beta, gamma, delta): loops at
# node 1, arrows 1->2 (excitatory), arrows 2->1 (inhibitory), loops at node 2.
REI_PARAMS = {
    "a": (0, 1, 0, 0), "b": (0, 2, 0, 0), "c": (0, 1, 0, 1), "d": (1, 1, 0, 0),
    "e": (2, 1, 0, 0), "f": (1, 2, 0, 0), "g": (1, 1, 0, 1), "h": (2, 2, 0, 0),
    "i": (2, 1, 0, 1), "j": (0, 1, 1, 0), "k": (1, 1, 1, 0), "l": (0, 1, 2, 0),
    "m": (1, 2, 1, 0), "n": (1, 1, 1, 1), "o": (0, 2, 2, 0),
}

# The 38 UEI valence-2 networks that are not REI.
UEI_EXTRA = {
    "b.1": [(1, 2, 'E'), (1, 2, 'I')],
    "c": [(1, 2, 'E'), (2, 2, 'E')],
    "d.1": [(1, 2, 'E'), (1, 1, 'I')],
    "e.1": [(1, 1, 'E'), (1, 1, 'E'), (1, 2, 'I')],
    "e.2": [(1, 1, 'E'), (1, 1, 'I'), (1, 2, 'E')],
    "f.1": [(1, 1, 'I'), (1, 2, 'E'), (1, 2, 'E')],
    "f.2": [(1, 1, 'E'), (1, 2, 'E'), (1, 2, 'I')],
    "g": [(1, 2, 'E'), (1, 1, 'E'), (2, 2, 'E')],
    "g.1": [(1, 2, 'E'), (1, 1, 'I'), (2, 2, 'E')],
    "g.2": [(1, 2, 'I'), (1, 1, 'E'), (2, 2, 'E')],
    "h.1": [(1, 1, 'E'), (1, 1, 'I'), (1, 2, 'E'), (1, 2, 'E')],
    "h.2": [(1, 1, 'I'), (1, 1, 'I'), (1, 2, 'E'), (1, 2, 'E')],
    "h.3": [(1, 1, 'E'), (1, 1, 'E'), (1, 2, 'I'), (1, 2, 'E')],
    "h.4": [(1, 1, 'E'), (1, 1, 'I'), (1, 2, 'I'), (1, 2, 'E')],
    "i": [(1, 1, 'E'), (1, 1, 'E'), (1, 2, 'E'), (2, 2, 'E')],
    "i.1": [(1, 1, 'E'), (1, 1, 'I'), (1, 2, 'E'), (2, 2, 'E')],
    "i.2": [(1, 1, 'I'), (1, 1, 'I'), (1, 2, 'E'), (2, 2, 'E')],
    "i.3": [(1, 1, 'E'), (1, 1, 'E'), (1, 2, 'I'), (2, 2, 'E')],
    "i.4": [(1, 1, 'E'), (1, 1, 'I'), (1, 2, 'I'), (2, 2, 'E')],
    "j": [(1, 2, 'E'), (2, 1, 'E')],
    "k": [(1, 1, 'E'), (1, 2, 'E'), (2, 1, 'E')],
    "k.1": [(1, 1, 'E'), (1, 2, 'I'), (2, 1, 'E')],
    "k.2": [(1, 1, 'I'), (1, 2, 'E'), (2, 1, 'E')],
    "l": [(1, 2, 'E'), (2, 1, 'E'), (2, 1, 'E')],
    "l.1": [(1, 2, 'E'), (2, 1, 'I'), (2, 1, 'E')],
    "m": [(1, 1, 'E'), (1, 2, 'E'), (1, 2, 'E'), (2, 1, 'E')],
    "m.1": [(1, 1, 'I'), (1, 2, 'E'), (1, 2, 'E'), (2, 1, 'E')],
    "m.3": [(1, 1, 'I'), (1, 2, 'E'), (1, 2, 'E'), (2, 1, 'I')],
    "m.4": [(1, 1, 'E'), (1, 2, 'E'), (1, 2, 'I'), (2, 1, 'E')],
    "m.5": [(1, 1, 'I'), (1, 2, 'E'), (1, 2, 'I'), (2, 1, 'E')],
    "n": [(1, 1, 'E'), (1, 2, 'E'), (2, 2, 'E'), (2, 1, 'E')],
    "n.1": [(1, 1, 'E'), (1, 2, 'E'), (2, 2, 'I'), (2, 1, 'E')],
    "n.2": [(1, 1, 'E'), (1, 2, 'I'), (2, 2, 'E'), (2, 1, 'E')],
    "n.3": [(1, 1, 'E'), (1, 2, 'I'), (2, 2, 'I'), (2, 1, 'E')],
    "n.4": [(1, 1, 'E'), (1, 2, 'I'), (2, 2, 'E'), (2, 1, 'I')],
    "o": [(1, 2, 'E'), (1, 2, 'E'), (2, 1, 'E'), (2, 1, 'E')],
    "o.1": [(1, 2, 'E'), (1, 2, 'I'), (2, 1, 'E'), (2, 1, 'E')],
    "o.3": [(1, 2, 'E'), (1, 2, 'I'), (2, 1, 'E'), (2, 1, 'I')],
}

# Membership of the UEI extras in the ODE-classes of the UEI figure.
UEI_TABLE = {
    "NH1": ["b.1", "c", "d.1", "e.1", "e.2", "f.1", "f.2", "g", "g.1", "g.2",
            "h.1", "h.2", "h.3", "h.4", "i", "i.1", "i.2", "i.3", "i.4"],
    "NH2": ["k.1", "l.1", "m.3", "m.4", "m.5", "n.2", "n.3", "o.1"],
    "NH3": ["j", "k", "k.2", "n", "n.1", "n.4", "o", "o.3"],
    "NH4": ["l", "m", "m.1"],
}

REI_FIGURE = {"NH1": "a", "NH2": "j"}
PEI_FIGURE = {
    "NH1": "a", "NH2": "c", "NH3": "j", "NH4": "e", "NH5": "k",
    "NH6": "f", "NH7": "m", "H1": "d", "H2": "n",
}
UEI_FIGURE = {
    "NH1": [(1, 2, "E")],
    "NH2": [(1, 2, "E"), (2, 1, "I")],
    "NH3": [(1, 2, "E"), (2, 1, "E")],
    "NH4": [(1, 2, "E"), (1, 2, "E"), (2, 1, "E")],
}
CEI_FIGURE = {
    "NH1": [(1, 2, "E")],
    "NH2": [(1, 2, "E"), (2, 2, "E")],
    "NH3": [(1, 1, "I"), (1, 2, "E")],
    "NH5": [(1, 1, "I"), (1, 2, "E"), (2, 2, "E")],
    "NH8": [(1, 1, "E"), (1, 2, "E"), (2, 1, "E")],
    "NH9": [(1, 1, "E"), (1, 2, "I"), (2, 1, "E")],
    "NH10": [(1, 1, "I"), (1, 2, "E"), (2, 1, "E")],
    "NH11": [(1, 2, "E"), (2, 1, "E"), (2, 1, "E")],
    "NH12": [(1, 2, "E"), (2, 1, "I")],
    "NH14": [(1, 1, "I"), (1, 2, "E"), (1, 2, "E"), (2, 1, "E")],
    "NH17": [(1, 1, "E"), (1, 2, "I"), (2, 2, "I"), (2, 1, "E")],
    "H1": [(1, 1, "E"), (1, 2, "E")],
    "H2": [(1, 2, "E"), (2, 1, "E")],
    "H3": [(1, 1, "E"), (1, 2, "E"), (1, 2, "E"), (2, 1, "E")],
    "H4": [(1, 1, "I"), (1, 2, "E"), (1, 2, "I"), (2, 1, "E")],
}


def rei_network(alpha: int, beta: int, gamma: int, delta: int, single_node_type: bool = False) -> EINetwork:
    exc = [[alpha, 0], [beta, 0]]
    inh = [[0, gamma], [0, delta]]
    if single_node_type:
        return EINetwork.single_type(exc, inh)
    return EINetwork.two_type("EI", exc, inh)


def rei(label: str, single_node_type: bool = False) -> EINetwork:
    return rei_network(*REI_PARAMS[label], single_node_type=single_node_type)


def uei_extra(label: str, single_node_type: bool = False) -> EINetwork:
    return EINetwork.from_arrows(2, UEI_EXTRA[label], None if single_node_type else "EI")


def smolen(single_node_type: bool = False) -> EINetwork:
    return rei("n", single_node_type)


def smolen_minimal() -> EINetwork:
    return rei("j")


def figure_network(table: str, label: str) -> EINetwork:
    """Representative network of a figure: table in {rei, pei, uei, cei}."""
    if table == "rei":
        return rei(REI_FIGURE.get(label, label))
    if table == "pei":
        return rei(PEI_FIGURE[label], single_node_type=True)
    if table == "uei":
        return EINetwork.from_arrows(2, UEI_FIGURE[label], "EI")
    if table == "cei":
        return EINetwork.from_arrows(2, CEI_FIGURE[label])
    raise ValueError(f"unknown table {table!r}")


def catalog_labels(table: str) -> dict[str, EINetwork]:
    """Labelled networks making up a valence-2 catalog."""
    single = table in ("pei", "cei")
    out = {f"rei ({k})": rei(k, single) for k in REI_PARAMS}
    if table in ("uei", "cei"):
        out.update({f"uei ({k})": uei_extra(k, single) for k in UEI_EXTRA})
    return out
