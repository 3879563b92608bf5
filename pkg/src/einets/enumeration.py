"""Enumeration of connected EI networks up to renumbering and duality."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from einets.network import (
    E,
    I,
    EINetwork,
    NetworkClass,
    all_permutations,
    classify_network,
    dual,
    is_connected,
    is_restricted,
    permute,
    swap_arrow_types,
)


@dataclass(frozen=True)
class EnumerationSpec:
    n_nodes: int
    network_class: NetworkClass
    max_valence: int
    connected_only: bool = True
    modulo_duality: bool = True

    def __post_init__(self):
        if self.n_nodes < 1:
            raise ValueError("n_nodes must be at least 1")
        if self.max_valence < 0:
            raise ValueError("max_valence must be nonnegative")
        object.__setattr__(self, "network_class", NetworkClass.parse(str(getattr(self.network_class, "value", self.network_class))))


def symmetry_images(net: EINetwork, modulo_duality: bool):
    """All images of net under permutations and, optionally, the duality group.

    The duality group is generated by the full dual and by interchanging
    arrow types alone, so it also contains the node-type flip.
    """
    bases = [net]
    if modulo_duality:
        bases = [net, dual(net), swap_arrow_types(net)]
        if not net.single_node_type:
            bases.append(dual(swap_arrow_types(net)))
    for b in bases:
        for p in all_permutations(net.n):
            yield permute(b, p)


def order_key(net: EINetwork) -> tuple:
    """Frozen total order: restricted networks first, then flattened tuple."""
    return (0 if is_restricted(net) else 1, net.flat())


def canonical_form(net: EINetwork, modulo_duality: bool = True) -> EINetwork:
    return min(symmetry_images(net, modulo_duality), key=order_key)


def _rows(n: int, max_valence: int):
    """All (exc row, inh row) pairs with total at most max_valence."""
    out = []
    for total in range(max_valence + 1):
        for cut in itertools.combinations(range(total + 2 * n - 1), 2 * n - 1):
            parts = []
            prev = -1
            for c in cut:
                parts.append(c - prev - 1)
                prev = c
            parts.append(total + 2 * n - 1 - prev - 1)
            out.append((tuple(parts[:n]), tuple(parts[n:])))
    return out


def raw_networks(spec: EnumerationSpec):
    """Every labelled network meeting the spec, before orbit reduction."""
    n = spec.n_nodes
    single = spec.network_class in (NetworkClass.PEI, NetworkClass.CEI)
    type_choices = [()] if single else list(itertools.product((E, I), repeat=n))
    rows = _rows(n, spec.max_valence)
    for types in type_choices:
        for choice in itertools.product(rows, repeat=n):
            exc = tuple(r[0] for r in choice)
            inh = tuple(r[1] for r in choice)
            net = EINetwork(n, single, types, exc, inh)
            if spec.network_class not in classify_network(net):
                continue
            if spec.connected_only and not is_connected(net):
                continue
            yield net


def enumerate_networks(spec: EnumerationSpec) -> list[EINetwork]:
    """Canonical representatives, sorted by the frozen order."""
    found = {canonical_form(net, spec.modulo_duality) for net in raw_networks(spec)}
    return sorted(found, key=order_key)
