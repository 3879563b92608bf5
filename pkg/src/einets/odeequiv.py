"""ODE-equivalence: span signatures, class partitions, minimal networks."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable

from einets.enumeration import canonical_form, order_key
from einets.linalg import RationalMatrixSpace, span_of
from einets.network import (
    E,
    I,
    EINetwork,
    NetworkClass,
    adjacency_family,
    all_permutations,
    classify_network,
    is_connected,
    pei_labelling,
    permute,
)


class SearchExhausted(RuntimeError):
    """No network within the entry bound realizes the requested span."""


@dataclass(frozen=True, order=True)
class OdeClassSignature:
    n: int
    single_node_type: bool
    node_types: tuple[str, ...]
    key: tuple

    @property
    def space(self) -> RationalMatrixSpace:
        return RationalMatrixSpace(self.n * self.n, self.key)

    @property
    def dim(self) -> int:
        return len(self.key)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "single_node_type": self.single_node_type,
            "node_types": list(self.node_types),
            "basis": [[str(x) for x in row] for row in self.space.basis],
        }


def _flip(types):
    return tuple(I if t == E else E for t in types)


def signature(net: EINetwork, modulo_duality: bool = True) -> OdeClassSignature:
    """Least (types, span key) over all node renumberings."""
    best = None
    for p in all_permutations(net.n):
        g = permute(net, p)
        types = g.node_types
        if modulo_duality and not net.single_node_type:
            types = min(types, _flip(types))
        cand = (types, span_of(adjacency_family(g)).key)
        if best is None or cand < best:
            best = cand
    return OdeClassSignature(net.n, net.single_node_type, best[0], best[1])


def _check_pair(g: EINetwork, h: EINetwork):
    if g.n != h.n:
        raise ValueError(f"node-count mismatch: {g.n} vs {h.n}")
    if g.single_node_type != h.single_node_type:
        raise ValueError("networks differ in single_node_type")


def ode_equivalent(g: EINetwork, h: EINetwork, modulo_duality: bool = False) -> bool:
    _check_pair(g, h)
    return signature(g, modulo_duality) == signature(h, modulo_duality)


@dataclass
class OdeClass:
    signature: OdeClassSignature
    members: list[EINetwork]
    minimal: list[EINetwork] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass
class OdePartition:
    classes: list[OdeClass]
    modulo_duality: bool

    def __len__(self) -> int:
        return len(self.classes)

    def sizes(self) -> list[int]:
        return [c.size for c in self.classes]

    def class_of(self, net: EINetwork) -> OdeClass:
        sig = signature(net, self.modulo_duality)
        for c in self.classes:
            if c.signature == sig:
                return c
        raise KeyError("network not in partition")


def partition_classes(
    nets: Iterable[EINetwork],
    modulo_duality: bool = True,
    with_minimal: bool = False,
    entry_bound: int | None = None,
) -> OdePartition:
    """Group networks by signature; classes ordered by their first member."""
    nets = list(nets)
    if nets:
        for x in nets[1:]:
            _check_pair(nets[0], x)
    groups: dict[OdeClassSignature, list[EINetwork]] = {}
    for net in nets:
        groups.setdefault(signature(net, modulo_duality), []).append(net)
    classes = []
    for sig, members in groups.items():
        members = sorted(members, key=order_key)
        c = OdeClass(sig, members)
        if with_minimal:
            c.minimal = minimal_representatives(c, entry_bound=entry_bound, modulo_duality=modulo_duality)
        classes.append(c)
    classes.sort(key=lambda c: order_key(c.members[0]))
    return OdePartition(classes, modulo_duality)


def _compositions(total: int, parts: int, bound: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, bound) + 1):
        for rest in _compositions(total - first, parts - 1, bound):
            yield (first,) + rest


def arrow_matrices_independent(net: EINetwork) -> bool:
    """True when the nonzero members of the adjacency family are independent."""
    fam = [m for m in adjacency_family(net) if any(any(r) for r in m)]
    return span_of(fam).dim == len(fam)


def minimal_representatives(
    target,
    entry_bound: int | None = None,
    modulo_duality: bool = True,
) -> list[EINetwork]:
    """All networks of least arrow count in the class, as canonical forms.

    target is an OdeClass, a list of class members, or an OdeClassSignature.
    """
    members: list[EINetwork] = []
    if isinstance(target, OdeClass):
        members, sig = target.members, target.signature
    elif isinstance(target, OdeClassSignature):
        sig = target
    else:
        members = list(target)
        sig = signature(members[0], modulo_duality)
    n, single = sig.n, sig.single_node_type
    observed = max((max(max(max(r) for r in m.exc), max(max(r) for r in m.inh)) for m in members), default=1)
    bound = observed if entry_bound is None else entry_bound
    if bound < 1:
        raise ValueError("entry_bound must be positive")
    ceiling = min((m.arrow_count for m in members), default=2 * n * n * bound)
    type_choices = [()] if single else [t for t in itertools.product((E, I), repeat=n) if E in t and I in t]
    for total in range(ceiling + 1):
        found = set()
        for entries in _compositions(total, 2 * n * n, bound):
            exc = [entries[i * n:(i + 1) * n] for i in range(n)]
            inh = [entries[n * n + i * n:n * n + (i + 1) * n] for i in range(n)]
            for types in type_choices:
                net = EINetwork(n, single, types, exc, inh)
                if signature(net, modulo_duality) == sig:
                    found.add(canonical_form(net, modulo_duality))
        if found:
            return sorted(found, key=order_key)
    raise SearchExhausted(f"no network with entries <= {bound} realizes the span")


def min_arrow_matrix_count(sig: OdeClassSignature) -> int:
    """m[G]: span dimension minus the number of node-type matrices."""
    if sig.single_node_type:
        return sig.dim - 1
    return sig.dim - len(set(sig.node_types))


@dataclass(frozen=True)
class ClassLabel:
    family: str
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        if not self.params:
            return self.family
        return "NH(" + ",".join(map(str, self.params)) + ")"

    @property
    def figure_label(self) -> str:
        """Name used in the valence-2 figures where one exists."""
        if self.family == "NHb1b2":
            return {(1, 1): "NH3", (2, 1): "NH4"}.get(self.params, str(self))
        return str(self)


def _reduce(a: int, b: int) -> tuple[int, int]:
    g = gcd(a, b)
    return a // g, b // g


def pei_parameters(net: EINetwork) -> tuple[int, int, int, int]:
    """(alpha, beta, gamma, delta) of a 2-node PEI network."""
    types = pei_labelling(net)
    if types is None:
        raise ValueError("network is not PEI")
    e, i = types.index(E), types.index(I)
    return net.exc[e][e], net.exc[i][e], net.inh[e][i], net.inh[i][i]


def _pei_label(a: int, b: int, c: int, d: int) -> ClassLabel:
    zeros = (a == 0) + (b == 0) + (c == 0) + (d == 0)
    if zeros == 0:
        a, b = _reduce(a, b)
        c, d = _reduce(c, d)
        if (a, b, c, d) == (1, 1, 1, 1):
            return ClassLabel("H2")
        return ClassLabel("NHabcd", min((a, b, c, d), (d, c, b, a)))
    if zeros == 3:
        return ClassLabel("NH1")
    # the dual swaps (a, b, c, d) with (d, c, b, a)
    if zeros == 1:
        if a == 0 or b == 0:
            a, b, c, d = d, c, b, a
        if c == 0:
            return ClassLabel("NH2")
        a, b = _reduce(a, b)
        return ClassLabel("NHab10", (a, b, 1, 0))
    if a and b:
        a, b = _reduce(a, b)
        return ClassLabel("H1") if (a, b) == (1, 1) else ClassLabel("NHab00", (a, b, 0, 0))
    if c and d:
        c, d = _reduce(c, d)
        return ClassLabel("H1") if (c, d) == (1, 1) else ClassLabel("NHab00", (d, c, 0, 0))
    if a == 0 and d == 0:
        return ClassLabel("NH3")
    return ClassLabel("NH2")


def _uei_label(b1: int, b2: int, c1: int, c2: int) -> ClassLabel:
    det = b1 * c2 - b2 * c1
    if det:
        return ClassLabel("NH2")
    v = (b1, b2) if (b1 or b2) else (c1, c2)
    if v[0] == 0 or v[1] == 0:
        return ClassLabel("NH1")
    p, q = _reduce(*v)
    return ClassLabel("NHb1b2", (max(p, q), min(p, q)))


def parametric_class_id(net: EINetwork) -> ClassLabel:
    """Class label from the case analysis of the 2-node infinite families."""
    if net.n != 2:
        raise ValueError("parametric labels are defined for 2-node networks")
    if not is_connected(net):
        raise ValueError("network is disconnected")
    classes = classify_network(net)
    if NetworkClass.PEI in classes:
        return _pei_label(*pei_parameters(net))
    if NetworkClass.UEI in classes:
        if net.node_types[0] != E:
            net = permute(net, (1, 0))
        return _uei_label(net.exc[1][0], net.exc[0][1], net.inh[1][0], net.inh[0][1])
    raise ValueError("parametric labels cover PEI and UEI networks only")
