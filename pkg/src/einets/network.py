"""EI network model, class predicates and the renumbering/duality actions.

Matrix orientation: entry (i, j) of an arrow matrix counts arrows from
node j to node i.  Nodes are 0-based in the API and 1-based in text I/O.
"""
from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass
from typing import Sequence

E = "E"
I = "I"

Matrix = tuple[tuple[int, ...], ...]


class StructureError(ValueError):
    """Malformed network data."""


class NetworkClass(str, enum.Enum):
    REI = "REI"
    PEI = "PEI"
    UEI = "UEI"
    CEI = "CEI"

    @classmethod
    def parse(cls, text: str) -> "NetworkClass":
        try:
            return cls(text.upper())
        except ValueError:
            raise ValueError(f"unknown network class {text!r}") from None


def _as_matrix(m, n: int, name: str) -> Matrix:
    try:
        rows = tuple(tuple(int(x) for x in row) for row in m)
    except TypeError:
        raise StructureError(f"{name} is not a matrix") from None
    if len(rows) != n or any(len(r) != n for r in rows):
        raise StructureError(f"{name} must be {n}x{n}")
    if any(x < 0 for r in rows for x in r):
        raise StructureError(f"{name} has negative entries")
    return rows


def zeros(n: int) -> Matrix:
    return tuple((0,) * n for _ in range(n))


@dataclass(frozen=True)
class EINetwork:
    n: int
    single_node_type: bool
    node_types: tuple[str, ...]
    exc: Matrix
    inh: Matrix

    def __init__(self, n, single_node_type, node_types, exc, inh):
        if not isinstance(n, int) or n < 1:
            raise StructureError("n must be a positive integer")
        if single_node_type:
            types = (E,) * n
        else:
            types = tuple(node_types)
            if len(types) != n or any(t not in (E, I) for t in types):
                raise StructureError("node_types must list 'E' or 'I' per node")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "single_node_type", bool(single_node_type))
        object.__setattr__(self, "node_types", types)
        object.__setattr__(self, "exc", _as_matrix(exc, n, "exc"))
        object.__setattr__(self, "inh", _as_matrix(inh, n, "inh"))

    @classmethod
    def two_type(cls, node_types, exc, inh) -> "EINetwork":
        return cls(len(node_types), False, node_types, exc, inh)

    @classmethod
    def single_type(cls, exc, inh) -> "EINetwork":
        return cls(len(exc), True, (), exc, inh)

    @classmethod
    def from_arrows(cls, n, arrows, node_types=None) -> "EINetwork":
        """Build from (source, target, 'E'|'I') triples with 1-based nodes."""
        exc = [[0] * n for _ in range(n)]
        inh = [[0] * n for _ in range(n)]
        for src, tgt, kind in arrows:
            (exc if kind == E else inh)[tgt - 1][src - 1] += 1
        if node_types is None:
            return cls(n, True, (), exc, inh)
        return cls(n, False, node_types, exc, inh)

    def arrows(self) -> list[tuple[int, int, str]]:
        """Arrow list as 1-based (source, target, type), one entry per arrow."""
        out = []
        for kind, m in ((E, self.exc), (I, self.inh)):
            for i in range(self.n):
                for j in range(self.n):
                    out.extend([(j + 1, i + 1, kind)] * m[i][j])
        return out

    @property
    def arrow_count(self) -> int:
        return sum(map(sum, self.exc)) + sum(map(sum, self.inh))

    def flat(self) -> tuple:
        types = tuple(0 if t == E else 1 for t in self.node_types)
        return (
            (int(self.single_node_type),)
            + types
            + tuple(x for r in self.exc for x in r)
            + tuple(x for r in self.inh for x in r)
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "single_node_type": self.single_node_type,
            "node_types": list(self.node_types),
            "exc": [list(r) for r in self.exc],
            "inh": [list(r) for r in self.inh],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "EINetwork":
        try:
            return cls(d["n"], d.get("single_node_type", False), d.get("node_types", ()), d["exc"], d["inh"])
        except KeyError as exc:
            raise StructureError(f"missing field {exc.args[0]!r}") from None

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "EINetwork":
        return cls.from_dict(json.loads(text))

    def to_dot(self, name: str = "G") -> str:
        lines = [f"digraph {name} {{", "  node [shape=circle, style=filled];"]
        for i in range(self.n):
            fill = "gray" if (not self.single_node_type and self.node_types[i] == I) else "white"
            lines.append(f"  {i + 1} [fillcolor={fill}];")
        for src, tgt, kind in self.arrows():
            style = " [style=dashed]" if kind == I else ""
            lines.append(f"  {src} -> {tgt}{style};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _col_nonzero(m: Matrix, j: int) -> bool:
    return any(row[j] for row in m)


def _is_rei_labelling(net: EINetwork, types: Sequence[str]) -> bool:
    if E not in types or I not in types:
        return False
    for j in range(net.n):
        if types[j] == E and _col_nonzero(net.inh, j):
            return False
        if types[j] == I and _col_nonzero(net.exc, j):
            return False
    return True


def pei_labelling(net: EINetwork) -> tuple[str, ...] | None:
    """A labelling with both node types that makes a single-type net REI."""
    if net.n < 2:
        return None
    outs = []
    for j in range(net.n):
        e, i = _col_nonzero(net.exc, j), _col_nonzero(net.inh, j)
        if e and i:
            return None
        outs.append(E if e else I if i else None)
    free = [j for j, o in enumerate(outs) if o is None]
    types = [o or E for o in outs]
    for need in (E, I):
        if need not in outs:
            spare = [j for j in free if outs[j] is None]
            if not spare:
                return None
            types[spare[0]] = need
            outs[spare[0]] = need
    return tuple(types) if _is_rei_labelling(net, types) else None


def classify_network(net: EINetwork) -> frozenset[NetworkClass]:
    if net.single_node_type:
        found = {NetworkClass.CEI}
        if pei_labelling(net) is not None:
            found.add(NetworkClass.PEI)
        return frozenset(found)
    if E not in net.node_types or I not in net.node_types:
        return frozenset()
    found = {NetworkClass.UEI}
    if _is_rei_labelling(net, net.node_types):
        found.add(NetworkClass.REI)
    return frozenset(found)


def is_restricted(net: EINetwork) -> bool:
    """True for REI (two types) or PEI (single type) networks."""
    classes = classify_network(net)
    return NetworkClass.REI in classes or NetworkClass.PEI in classes


def _combined(net: EINetwork) -> list[list[int]]:
    return [[net.exc[i][j] + net.inh[i][j] for j in range(net.n)] for i in range(net.n)]


def _reach(adj, start: int, forward: bool) -> set[int]:
    n = len(adj)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in range(n):
            # adj[i][j] counts arrows j -> i
            hit = adj[w][v] if forward else adj[v][w]
            if hit and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def is_connected(net: EINetwork) -> bool:
    a = _combined(net)
    sym = [[a[i][j] + a[j][i] for j in range(net.n)] for i in range(net.n)]
    return len(_reach(sym, 0, True)) == net.n


def is_transitive(net: EINetwork) -> bool:
    a = _combined(net)
    if net.n == 1:
        return a[0][0] > 0
    return len(_reach(a, 0, True)) == net.n and len(_reach(a, 0, False)) == net.n


def valences(net: EINetwork) -> list[int]:
    return [sum(net.exc[i]) + sum(net.inh[i]) for i in range(net.n)]


def input_classes(net: EINetwork) -> list[tuple[int, ...]]:
    """Input-equivalence blocks, each sorted, ordered by first node."""
    blocks: dict[tuple, list[int]] = {}
    for i in range(net.n):
        key = (net.node_types[i], sum(net.exc[i]), sum(net.inh[i]))
        blocks.setdefault(key, []).append(i)
    return sorted(tuple(b) for b in blocks.values())


def is_homogeneous(net: EINetwork) -> bool:
    return len(input_classes(net)) == 1


def _flip(t: str) -> str:
    return I if t == E else E


def dual(net: EINetwork) -> EINetwork:
    types = net.node_types if net.single_node_type else tuple(_flip(t) for t in net.node_types)
    return EINetwork(net.n, net.single_node_type, types, net.inh, net.exc)


def swap_arrow_types(net: EINetwork) -> EINetwork:
    """Interchange the arrow matrices but keep node types."""
    return EINetwork(net.n, net.single_node_type, net.node_types, net.inh, net.exc)


def flip_node_types(net: EINetwork) -> EINetwork:
    return swap_arrow_types(dual(net))


def permute(net: EINetwork, perm: Sequence[int]) -> EINetwork:
    """Relabel node j as perm[j]; entry (i, j) moves to (perm[i], perm[j])."""
    n = net.n
    perm = list(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {perm}")
    inv = [0] * n
    for j, p in enumerate(perm):
        inv[p] = j
    types = tuple(net.node_types[inv[i]] for i in range(n))
    exc = [[net.exc[inv[i]][inv[j]] for j in range(n)] for i in range(n)]
    inh = [[net.inh[inv[i]][inv[j]] for j in range(n)] for i in range(n)]
    return EINetwork(n, net.single_node_type, types, exc, inh)


def all_permutations(n: int):
    return itertools.permutations(range(n))


def adjacency_family(net: EINetwork) -> list[Matrix]:
    n = net.n
    if net.single_node_type:
        ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        return [ident, net.exc, net.inh]
    diag_e = tuple(tuple(int(i == j and net.node_types[i] == E) for j in range(n)) for i in range(n))
    diag_i = tuple(tuple(int(i == j and net.node_types[i] == I) for j in range(n)) for i in range(n))
    return [diag_e, diag_i, net.exc, net.inh]
