"""Balanced colourings, polydiagonal invariance and quotient networks."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from einets.linalg import span_of_vectors
from einets.network import EINetwork, adjacency_family, input_classes


@dataclass(frozen=True)
class Colouring:
    """Partition of 0-based node indices; blocks sorted by first node."""

    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, blocks):
        norm = tuple(sorted(tuple(sorted(b)) for b in blocks if b))
        object.__setattr__(self, "blocks", norm)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def colour_of(self) -> list[int]:
        out = [0] * self.n
        for c, b in enumerate(self.blocks):
            for i in b:
                out[i] = c
        return out

    def is_trivial(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)

    @classmethod
    def trivial(cls, n: int) -> "Colouring":
        return cls([(i,) for i in range(n)])

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Colouring":
        """Parse '1,2|3' (1-based); unmentioned nodes become singletons."""
        blocks = []
        for part in text.split("|"):
            part = part.strip()
            if part:
                blocks.append([int(x) - 1 for x in part.split(",")])
        seen = [i for b in blocks for i in b]
        if len(seen) != len(set(seen)) or any(i < 0 for i in seen):
            raise ValueError(f"invalid colouring {text!r}")
        if n is not None:
            if any(i >= n for i in seen):
                raise ValueError(f"colouring {text!r} mentions nodes beyond {n}")
            blocks += [[i] for i in range(n) if i not in seen]
        return cls(blocks)

    def __str__(self) -> str:
        return "|".join(",".join(str(i + 1) for i in b) for b in self.blocks)


def refines_input_classes(net: EINetwork, c: Colouring) -> bool:
    if c.n != net.n or sorted(i for b in c.blocks for i in b) != list(range(net.n)):
        return False
    cls = {i: k for k, b in enumerate(input_classes(net)) for i in b}
    return all(len({cls[i] for i in b}) == 1 for b in c.blocks)


def _require_refining(net: EINetwork, c: Colouring):
    if not refines_input_classes(net, c):
        raise ValueError(f"colouring {c} does not refine the input classes of the network")


def is_balanced_combinatorial(net: EINetwork, c: Colouring) -> bool:
    for m in (net.exc, net.inh):
        for b in c.blocks:
            for block in c.blocks:
                counts = {sum(m[i][k] for k in block) for i in b}
                if len(counts) > 1:
                    return False
    return True


def polydiagonal_basis(c: Colouring) -> list[tuple[int, ...]]:
    return [tuple(int(i in b) for i in range(c.n)) for b in c.blocks]


def is_balanced_matrix(net: EINetwork, c: Colouring) -> bool:
    """Polydiagonal invariant under every adjacency-family matrix."""
    basis = polydiagonal_basis(c)
    space = span_of_vectors(basis, net.n)
    for m in adjacency_family(net):
        for v in basis:
            image = tuple(sum(m[i][j] * v[j] for j in range(net.n)) for i in range(net.n))
            if span_of_vectors(basis + [image], net.n).dim != space.dim:
                return False
    return True


def is_balanced(net: EINetwork, c: Colouring) -> bool:
    _require_refining(net, c)
    comb = is_balanced_combinatorial(net, c)
    if comb != is_balanced_matrix(net, c):
        raise AssertionError("balance tests disagree")
    return comb


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1:]


def refining_colourings(net: EINetwork):
    per_class = [list(set_partitions(b)) for b in input_classes(net)]
    for combo in itertools.product(*per_class):
        yield Colouring([blk for part in combo for blk in part])


def balanced_colourings(net: EINetwork) -> list[Colouring]:
    found = {c for c in refining_colourings(net) if is_balanced(net, c)}
    return sorted(found, key=lambda c: (-len(c.blocks), c.blocks))


def quotient(net: EINetwork, c: Colouring) -> EINetwork:
    if not is_balanced(net, c):
        raise ValueError(f"colouring {c} is not balanced")
    k = len(c.blocks)
    reps = [b[0] for b in c.blocks]

    def proj(m):
        return [[sum(m[reps[r]][j] for j in c.blocks[s]) for s in range(k)] for r in range(k)]

    types = tuple(net.node_types[r] for r in reps)
    return EINetwork(k, net.single_node_type, types, proj(net.exc), proj(net.inh))


def block_mixes_outputs(net: EINetwork, c: Colouring) -> bool:
    """Some block contains nodes that output different arrow types."""
    def outs(j):
        return (any(r[j] for r in net.exc), any(r[j] for r in net.inh))

    for b in c.blocks:
        kinds = set()
        for j in b:
            e, i = outs(j)
            if e:
                kinds.add("E")
            if i:
                kinds.add("I")
        if len(kinds) > 1:
            return True
    return False
