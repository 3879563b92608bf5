"""Admissible-ODE signatures, structured Jacobians and executable fields."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from einets.network import E, I, EINetwork, input_classes, is_restricted

LETTERS = "fghpqrstuvw"


@dataclass(frozen=True)
class ArgGroup:
    arrow_type: str
    sources: tuple[int, ...]  # 0-based, sorted, repeated by multiplicity


@dataclass(frozen=True)
class NodeSignature:
    node: int
    function: str
    internal_sign: str | None  # "+", "-" or None for single-type networks
    groups: tuple[ArgGroup, ...]


@dataclass(frozen=True)
class AdmissibleSignature:
    single_node_type: bool
    nodes: tuple[NodeSignature, ...]

    def _var(self, node: int, sign: str | None, latex: bool) -> str:
        if latex:
            return f"x_{node + 1}" if sign is None else f"x^{sign}_{node + 1}"
        mark = {"+": "+", "-": "−", None: ""}[sign]
        return f"x{node + 1}{mark}"

    def _group(self, g: ArgGroup, latex: bool) -> str:
        sign = "+" if g.arrow_type == E else "-"
        if len(g.sources) == 1:
            return self._var(g.sources[0], sign, latex)
        if latex:
            return "\\overline{" + ",".join(self._var(s, sign, True) for s in g.sources) + "}"
        return ",".join("x̄" + self._var(s, sign, False)[1:] for s in g.sources)

    def rhs(self, node: int, latex: bool = True) -> str:
        ns = self.nodes[node]
        args = self._var(ns.node, ns.internal_sign, latex)
        if ns.groups:
            joiner = "," if self.single_node_type else "; "
            args += "; " + joiner.join(self._group(g, latex) for g in ns.groups)
        return f"{ns.function}({args})"

    def lines(self, latex: bool = True) -> list[str]:
        head = "\\dot{{x}}_{} = " if latex else "ẋ{} = "
        return [head.format(i + 1) + self.rhs(i, latex) for i in range(len(self.nodes))]

    def render(self, latex: bool = True) -> str:
        return "\n".join(self.lines(latex)) + "\n"

    def to_dict(self) -> dict:
        return {
            "single_node_type": self.single_node_type,
            "nodes": [
                {
                    "node": ns.node + 1,
                    "function": ns.function,
                    "internal_sign": ns.internal_sign,
                    "groups": [{"type": g.arrow_type, "sources": [s + 1 for s in g.sources]} for g in ns.groups],
                }
                for ns in self.nodes
            ],
            "latex": self.lines(True),
            "text": self.lines(False),
        }


def class_index(net: EINetwork) -> list[int]:
    """Input-class index per node, classes numbered by first node."""
    out = [0] * net.n
    for c, block in enumerate(input_classes(net)):
        for i in block:
            out[i] = c
    return out


def _sources(row) -> tuple[int, ...]:
    return tuple(j for j, m in enumerate(row) for _ in range(m))


def signature(net: EINetwork) -> AdmissibleSignature:
    cls = class_index(net)
    nodes = []
    for i in range(net.n):
        groups = []
        for kind, m in ((E, net.exc), (I, net.inh)):
            src = _sources(m[i])
            if src:
                groups.append(ArgGroup(kind, src))
        sign = None if net.single_node_type else ("+" if net.node_types[i] == E else "-")
        nodes.append(NodeSignature(i, LETTERS[cls[i] % len(LETTERS)], sign, tuple(groups)))
    return AdmissibleSignature(net.single_node_type, tuple(nodes))


@dataclass(frozen=True)
class SymbolRef:
    node: int
    kind: str  # "internal", "E" or "I"
    source: int | None = None


@dataclass
class SymbolicJacobian:
    n: int
    entries: list[list[dict[str, int]]]
    symbols: dict[str, SymbolRef]

    def entry_str(self, i: int, j: int) -> str:
        terms = [s if w == 1 else f"{w}*{s}" for s, w in self.entries[i][j].items()]
        return "+".join(terms) if terms else "0"

    def render(self) -> str:
        rows = ["[" + ", ".join(self.entry_str(i, j) for j in range(self.n)) + "]" for i in range(self.n)]
        return "[" + ", ".join(rows) + "]"

    def instantiate(self, values: dict[str, np.ndarray], k: int = 1) -> np.ndarray:
        """Numeric (n*k)x(n*k) matrix with each symbol replaced by a k x k block."""
        out = np.zeros((self.n * k, self.n * k))
        for i in range(self.n):
            for j in range(self.n):
                block = np.zeros((k, k))
                for s, w in self.entries[i][j].items():
                    block += w * np.reshape(values[s], (k, k))
                out[i * k:(i + 1) * k, j * k:(j + 1) * k] = block
        return out

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "entries": [[dict(e) for e in row] for row in self.entries],
            "rendered": self.render(),
        }


def _symbol_names(net: EINetwork):
    """Naming rule: restricted 2-node nets use a1..f1, others a, b_j, ..."""
    if net.n == 2:
        restricted = is_restricted(net)

        def name(i, kind, src):
            letters = "abc" if i == 0 else "def"
            idx = {"internal": 0, E: 1, I: 2}[kind]
            if restricted:
                return letters[idx] + "1"
            if kind == "internal":
                return letters[0]
            return f"{letters[idx]}{src + 1}"
    else:
        def name(i, kind, src):
            if kind == "internal":
                return f"u{i + 1}"
            return f"{'v' if kind == E else 'w'}{i + 1}_{src + 1}"
    return name


def symbolic_jacobian(net: EINetwork) -> SymbolicJacobian:
    name = _symbol_names(net)
    n = net.n
    entries = [[{} for _ in range(n)] for _ in range(n)]
    symbols: dict[str, SymbolRef] = {}
    for i in range(n):
        s = name(i, "internal", None)
        symbols[s] = SymbolRef(i, "internal")
        entries[i][i][s] = 1
    for kind, m in ((E, net.exc), (I, net.inh)):
        for i in range(n):
            for j in range(n):
                if m[i][j]:
                    s = name(i, kind, j)
                    symbols[s] = SymbolRef(i, kind, j)
                    entries[i][j][s] = entries[i][j].get(s, 0) + m[i][j]
    return SymbolicJacobian(n, entries, symbols)


# Coupling specifications and vector fields

CouplingFunction = Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray]


class CouplingError(ValueError):
    """Bad coupling specification or asymmetric coupling function."""


@dataclass(frozen=True)
class NumericConfig:
    fd_step: float = 1e-5
    neutral_tol: float = 1e-8


def _internal_function(expr: str):
    import sympy

    x = sympy.Symbol("x")
    try:
        parsed = sympy.sympify(expr)
    except (sympy.SympifyError, TypeError) as exc:
        raise CouplingError(f"cannot parse internal function {expr!r}") from exc
    if parsed.free_symbols - {x}:
        raise CouplingError(f"internal function may only use x: {expr!r}")
    fn = sympy.lambdify(x, parsed, "numpy")
    return lambda v: np.broadcast_to(np.asarray(fn(v), dtype=float), np.shape(v))


def linear_coupling(internal: str = "-x", weights: dict | None = None) -> CouplingFunction:
    weights = weights or {}
    w_e = float(weights.get("E", 1.0))
    w_i = float(weights.get("I", 1.0))
    g = _internal_function(internal)

    def f(x, exc, inh):
        return g(x) + w_e * exc.sum(axis=0) + w_i * inh.sum(axis=0)

    return f


def hill_coupling(decay=1.0, K=1.0, hill=2.0, weights=None) -> CouplingFunction:
    weights = weights or {}
    w_e = float(weights.get("E", 1.0))
    w_i = float(weights.get("I", -1.0))

    def h(s):
        s = np.abs(s) ** hill
        return s / (K ** hill + s)

    def f(x, exc, inh):
        return -decay * x + w_e * h(exc).sum(axis=0) + w_i * h(inh).sum(axis=0)

    return f


def sigmoid_coupling(decay=1.0, bias=0.0, weights=None) -> CouplingFunction:
    weights = weights or {}
    w_e = float(weights.get("E", 1.0))
    w_i = float(weights.get("I", -1.0))

    def f(x, exc, inh):
        return -decay * x + np.tanh(bias + w_e * exc.sum(axis=0) + w_i * inh.sum(axis=0))

    return f


FAMILIES = {"linear": linear_coupling, "hill": hill_coupling, "sigmoid": sigmoid_coupling}


@dataclass
class CouplingSpec:
    """One coupling function per input class; state dimension k per node."""

    functions: dict[int, CouplingFunction]
    k: int = 1
    description: dict = field(default_factory=dict)

    @classmethod
    def from_dict(cls, d: dict) -> "CouplingSpec":
        k = int(d.get("k", 1))
        functions = {}
        for key, params in d.items():
            if key == "k":
                continue
            if not key.startswith("class_"):
                raise CouplingError(f"unexpected key {key!r}")
            params = dict(params)
            family = params.pop("family", "linear")
            if family not in FAMILIES:
                raise CouplingError(f"unknown family {family!r}")
            try:
                functions[int(key[6:])] = FAMILIES[family](**params)
            except TypeError as exc:
                raise CouplingError(f"bad parameters for {family}: {exc}") from None
        return cls(functions, k, d)

    @classmethod
    def from_json(cls, text: str) -> "CouplingSpec":
        return cls.from_dict(json.loads(text))

    @classmethod
    def uniform(cls, f: CouplingFunction, n_classes: int, k: int = 1) -> "CouplingSpec":
        return cls({c: f for c in range(n_classes)}, k)


def check_symmetry(f: CouplingFunction, n_exc: int, n_inh: int, k: int, rng=None, trials: int = 5, tol: float = 1e-10):
    """Randomized argument-swap test within each group."""
    rng = rng or np.random.default_rng(0)
    for _ in range(trials):
        x = rng.normal(size=k)
        exc = rng.normal(size=(n_exc, k))
        inh = rng.normal(size=(n_inh, k))
        base = np.asarray(f(x, exc, inh), dtype=float)
        if base.shape != (k,):
            raise CouplingError(f"coupling function returned shape {base.shape}, expected ({k},)")
        for group, other, first in ((exc, inh, True), (inh, exc, False)):
            if len(group) < 2:
                continue
            perm = rng.permutation(len(group))
            swapped = group[perm]
            val = f(x, swapped, other) if first else f(x, other, swapped)
            if not np.allclose(val, base, atol=tol, rtol=tol):
                raise CouplingError("coupling function is not symmetric within an argument group")


@dataclass
class VectorField:
    net: EINetwork
    spec: CouplingSpec
    classes: list[int]
    exc_sources: list[tuple[int, ...]]
    inh_sources: list[tuple[int, ...]]

    @property
    def k(self) -> int:
        return self.spec.k

    @property
    def dim(self) -> int:
        return self.net.n * self.spec.k

    def arguments(self, x: np.ndarray, i: int):
        s = np.reshape(np.asarray(x, dtype=float), (self.net.n, self.k))
        return s[i], s[list(self.exc_sources[i])].reshape(-1, self.k), s[list(self.inh_sources[i])].reshape(-1, self.k)

    def __call__(self, x) -> np.ndarray:
        s = np.reshape(np.asarray(x, dtype=float), (self.net.n, self.k))
        out = np.empty_like(s)
        for i in range(self.net.n):
            f = self.spec.functions[self.classes[i]]
            out[i] = f(s[i], s[list(self.exc_sources[i])].reshape(-1, self.k), s[list(self.inh_sources[i])].reshape(-1, self.k))
        return out.reshape(-1)


def assemble_vector_field(net: EINetwork, spec: CouplingSpec, validate: bool = True) -> VectorField:
    classes = class_index(net)
    exc_src = [_sources(net.exc[i]) for i in range(net.n)]
    inh_src = [_sources(net.inh[i]) for i in range(net.n)]
    missing = sorted(set(classes) - set(spec.functions))
    if missing:
        raise CouplingError(f"coupling spec lacks input classes {missing}")
    if validate:
        checked = set()
        for i in range(net.n):
            if classes[i] in checked:
                continue
            checked.add(classes[i])
            f = spec.functions[classes[i]]
            try:
                check_symmetry(f, len(exc_src[i]), len(inh_src[i]), spec.k)
            except (TypeError, ValueError, IndexError) as exc:
                if isinstance(exc, CouplingError):
                    raise
                raise CouplingError(f"coupling for class {classes[i]} has the wrong arity: {exc}") from None
    return VectorField(net, spec, classes, exc_src, inh_src)


def _slot_partial(f, x, exc, inh, slot, h):
    """k x k partial derivative block of f with respect to one argument slot."""
    kind, idx = slot
    k = len(x)
    block = np.empty((k, k))
    for c in range(k):
        args = []
        for sgn in (1.0, -1.0):
            xx, ee, ii = x.copy(), exc.copy(), inh.copy()
            target = xx if kind == "internal" else (ee[idx] if kind == E else ii[idx])
            target[c] += sgn * h
            args.append(np.asarray(f(xx, ee, ii), dtype=float))
        col = (args[0] - args[1]) / (2 * h)
        if not np.all(np.isfinite(col)):
            raise FloatingPointError("non-finite coupling value in finite difference")
        block[:, c] = col
    return block


def measured_partials(field: VectorField, jac: SymbolicJacobian, state, h: float = 1e-5) -> dict[str, np.ndarray]:
    """Partial-derivative blocks for every Jacobian symbol at a state."""
    values = {}
    for s, ref in jac.symbols.items():
        x, exc, inh = field.arguments(state, ref.node)
        f = field.spec.functions[field.classes[ref.node]]
        if ref.kind == "internal":
            slot = ("internal", None)
        else:
            src = field.exc_sources[ref.node] if ref.kind == E else field.inh_sources[ref.node]
            slot = (ref.kind, src.index(ref.source))
        values[s] = _slot_partial(f, x, exc, inh, slot, h)
    return values


@dataclass(frozen=True)
class ArrowSign:
    target: int
    source: int
    arrow_type: str
    slot: int
    derivative: float
    label: str


def classify_arrow_signs(net: EINetwork, spec: CouplingSpec, state, config: NumericConfig = NumericConfig()) -> list[ArrowSign]:
    """Excitatory/inhibitory/neutral label of every input arrow at a state."""
    if spec.k != 1:
        raise CouplingError("arrow signs are defined for scalar node states (k = 1)")
    fld = assemble_vector_field(net, spec)
    state = np.asarray(state, dtype=float)
    if state.shape != (net.n,):
        raise ValueError(f"state must have {net.n} entries")
    out = []
    for i in range(net.n):
        x, exc, inh = fld.arguments(state, i)
        f = spec.functions[fld.classes[i]]
        for kind, srcs in ((E, fld.exc_sources[i]), (I, fld.inh_sources[i])):
            for slot, j in enumerate(srcs):
                d = float(_slot_partial(f, x, exc, inh, (kind, slot), config.fd_step)[0, 0])
                if abs(d) < config.neutral_tol:
                    label = "neutral"
                elif d > 0:
                    label = "excitatory"
                else:
                    label = "inhibitory"
                out.append(ArrowSign(i, j, kind, slot, d, label))
    return out


def random_polynomial_spec(net: EINetwork, rng: np.random.Generator, k: int = 1, scale: float = 0.5) -> CouplingSpec:
    """Linear coupling plus a bounded symmetric polynomial perturbation.

    Symmetry holds by construction: the perturbation only uses power sums
    of each argument group.
    """
    n_classes = max(class_index(net)) + 1
    functions = {}
    for c in range(n_classes):
        a = rng.uniform(-0.5, 0.5, size=(k, k))
        w_e, w_i = rng.uniform(-0.4, 0.4, size=2)
        coef = rng.uniform(-1, 1, size=9)

        def f(x, exc, inh, a=a, w_e=w_e, w_i=w_i, coef=coef):
            se, si = exc.sum(axis=0), inh.sum(axis=0)
            qe, qi = (exc ** 2).sum(axis=0), (inh ** 2).sum(axis=0)
            poly = (
                coef[0] + coef[1] * x ** 2 + coef[2] * se ** 2 + coef[3] * qe + coef[4] * si ** 2
                + coef[5] * qi + coef[6] * x * se + coef[7] * x * si + coef[8] * se * si
            )
            return -x + a @ x + w_e * se + w_i * si + scale * np.tanh(poly)

        functions[c] = f
    return CouplingSpec(functions, k, {"random": True})
