"""Fixed-step integration, finite differences, equilibria and synchrony checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from einets.admissible import CouplingSpec, assemble_vector_field, random_polynomial_spec
from einets.network import EINetwork
from einets.synchrony import Colouring, is_balanced, refines_input_classes


class DivergenceError(FloatingPointError):
    def __init__(self, step: int):
        super().__init__(f"non-finite state at step {step}")
        self.step = step


class ConvergenceError(RuntimeError):
    pass


@dataclass
class Trajectory:
    times: np.ndarray
    states: np.ndarray

    @property
    def dt(self) -> float:
        return float(self.times[1] - self.times[0]) if len(self.times) > 1 else 0.0

    @property
    def final(self) -> np.ndarray:
        return self.states[-1]


def integrate(f: Callable, x0, dt: float, steps: int) -> Trajectory:
    """Classical RK4 with a fixed step."""
    if dt <= 0:
        raise ValueError("dt must be positive")
    if steps < 1:
        raise ValueError("steps must be at least 1")
    x = np.array(x0, dtype=float).reshape(-1)
    states = np.empty((steps + 1, x.size))
    states[0] = x
    for s in range(1, steps + 1):
        k1 = np.asarray(f(x), dtype=float)
        k2 = np.asarray(f(x + 0.5 * dt * k1), dtype=float)
        k3 = np.asarray(f(x + 0.5 * dt * k2), dtype=float)
        k4 = np.asarray(f(x + dt * k3), dtype=float)
        x = x + dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)
        if not np.all(np.isfinite(x)):
            raise DivergenceError(s)
        states[s] = x
    return Trajectory(dt * np.arange(steps + 1), states)


def finite_diff_jacobian(f: Callable, x, h: float = 1e-5) -> np.ndarray:
    if h <= 0:
        raise ValueError("h must be positive")
    x = np.array(x, dtype=float).reshape(-1)
    cols = []
    for j in range(x.size):
        e = np.zeros_like(x)
        e[j] = h
        col = (np.asarray(f(x + e), dtype=float) - np.asarray(f(x - e), dtype=float)) / (2 * h)
        if not np.all(np.isfinite(col)):
            raise FloatingPointError("non-finite field value in finite difference")
        cols.append(np.atleast_1d(col))
    return np.column_stack(cols)


def find_equilibrium(f: Callable, x_guess, tol: float = 1e-10, max_iter: int = 100, h: float = 1e-6) -> np.ndarray:
    """Damped Newton iteration with a backtracking step."""
    x = np.array(x_guess, dtype=float).reshape(-1)
    fx = np.atleast_1d(np.asarray(f(x), dtype=float))
    for _ in range(max_iter):
        norm = np.linalg.norm(fx)
        if norm < tol:
            return x
        J = finite_diff_jacobian(f, x, h)
        step = np.linalg.lstsq(J, -fx, rcond=None)[0]
        t = 1.0
        while t > 1e-8:
            cand = x + t * step
            fc = np.atleast_1d(np.asarray(f(cand), dtype=float))
            if np.all(np.isfinite(fc)) and np.linalg.norm(fc) < norm:
                break
            t *= 0.5
        else:
            raise ConvergenceError("line search failed")
        x, fx = cand, fc
    if np.linalg.norm(fx) < tol:
        return x
    raise ConvergenceError(f"no convergence after {max_iter} iterations")


def polydiagonal_distance(states: np.ndarray, c: Colouring, k: int = 1) -> float:
    """Largest spread within a colour block over all times."""
    s = np.reshape(states, (len(states), c.n, k))
    worst = 0.0
    for b in c.blocks:
        if len(b) > 1:
            block = s[:, list(b), :]
            worst = max(worst, float(np.max(block.max(axis=1) - block.min(axis=1))))
    return worst


@dataclass
class SynchronyReport:
    colouring: str
    balanced: bool
    deviations: list[float] = field(default_factory=list)
    diverged: list[int] = field(default_factory=list)
    counterexample_trial: int | None = None
    tol: float = 1e-8

    @property
    def passed(self) -> bool:
        if not self.balanced:
            return False
        return all(d < self.tol for d in self.deviations)

    @property
    def max_deviation(self) -> float:
        return max(self.deviations, default=0.0)

    def summary(self) -> str:
        if self.balanced:
            verdict = "PASS" if self.passed else "FAIL"
        else:
            found = self.counterexample_trial
            verdict = "NOT BALANCED; " + (f"counterexample in trial {found}" if found is not None else "no counterexample found")
        return (
            f"colouring {self.colouring}: {verdict} "
            f"(trials={len(self.deviations) + len(self.diverged)}, max deviation={self.max_deviation:.3e}, diverged={len(self.diverged)})"
        )


def check_synchrony_invariance(
    net: EINetwork,
    colouring: Colouring,
    spec: CouplingSpec | None = None,
    trials: int = 20,
    T: float = 10.0,
    dt: float = 0.01,
    tol: float = 1e-8,
    seed: int = 0,
    k: int = 1,
) -> SynchronyReport:
    """Integrate from random points on the polydiagonal and measure drift.

    Trial t uses seed + t, so reports do not depend on scheduling.
    """
    if not refines_input_classes(net, colouring):
        raise ValueError(f"colouring {colouring} does not refine the input classes of the network")
    balanced = is_balanced(net, colouring)
    report = SynchronyReport(str(colouring), balanced, tol=tol)
    steps = int(round(T / dt))
    for t in range(trials):
        rng = np.random.default_rng(seed + t)
        trial_spec = spec if spec is not None else random_polynomial_spec(net, rng, k)
        kk = trial_spec.k
        field_ = assemble_vector_field(net, trial_spec, validate=spec is not None)
        x0 = np.empty((net.n, kk))
        for b in colouring.blocks:
            x0[list(b)] = rng.uniform(-1, 1, size=kk)
        try:
            traj = integrate(field_, x0.reshape(-1), dt, steps)
        except DivergenceError:
            report.diverged.append(t)
            continue
        dev = polydiagonal_distance(traj.states, colouring, kk)
        report.deviations.append(dev)
        if not balanced and dev >= tol and report.counterexample_trial is None:
            report.counterexample_trial = t
    return report
