"""Acceptance criteria; each test records one pass/fail line."""
import itertools
import random
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from signature_tables import CEI_TABLE, PEI_TABLE, REI_TABLE, UEI_TABLE, expected_lines
from einets import labels
from einets.admissible import (
    assemble_vector_field,
    measured_partials,
    random_polynomial_spec,
    signature as admissible_signature,
    symbolic_jacobian,
)
from einets.enumeration import EnumerationSpec, canonical_form, enumerate_networks
from einets.network import EINetwork, NetworkClass, classify_network, is_homogeneous
from einets.odeequiv import (
    minimal_representatives,
    ode_equivalent,
    parametric_class_id,
    partition_classes,
    signature,
)
from einets.sim import check_synchrony_invariance, finite_diff_jacobian, integrate
from einets.synchrony import Colouring, balanced_colourings, quotient


def record(k: int, ok: bool, detail: str):
    ACCEPTANCE_LINES[k] = f"criterion {k}: {'PASS' if ok else 'FAIL'} ({detail})"
    assert ok, ACCEPTANCE_LINES[k]


def _catalog(cls):
    nets = enumerate_networks(EnumerationSpec(2, cls, 2))
    return nets, partition_classes(nets)


def test_criterion_1_rei_catalog():
    start = time.perf_counter()
    nets, part = _catalog("REI")
    elapsed = time.perf_counter() - start
    ok = len(nets) == 15 and sorted(part.sizes(), reverse=True) == [9, 6] and elapsed < 5
    record(1, ok, f"{len(nets)} networks, classes {part.sizes()}, {elapsed:.2f} s")


def test_criterion_2_uei_catalog():
    nets, part = _catalog("UEI")
    split = {}
    for name, rep in labels.UEI_FIGURE.items():
        c = part.class_of(EINetwork.from_arrows(2, rep, "EI"))
        split[name] = sum(NetworkClass.REI not in classify_network(m) for m in c.members)
    ok = len(nets) == 53 and len(part) == 4 and split == {"NH1": 19, "NH2": 8, "NH3": 8, "NH4": 3}
    record(2, ok, f"{len(nets)} networks, {len(part)} classes, non-REI split {list(split.values())}")


def test_criterion_3_pei_catalog():
    nets, part = _catalog("PEI")
    homog = sum(any(is_homogeneous(m) for m in c.members) for c in part.classes)
    ok = len(nets) == 15 and len(part) == 9 and homog == 2
    record(3, ok, f"{len(nets)} networks, {len(part)} classes, {homog} with homogeneous members")


def test_criterion_4_cei_catalog():
    nets, part = _catalog("CEI")
    pei_sigs = {signature(m) for m in nets if NetworkClass.PEI in classify_network(m)}
    other_sigs = {signature(m) for m in nets if NetworkClass.PEI not in classify_network(m)}
    n_other = sum(NetworkClass.PEI not in classify_network(m) for m in nets)
    shared = len(other_sigs & pei_sigs)
    ok = len(nets) == 53 and len(part) == 21 and n_other == 38 and len(other_sigs) == 15 and shared == 3
    record(
        4, ok,
        f"{len(nets)} networks, {len(part)} classes; {n_other} non-PEI networks in {len(other_sigs)} classes, "
        f"{shared} shared with PEI; expected 21 classes, 15 and 3",
    )


def test_criterion_5_smolen():
    net, small = labels.smolen(), labels.smolen_minimal()
    classes = classify_network(net)
    equiv = ode_equivalent(net, small)
    nets, part = _catalog("REI")
    reps = minimal_representatives(part.class_of(net))
    ok = classes == {NetworkClass.REI, NetworkClass.UEI} and equiv and reps == [canonical_form(small)]
    record(5, ok, f"classes {sorted(c.value for c in classes)}, equivalent={equiv}, {len(reps)} minimal of {reps[0].arrow_count} arrows")


def _uei(b1, b2, c1, c2, a=(0, 0), d=(0, 0)):
    return EINetwork.two_type("EI", [[a[0], b2], [b1, a[1]]], [[d[0], c2], [c1, d[1]]])


def _random_connected(rng, make, arity):
    while True:
        params = [rng.randint(0, 5) for _ in range(arity)]
        net = make(*params)
        try:
            return parametric_class_id(net), signature(net)
        except ValueError:
            continue


def test_criterion_6_infinite_families():
    pei = [labels.rei_network(2, 1, 0, 0, True), labels.rei_network(3, 1, 0, 0, True), labels.rei_network(1, 1, 0, 0, True)]
    distinct = all(not ode_equivalent(g, h) for g, h in itertools.combinations(pei, 2))
    uei_distinct = not ode_equivalent(_uei(1, 1, 0, 0), _uei(2, 1, 0, 0))
    rng = random.Random(2024)
    families = [
        [_random_connected(rng, lambda a, b, c, d: labels.rei_network(a, b, c, d, True), 4) for _ in range(50)],
        [
            _random_connected(rng, lambda b1, b2, c1, c2, a1, a2, d1, d2: _uei(b1, b2, c1, c2, (a1, a2), (d1, d2)), 8)
            for _ in range(50)
        ],
    ]
    mismatches = sum(
        (la == lb) != (sa == sb)
        for samples in families
        for (la, sa), (lb, sb) in itertools.combinations(samples, 2)
    )
    ok = distinct and uei_distinct and mismatches == 0
    record(6, ok, f"PEI distinct={distinct}, UEI distinct={uei_distinct}, {mismatches} label/span disagreements over 100 tuples")


def test_criterion_7_synchrony():
    rei_cols = balanced_colourings(labels.smolen())
    pei_cols = balanced_colourings(labels.smolen(True))
    q = quotient(labels.smolen(True), Colouring([(0, 1)]))
    q_ok = q.n == 1 and q.exc == ((1,),) and q.inh == ((1,),)
    broken = []
    checked = 0
    for cls in ("REI", "PEI", "UEI", "CEI"):
        for net in enumerate_networks(EnumerationSpec(2, cls, 2)):
            before = classify_network(net)
            for c in balanced_colourings(net):
                after = classify_network(quotient(net, c))
                checked += 1
                for k in (NetworkClass.REI, NetworkClass.UEI, NetworkClass.CEI):
                    if (k in before) != (k in after):
                        broken.append((net, c))
    ok = (
        rei_cols == [Colouring.trivial(2)]
        and pei_cols == [Colouring.trivial(2), Colouring([(0, 1)])]
        and q_ok
        and not broken
    )
    record(7, ok, f"REI Smolen {len(rei_cols)} colouring, PEI Smolen {len(pei_cols)}, {checked} quotients checked, {len(broken)} class changes")


def _rk4_ratio():
    def err(dt):
        traj = integrate(lambda x: np.array([x[1], -x[0]]), [1.0, 0.0], dt, int(round(1 / dt)))
        return abs(traj.final[0] - np.cos(1.0))

    return err(0.1) / err(0.05)


def _richardson(a, b):
    return (4 * b - a) / 3


def _jacobian_pair(field, jac, x, h=1e-3):
    """Fourth-order estimates of the numeric and templated Jacobians."""
    numeric = _richardson(finite_diff_jacobian(field, x, h), finite_diff_jacobian(field, x, h / 2))
    coarse, fine = measured_partials(field, jac, x, h), measured_partials(field, jac, x, h / 2)
    template = jac.instantiate({s: _richardson(coarse[s], fine[s]) for s in coarse})
    return numeric, template


def test_criterion_8_numerics():
    start = time.perf_counter()
    rng = np.random.default_rng(8)
    jac_fail = 0
    jac_checked = 0
    nontrivial = []
    for cls in ("REI", "PEI", "UEI", "CEI"):
        for net in enumerate_networks(EnumerationSpec(2, cls, 2)):
            jac = symbolic_jacobian(net)
            for _ in range(20):
                spec = random_polynomial_spec(net, rng)
                field = assemble_vector_field(net, spec)
                x = rng.uniform(-1, 1, size=net.n)
                numeric, template = _jacobian_pair(field, jac, x)
                jac_checked += 1
                if not np.allclose(numeric, template, rtol=1e-6, atol=1e-12):
                    jac_fail += 1
            nontrivial += [(net, c) for c in balanced_colourings(net) if not c.is_trivial()]
    sync_dev = 0.0
    sync_fail = 0
    for net, c in nontrivial:
        report = check_synchrony_invariance(net, c, trials=2, T=10.0, dt=0.01, tol=1e-8, seed=0)
        sync_dev = max(sync_dev, report.max_deviation)
        sync_fail += not report.passed
    ratio = _rk4_ratio()
    elapsed = time.perf_counter() - start
    ok = jac_fail == 0 and sync_fail == 0 and 8 <= ratio <= 32 and elapsed < 120
    record(
        8, ok,
        f"{jac_checked} Jacobians, {jac_fail} mismatches; {len(nontrivial)} colourings, max deviation {sync_dev:.1e}; "
        f"RK4 ratio {ratio:.1f}; {elapsed:.0f} s",
    )


TABLES = {"rei": REI_TABLE, "pei": PEI_TABLE, "uei": UEI_TABLE, "cei": CEI_TABLE}


def test_criterion_9_signature_tables():
    bad = []
    total = 0
    for table, rows in TABLES.items():
        for label, row in rows.items():
            total += 1
            got = admissible_signature(labels.figure_network(table, label)).lines()
            if got != expected_lines(row):
                bad.append(f"{table} {label}")
    record(9, not bad, f"{total - len(bad)}/{total} rendered signatures match" + (f"; mismatched {bad}" if bad else ""))
