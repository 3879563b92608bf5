import itertools
import random

import pytest
import sympy

from einets.enumeration import canonical_form
from einets.labels import rei, rei_network, smolen, smolen_minimal, uei_extra
from einets.network import EINetwork, NetworkClass, adjacency_family, classify_network, permute
from einets.odeequiv import (
    ClassLabel,
    SearchExhausted,
    minimal_representatives,
    ode_equivalent,
    parametric_class_id,
    partition_classes,
    signature,
)


def test_equivalence_examples():
    assert ode_equivalent(smolen(), smolen_minimal())
    remark = EINetwork.two_type("EI", [[0, 0], [1, 0]], [[0, 1], [1, 0]])
    assert ode_equivalent(remark, rei("j"))
    assert not ode_equivalent(rei("d", True), rei("e", True), True)


def test_mismatched_pairs_rejected():
    with pytest.raises(ValueError):
        ode_equivalent(smolen(), EINetwork.two_type("EIE", [[0] * 3] * 3, [[0] * 3] * 3))
    with pytest.raises(ValueError):
        ode_equivalent(smolen(), smolen(True))
    with pytest.raises(ValueError):
        partition_classes([smolen(), smolen(True)])


def test_partition_sizes(catalogs):
    assert partition_classes(catalogs["REI"]).sizes() == [9, 6]
    assert len(partition_classes(catalogs["UEI"])) == 4
    assert len(partition_classes(catalogs["PEI"])) == 9
    assert len(partition_classes([smolen()])) == 1


def test_uei_table_membership():
    from einets.labels import UEI_EXTRA, UEI_TABLE, figure_network

    for name, members in UEI_TABLE.items():
        rep = figure_network("uei", name)
        for label in members:
            assert ode_equivalent(uei_extra(label), rep, True), (name, label)
    assert sorted(sum(UEI_TABLE.values(), [])) == sorted(UEI_EXTRA)


def test_equivalence_relation_on_catalogs(catalogs):
    for nets in catalogs.values():
        sigs = [signature(n) for n in nets]
        for a, b in itertools.product(range(len(nets)), repeat=2):
            eq = ode_equivalent(nets[a], nets[b], True)
            assert eq == (sigs[a] == sigs[b]) == ode_equivalent(nets[b], nets[a], True)


def test_permutation_invariance(catalogs):
    rnd = random.Random(5)
    nets = catalogs["UEI"] + catalogs["REI"]
    for _ in range(200):
        g, h = rnd.choice(nets), rnd.choice(nets)
        pg, ph = permute(g, [1, 0]), permute(h, [1, 0])
        assert ode_equivalent(g, h, True) == ode_equivalent(pg, ph, True) == ode_equivalent(g, ph, True)


def test_type_breaking_bijection_excluded():
    nh1 = rei("a")
    flipped = EINetwork.two_type("IE", nh1.exc, nh1.inh)
    assert ode_equivalent(nh1, permute(nh1, [1, 0]), False)
    assert not ode_equivalent(nh1, flipped, False)
    assert ode_equivalent(nh1, flipped, True)


def test_minimal_examples():
    assert minimal_representatives([smolen()]) == [canonical_form(smolen_minimal())]
    assert minimal_representatives([smolen()])[0].arrow_count == 2
    assert [m.arrow_count for m in minimal_representatives([rei("a")])] == [1]
    reps = minimal_representatives([rei_network(2, 1, 0, 0, True)], entry_bound=3)
    assert {m.arrow_count for m in reps} == {3}


def _span_key(mats):
    return sympy.Matrix([[x for r in m for x in r] for m in mats]).rref()[0]


def test_pei_21_minimal_by_brute_force_oracle():
    target = rei_network(2, 1, 0, 0, True)
    want = sympy.Matrix([[x for r in m for x in r] for m in adjacency_family(target)])
    rank = want.rank()
    best = None
    for entries in itertools.product(range(4), repeat=8):
        total = sum(entries)
        if best is not None and total >= best:
            continue
        net = EINetwork.single_type([entries[0:2], entries[2:4]], [entries[4:6], entries[6:8]])
        for g in (net, permute(net, [1, 0])):
            fam = sympy.Matrix([[x for r in m for x in r] for m in adjacency_family(g)])
            if fam.rank() == rank and sympy.Matrix.vstack(want, fam).rank() == rank:
                best = total
    assert best == 3


def test_search_exhausted():
    with pytest.raises(SearchExhausted):
        minimal_representatives(signature(rei_network(2, 1, 0, 0, True)), entry_bound=1)
    sig = signature(EINetwork.single_type([[0, 0], [3, 0]], [[0, 0], [0, 0]]))
    assert minimal_representatives(sig, entry_bound=1)[0].arrow_count == 1


@pytest.mark.parametrize("cls", ["REI", "PEI", "UEI", "CEI"])
def test_minimal_members_and_optimality(catalogs, cls):
    part = partition_classes(catalogs[cls], with_minimal=True)
    for c in part.classes:
        least = min(m.arrow_count for m in c.members)
        for rep in c.minimal:
            assert signature(rep) == c.signature
            assert rep.arrow_count <= least
        assert len({m.arrow_count for m in c.minimal}) == 1
        if cls == "REI":
            assert any(NetworkClass.REI in classify_network(m) for m in c.minimal)


def test_parametric_examples():
    assert parametric_class_id(rei_network(2, 4, 0, 0, True)) == ClassLabel("NHab00", (1, 2, 0, 0))
    nh3 = EINetwork.two_type("EI", [[0, 1], [1, 0]], [[0, 0], [0, 0]])
    assert parametric_class_id(nh3).figure_label == "NH3"
    assert str(parametric_class_id(rei_network(1, 1, 1, 1, True))) == "H2"
    with pytest.raises(ValueError):
        parametric_class_id(EINetwork.single_type([[1, 0], [0, 1]], [[0, 0], [0, 0]]))


@pytest.mark.parametrize("cls", ["PEI", "UEI"])
def test_parametric_agrees_with_partition(catalogs, cls):
    for c in partition_classes(catalogs[cls]).classes:
        assert len({parametric_class_id(m) for m in c.members}) == 1
    labels = [parametric_class_id(c.members[0]) for c in partition_classes(catalogs[cls]).classes]
    assert len(set(labels)) == len(labels)


def random_pei(rnd):
    while True:
        p = [rnd.randint(0, 5) for _ in range(4)]
        if p[1] or p[2]:
            return rei_network(*p, single_node_type=True)


def random_uei(rnd):
    while True:
        e = [[rnd.randint(0, 5) for _ in range(2)] for _ in range(2)]
        i = [[rnd.randint(0, 5) for _ in range(2)] for _ in range(2)]
        if e[0][1] or e[1][0] or i[0][1] or i[1][0]:
            return EINetwork.two_type("EI", e, i)


@pytest.mark.parametrize("maker", [random_pei, random_uei])
def test_parametric_agrees_with_spans_on_random_tuples(maker):
    rnd = random.Random(11)
    nets = [maker(rnd) for _ in range(50)]
    ids = [parametric_class_id(n) for n in nets]
    for a in range(len(nets)):
        for b in range(a, len(nets)):
            assert (ids[a] == ids[b]) == ode_equivalent(nets[a], nets[b], True)
