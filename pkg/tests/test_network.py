import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from einets.labels import rei, smolen
from einets.network import (
    E,
    I,
    EINetwork,
    NetworkClass,
    StructureError,
    adjacency_family,
    classify_network,
    dual,
    input_classes,
    is_connected,
    is_homogeneous,
    is_transitive,
    permute,
    valences,
)

REI, PEI, UEI, CEI = NetworkClass.REI, NetworkClass.PEI, NetworkClass.UEI, NetworkClass.CEI


def mats(n, max_entry=2):
    m = st.lists(st.lists(st.integers(0, max_entry), min_size=n, max_size=n), min_size=n, max_size=n)
    return st.tuples(m, m)


@st.composite
def networks(draw, n=None, single=None):
    n = draw(st.integers(1, 3)) if n is None else n
    single = draw(st.booleans()) if single is None else single
    exc, inh = draw(mats(n))
    types = draw(st.lists(st.sampled_from([E, I]), min_size=n, max_size=n))
    return EINetwork(n, single, types, exc, inh)


def test_classify_examples():
    assert classify_network(smolen()) == {REI, UEI}
    assert classify_network(smolen(True)) == {PEI, CEI}
    both = EINetwork.single_type([[0, 0], [1, 0]], [[0, 0], [1, 0]])
    assert classify_network(both) == {CEI}


def test_malformed_matrices_rejected():
    with pytest.raises(StructureError):
        EINetwork.two_type("EI", [[0, 0]], [[0, 0], [0, 0]])
    with pytest.raises(StructureError):
        EINetwork.two_type("EI", [[0, -1], [0, 0]], [[0, 0], [0, 0]])
    with pytest.raises(StructureError):
        EINetwork.two_type("EX", [[0, 0], [0, 0]], [[0, 0], [0, 0]])


def test_connectivity_examples():
    assert is_connected(EINetwork.two_type("EI", [[0, 0], [1, 0]], [[0, 0], [0, 0]]))
    assert not is_connected(EINetwork.two_type("EI", [[1, 0], [0, 0]], [[0, 0], [0, 1]]))
    assert is_connected(smolen())


def test_valence_examples():
    assert valences(smolen()) == [2, 2]
    assert valences(EINetwork.single_type([[0] * 3] * 3, [[0] * 3] * 3)) == [0, 0, 0]
    assert valences(EINetwork.two_type("EI", [[0, 0], [2, 0]], [[0, 1], [0, 0]])) == [1, 2]


@given(networks())
def test_valences_match_arrow_count_oracle(net):
    counts = [0] * net.n
    for _src, tgt, _kind in net.arrows():
        counts[tgt - 1] += 1
    assert valences(net) == counts


def test_input_class_examples():
    assert input_classes(smolen()) == [(0,), (1,)]
    assert input_classes(smolen(True)) == [(0, 1)]
    assert input_classes(EINetwork.single_type([[3]], [[1]])) == [(0,)]


def test_homogeneous_and_transitive_examples():
    assert not is_homogeneous(smolen())
    assert is_transitive(smolen())
    assert is_homogeneous(rei("d", single_node_type=True))
    assert not is_transitive(rei("a"))
    assert is_transitive(EINetwork.single_type([[1]], [[0]]))
    assert not is_transitive(EINetwork.single_type([[0]], [[0]]))


@given(st.lists(st.integers(0, 3), min_size=8, max_size=8))
def test_cei_homogeneity_condition(p):
    a1, a2, b1, b2, g1, g2, d1, d2 = p
    net = EINetwork.single_type([[a1, b2], [b1, a2]], [[d1, g2], [g1, d2]])
    cond = a1 + b2 == a2 + b1 and d1 + g2 == g1 + d2
    assert is_homogeneous(net) == cond


def test_dual_examples():
    assert dual(dual(smolen())) == smolen()
    nh1 = rei("a")
    d = dual(nh1)
    assert d.node_types == (I, E)
    assert d.inh == ((0, 0), (1, 0)) and d.exc == ((0, 0), (0, 0))
    only_exc = rei("d", single_node_type=True)
    assert not any(map(any, dual(only_exc).exc)) and any(map(any, dual(only_exc).inh))


@given(networks())
def test_dual_involution(net):
    assert dual(dual(net)) == net


@given(networks(), st.data())
def test_permute_round_trip(net, data):
    perm = data.draw(st.permutations(list(range(net.n))))
    inv = [0] * net.n
    for j, p in enumerate(perm):
        inv[p] = j
    assert permute(permute(net, perm), inv) == net
    assert permute(net, range(net.n)) == net


def test_permute_rejects_non_bijection():
    with pytest.raises(ValueError):
        permute(smolen(), [0, 0])


def test_permute_moves_entries():
    net = EINetwork.two_type("EI", [[0, 0], [1, 0]], [[0, 0], [0, 0]])
    swapped = permute(net, [1, 0])
    assert swapped.node_types == (I, E)
    assert swapped.exc == ((0, 1), (0, 0))
    assert classify_network(permute(smolen(), [1, 0])) == classify_network(smolen())


def test_adjacency_family_examples():
    assert adjacency_family(smolen()) == [
        ((1, 0), (0, 0)),
        ((0, 0), (0, 1)),
        ((1, 0), (1, 0)),
        ((0, 1), (0, 1)),
    ]
    assert adjacency_family(smolen(True)) == [((1, 0), (0, 1)), ((1, 0), (1, 0)), ((0, 1), (0, 1))]
    assert adjacency_family(EINetwork.single_type([[0]], [[0]])) == [((1,),), ((0,),), ((0,),)]


@given(networks(single=False))
def test_type_indicators_sum_to_identity(net):
    de, di = adjacency_family(net)[:2]
    assert all(de[i][j] + di[i][j] == int(i == j) for i in range(net.n) for j in range(net.n))


@given(networks(single=True), st.lists(st.sampled_from([E, I]), min_size=3, max_size=3))
def test_single_type_ignores_labels(net, labels):
    other = EINetwork(net.n, True, labels[: net.n], net.exc, net.inh)
    assert other == net
    assert classify_network(other) == classify_network(net)


def _pei_oracle(net):
    """Brute force over all labellings using both labels."""
    for types in itertools.product((E, I), repeat=net.n):
        if E in types and I in types:
            cand = EINetwork(net.n, False, types, net.exc, net.inh)
            if REI in classify_network(cand):
                return True
    return False


@given(networks(single=True))
def test_pei_matches_labelling_oracle(net):
    assert (PEI in classify_network(net)) == _pei_oracle(net)


@given(networks())
def test_class_implications(net):
    c = classify_network(net)
    assert REI not in c or UEI in c
    assert PEI not in c or CEI in c


def test_invariance_under_permutation_on_catalogs(catalogs):
    for nets in catalogs.values():
        for net in nets:
            for perm in itertools.permutations(range(net.n)):
                g = permute(net, perm)
                assert classify_network(g) == classify_network(net)
                assert is_connected(g) == is_connected(net)
                assert sorted(valences(g)) == sorted(valences(net))
                assert [valences(g)[perm[i]] for i in range(net.n)] == valences(net)
                relabelled = sorted(tuple(sorted(perm[i] for i in b)) for b in input_classes(net))
                assert input_classes(g) == relabelled


@given(networks())
def test_json_round_trip(net):
    assert EINetwork.from_json(net.to_json()) == net
    assert EINetwork.from_dict(json.loads(json.dumps(net.to_dict()))) == net


def test_dot_export_styles():
    dot = smolen().to_dot()
    assert "1 [fillcolor=white]" in dot and "2 [fillcolor=gray]" in dot
    assert "2 -> 1 [style=dashed]" in dot and "1 -> 2;" in dot
