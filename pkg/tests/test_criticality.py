import pytest

from sgdrums.criticality import (CRITICAL, NONCRITICAL, UNKNOWN, check_noninterlacing_star,
                                 classify_reduced_drum_edges, compare_all, critical_edges,
                                 is_critical_brute, noninterlacing_star_removed, predict_schrijver_edge)
from sgdrums.drum import reduced_drum
from sgdrums.graph import InvalidParameter, complete, cycle
from sgdrums.schrijver import is_interlacing, schrijver
from sgdrums.solver import chromatic_number


def test_brute_trivial_cases():
    K = complete(4)
    assert all(is_critical_brute(K, e) for e in K.edges())
    C = cycle(4)
    assert not any(is_critical_brute(C, e) for e in C.edges())
    C5 = cycle(5)
    assert all(is_critical_brute(C5, e) for e in C5.edges())


def test_brute_rejects_non_edge():
    with pytest.raises(InvalidParameter):
        is_critical_brute(cycle(5), (0, 2))


def test_long_interlacing_edge_of_sg82_is_not_critical():
    G = schrijver(8, 2)
    e = (G.index((1, 5)), G.index((3, 7)))
    assert is_interlacing((1, 5), (3, 7), 8)
    assert not is_critical_brute(G, e)


def test_prediction_examples():
    G = schrijver(8, 3)
    for a, b in G.edges():
        V, W = G.labels[a], G.labels[b]
        v = predict_schrijver_edge(8, 3, (V, W))
        assert v.predicted == (CRITICAL if is_interlacing(V, W, 8) else NONCRITICAL)
    v = predict_schrijver_edge(9, 2, ((1, 4), (2, 6)))
    assert (v.predicted, v.interlacing) == (CRITICAL, True)
    v = predict_schrijver_edge(8, 2, ((1, 5), (3, 7)))
    assert v.predicted == NONCRITICAL


def test_prediction_has_unknown_regime():
    preds = {predict_schrijver_edge(9, 3, (V, W)).predicted
             for V, W in schrijver(9, 3).label_edges()}
    assert UNKNOWN in preds


def test_prediction_rejects_non_edge():
    with pytest.raises(InvalidParameter):
        predict_schrijver_edge(8, 3, ((1, 3, 5), (1, 4, 6)))


@pytest.mark.parametrize("n,k", [(6, 2), (8, 3), (10, 4), (5, 2), (7, 2), (8, 2), (9, 2), (7, 3), (9, 3)])
def test_compare_all_has_no_mismatch(n, k):
    r = compare_all(n, k)
    assert r.chi == n - 2 * k + 2
    assert not r.mismatches and not r.timeouts
    # edge order is lexicographic by endpoint indices
    G = schrijver(n, k)
    assert [tuple(v.edge) for v in r.verdicts] == G.label_edges()


@pytest.mark.parametrize("k", range(2, 5))
def test_characterization_at_n_2k_plus_2(k):
    n = 2 * k + 2
    r = compare_all(n, k)
    assert all(v.brute == v.interlacing for v in r.verdicts)


@pytest.mark.parametrize("n", range(6, 10))
def test_characterization_for_k2(n):
    from sgdrums.criticality import k2_length_condition
    r = compare_all(n, 2)
    for v in r.verdicts:
        assert v.brute == k2_length_condition(*v.edge, n)


def test_parallel_sweep_matches_serial():
    G = schrijver(7, 2)
    assert critical_edges(G, workers=2) == critical_edges(G, workers=1)


@pytest.mark.parametrize("k", range(1, 5))
def test_reduced_drum_classification(k):
    R = reduced_drum(k + 1, 2 * k + 2)
    cl = classify_reduced_drum_edges(k)
    brute = critical_edges(R)
    non = {e for e, b in zip(R.label_edges(), brute) if not b}
    assert non == set(cl["noncritical"])
    # K_{k+1,k+1} minus the cycle C_{2k+2}
    assert len(cl["noncritical"]) == (k + 1) ** 2 - (2 * k + 2)
    assert all(a[0] == b[0] == 1 for a, b in non)


@pytest.mark.parametrize("n,k", [(6, 2), (8, 3), (8, 2)])
def test_noninterlacing_star_keeps_chromatic_number(n, k):
    r = check_noninterlacing_star(n, k)
    assert r["ok"], r


def test_star_removal_actually_removes_edges():
    G = schrijver(8, 2)
    H = noninterlacing_star_removed(8, 2, (1, 3))
    assert H.num_edges() < G.num_edges()
    assert chromatic_number(H) == 6


def test_verdict_json():
    r = compare_all(6, 2)
    d = r.to_json_dict()
    assert d["mismatches"] == 0 and d["edges"] == 18
    row = d["verdicts"][0]
    assert set(row) >= {"edge", "interlacing", "endpoint_regular", "predicted", "prediction_source", "brute"}
