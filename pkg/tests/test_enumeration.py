"""Exhaustive class generation against two independent counting routes:
labeled-graph bucketing (small n) and EGF-plus-Burnside arithmetic."""

import random

import numpy as np
import pytest

import oracles
from algconn.canon import canonical_form
from algconn.connectivity import is_biconnected, is_connected, is_theta
from algconn.enumeration import (
    CanonicalCode,
    count_classes,
    enumerate_graphs,
    write_graph6_stream,
)
from algconn.errors import OrderLimitError

CONNECTED_CLASS_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}
BICONNECTED_CLASS_COUNTS = {3: 1, 4: 3, 5: 10, 6: 56, 7: 468, 8: 7123}


def test_biconnected_counts_small_vs_labeled_bucketing():
    # every labeled graph, definitional biconnectivity, exhaustive-permutation
    # bucketing: the completeness oracle for n <= 6
    for n in range(3, 7):
        masks = oracles.all_masks(n)
        keep = masks[oracles.biconnected_mask(masks, n)]
        classes = len(np.unique(oracles.canonical_keys(keep, n)))
        assert count_classes(n, is_biconnected) == classes


def test_connected_counts_small_vs_labeled_bucketing():
    for n in range(1, 7):
        masks = oracles.all_masks(n)
        keep = masks[oracles.connected_mask(masks, n)]
        classes = len(np.unique(oracles.canonical_keys(keep, n)))
        assert count_classes(n, is_connected) == classes


def test_counts_vs_burnside_arithmetic():
    # second independent route: labeled counts by recurrence and block EGF,
    # class counts by Burnside over cycle types
    c = oracles.labeled_connected_counts(7)
    b = oracles.labeled_biconnected_counts(7)
    for n in range(3, 8):
        assert count_classes(n, is_biconnected) == oracles.burnside_class_count(
            n, b[n], oracles.biconnected_mask
        )
        assert count_classes(n, is_connected) == oracles.burnside_class_count(
            n, c[n], oracles.connected_mask
        )


@pytest.mark.slow
def test_counts_vs_burnside_arithmetic_n8():
    c = oracles.labeled_connected_counts(8)
    b = oracles.labeled_biconnected_counts(8)
    assert count_classes(8, is_biconnected) == oracles.burnside_class_count(
        8, b[8], oracles.biconnected_mask
    )
    assert count_classes(8, is_connected) == oracles.burnside_class_count(
        8, c[8], oracles.connected_mask
    )


def test_frozen_regression_counts():
    for n, want in CONNECTED_CLASS_COUNTS.items():
        if n <= 7:
            assert count_classes(n, is_connected) == want
    for n, want in BICONNECTED_CLASS_COUNTS.items():
        if n <= 7:
            assert count_classes(n, is_biconnected) == want


@pytest.mark.slow
def test_frozen_regression_counts_n8():
    assert count_classes(8, is_connected) == CONNECTED_CLASS_COUNTS[8]
    assert count_classes(8, is_biconnected) == BICONNECTED_CLASS_COUNTS[8]


def test_no_duplicate_codes():
    for n in range(1, 8):
        codes = [CanonicalCode.of(g) for g in enumerate_graphs(n, lambda _: True)]
        assert len(set(codes)) == len(codes)


def test_emitted_in_code_order_and_canonical():
    for n in range(2, 7):
        seen = []
        for g in enumerate_graphs(n, lambda _: True):
            code = g.to_graph6()
            assert canonical_form(g) == code  # representatives are canonical
            seen.append(code)
        assert seen == sorted(seen)


def test_predicate_rechecked_post_hoc():
    for g in enumerate_graphs(6, is_biconnected):
        assert is_biconnected(g)
    for g in enumerate_graphs(6, is_theta):
        assert is_theta(g)


def test_theta_counts_match_triple_enumeration():
    from algconn.families import theta_triples

    for n in range(4, 8):
        assert count_classes(n, is_theta) == len(theta_triples(n))


def test_permutation_robustness():
    base = [g.to_graph6() for g in enumerate_graphs(6, is_biconnected)]
    for seed in (1, 7, 42):
        rng = random.Random(seed)
        shuffled = [g.to_graph6() for g in enumerate_graphs(6, is_biconnected, rng)]
        assert shuffled == base


def test_order_limits():
    with pytest.raises(OrderLimitError):
        list(enumerate_graphs(10, lambda _: True))
    with pytest.raises(OrderLimitError):
        list(enumerate_graphs(0, lambda _: True))


def test_graph6_stream_dump(tmp_path):
    out = tmp_path / "n5.g6"
    with open(out, "w", encoding="ascii") as fh:
        wrote = write_graph6_stream(enumerate_graphs(5, is_biconnected), fh)
    lines = out.read_text().splitlines()
    assert wrote == len(lines) == 10
    from algconn.graphs import graph_from_graph6

    for line in lines:
        g = graph_from_graph6(line)
        assert is_biconnected(g)


def test_stream_is_lazy():
    it = enumerate_graphs(5, is_biconnected)
    first = next(it)
    assert first.n == 5
    assert is_biconnected(first)
