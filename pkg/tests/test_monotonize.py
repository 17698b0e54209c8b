import math
from random import Random

import pytest

from lbcut.dp import monotonize_cut, _monotone_distances
from lbcut.errors import InputError
from lbcut.graph import bfs_distances, edge
from lbcut.intervals import normalize
from lbcut.oracles import random_proper_interval_instance


def normalized(seed, n=9, density=0.6):
    inst, model = random_proper_interval_instance(n, density=density, seed=seed)
    norm = normalize(inst, model)
    return norm.inst, norm.model


def rank_order(inst, model):
    return sorted(
        (v for v in range(inst.graph.n) if v not in (inst.s, inst.t)),
        key=lambda v: model.starts[v],
    )


def distance_monotone(inst, model, cut):
    d = bfs_distances(inst.graph.without_edges(cut), inst.s)
    vals = [d[v] for v in rank_order(inst, model)]
    return all(a <= b for a, b in zip(vals, vals[1:]))


class TestMonotonize:
    def test_empty_cut_stays_empty(self):
        inst, model = normalized(2)
        d = bfs_distances(inst.graph, inst.s)[inst.t]
        d = 3 if d == math.inf else int(d)
        assert monotonize_cut(inst, model, frozenset(), d) == frozenset()

    def test_already_monotone_unchanged(self):
        inst, model = normalized(4)
        out = monotonize_cut(inst, model, frozenset(), 1)
        assert out == frozenset()

    def test_not_a_cut_rejected(self):
        for seed in range(30):
            inst, model = normalized(seed)
            dist = bfs_distances(inst.graph, inst.s)[inst.t]
            if dist != math.inf:
                break
        else:
            pytest.fail("no connected sample found")
        with pytest.raises(InputError):
            monotonize_cut(inst, model, frozenset(), int(dist) + 1)

    def test_random_cuts_get_repaired(self):
        repaired = 0
        for seed in range(300):
            inst, model = normalized(seed, n=9, density=0.7)
            g = inst.graph
            rng = Random(seed)
            f = frozenset(e for e in g.edge_list() if rng.random() < 0.35)
            dist = bfs_distances(g.without_edges(f), inst.s)[inst.t]
            d = g.n + 2 if dist == math.inf else int(dist)
            out = monotonize_cut(inst, model, f, d)
            assert len(out) <= len(f)
            new_dist = bfs_distances(g.without_edges(out), inst.s)[inst.t]
            assert new_dist >= d
            assert distance_monotone(inst, model, out)
            repaired += 1
        assert repaired == 300

    def test_monotone_distance_definition(self):
        # D(v) only uses strictly increasing interior starts; first step free
        inst, model = normalized(8)
        order = rank_order(inst, model)
        dvec = _monotone_distances(inst.graph, inst.s, inst.t, frozenset(), order)
        real = bfs_distances(inst.graph, inst.s)
        for v in order:
            assert dvec[v] >= real[v]
