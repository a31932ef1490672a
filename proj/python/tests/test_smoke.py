# Copyright 2026 The cuttree Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import itertools

import pytest

import cuttree
from cuttree import gen, oracle


def test_graph_roundtrip():
    g = cuttree.Multigraph(3, [(0, 1, 1), (1, 2, 4)])
    assert g.n == 3
    assert g.edge_units == 5
    assert not g.is_simple
    assert cuttree.parse_mgraph(cuttree.format_mgraph(g)) == g
    assert g.edges() == [(0, 1, 1), (1, 2, 4)]


def test_bad_graph_raises_value_error():
    with pytest.raises(ValueError):
        cuttree.Multigraph(2, [(0, 2, 1)])
    with pytest.raises(cuttree.InputError):
        cuttree.parse_mgraph("p mgraph 2 1\ne 1 1 1\n")


def test_flow_matches_oracle():
    g = gen.random_graph(7, 500, 3)
    for v, w in itertools.combinations(range(g.n), 2):
        assert cuttree.local_edge_connectivity(g, v, w) == oracle.brute_lambda(g, v, w)


def test_pendant_tree_on_disjoint_cliques():
    g = gen.disjoint_cliques(4, 2)
    t = cuttree.build_pendant_tree(g)
    assert t.partition() == [[0, 1, 2, 3, 4], [5, 6, 7, 8, 9]]
    assert t.edges()[0][2] == 0
    assert cuttree.validate_pendant_tree(g, t, oracle=True)["ok"]
    assert cuttree.count_pendant_pairs(g) == (20, 20)
    assert len(oracle.brute_pendant_pairs(g)) == 20


def test_bone_family():
    for length in (1, 2, 3):
        g = gen.bone_family(length)
        assert cuttree.min_degree(g) == 4
        assert cuttree.global_edge_connectivity(g) == 3
        assert cuttree.vertex_connectivity(g) == 2
        assert cuttree.count_pendant_pairs(g)[1] == 20


def test_ntmc_tree():
    g = gen.multi_cycle_clique(5, 4, 3)
    t = cuttree.build_ntmc_tree(g)
    assert t.block_count == 3
    assert all(c == 4 for _, _, c in t.edges())
    assert cuttree.validate_ntmc_tree(g, t)["ok"]
    with pytest.raises(cuttree.UnsupportedInput):
        cuttree.build_ntmc_tree(gen.clique_cycle(3, 3))
    assert cuttree.count_nontrivial_mincuts(gen.clique_cycle(3, 4)) == 6
    with pytest.raises(OverflowError):
        cuttree.count_nontrivial_mincuts(cuttree.Multigraph(25))


def test_kec_and_sparsify():
    g = gen.clique_cycle(3, 3)
    assert cuttree.kec_components(g, 3) == oracle.brute_kec_components(g, 3, 12)
    t = cuttree.build_kec_tree(g, 3)
    report = json.loads(cuttree.sparsify(g, t, "below-delta", 12))
    assert report["vertices_after"] == 3
    assert report["edge_units_after"] == 3
    assert report["violations"] == []
    tree = json.loads(t.to_json("kec"))
    assert tree["kind"] == "kec"
    assert len(tree["blocks"]) == 3


def test_gomory_hu_size():
    g = gen.clique_cycle(3, 3)
    assert len(cuttree.gomory_hu(g)) == g.n - 1
