# Copyright 2026 The ctxgeo Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os

import pytest

import ctxgeo

DATA = os.environ.get("CTXGEO_TEST_DATA", os.path.join(os.path.dirname(__file__), "..", "data"))


def test_pauli_helpers():
    assert ctxgeo.multiply("X", "Z") == "-iY"
    assert ctxgeo.commutes("XX", "ZZ")
    assert not ctxgeo.commutes("XI", "ZI")
    assert ctxgeo.context_product(["ZZ", "XX", "YY"]) == -1
    assert ctxgeo.normalize_observable("-IY") == "-IY"
    with pytest.raises(ValueError):
        ctxgeo.normalize_observable("XQ")


def test_geometry_round_trip():
    with open(os.path.join(DATA, "grid.json")) as f:
        doc = json.load(f)
    g = ctxgeo.Geometry(doc["points"], doc["contexts"])
    assert g.num_points == 9 and g.num_contexts == 6 and g.context_size == 3
    assert ctxgeo.identify(g) == "grid"
    with pytest.raises(ValueError):
        ctxgeo.Geometry(6, [[1, 2, 3], [3, 4, 5], [1, 5, 6], [1, 4, 6]])
    assert any(v.startswith("point_degree") for v in ctxgeo.validate(6, [[1, 2, 3], [3, 4, 5], [1, 5, 6], [1, 4, 6]]))


def test_enumeration_and_census():
    assert [len(ctxgeo.enumerate_geometries(l, p)) for l, p in [(4, 3), (4, 4), (6, 3), (5, 4)]] == [1, 2, 2, 4]
    rows = ctxgeo.census(10)
    contingent = sorted(ctxgeo.identify(r["geometry"]) for r in rows if r["verdict"] == "contingent")
    assert contingent == ["grid", "mermin-pentagram"]


def test_verify_catalog_labelings():
    for name in ["mermin-peres-square", "mermin-pentagram", "heptagram"]:
        entry = ctxgeo.catalog(name)
        g = ctxgeo.catalog_geometry(name)
        report = ctxgeo.verify_labeling(g, {int(k): v for k, v in entry["labeling"].items()})
        assert report["is_contextual"], name
        assert report["negative_count"] % 2 == 1


def test_search():
    g = ctxgeo.catalog_geometry("grid")
    res = ctxgeo.find_realization(g, 2)
    assert len(res["solutions"]) == 1
    lab = {int(k): v for k, v in res["solutions"][0].items()}
    assert ctxgeo.verify_labeling(g, lab)["is_contextual"]
    pasch = ctxgeo.find_realization(ctxgeo.catalog_geometry("pasch"), 2)
    assert pasch["solutions"] == [] and pasch["exhausted"]


def test_parity_certificate_shape():
    v = ctxgeo.parity_analysis(ctxgeo.catalog_geometry("pasch"))
    assert v["verdict"] == "forced"
    assert v["certificate"]["kind"] == "relations"
    v = ctxgeo.parity_analysis(ctxgeo.star_polygon(7, 2))
    assert v["verdict"] == "contingent"
    assert v["certificate"]["kind"] == "gram_assignment"


def test_planarity_matches_networkx():
    nx = pytest.importorskip("networkx")
    geometries = [r["geometry"] for r in ctxgeo.census(12)]
    geometries += [ctxgeo.catalog_geometry(n) for n in ctxgeo.catalog_names()]
    geometries += [ctxgeo.star_polygon(p, q) for p, q in [(5, 2), (7, 2), (7, 3), (9, 2), (11, 3)]]
    for g in geometries:
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(g.num_contexts))
        graph.add_edges_from(g.dual_edges())
        planar, _ = nx.check_planarity(nx.Graph(graph))
        assert ctxgeo.is_planar(g) == planar
        assert (ctxgeo.parity_analysis(g)["verdict"] == "contingent") == (not planar)
