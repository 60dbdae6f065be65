import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from marnet.graphs import (
    ElementNotFoundError,
    Graph,
    GraphElement,
    GraphParseError,
    add_edge,
    complete_graph,
    cycle_graph,
    delete_edge,
    delete_element,
    delete_node,
    deserialize,
    empty_graph,
    erdos_renyi,
    erdos_renyi_gnm,
    rado_graph,
    serialize,
    star_graph,
    to_edge_list_text,
)


class TestGenerators:
    def test_er_p_zero(self):
        assert erdos_renyi(5, 0.0, 1).edge_count == 0

    def test_er_p_one(self):
        g = erdos_renyi(5, 1.0, 1)
        assert g.edge_count == 10

    def test_er_edge_count_concentration(self):
        # +-3 sigma band of Binomial(4950, 0.5): mean 2475, sigma ~35.2
        g = erdos_renyi(100, 0.5, 7)
        assert 2200 <= g.edge_count <= 2750

    def test_er_seeded_determinism(self):
        assert erdos_renyi(40, 0.3, 9) == erdos_renyi(40, 0.3, 9)

    def test_er_p_out_of_range(self):
        with pytest.raises(ValueError):
            erdos_renyi(5, 1.5, 1)
        with pytest.raises(ValueError):
            erdos_renyi(5, -0.1, 1)

    def test_gnm_exact_edges(self):
        g = erdos_renyi_gnm(16, 32, 5)
        assert g.edge_count == 32
        assert erdos_renyi_gnm(16, 32, 5) == g

    def test_complete(self):
        g = complete_graph(4)
        assert g.edge_count == 6
        assert all(d == 3 for d in g.degrees())

    def test_empty(self):
        assert list(empty_graph(9).degrees()) == [0] * 9

    def test_cycle(self):
        g = cycle_graph(5)
        assert list(g.degrees()) == [2, 2, 2, 2, 2]

    def test_cycle_too_small(self):
        with pytest.raises(ValueError):
            cycle_graph(2)

    def test_star(self):
        g = star_graph(5)
        assert sorted(g.degrees().tolist()) == [1, 1, 1, 1, 4]


class TestRado:
    def test_vertex_zero_neighbours_are_odd(self):
        g = rado_graph(8)
        nbrs = sorted(v for u, v in g.edges if u == 0)
        assert nbrs == [1, 3, 5, 7]

    def test_vertex_one_larger_neighbours(self):
        g = rado_graph(8)
        larger = sorted(v for u, v in g.edges if u == 1 and v > 1)
        assert larger == [2, 3, 6, 7]
        assert all(v % 4 in (2, 3) for v in larger)

    def test_single_node(self):
        g = rado_graph(1)
        assert g.n == 1 and g.edge_count == 0

    @pytest.mark.parametrize("k,n", [(4, 8), (5, 16), (16, 32)])
    def test_hereditary(self, k, n):
        big = rado_graph(n)
        small = rado_graph(k)
        induced = {(u, v) for u, v in big.edges if u < k and v < k}
        assert induced == small.edges


class TestEdits:
    def test_delete_edge_from_k4(self):
        g = delete_edge(complete_graph(4), 0, 1)
        assert g.edge_count == 5
        assert sorted(g.degrees().tolist()) == [2, 2, 3, 3]

    def test_delete_node_from_k4_gives_k3(self):
        assert delete_node(complete_graph(4), 3) == complete_graph(3)

    def test_delete_node_compacts_labels(self):
        g = Graph(4, [(0, 2), (2, 3)])
        h = delete_node(g, 1)
        assert h == Graph(3, [(0, 1), (1, 2)])

    def test_delete_missing_edge(self):
        with pytest.raises(ElementNotFoundError):
            delete_edge(empty_graph(3), 0, 1)

    def test_delete_element_dispatch(self):
        g = complete_graph(4)
        assert delete_element(g, GraphElement.edge(0, 1)) == delete_edge(g, 0, 1)
        assert delete_element(g, GraphElement.node(3)) == complete_graph(3)

    def test_delete_then_readd_restores(self):
        g = erdos_renyi(12, 0.4, 3)
        u, v = sorted(g.edges)[0]
        assert add_edge(delete_edge(g, u, v), u, v) == g

    def test_add_existing_edge_rejected(self):
        with pytest.raises(ValueError):
            add_edge(complete_graph(3), 0, 1)


class TestSerialization:
    def test_k3_exact_text(self):
        assert to_edge_list_text(complete_graph(3)) == "3\n0 1\n0 2\n1 2\n"

    def test_roundtrip_er(self):
        g = erdos_renyi(50, 0.5, 3)
        assert deserialize(serialize(g)) == g

    def test_node_out_of_range(self):
        with pytest.raises(GraphParseError) as exc:
            deserialize("3\n0 5\n")
        assert exc.value.line == 2

    def test_bad_node_count(self):
        with pytest.raises(GraphParseError) as exc:
            deserialize("x\n")
        assert exc.value.line == 1

    def test_bad_edge_line(self):
        with pytest.raises(GraphParseError) as exc:
            deserialize("4\n0 1 2\n")
        assert exc.value.line == 2

    def test_zero_nodes(self):
        assert deserialize("0\n") == empty_graph(0)


class TestGraphInvariants:
    def test_no_self_loops(self):
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])

    def test_edge_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])

    def test_adjacency_matches_edges(self):
        g = erdos_renyi(20, 0.3, 11)
        a = g.adjacency()
        us, vs = np.nonzero(np.triu(a, 1))
        assert set(zip(us.tolist(), vs.tolist())) == g.edges

    def test_immutable(self):
        g = empty_graph(3)
        with pytest.raises(AttributeError):
            g.n = 5

    @settings(max_examples=40, deadline=None)
    @given(n=st.integers(0, 64), seed=st.integers(0, 2**32 - 1))
    def test_er_adjacency_symmetric_zero_diagonal(self, n, seed):
        a = erdos_renyi(n, 0.5, seed).adjacency()
        assert (a == a.T).all()
        assert (np.diag(a) == 0).all()

    @settings(max_examples=25, deadline=None)
    @given(n=st.integers(1, 30), seed=st.integers(0, 2**16))
    def test_serialize_roundtrip_property(self, n, seed):
        g = erdos_renyi(n, 0.4, seed)
        assert deserialize(serialize(g)) == g


class TestGraphElement:
    def test_edge_normalised(self):
        assert GraphElement.edge(3, 1) == GraphElement.edge(1, 3)

    def test_ordering(self):
        elems = [GraphElement.node(0), GraphElement.edge(0, 2), GraphElement.edge(0, 1)]
        ordered = sorted(elems)
        assert ordered == [
            GraphElement.edge(0, 1),
            GraphElement.edge(0, 2),
            GraphElement.node(0),
        ]
