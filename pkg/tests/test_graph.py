import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import steinhaus_adjacency
from steinhaus.errors import InternalMismatch, NotTriangularOrder, ParseError, SizeMismatch, VertexOutOfRange
from steinhaus.gf2 import BitRow
from steinhaus.graph import (
    SimpleGraph,
    SteinhausGraph,
    all_simple_graphs,
    edge_to_triangle,
    embed,
    extract,
    extract_direct,
    extract_projection,
    graph_from_seq,
    induced_subgraph,
    triangle_to_edge,
    triangular_root,
    w_set,
    xor_graphs,
    xor_simple,
)
from steinhaus.triangle import from_top_row, triangular_number


def random_graph(rng, n):
    m = triangular_number(n - 1)
    return SimpleGraph.from_triangle_bits(n, BitRow(m, rng.getrandbits(m) if m else 0))


def random_seq(rng, length):
    return BitRow(length, rng.getrandbits(length) if length else 0)


def path3():
    return SimpleGraph.from_edges(3, [(1, 2), (2, 3)])


class TestBridge:
    def test_round_trip(self):
        for p in range(12):
            for q in range(12 - p):
                u, v = triangle_to_edge(p, q)
                assert 1 <= u < v
                assert edge_to_triangle(u, v) == (p, q)

    def test_exhaustive_pairs(self):
        order = 12
        seen = {triangle_to_edge(p, q) for p in range(order - 1) for q in range(order - 1 - p)}
        assert seen == {(u, v) for u in range(1, order + 1) for v in range(u + 1, order + 1)}

    def test_triangular_root(self):
        assert [triangular_root(m) for m in (0, 1, 3, 6, 10, 4950)] == [0, 1, 2, 3, 4, 99]
        assert triangular_root(7) is None and triangular_root(2) is None


class TestGraphFromSeq:
    def test_empty(self):
        g = graph_from_seq("")
        assert g.order == 1 and g.edges() == []

    def test_figure_two(self):
        g = graph_from_seq("0010100")
        assert g.order == 8
        assert g.simple.neighbors(1) == [4, 6]
        assert [int(g.has_edge(2, v)) for v in range(3, 9)] == [0, 1, 1, 1, 1, 0]

    def test_rules_exhaustive(self):
        for length in range(11):
            for code in range(1 << length):
                seq = BitRow(length, code)
                g = graph_from_seq(seq)
                a = steinhaus_adjacency(list(seq.to_bits()))
                adj = g.adjacency.to_lists()
                n = g.order
                for i in range(1, n + 1):
                    assert adj[i - 1][i - 1] == 0
                    for j in range(1, n + 1):
                        assert adj[i - 1][j - 1] == a[i][j] == adj[j - 1][i - 1]

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 200).flatmap(lambda n: st.builds(lambda v: BitRow(n, v), st.integers(0, 2**n - 1))))
    def test_rules_random(self, seq):
        g = graph_from_seq(seq)
        n = g.order
        adj = g.adjacency.to_array()
        assert (adj == adj.T).all()
        assert not adj.diagonal().any()
        for j in range(2, n + 1):
            assert adj[0, j - 1] == seq[j - 2]
        for i in range(2, n + 1):
            for j in range(i + 1, n + 1):
                assert adj[i - 1, j - 1] == adj[i - 2, j - 2] ^ adj[i - 2, j - 1]

    def test_upper_triangle_is_steinhaus_triangle(self):
        rng = random.Random(1)
        for _ in range(20):
            seq = random_seq(rng, rng.randint(1, 40))
            g = graph_from_seq(seq)
            tri = from_top_row(seq)
            adj = g.adjacency.to_array()
            for p in range(tri.size):
                for q in range(tri.size - p):
                    assert adj[p, p + q + 1] == tri.entry(p, q)


class TestWSet:
    def test_values(self):
        assert w_set(1) == [1]
        assert w_set(4) == [1, 2, 4, 7]
        assert w_set(7) == [1, 2, 4, 7, 11, 16, 22]
        assert max(w_set(7)) == triangular_number(6) + 1


class TestInducedSubgraph:
    def test_all_vertices(self):
        h = random_graph(random.Random(2), 6)
        assert induced_subgraph(h, range(1, 7)) == h

    def test_single_vertex(self):
        h = random_graph(random.Random(3), 5)
        assert induced_subgraph(h, [3]) == SimpleGraph(1)

    def test_path_from_g110(self):
        g = graph_from_seq("110")
        assert g.edges() == [(1, 2), (1, 3), (2, 4), (3, 4)]
        assert induced_subgraph(g.simple, [1, 2, 4]) == path3()
        assert induced_subgraph(g, [1, 2, 4]) == path3()

    def test_out_of_range(self):
        with pytest.raises(VertexOutOfRange):
            induced_subgraph(path3(), [1, 4])


class TestExtract:
    def test_k1(self):
        assert extract(graph_from_seq("")) == SimpleGraph(1)

    def test_g110(self):
        assert extract(graph_from_seq("110")) == path3()

    def test_not_triangular(self):
        with pytest.raises(NotTriangularOrder):
            extract(graph_from_seq("0010100"))

    def test_two_paths_agree(self):
        rng = random.Random(4)
        for n in range(1, 14):
            for _ in range(10):
                g = SteinhausGraph(random_seq(rng, triangular_number(n - 1)))
                assert extract_direct(g) == extract_projection(g)

    def test_mismatch_is_reported(self, monkeypatch):
        import steinhaus.graph as mod

        monkeypatch.setattr(mod, "extract_projection", lambda g: SimpleGraph(3, [0b110, 0, 0]))
        with pytest.raises(InternalMismatch):
            mod.extract(graph_from_seq("000"))

    @pytest.mark.parametrize("n, count", [(3, 8), (4, 64)])
    def test_bijection(self, n, count):
        m = triangular_number(n - 1)
        images = {extract(SteinhausGraph(BitRow(m, c))) for c in range(1 << m)}
        assert len(images) == count
        assert images == set(all_simple_graphs(n))


class TestEmbed:
    def test_k1(self):
        g = embed(SimpleGraph(1))
        assert g.order == 1 and g.seq == BitRow(0)

    def test_single_edge(self):
        assert embed(SimpleGraph.from_edges(2, [(1, 2)])).seq == BitRow.from_string("1")

    def test_path(self):
        g = embed(path3())
        assert g.order == 4 and str(g.seq) == "110"
        hits = [c for c in range(8) if extract(SteinhausGraph(BitRow(3, c))) == path3()]
        assert hits == [BitRow.from_string("110").value]

    def test_order(self):
        rng = random.Random(5)
        for n in range(1, 20):
            assert embed(random_graph(rng, n)).order == triangular_number(n - 1) + 1

    def test_round_trips(self):
        rng = random.Random(6)
        for n in range(1, 9):
            for _ in range(10):
                h = random_graph(rng, n)
                assert extract(embed(h)) == h
                g = SteinhausGraph(random_seq(rng, triangular_number(n - 1)))
                assert embed(extract(g)) == g

    def test_block_and_generic_agree(self):
        rng = random.Random(7)
        for n in (5, 12, 20):
            h = random_graph(rng, n)
            assert embed(h, method="block") == embed(h, method="generic") == embed(h, method="both")

    def test_rejects_empty_graph(self):
        with pytest.raises(ValueError):
            embed(SimpleGraph(0))


class TestXor:
    def test_self(self):
        g = graph_from_seq("0110")
        assert xor_graphs(g, g) == graph_from_seq("0000")
        assert (g ^ g).edges() == []

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            xor_graphs(graph_from_seq("01"), graph_from_seq("011"))
        with pytest.raises(SizeMismatch):
            xor_simple(SimpleGraph(2), SimpleGraph(3))

    def test_seq_linearity(self):
        rng = random.Random(8)
        for _ in range(50):
            length = rng.randint(0, 30)
            s1, s2 = random_seq(rng, length), random_seq(rng, length)
            g = xor_graphs(graph_from_seq(s1), graph_from_seq(s2))
            assert g == graph_from_seq(s1 ^ s2)
            assert g.simple == graph_from_seq(s1).simple ^ graph_from_seq(s2).simple

    def test_extract_linearity(self):
        rng = random.Random(9)
        for n in range(1, 8):
            m = triangular_number(n - 1)
            for _ in range(10):
                g1, g2 = SteinhausGraph(random_seq(rng, m)), SteinhausGraph(random_seq(rng, m))
                assert extract(g1 ^ g2) == extract(g1) ^ extract(g2)


class TestFormats:
    def test_edge_list_round_trip(self):
        h = random_graph(random.Random(10), 7)
        text = h.to_edge_list()
        lines = text.splitlines()
        assert lines[0] == f"7 {h.edge_count()}"
        assert SimpleGraph.from_edge_list(text) == h

    def test_edge_list_canonical_order(self):
        h = SimpleGraph.from_edge_list("3 2\n2 3\n1 2\n")
        assert h.to_edge_list() == "3 2\n1 2\n2 3\n"

    @pytest.mark.parametrize(
        "bad",
        ["", "3 1\n1 1\n", "3 2\n1 2\n2 1\n", "3 1\n1 4\n", "3 2\n1 2\n", "3 x\n", "3 1\n1 2 3\n"],
    )
    def test_edge_list_rejects(self, bad):
        with pytest.raises(ParseError):
            SimpleGraph.from_edge_list(bad)

    def test_dot(self):
        dot = path3().to_dot()
        assert dot.splitlines() == ["graph G {", "  1;", "  2;", "  3;", "  1 -- 2;", "  2 -- 3;", "}"]
        assert "1 -- 4" in graph_from_seq("0010100").to_dot()

    def test_dot_labels(self):
        dot = path3().to_dot(labels=["a", "b", "c"])
        assert '  2 [label="b"];' in dot.splitlines()

    def test_pair_bits_round_trip(self):
        rng = random.Random(11)
        for n in range(0, 10):
            h = random_graph(rng, n) if n else SimpleGraph(0)
            assert SimpleGraph.from_triangle_bits(n, h.pair_bits()) == h
