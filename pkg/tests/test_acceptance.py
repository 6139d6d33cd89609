"""Exit criteria. Every check is exact; the only tolerances are wall-clock budgets."""

import io
import itertools
import random
import time

from oracles import bruteforce_generating, triangle_rows
from steinhaus import cli
from steinhaus.binomial import (
    minor_bareiss,
    minor_vandermonde,
    superfactorial,
    triangular_minor_closed_form,
    vandermonde_product,
)
from steinhaus.gensets import (
    IndexSet,
    build_MA,
    count_subsets,
    d3_orbits,
    delahan_index_set,
    enumerate_generating,
    is_generating,
    verify_block_structure,
)
from steinhaus.gf2 import BitRow, invert, rank
from steinhaus.graph import SimpleGraph, SteinhausGraph, all_simple_graphs, embed, extract
from steinhaus.triangle import (
    entry_via_left,
    entry_via_right,
    entry_via_top,
    from_top_row,
    positions,
    triangular_number,
)


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.2f}s, budget {self.seconds}s"


def report(n, ok, detail):
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}")


def random_graph(rng, n):
    m = triangular_number(n - 1)
    return SimpleGraph.from_triangle_bits(n, BitRow(m, rng.getrandbits(m)))


def test_criterion_1_generating_set_counts():
    with Budget(1.0) as b:
        sets = enumerate_generating(3)
        total = count_subsets(3)
        orbits = d3_orbits(sets)
        out = io.StringIO()
        cli.main(["gensets", "3", "--count-only"], out=out)
    report(1, True, f"generating={len(sets)} non_generating={total - len(sets)} orbits={len(orbits)} in {b.elapsed:.3f}s")
    assert len(sets) == 16
    assert total - len(sets) == 4
    assert total == 20
    assert len(orbits) == 4
    assert out.getvalue() == "generating=16 non_generating=4 total=20\n"


def test_criterion_2_triangular_minor_three_routes():
    with Budget(1.0):
        values = []
        for n in range(1, 11):
            rows = [triangular_number(k) for k in range(n)]
            closed = triangular_minor_closed_form(n)
            assert closed == minor_vandermonde(rows) == minor_bareiss(rows)
            assert closed % 2 == 1
            values.append(closed)
    report(2, True, f"n=1..10 agree, last={values[-1]}")


def test_criterion_3_vandermonde_vs_bareiss_random():
    rng = random.Random(20240603)
    with Budget(10.0) as b:
        for _ in range(1000):
            n = rng.randint(1, 7)
            rows = sorted(rng.sample(range(41), n))
            q, rem = divmod(vandermonde_product(rows), superfactorial(n))
            assert rem == 0
            assert q == minor_vandermonde(rows) == minor_bareiss(rows)
    report(3, True, f"1000 selections in {b.elapsed:.2f}s")


def test_criterion_4_delahan_block_structure():
    with Budget(30.0) as b:
        for n in range(2, 13):
            rep = verify_block_structure(n)
            assert rep.partition.sizes == tuple(range(1, n))
            assert all(rep.block_det_parities)
            m = build_MA(delahan_index_set(n))
            assert m.rows == triangular_number(n - 1)
            assert rank(m) == m.rows
            invert(m)
    report(4, True, f"n=2..12, largest dimension 66, {b.elapsed:.2f}s")


def test_criterion_5_bijection_and_linearity():
    with Budget(1.0):
        for n, count in ((3, 8), (4, 64)):
            m = triangular_number(n - 1)
            images = [extract(SteinhausGraph(BitRow(m, c))) for c in range(1 << m)]
            assert len(set(images)) == len(images) == count
            assert set(images) == set(all_simple_graphs(n))
        seqs = [SteinhausGraph(BitRow(3, c)) for c in range(8)]
        for g1, g2 in itertools.product(seqs, repeat=2):
            assert extract(g1 ^ g2) == extract(g1) ^ extract(g2)
    report(5, True, "8 and 64 distinct images, linear on all 64 pairs")


def test_criterion_6_round_trip_at_scale():
    rng = random.Random(6)
    for n in (5, 8, 12, 30):
        for _ in range(100):
            h = random_graph(rng, n)
            assert extract(embed(h)) == h
    h = random_graph(rng, 100)
    with Budget(10.0) as b:
        g = embed(h)
        assert g.order == triangular_number(99) + 1 == 4951
        assert extract(g) == h
    report(6, True, f"400 graphs, n=100 round trip in {b.elapsed:.2f}s")


def test_criterion_7_side_formulas_agree():
    rng = random.Random(7)
    with Budget(5.0) as b:
        for _ in range(200):
            n = rng.randint(0, 64)
            top = [rng.randrange(2) for _ in range(n)]
            s = BitRow.from_bits(top) if n else BitRow(0)
            oracle = triangle_rows(top)
            t = from_top_row(s)
            right, left = t.right_side(), t.left_side()
            for p in positions(n):
                e = oracle[p.i][p.j]
                assert entry_via_top(s, p) == e
                assert entry_via_right(right, p) == e
                assert entry_via_left(left, p) == e
    report(7, True, f"200 triangles in {b.elapsed:.2f}s")


def test_criterion_8_rank_criterion_vs_bruteforce():
    with Budget(5.0) as b:
        checked = 0
        for n in range(1, 5):
            for combo in itertools.combinations(positions(n), n):
                a = IndexSet(n, combo)
                assert is_generating(a) == bruteforce_generating(n, combo)
                checked += 1
    report(8, True, f"{checked} subsets in {b.elapsed:.2f}s")
