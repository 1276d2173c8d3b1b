"""Exit criteria. Each test records one PASS/FAIL line, printed in the
terminal summary (and by running this file directly)."""

import random
import subprocess
import sys
import time
from contextlib import contextmanager
from itertools import combinations

import networkx as nx
import pytest

from thuelab.bounds import lower_bound_conjecture, multipartite_product_pi, sweep_conjecture
from thuelab.colouring import construct_product_colouring, exact_pi, multipartite_exact_pi, verify_nonrepetitive
from thuelab.graphs import (
    Graph,
    MultipartiteSpec,
    clique_number,
    complete_multipartite,
    independence_number,
    lex_product,
    make_family,
)
from thuelab.words import interleave, is_nonrepetitive, rainbow_interrupt, thue_word

RESULTS: dict[int, str] = {}


@contextmanager
def criterion(number: int, title: str, limit_s: float):
    start = time.perf_counter()
    detail = ""
    try:
        yield
        elapsed = time.perf_counter() - start
        if elapsed > limit_s:
            detail = f"took {elapsed:.1f}s, limit {limit_s:.0f}s"
            raise AssertionError(detail)
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        RESULTS[number] = f"[{number:2d}] FAIL  {title} ({elapsed:.2f}s) {detail or exc!r}"[:200]
        raise
    RESULTS[number] = f"[{number:2d}] PASS  {title} ({elapsed:.2f}s)"


def random_graph(rng, n, p):
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def test_01_complete_graphs():
    with criterion(1, "pi(K_n) = n, n = 1..6", 10):
        for n in range(1, 7):
            assert exact_pi(make_family(f"K{n}"))[0] == n


def test_02_stars():
    with criterion(2, "pi(S_n) = 2, n = 1..6", 5):
        for n in range(1, 7):
            assert exact_pi(make_family(f"S{n}"))[0] == 2


def test_03_complete_bipartite():
    with criterion(3, "pi(K_m,n) = min(m,n)+1, 1 <= m <= n <= 3", 30):
        for m in range(1, 4):
            for n in range(m, 4):
                assert exact_pi(make_family(f"K{m},{n}"))[0] == min(m, n) + 1


def test_04_upper_bound_all_connected_graphs():
    with criterion(4, "pi(G) <= n - alpha + 1 on all connected graphs with <= 6 vertices", 300):
        count = 0
        for nxg in nx.graph_atlas_g():
            if not 1 <= nxg.number_of_nodes() <= 6 or not nx.is_connected(nxg):
                continue
            g = Graph.from_edges(nxg.number_of_nodes(), nxg.edges())
            alpha, _ = independence_number(g)
            assert exact_pi(g)[0] <= g.n - alpha + 1, nx.to_graph6_bytes(nxg)
            count += 1
        assert count == 143  # connected graphs on 1..6 vertices: 1+1+2+6+21+112


def test_05_multipartite_equality():
    with criterion(5, "pi(K_n1..nk) = n - max n_i + 1 for total n <= 7", 120):
        specs = [p for n in range(1, 8) for p in partitions(n)]
        assert len(specs) == 44
        for parts in specs:
            assert exact_pi(complete_multipartite(parts))[0] == multipartite_exact_pi(MultipartiteSpec(parts))


def test_06_product_construction():
    with criterion(6, "product construction nonrepetitive with pi(H)+(|G|-alpha)|H| colours, 200 pairs", 300):
        rng = random.Random(6)
        for _ in range(200):
            g = random_graph(rng, rng.randint(1, 4), rng.random())
            h = random_graph(rng, rng.randint(1, 4), rng.random())
            pi_h, hc = exact_pi(h)
            alpha, m = independence_number(g)
            c = construct_product_colouring(g, h, m, hc)
            assert verify_nonrepetitive(lex_product(g, h), c) is None
            assert c.palette_size == pi_h + (g.n - alpha) * h.n


def test_07_multipartite_products():
    with criterion(7, "pi(G∘H) = pi(H)+(pi(G)-1)|H| for multipartite G, order <= 10", 1800):
        checked = 0
        for gd in ("K2", "K3", "S2", "K1,3", "K2,2"):
            for hd in ("K1", "K2", "E2", "P3"):
                g, h = make_family(gd), make_family(hd)
                if g.n * h.n > 10:
                    continue
                pi_g, pi_h = exact_pi(g)[0], exact_pi(h)[0]
                assert exact_pi(lex_product(g, h))[0] == lower_bound_conjecture(pi_h, pi_g, h.n), (gd, hd)
                checked += 1
        assert checked == 18


def test_08_spot_values():
    with criterion(8, "pi(K3∘K2)=6, pi(S2∘K2)=4, pi(K2,2∘K1)=3 by solver and closed form", 300):
        for gd, hd, parts, value in (("K3", "K2", (1, 1, 1), 6), ("S2", "K2", (1, 2), 4), ("K2,2", "K1", (2, 2), 3)):
            h = make_family(hd)
            assert exact_pi(lex_product(make_family(gd), h))[0] == value
            assert multipartite_product_pi(MultipartiteSpec(parts), exact_pi(h)[0], h.n) == value


def test_09_words():
    with criterion(9, "thue_word(10000) squarefree; 1000 interleavings + 1000 rainbow interruptions", 60):
        w = thue_word(10_000)
        assert len(w) == 10_000 and set(w) <= {0, 1, 2} and is_nonrepetitive(w)
        from test_words import random_interleave_case, random_rainbow_case

        rng = random.Random(9)
        for _ in range(1000):
            assert is_nonrepetitive(interleave(*random_interleave_case(rng)))
        for _ in range(1000):
            assert is_nonrepetitive(rainbow_interrupt(*random_rainbow_case(rng)))


def test_10_multiplicativity():
    with criterion(10, "alpha and omega multiplicative on 200 random pairs", 60):
        rng = random.Random(10)
        for _ in range(200):
            g = random_graph(rng, rng.randint(1, 5), rng.random())
            h = random_graph(rng, rng.randint(1, 5), rng.random())
            p = lex_product(g, h)
            assert independence_number(p)[0] == independence_number(g)[0] * independence_number(h)[0]
            assert clique_number(p) == clique_number(g) * clique_number(h)


def test_11_conjecture_sweep(tmp_path):
    with criterion(11, "sweep to product order 9: no counterexamples, byte-identical re-run", 1800):
        report = sweep_conjecture(9)
        assert len(report.certificates) > 100
        assert report.counterexamples == []
        outputs = []
        for name in ("a.csv", "b.csv"):
            out = tmp_path / name
            proc = subprocess.run([sys.executable, "-m", "thuelab", "sweep", "--max-order", "9", "-o", str(out)])
            assert proc.returncode == 0
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]
        assert outputs[0].decode() == report.to_csv()


def test_12_stretch_path_blowup():
    with criterion(12, "stretch: pi(P4∘E3) = 7", 7200):
        g = lex_product(make_family("P4"), make_family("E3"))
        value, witness = exact_pi(g)
        assert value == 7
        assert verify_nonrepetitive(g, witness) is None


if __name__ == "__main__":
    code = pytest.main([__file__, "-q"])
    sys.exit(code)
