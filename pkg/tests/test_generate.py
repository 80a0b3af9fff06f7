import pytest

from vwmatch import (Side, WeightSpec, build_graph, check_graph, generate_random_bipartite,
                     generate_weights, graph_stats)


def test_unit(f1):
    g, _ = f1
    w = generate_weights(g, WeightSpec("unit"))
    assert w.s == (1, 1) and w.t == (1,)


def test_degenerate_range(f2):
    g, _ = f2
    w = generate_weights(g, WeightSpec("random", 5, 5, 123))
    assert set(w.s + w.t) == {5}


def test_seeded_weights_frozen(f1):
    g, _ = f1
    spec = WeightSpec("random", 1, 1000, 42)
    w = generate_weights(g, spec)
    assert all(1 <= x <= 1000 for x in w.s + w.t)
    assert generate_weights(g, spec) == w
    # PCG64(42), one draw of n_s + n_t values, S then T
    assert (w.s, w.t) == ((90, 774), (655,))


def test_fill_order_s_then_t():
    g_a = build_graph(3, 1, [])
    g_b = build_graph(1, 3, [])
    spec = WeightSpec("random", 0, 10**6, 5)
    a, b = generate_weights(g_a, spec), generate_weights(g_b, spec)
    assert a.s + a.t == b.s + b.t


def test_file_weights(tmp_path, f1):
    g, _ = f1
    p = tmp_path / "w.txt"
    p.write_text("5\n9\n1\n")
    assert generate_weights(g, WeightSpec("file", path=str(p))).s == (5, 9)
    p.write_text("5\n9\n")
    with pytest.raises(ValueError):
        generate_weights(g, WeightSpec("file", path=str(p)))


@pytest.mark.parametrize("kwargs", [dict(mode="random", lo=-1, hi=3), dict(mode="random", lo=4, hi=3),
                                    dict(mode="file"), dict(mode="gaussian")])
def test_bad_spec(kwargs):
    with pytest.raises(ValueError):
        WeightSpec(**kwargs)


@pytest.mark.parametrize("text, expected", [
    ("unit", WeightSpec("unit")),
    ("random:1:1000:42", WeightSpec("random", 1, 1000, 42)),
    ("random:1:1000", WeightSpec("random", 1, 1000, 7)),
    ("file:w.txt", WeightSpec("file", path="w.txt")),
])
def test_parse_spec(text, expected):
    assert WeightSpec.parse(text, default_seed=7) == expected


def test_random_graph_saturated():
    g = generate_random_bipartite(2, 2, 4, 99)
    assert g.edges() == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_random_graph_empty():
    g = generate_random_bipartite(3, 3, 0, 1)
    assert (g.n_s, g.n_t, g.m) == (3, 3, 0)


def test_random_graph_deterministic():
    a = generate_random_bipartite(4, 4, 6, 7)
    assert a == generate_random_bipartite(4, 4, 6, 7)
    assert a.m == 6
    check_graph(a)


def test_random_graph_infeasible():
    with pytest.raises(ValueError):
        generate_random_bipartite(2, 2, 5, 0)


def test_stats_f1(f1):
    g, _ = f1
    st = graph_stats(g)
    assert (st.n_s, st.n_t, st.m, st.s_max_degree, st.t_max_degree) == (2, 1, 2, 1, 2)
    assert st.s_mean_degree == 1.0 and st.t_mean_degree == 2.0
    assert st.row("F1") == "F1\t2\t1\t1.00\t1\t2\t2.00\t2"


def test_stats_empty():
    st = graph_stats(build_graph(0, 0, []))
    assert (st.n_s, st.n_t, st.m, st.s_max_degree, st.t_max_degree) == (0, 0, 0, 0, 0)
    assert st.s_mean_degree == st.t_mean_degree == 0


def test_stats_max_at_least_mean():
    g = generate_random_bipartite(30, 50, 400, 2)
    st = graph_stats(g)
    assert st.s_max_degree >= st.s_mean_degree and st.t_max_degree >= st.t_mean_degree
    assert st.s_max_degree == max(g.degree(Side.S, v) for v in range(30))
