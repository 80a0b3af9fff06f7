import csv
import io
import math

import pytest

from vwmatch import WeightSpec, generate_random_bipartite, generate_weights, geometric_mean
from vwmatch.bench import CSV_COLUMNS, FOOTER_LABEL, TIMING_COLUMNS, bench_graph, write_report


@pytest.mark.parametrize("values, expected", [([1.0, 1.0, 1.0], 1.0), ([0.25, 1.0], 0.5)])
def test_geometric_mean(values, expected):
    assert round(geometric_mean(values), 3) == expected


@pytest.mark.parametrize("values", [[], [1.0, 0.0], [-1.0]])
def test_geometric_mean_rejects(values):
    with pytest.raises(ValueError):
        geometric_mean(values)


def _report(algos=("exact", "two-thirds", "half"), oracle=False, sizes=((40, 50, 200), (30, 30, 120))):
    rows = []
    for i, (n_s, n_t, m) in enumerate(sizes):
        g = generate_random_bipartite(n_s, n_t, m, i)
        w = generate_weights(g, WeightSpec("random", 1, 1000, 42))
        rows.extend(bench_graph(f"g{i}", g, w, list(algos), reps=1, oracle=oracle))
    buf = io.StringIO()
    write_report(rows, list(algos), buf, oracle=oracle)
    return buf.getvalue()


def test_report_layout():
    text = _report()
    recs = list(csv.DictReader(io.StringIO(text)))
    assert text.splitlines()[0] == ",".join(CSV_COLUMNS)
    body = [r for r in recs if r["graph"] != FOOTER_LABEL]
    footer = [r for r in recs if r["graph"] == FOOTER_LABEL]
    assert len(body) == 6 and [r["algorithm"] for r in footer] == ["exact", "two-thirds", "half"]
    for r in body:
        if r["algorithm"] == "exact":
            assert float(r["weight_ratio"]) == 1.0 and float(r["card_ratio"]) == 1.0
        assert 0 < float(r["weight_ratio"]) <= 1.0
    for f in footer:
        sel = [float(r["weight_ratio"]) for r in body if r["algorithm"] == f["algorithm"]]
        expected = math.exp(sum(map(math.log, sel)) / len(sel))
        assert abs(float(f["weight_ratio"]) - expected) <= 1e-3


def test_report_deterministic_except_timing():
    def strip(text):
        recs = list(csv.DictReader(io.StringIO(text)))
        return [{k: v for k, v in r.items() if k not in TIMING_COLUMNS} for r in recs]
    assert strip(_report()) == strip(_report())


def test_oracle_column():
    text = _report(algos=("two-thirds",), oracle=True, sizes=((4, 4, 10), (20, 20, 60)))
    recs = list(csv.DictReader(io.StringIO(text)))
    assert recs[0]["oracle_weight"] != "" and recs[1]["oracle_weight"] == ""


def test_unknown_algorithm():
    g = generate_random_bipartite(3, 3, 3, 0)
    with pytest.raises(KeyError):
        bench_graph("g", g, generate_weights(g, WeightSpec("unit")), ["hungarian"])
