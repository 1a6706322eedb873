import pytest

from cyclorbit import (
    Permutation,
    compare_backends,
    instance_size_bits,
    ratio_band,
    run_primorial_scaling,
    run_random_scaling,
)
from cyclorbit._backend import available_backends


def test_instance_size_bits():
    g = Permutation(2, [(1, 2)])
    # indices 1 and 2 cost 1 + 2 bits, both configurations cost 1 bit/symbol
    assert instance_size_bits(g, "01", "10") == 3 + 4
    assert instance_size_bits(g, "01", "10", alphabet_size=4) == 3 + 8


def test_primorial_scaling_rows():
    report = run_primorial_scaling(6, rng_seed=11, repeats=2)
    assert [r.label for r in report.rows] == [f"i={i}" for i in range(1, 7)]
    sizes = [r.input_size_bits for r in report.rows]
    assert sizes == sorted(sizes) and len(set(sizes)) == len(sizes)
    orders = [r.order_bits for r in report.rows]
    assert orders == sorted(orders)
    for r in report.rows:
        # recovered witness is minimal, r_star lies on the progression
        assert r.witness <= r.r_star
        assert (r.r_star - r.witness) % r.period == 0
        assert r.word_ops <= 32 * r.input_size_bits


def test_primorial_scaling_validation():
    with pytest.raises(ValueError):
        run_primorial_scaling(0)
    with pytest.raises(ValueError):
        run_primorial_scaling(3, repeats=0)


def test_random_scaling_smoke():
    report = run_random_scaling(sizes=(64, 128, 256), rng_seed=5, repeats=1)
    assert [r.degree for r in report.rows] == [64, 128, 256]
    for r in report.rows:
        assert r.word_ops > 0 and r.max_bits > 0


def test_ratio_band_window():
    report = run_primorial_scaling(8, rng_seed=2, repeats=1)
    lo, hi = ratio_band(report, window=10.0)
    assert 0 < lo <= hi
    lo_all, hi_all = ratio_band(report, window=10**9)
    assert lo_all <= lo and hi_all >= hi


def test_csv_rows_header():
    report = run_primorial_scaling(2, rng_seed=0, repeats=1)
    rows = list(report.csv_rows())
    assert rows[0][0] == "label"
    assert len(rows) == 3


def test_compare_backends_covers_all():
    timings = compare_backends(rng_seed=1, repeats=1)
    names = sorted(available_backends())
    kernels = {"kmp_search_count", "orbit_scan", "cycles_of_mapping"}
    seen = {(t.kernel, t.backend) for t in timings}
    assert seen == {(k, b) for k in kernels for b in names}
    assert all(t.seconds >= 0 for t in timings)
