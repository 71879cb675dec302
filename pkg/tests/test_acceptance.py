"""Acceptance suite: one test per criterion, exact arithmetic throughout.

Each test prints a single PASS line (visible with `pytest -s`); a failing
assertion is the FAIL line.  Stated time budgets are asserted as part of
the criterion.  Run with:

    pytest tests/test_acceptance.py -v -s
"""

import json
import time

import pytest

from corehooks.generate import (
    PartFilter,
    count_t_cores,
    iter_partition_parts,
    partitions_of,
    t_cores_of,
    t_cores_up_to,
)
from corehooks.hookstats import (
    FAILS,
    bias_table,
    cross_core_bias_table,
    hook_count_table,
    total_hook_count,
)
from corehooks.partition import Partition, hook_lengths_of
from corehooks.qseries import (
    core_count_series,
    triangular_indicator_series,
    triple_triangular_series,
    verify_identity,
)
from corehooks.quadform import (
    is_dickson_excluded,
    odd_representation,
    representable_flags,
)
from corehooks.verify import (
    check_2core_ladder,
    check_restricted_4core_formula,
    region_theorem_scan,
    scan_conjecture_5core,
)

NO_ONES = PartFilter(excluded=frozenset({1}))
NO_ONES_TWOS = PartFilter(excluded=frozenset({1, 2}))


def _stopwatch():
    start = time.perf_counter()
    return lambda: time.perf_counter() - start


def test_criterion_01_2core_ladder():
    elapsed = _stopwatch()
    ok, msg = check_2core_ladder(100)
    took = elapsed()
    assert ok, msg
    assert took < 10.0, f"budget exceeded: {took:.1f}s"
    print(f"criterion 01 PASS: 2-core odd-hook ladder exact through L=100 ({took:.2f}s)")


def test_criterion_02_3core_ordering():
    elapsed = _stopwatch()
    records = bias_table(3, [1, 2, 4], 0, 500, relations=[">=", ">="])
    bad = [r for r in records if r.verdict == FAILS]
    assert bad == [], bad[:5]
    for n, p in t_cores_up_to(60, 3):
        flat = hook_lengths_of(p.parts)
        assert flat.count(1) >= flat.count(2) >= flat.count(4), (n, p)
    took = elapsed()
    assert took < 30.0, f"budget exceeded: {took:.1f}s"
    print(
        "criterion 02 PASS: 3-core totals 1>=2>=4 for n<=500 and per-partition "
        f"for n<=60 ({took:.2f}s)"
    )


def test_criterion_03_4core_ordering():
    elapsed = _stopwatch()
    records = bias_table(4, [1, 3], 0, 500, relations=[">="])
    bad = [r for r in records if r.verdict == FAILS]
    assert bad == [], bad[:5]
    for n, p in t_cores_up_to(60, 4):
        flat = hook_lengths_of(p.parts)
        assert flat.count(1) >= flat.count(3), (n, p)
    took = elapsed()
    assert took < 60.0, f"budget exceeded: {took:.1f}s"
    print(
        "criterion 03 PASS: 4-core totals 1>=3 for n<=500 and per-partition "
        f"for n<=60 ({took:.2f}s)"
    )


def test_criterion_04_fixed_small_values():
    assert total_hook_count(4, 4, 1) == 1
    assert total_hook_count(4, 4, 2) == 2
    assert total_hook_count(3, 4, 2) == 2
    assert total_hook_count(3, 4, 3) == 3
    print("criterion 04 PASS: fixed small hook totals match exactly")


def test_criterion_05_restricted_orderings_and_closed_form():
    elapsed = _stopwatch()
    eq = bias_table(4, [1, 3], 0, 300, NO_ONES_TWOS, relations=["="])
    assert [r.n for r in eq if r.verdict == FAILS] == []
    ge = bias_table(4, [1, 3], 0, 300, NO_ONES, relations=[">="])
    assert [r.n for r in ge if r.verdict == FAILS] == []
    le = bias_table(5, [1, 3], 0, 300, NO_ONES_TWOS, relations=["<="])
    assert [r.n for r in le if r.verdict == FAILS] == []
    ok, msg = check_restricted_4core_formula(10)
    assert ok, msg
    took = elapsed()
    assert took < 60.0, f"budget exceeded: {took:.1f}s"
    print(
        "criterion 05 PASS: restricted 4-core/5-core orderings for n<=300 and "
        f"closed form through L=10 ({took:.2f}s)"
    )


def test_criterion_06_2core_vs_4core():
    elapsed = _stopwatch()
    for k in (1, 3):
        records = cross_core_bias_table([(2, k), (4, k)], 0, 500, ["<="])
        bad = [r for r in records if r.verdict == FAILS]
        assert bad == [], (k, bad[:5])
    took = elapsed()
    assert took < 60.0, f"budget exceeded: {took:.1f}s"
    print(f"criterion 06 PASS: 2-core totals never exceed 4-core totals, k in {{1,3}}, n<=500 ({took:.2f}s)")


def test_criterion_07_5core_conjecture_scan(tmp_path):
    elapsed = _stopwatch()
    fails = scan_conjecture_5core(300)
    took = elapsed()
    assert took < 120.0, f"budget exceeded: {took:.1f}s"
    if fails:
        # a genuine counterexample is reported, not asserted away
        report = tmp_path / "5core-chain-counterexample.json"
        payload = [
            {
                "n": r.n,
                "values": {f"{t}.{k}": v for (t, k), v in r.values.items()},
                "cores": [str(p) for p in t_cores_of(r.n, 5)],
            }
            for r in fails
        ]
        report.write_text(json.dumps(payload, indent=2))
        rows = "; ".join(
            "n={}: 1-hooks={}, 3-hooks={}, 6-hooks={}".format(
                r.n, r.values[(5, 1)], r.values[(5, 3)], r.values[(5, 6)]
            )
            for r in fails
        )
        pytest.skip(
            f"INCONCLUSIVE: conjectured 5-core chain has counterexamples ({rows}); "
            f"full core-set dump: {report}"
        )
    print(f"criterion 07 PASS: no counterexample to the 5-core chain for n<=300 ({took:.2f}s)")


def test_criterion_08_series_identities_and_counts():
    elapsed = _stopwatch()
    ok, idx = verify_identity(core_count_series(2, 200), triangular_indicator_series(200))
    assert ok, f"mismatch at n={idx}"
    ok, idx = verify_identity(core_count_series(4, 200), triple_triangular_series(200))
    assert ok, f"mismatch at n={idx}"
    for t in range(2, 8):
        series = core_count_series(t, 200)
        counts = [0] * 201
        for n, _ in t_cores_up_to(200, t):
            counts[n] += 1
        assert list(series.coeffs) == counts, f"t={t}"
    took = elapsed()
    assert took < 60.0, f"budget exceeded: {took:.1f}s"
    print(f"criterion 08 PASS: both series identities and all coefficient/enumeration agreements at order 200 ({took:.2f}s)")


def test_criterion_09_region_containment():
    elapsed = _stopwatch()
    involved = sum(1 for n in range(1, 31) for _ in iter_partition_parts(n))
    assert involved == 28628
    violations = region_theorem_scan(30, t_values=range(1, 8))
    assert violations == []
    took = elapsed()
    assert took < 60.0, f"budget exceeded: {took:.1f}s"
    print(f"criterion 09 PASS: region containment over all {involved} partitions of n<=30 ({took:.2f}s)")


def test_criterion_10_core_test_equivalence():
    for n in range(31):
        for parts in iter_partition_parts(n):
            p = Partition._unchecked(parts, n)
            flat = hook_lengths_of(parts)
            for t in range(2, 8):
                assert all(h % t for h in flat) == (t not in flat), (parts, t)
            assert p.is_t_core(7) == (not p.has_exact_hook(7))
    print("criterion 10 PASS: divisibility test equals exact-hook test, n<=30, t in 2..7")


def test_criterion_11_quadratic_form():
    elapsed = _stopwatch()
    for h in range(2, 1001):
        assert ((2 * h + 1) ** 2 + 4) % 8 == 5
        rep = odd_representation(h)  # validates its own invariants
        assert rep.h == h
    flags = representable_flags(10000)
    for n in range(1, 10001):
        assert flags[n] == (not is_dickson_excluded(n)), n
    took = elapsed()
    assert took < 30.0, f"budget exceeded: {took:.1f}s"
    print(f"criterion 11 PASS: odd representations for h<=1000 and Dickson duality for N<=10000 ({took:.2f}s)")


def test_criterion_12_pruned_equals_brute_force():
    elapsed = _stopwatch()
    # mask bit t set <=> hook length divisible by t
    divmask = [0] * 46
    for h in range(1, 46):
        for t in range(2, 8):
            if h % t == 0:
                divmask[h] |= 1 << t
    filters = [
        (PartFilter(), lambda parts: True),
        (NO_ONES, lambda parts: not parts or parts[-1] != 1),
        (NO_ONES_TWOS, lambda parts: not parts or parts[-1] > 2),
    ]
    for n in range(46):
        allparts = []
        masks = []
        for parts in iter_partition_parts(n):
            allparts.append(parts)
            mask = 0
            for h in hook_lengths_of(parts):
                mask |= divmask[h]
            masks.append(mask)
        for t in range(2, 8):
            bit = 1 << t
            for f, quick in filters:
                expect = [
                    parts
                    for parts, mask in zip(allparts, masks)
                    if not mask & bit and quick(parts)
                ]
                got = [p.parts for p in t_cores_of(n, t, f)]
                assert got == expect, (n, t, f.excluded)
    took = elapsed()
    print(f"criterion 12 PASS: pruned stream equals brute-force filter, n<=45, t in 2..7, filters none/{{1}}/{{1,2}} ({took:.2f}s)")


def test_criterion_13_box_conservation_and_k_support():
    elapsed = _stopwatch()
    for t in range(2, 8):
        tables, core_counts = hook_count_table(t, 60)
        for n in range(61):
            assert sum(tables[n].values()) == n * core_counts[n], (t, n)
            assert all(k % t for k in tables[n]), (t, n)
    took = elapsed()
    print(f"criterion 13 PASS: box conservation and vanishing at multiples of t, n<=60 ({took:.2f}s)")
