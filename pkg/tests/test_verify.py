import pytest

from ziminwords.verify import (
    CheckResult,
    check_boundary_theorem,
    check_counter_structure,
    check_counter_zimin_for_order,
    check_incremental_tracker,
    check_log_bound,
    check_regular_identities,
    check_small_f_table,
    run_suite,
)


def test_check_result_lines():
    assert CheckResult("x", True).line() == "PASS  x"
    assert CheckResult("x", False, "why").line() == "FAIL  x  [why]"


def test_regular_identity_checks_pass():
    results = check_regular_identities()
    assert len(results) == 3
    assert all(r.passed for r in results)
    assert "001, 011" in results[-1].details


def test_counter_structure_checks_pass():
    for order in (1, 2, 3):
        assert all(r.passed for r in check_counter_structure(order))


def test_counter_zimin_per_order():
    for order in (1, 2, 3):
        assert check_counter_zimin_for_order(order).passed
    assert check_counter_zimin_for_order(4, indices=range(8)).passed


def test_boundary_theorem_order2():
    results = check_boundary_theorem((2,))
    assert all(r.passed for r in results)
    assert "max observed 3" in results[0].details


def test_incremental_tracker_check():
    assert check_incremental_tracker(max_len=8).passed


def test_log_bound_check():
    assert check_log_bound(samples=200).passed


def test_small_f_table_checks():
    assert all(r.passed for r in check_small_f_table())


def test_run_suite_rejects_bad_scale():
    with pytest.raises(ValueError):
        run_suite("medium")
