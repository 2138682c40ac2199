"""Trailing zeros, the inverse problem, scans, and table emission."""

import json

import pytest

from kempner import (
    SearchBudgetError,
    ZERO_ZEROS_MEMBERS,
    ZerosSolution,
    emit_table,
    eta_p,
    parse_factored_expr,
    prime_characterization_scan,
    smallest_factorial_multiple,
    solve_trailing_zeros,
    trailing_zeros,
)


def factorial(m: int) -> int:
    out = 1
    for i in range(2, m + 1):
        out *= i
    return out


def count_zeros_literally(m: int) -> int:
    return len(str(factorial(m))) - len(str(factorial(m)).rstrip("0"))


# --- trailing_zeros -----------------------------------------------------------


def test_trailing_zeros_known_values():
    assert trailing_zeros(4005) == 1000
    assert trailing_zeros(4) == 0
    assert trailing_zeros(25) == 6
    assert count_zeros_literally(25) == 6


def test_trailing_zeros_matches_literal_count():
    for m in range(1, 120):
        assert trailing_zeros(m) == count_zeros_literally(m), m


def test_trailing_zeros_domain():
    with pytest.raises(ValueError):
        trailing_zeros(0)


# --- solve_trailing_zeros -------------------------------------------------------


def test_solve_flagship_example():
    solution = solve_trailing_zeros(1000)
    assert solution.members == (4005, 4006, 4007, 4008, 4009)
    assert trailing_zeros(4010) == 1001


def test_solve_small_and_skipped():
    assert solve_trailing_zeros(1).members == tuple(
        m for m in range(1, 31) if trailing_zeros(m) == 1
    ) == (5, 6, 7, 8, 9)
    assert solve_trailing_zeros(5).members == ()
    assert trailing_zeros(24) == 4
    assert trailing_zeros(25) == 6


def test_solve_matches_brute_scan():
    for z in range(1, 61):
        expected = tuple(m for m in range(1, 5 * z + 11) if trailing_zeros(m) == z)
        assert solve_trailing_zeros(z).members == expected, z


def test_solve_structure():
    for z in range(1, 200):
        members = solve_trailing_zeros(z).members
        if members:
            assert len(members) == 5
            assert members[0] % 5 == 0
            assert members[0] == eta_p(z, 5)


def test_solve_domain():
    with pytest.raises(ValueError):
        solve_trailing_zeros(0)


def test_zero_count_zero_constant():
    assert ZERO_ZEROS_MEMBERS == (1, 2, 3, 4)
    assert all(trailing_zeros(m) == 0 for m in ZERO_ZEROS_MEMBERS)
    assert trailing_zeros(5) == 1


def test_zeros_solution_validation():
    with pytest.raises(ValueError):
        ZerosSolution(1, (5, 6))  # wrong length
    with pytest.raises(ValueError):
        ZerosSolution(1, (5, 6, 7, 8, 10))  # not contiguous
    with pytest.raises(ValueError):
        ZerosSolution(1, (6, 7, 8, 9, 10))  # not starting at a multiple of 5


# --- smallest_factorial_multiple -------------------------------------------------


def test_smallest_factorial_multiple():
    assert smallest_factorial_multiple(parse_factored_expr("2^31*3^27*7^13")).value == 84
    assert smallest_factorial_multiple(parse_factored_expr("-1")).value == 0
    assert smallest_factorial_multiple(parse_factored_expr("10")).value == 5


# --- prime_characterization_scan ---------------------------------------------------


def test_prime_characterization_scan_is_clean():
    assert prime_characterization_scan(5) == []
    assert prime_characterization_scan(100) == []
    assert prime_characterization_scan(10_000) == []


def test_prime_characterization_scan_domain():
    with pytest.raises(ValueError):
        prime_characterization_scan(4)
    with pytest.raises(SearchBudgetError):
        prime_characterization_scan(10**6 + 1)


# --- emit_table ---------------------------------------------------------------------


def test_table_plain_first_sixteen():
    lines = list(emit_table(1, 16, "plain"))
    values = [int(line.split()[1]) for line in lines]
    assert values == [0, 2, 3, 4, 5, 3, 7, 4, 6, 5, 11, 4, 13, 7, 5, 6]
    assert lines[0] == "1 0"


def test_table_csv_format():
    lines = list(emit_table(5, 5, "csv"))
    assert lines == ["# convention: eta(1)=0", "n,eta,argmax_prime", "5,5,5"]
    lines = list(emit_table(1, 2, "csv"))
    assert lines[2] == "1,0,"  # no argmax prime for n = 1
    assert lines[3] == "2,2,2"


def test_table_json_lines_format():
    lines = list(emit_table(4, 4, "json-lines"))
    assert len(lines) == 1
    record = json.loads(lines[0])
    assert record == {"n": 4, "eta": 4, "witness": [[2, 2, 4]]}
    assert list(record) == ["n", "eta", "witness"]
    assert lines[0] == lines[0].strip()


def test_table_is_stable():
    first = list(emit_table(1, 50, "csv"))
    second = list(emit_table(1, 50, "csv"))
    assert first == second
    assert list(emit_table(1, 50, "json-lines")) == list(emit_table(1, 50, "json-lines"))


def test_table_domain():
    with pytest.raises(ValueError):
        list(emit_table(0, 5, "plain"))
    with pytest.raises(ValueError):
        list(emit_table(5, 4, "plain"))
    with pytest.raises(ValueError):
        list(emit_table(1, 5, "yaml"))
