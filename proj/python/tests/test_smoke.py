from fractions import Fraction

import pytest

import digbin


def test_digits():
    assert digbin.to_digits(10, 2) == [0, 1, 0, 1]
    assert [digbin.ptm(n, 2) for n in range(8)] == [0, 1, 1, 0, 1, 0, 0, 1]
    assert digbin.dominated_set(4, 3) == [0, 1, 3, 4]
    assert digbin.carry_free(8, 2, 2)
    with pytest.raises(ValueError):
        digbin.to_digits(3, 1)


def test_sierpinski_matrix():
    assert digbin.matrix("S", 2, 2) == [
        ["1", "0", "0", "0"],
        ["x", "1", "0", "0"],
        ["x", "0", "1", "0"],
        ["x^2", "x", "x", "1"],
    ]
    assert digbin.matrix("S", 3, 1, eval=1) == [[1, 0, 0], [1, 1, 0], [1, 1, 1]]
    assert digbin.matrix("U", 2, 1) == [[1, -1], [1, 0]]
    assert digbin.s_entry(3, 2, 8, 0) == "(1/4)*x^4 + (1/2)*x^3 + (1/4)*x^2"
    with pytest.raises(ValueError):
        digbin.matrix("S", 2, 13)


def test_identities():
    assert digbin.verify_one_parameter(3, 2)
    lhs, rhs = digbin.digital_binomial_sides(3, 2)
    assert lhs == rhs == "x^2 + 2*x*y + y^2"
    assert digbin.gould_check(4)
    assert digbin.shifted_gould_check(5, 2)
    assert digbin.stirling_first(4, 2) == 11
    assert digbin.exp_generator_matches(3, 2)


def test_structured_apply():
    out = digbin.structured_apply(2, 3, 1, [1] + [0] * 7)
    assert out == [Fraction(1)] * 8


def test_ptm():
    c = digbin.coefficients_by_formula(2, [Fraction(1, 2), Fraction(1, 2), -1])
    assert c[1] == 1 and c[2] == 0
    report = digbin.ptm_report(3, [1, -1])
    assert report["equal"]
    with pytest.raises(ValueError, match="entries sum to 3, expected 0"):
        digbin.ptm_report(1, [1, 1, 1])
    holds, witness = digbin.braid_check(3, 1)
    assert not holds and witness == {"row": 0, "col": 2, "lhs": "0", "rhs": "1"}


def test_suite():
    report = digbin.run_suite("relations", 3, 1)
    assert report["all_passed"]
    statuses = {c["name"]: c["status"] for c in report["checks"]}
    assert statuses["braid-relation"] == "expected-fail"
