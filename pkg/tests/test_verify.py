"""Verification reports: Euler characteristic, rule suites, full certificates."""

import itertools

from handlecalc.verify import (
    check_twist_image_closure,
    check_monodromy_invertible,
    euler_char,
    full_report,
)


def test_euler_char_examples():
    assert euler_char((1, 0, 10, 0, 1)) == 12
    assert euler_char((1, 0, 22, 0, 1)) == 24
    # piece-level counts at (g, n): 1 - (4g+2n-2) + (4g+8n-3) = 6n
    for g in (1, 2, 4):
        for n in (1, 2, 3):
            assert euler_char((1, 4 * g + 2 * n - 2, 4 * g + 8 * n - 3)) == 6 * n


def test_image_closure_suite_sign_cases():
    report = check_twist_image_closure((1, 1))
    assert report.passed
    report = check_twist_image_closure((-1, -1))
    assert report.passed


def test_image_closure_suite_exhaustive_length4():
    for eps in itertools.product((1, -1), repeat=4):
        assert check_twist_image_closure(eps).passed


def test_invertibility():
    assert check_monodromy_invertible((1, -1)).passed
    assert check_monodromy_invertible((1, 1, -1, 1)).passed
    # empty spec round trip is trivially fine at the word level
    from handlecalc.surfaces import FiberSurface
    from handlecalc.twists import MonodromySpec, apply_monodromy
    from handlecalc.words import alpha

    assert apply_monodromy(MonodromySpec(()), (alpha(0),), FiberSurface(1, 1)) == (alpha(0),)


def test_full_report_trefoil():
    report = full_report("twobridge:+,+", 1)
    assert report.passed
    chi = next(c for c in report.checks if c.name == "euler characteristic")
    assert chi.actual == 12


def test_full_report_stallings():
    report = full_report("stallings:m=2", 1)
    assert report.passed
    assert next(c for c in report.checks if c.name == "euler characteristic").actual == 12


def test_full_report_n3():
    report = full_report("twobridge:+,+,+,+", 3)
    assert report.passed
    assert next(c for c in report.checks if c.name == "euler characteristic").actual == 36
    assert next(c for c in report.checks if c.name == "total 2-handles").actual == 34


def test_report_json_shape():
    report = full_report("twobridge:+,-", 2)
    payload = report.to_json()
    assert payload["schema"] == "handlecalc/1"
    assert payload["passed"] is True
    assert all(set(c) == {"name", "expected", "actual", "pass"} for c in payload["checks"])


def test_report_parity_guard():
    # 12n-2 is even for every n: a pure-arithmetic guard on assembly.
    for n in range(1, 8):
        assert (12 * n - 2) % 2 == 0
