from fractions import Fraction

import pytest

import refsev


def test_cubic_one_node():
    p = refsev.severi(3, 1)
    assert p == {-2: 1, 0: 10, 2: 1}
    assert refsev.render(p) == "y^-1 + 10 + y"
    assert refsev.evaluate(p, 1) == 12
    assert refsev.evaluate(p, -1) == 8


def test_engines_agree():
    for engine in ("ch", "template", "floor", "gf"):
        assert refsev.severi(5, 3, engine=engine) == refsev.severi(5, 3)


def test_steiner():
    for d in range(2, 8):
        assert refsev.classical(d, 1) == 3 * (d - 1) ** 2


def test_big_coefficients_are_python_ints():
    p = refsev.severi(10, 6)
    assert all(isinstance(v, int) for v in p.values())
    assert sum(p.values()) == refsev.classical(10, 6)


def test_other_surfaces():
    assert refsev.severi(3, 2, surface="hirzebruch", m=1, c=2) == refsev.severi(3, 2, surface="hirzebruch", m=-1, c=5)
    assert refsev.severi(4, 2, surface="p11m", m=3) == refsev.p11m_prediction(4, 3, 2)[2]


def test_relative_and_irreducible():
    assert refsev.relative_severi(2, 0, [], [0, 1]) == {-1: 1, 1: 1}
    assert refsev.irreducible_severi(3, 2) == {}
    assert refsev.welschinger(3, 1) == 8


def test_templates_and_diagrams():
    rows = refsev.templates(2)
    assert len(rows) == 7
    assert sum(r["cogenus"] == 2 for r in rows) == 7
    diagrams = refsev.diagrams(4, 2)
    assert any(r["nu"] == 7 and r["mult"] == {-2: 1, 0: 2, 2: 1} for r in diagrams)


def test_node_polynomial():
    coeffs = refsev.node_polynomial(1)
    assert coeffs[2] == {-2: Fraction(1, 2), 0: 2, 2: Fraction(1, 2)}
    assert coeffs[0] == {-2: 1, 0: 1, 2: 1}


def test_generating_function():
    assert refsev.refined_invariant_gf(4, 2)[2] == refsev.severi(4, 2)


def test_errors():
    with pytest.raises(refsev.DomainError):
        refsev.severi(2, 2, surface="hirzebruch", m=1, c=0, engine="template")
    with pytest.raises(ValueError):
        refsev.severi(3, 1, surface="cube")


def test_cli():
    status, out, _ = refsev.run_cli(["severi", "--d", "4", "--delta", "1", "--y", "1"])
    assert status == 0
    assert out == "27\n"
