import pytest

import starrees

EXAMPLE = [[1, 0], [1, 1], [1, 2], [1, 3]]


def test_example_shapes():
    cfg = starrees.StarConfig(EXAMPLE)
    assert (cfg.n, cfg.r, cfg.t, cfg.c) == (4, 2, 6, 2)
    assert cfg.form(5) == "x1 + x2 + x3 + x4"
    assert len(cfg.generators()) == 6
    assert cfg.star_condition()
    assert not cfg.linear_type()


def test_jacobian_dual_first_row():
    cfg = starrees.StarConfig(EXAMPLE)
    assert cfg.jacobian_dual()[0] == ["T1", "0", "0", "T5", "0"]


def test_rees_equations_counts():
    linear, fiber = starrees.StarConfig(EXAMPLE).rees_equations()
    assert len(linear) == 5
    assert len(fiber) == 4


def test_primary_decomposition():
    rep = starrees.StarConfig(EXAMPLE).primary_decomposition()
    assert rep["confirmed"]
    assert rep["Q"] == ["T1", "T5"]
    assert rep["lambda"] == [[1, 5]]


def test_gs_witness():
    holds, witness = starrees.StarConfig(EXAMPLE).G(4)
    assert not holds
    assert witness == [2, 3, 4, 6]


def test_dependency_text():
    cfg = starrees.StarConfig(EXAMPLE)
    assert cfg.dependency([6]) in ("x1 + x2 + x3 + x4 - L1 = 0", "-x1 - x2 - x3 - x4 + L1 = 0")


def test_fraction_entries_and_fields():
    cfg = starrees.StarConfig([[1, "1/2"], [1, 1], [1, 2]], field="Fp:101")
    assert cfg.field == "Fp:101"
    # one generator per theta of size r-1 avoiding n
    assert [theta for theta, _ in cfg.minors()] == [[1], [2], [4], [5]]


def test_errors_are_typed():
    with pytest.raises(starrees.StarreesError, match="unsupported-height"):
        starrees.StarConfig(EXAMPLE, c=3).rees_equations()
    with pytest.raises(starrees.StarreesError):
        starrees.StarConfig(EXAMPLE, field="Fp:100")


def test_taylor():
    assert starrees.power_generators(3, 2, 1) == [[1, 1, 0], [1, 0, 1], [0, 1, 1]]
    linear, quadrics = starrees.taylor_equations(4, 3, 1)
    assert len(quadrics) == 3


def test_suite():
    assert "worked-example" in starrees.suites()
    rep = starrees.run_suite("worked-example")
    assert rep["passed"]
    assert rep["checks"] > 0
