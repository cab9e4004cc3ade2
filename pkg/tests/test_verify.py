import pytest

from enqcover.verify import SUITE_NAMES, SuiteError, verify_suite

FAST = [n for n in SUITE_NAMES if n not in ("all", "map")]


@pytest.mark.parametrize("name", FAST)
def test_suite_passes(name):
    rep = verify_suite(name, seed=1)
    assert rep.ok, rep.lines()
    assert rep.checks


@pytest.mark.slow
def test_map_suite_passes():
    rep = verify_suite("map", seed=1)
    assert rep.ok, rep.lines()


def test_unknown_suite():
    with pytest.raises(SuiteError):
        verify_suite("bogus")


def test_seed_determines_the_run():
    a = verify_suite("derivative", seed=7)
    b = verify_suite("derivative", seed=7)
    assert [c.name for c in a.checks] == [c.name for c in b.checks]
    assert a.lines() == b.lines()
