import pytest

from pvi_instanton.properties import DEFAULT_CASES, PROPERTIES, property_suite, run_property


@pytest.mark.parametrize("name", list(PROPERTIES))
def test_property_passes_at_default_seed(name):
    case = run_property(name)
    assert case.status == "pass", case.detail
    assert case.detail == f"{DEFAULT_CASES}/{DEFAULT_CASES} cases"


def test_suite_is_deterministic():
    a = property_suite(seed=99, cases=20)
    b = property_suite(seed=99, cases=20)
    strip = lambda r: [(c.name, c.status, c.detail) for c in r.cases]
    assert strip(a) == strip(b)
