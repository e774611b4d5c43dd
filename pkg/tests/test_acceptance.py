"""The acceptance gate: every criterion must pass at its stated tolerance.

All arithmetic is exact, so each criterion is pass/fail with no numeric
tolerance.  One test per criterion prints its own pass line via pytest -v.
"""

import pytest

from multres.acceptance import CRITERIA, DEFAULT_SEED, load_catalog, run_criterion


@pytest.fixture(scope="module")
def catalog():
    return load_catalog()


@pytest.mark.parametrize(
    "number,name",
    [(num, name) for num, name, _ in CRITERIA],
    ids=[f"criterion-{num:02d}-{name}" for num, name, _ in CRITERIA],
)
def test_criterion(number, name, catalog):
    result = run_criterion(number, seed=DEFAULT_SEED, catalog=catalog)
    assert result.passed, f"criterion {number} ({name}): {result.details}"


def test_full_report_passes_and_is_deterministic():
    from multres.acceptance import run_all
    import json

    a = run_all(seed=DEFAULT_SEED)
    b = run_all(seed=DEFAULT_SEED)
    assert a["all_passed"]
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
