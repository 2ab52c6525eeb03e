"""The acceptance gate: every named reproduction criterion must pass.

Criteria run in index order so expensive solver verdicts computed by an
earlier criterion are reused from the shared cache by later ones.
"""

import pytest

from hatlab.verify import CHECKS, run_check


@pytest.mark.parametrize(
    "item", CHECKS, ids=[f"{c.index:02d}-{c.name}" for c in CHECKS]
)
def test_acceptance_criterion(item):
    result = run_check(item)
    assert result.ok, f"{item.name}: {result.details}"
