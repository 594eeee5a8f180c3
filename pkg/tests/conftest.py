import pytest

from seqsteer import build_table
from util import TABLE_CASES, table_key


@pytest.fixture(scope="session")
def tables():
    """All eight threshold ladders, built once for the whole run."""
    return {
        table_key(state, scenario, ineq): build_table(scenario, ineq, state)
        for state, scenario, ineq in TABLE_CASES
    }
