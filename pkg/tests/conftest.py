import pytest

from tensorseq import bimodule, tensor
from tensorseq.fields import GF, QQ


@pytest.fixture(scope="session")
def ctx_cache():
    """Memoized quotient contexts; deterministic, so safe to share."""
    cache = {}

    def get(m, n, field=QQ):
        key = (m, n, field)
        if key not in cache:
            cache[key] = bimodule.build_context(tensor.Space(m, field), n)
        return cache[key]

    return get


@pytest.fixture(scope="session")
def fields_qf23():
    return (QQ, GF(2), GF(3))
