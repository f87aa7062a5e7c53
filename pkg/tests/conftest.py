import os
import sys

import pytest
from click.testing import CliRunner

HERE = os.path.abspath(os.path.dirname(__file__))
sys.path.insert(0, os.path.join(HERE, '..', 'simulacra'))

from cones.models import Cone  # noqa: E402
from search.engine import enumerate_cones  # noqa: E402
from search.models import SearchPolicy  # noqa: E402

cones_buffer = {}


def get_cones(d: int, policy: SearchPolicy = None):
    """ Every canonical cone of dimension `d`, memoized per dimension and policy """
    policy = policy or SearchPolicy.full()
    if (d, policy) not in cones_buffer:
        cones_buffer[(d, policy)] = list(enumerate_cones(d, policy))
    return cones_buffer[(d, policy)]


def cones_with_signature(target: Cone, policy: SearchPolicy = None):
    return [c for c in get_cones(target.dim, policy) if c.signature == target.signature]


@pytest.fixture
def runner():
    return CliRunner()
