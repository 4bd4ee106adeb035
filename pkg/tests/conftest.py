import pytest
from click.testing import CliRunner

from app.services.diagrams import parse_diagram


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


@pytest.fixture
def crossed():
    return parse_diagram("deg=2;legs=4;(0,2),(1,3)")


@pytest.fixture
def nested():
    return parse_diagram("deg=2;legs=4;(0,3),(1,2)")


@pytest.fixture
def side_by_side():
    return parse_diagram("deg=2;legs=4;(0,1),(2,3)")
