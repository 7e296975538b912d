import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from cira import read_bundled_corpus, run_pipeline
from cira.lexicon import CueLexicon
from cira.service import create_app

# The worked example used throughout: two causes joined by a disjunction.
BUTTON_SENTENCE = (
    "When the red button is pushed or the power fails then the system shuts down."
)


@pytest.fixture(scope="session")
def button_sentence() -> str:
    return BUTTON_SENTENCE


@pytest.fixture(scope="session")
def lexicon() -> CueLexicon:
    return CueLexicon.default()


@pytest.fixture(scope="session")
def corpus():
    return read_bundled_corpus()


@pytest.fixture(scope="session")
def button_result():
    return run_pipeline(BUTTON_SENTENCE)


@pytest.fixture()
def client():
    with TestClient(create_app()) as c:
        yield c


@pytest.fixture()
def runner() -> CliRunner:
    return CliRunner()
