import pathlib
import sys

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from strawcat.corpus import corpus  # noqa: E402


@pytest.fixture(scope="session")
def tables():
    return corpus()


@pytest.fixture(scope="session")
def corpus_dir():
    return ROOT / "corpus"
