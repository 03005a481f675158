import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make oracles importable

from wordnetworks import build_word_network, tokenize
from wordnetworks.experiments import fixture_corpus_path

FOX_SENTENCE = "The quick brown fox jumped over the lazy dog."

FOX_EDGES = {
    ("the", "quick"), ("quick", "brown"), ("brown", "fox"), ("fox", "jumped"),
    ("jumped", "over"), ("over", "the"), ("the", "lazy"), ("lazy", "dog"),
}


@pytest.fixture
def fox_network():
    return build_word_network(tokenize(FOX_SENTENCE))


@pytest.fixture(scope="session")
def fixture_corpus_dir():
    return fixture_corpus_path()
