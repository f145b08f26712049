import pytest

from pictosem import defaults
from pictosem.analyzer import AnalyzerConfig
from pictosem.bench import load_corpus
from pictosem.lexicon import load_lexicon
from pictosem.realizer import load_dictionary, load_templates


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon(defaults.demo_lexicon_path())


@pytest.fixture(scope="session")
def dictionary():
    return load_dictionary(defaults.demo_dictionary_path())


@pytest.fixture(scope="session")
def templates():
    return load_templates(defaults.demo_templates_path())


@pytest.fixture(scope="session")
def mini_corpus():
    return load_corpus(defaults.mini_corpus_path())


@pytest.fixture(scope="session")
def default_config():
    return AnalyzerConfig()


@pytest.fixture(scope="session")
def undamped_config():
    return AnalyzerConfig(locality=1.0)
