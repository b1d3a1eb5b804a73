"""Shared fixtures.

The randomized instance corpus is expensive to build and several test modules
want the same one, so it is generated once per session. Brute-force
simplicity results are cached by document hash because the acceptance sweeps
would otherwise redo the same enumeration three times.
"""
import pytest
from hypothesis import settings

from gradlab import generate_corpus, is_simple

settings.register_profile("suite", deadline=None, max_examples=40)
settings.load_profile("suite")

CORPUS_SEED = 7
CORPUS_GRADED = 210
CORPUS_PARTIAL = 110


@pytest.fixture(scope="session")
def corpus_docs():
    return generate_corpus(CORPUS_SEED, graded=CORPUS_GRADED, partial=CORPUS_PARTIAL)


@pytest.fixture(scope="session")
def brute_cache():
    return {}


@pytest.fixture(scope="session")
def brute(brute_cache):
    """Memoized brute-force simplicity of a graded instance document."""

    def run(doc):
        key = doc.sha256
        if key not in brute_cache:
            brute_cache[key] = bool(is_simple(doc.payload.algebra)[0])
        return brute_cache[key]

    return run
