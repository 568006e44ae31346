import pytest

from moodbench import Pipeline, bundled_lexicon, generate_synthetic

_CRITERIA = []


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    _CRITERIA.append((marker.args[0], call.excinfo is None, item.nodeid))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    verdicts = {}
    for name, ok, _ in _CRITERIA:
        verdicts[name] = verdicts.get(name, True) and ok
    terminalreporter.section("acceptance criteria")
    for name, ok in verdicts.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")


@pytest.fixture(scope="session")
def pipeline():
    return Pipeline()


@pytest.fixture(scope="session")
def lexicon(pipeline):
    return bundled_lexicon(pipeline)


@pytest.fixture(scope="session")
def small_corpus(pipeline, lexicon):
    return generate_synthetic(60, 50, noise=0.05, seed=3, lexicon=lexicon, pipeline=pipeline)
