import sys

import pytest

from commorder.catalog import corpus_group, load_manifest, make_named_group


@pytest.fixture(scope="session")
def manifest():
    return load_manifest("builtin")


@pytest.fixture(scope="session")
def named():
    """Cached group lookup by catalog name."""
    cache = {}

    def get(name):
        if name not in cache:
            try:
                cache[name] = corpus_group(name)
            except KeyError:
                cache[name] = make_named_group(name)
        return cache[name]

    return get


def pytest_terminal_summary(terminalreporter):
    acc = sys.modules.get("test_acceptance")
    lines = getattr(acc, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for cid in sorted(lines, key=lambda c: int(c[1:])):
            terminalreporter.write_line(lines[cid])
