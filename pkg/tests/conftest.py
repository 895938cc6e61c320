from functools import lru_cache

import pytest

from cambrian.coxeter import build_system
from cambrian.groups import named_matrix
from cambrian.sortable import make_coxeter_element


@lru_cache(maxsize=None)
def group(name: str):
    return build_system(named_matrix(name))


def ctx_of(name: str, word):
    sys = group(name)
    return make_coxeter_element(sys, word)


def el(name: str, word):
    return group(name).from_word(word)


@pytest.fixture
def B2():
    return group("B2")


@pytest.fixture
def A3():
    return group("A3")


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is not None and module.LINES:
        terminalreporter.section("acceptance criteria")
        for line in module.LINES:
            terminalreporter.write_line(line)
