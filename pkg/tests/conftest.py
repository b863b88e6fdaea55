# tests/conftest.py
import random

import pytest

from analysis.recurrence import detect
from data.loader import parse_program
from helpers import BINCHAIN_LP, BINCHAIN_TRS, PREL, TERMINATING


@pytest.fixture
def rng():
    return random.Random(20241017)


@pytest.fixture
def binchain_trs():
    return parse_program(BINCHAIN_TRS)


@pytest.fixture
def binchain_lp():
    return parse_program(BINCHAIN_LP)


@pytest.fixture
def prel():
    return parse_program(PREL)


@pytest.fixture
def terminating():
    return parse_program(TERMINATING)


@pytest.fixture
def trs_pair(binchain_trs):
    (pair,) = detect(binchain_trs.rules)
    return pair


@pytest.fixture
def lp_pair(binchain_lp):
    (pair,) = detect(binchain_lp.rules)
    return pair


@pytest.fixture
def program_file(tmp_path):
    """Writes program text to a temporary .trs file and returns its path."""
    def write(text: str, name: str = "program.trs"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return write
