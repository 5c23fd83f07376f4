"""Shared fixtures.

The expensive full-corpus runs (classification sweep, conjecture comparison,
theorem harness) are session-scoped so the census tests and the acceptance
gate share a single execution.
"""

from __future__ import annotations

import time

import pytest

from finring.classify import ClassifyConfig
from finring.corpus import CorpusConfig, generate_corpus, run_conjecture, run_corpus
from finring.harness import run_theorem_harness


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def acceptance_lines() -> list[str]:
    return ACCEPTANCE_LINES


@pytest.fixture(scope="session")
def classify_config() -> ClassifyConfig:
    return ClassifyConfig()


@pytest.fixture(scope="session")
def corpus_config() -> CorpusConfig:
    return CorpusConfig()


@pytest.fixture(scope="session")
def corpus_rings(corpus_config):
    return generate_corpus(corpus_config)


@pytest.fixture(scope="session")
def corpus_report(corpus_config):
    return run_corpus(corpus_config)


@pytest.fixture(scope="session")
def conjecture_report(corpus_config):
    return run_conjecture(corpus_config)


@pytest.fixture(scope="session")
def harness_report():
    start = time.perf_counter()
    report = run_theorem_harness()
    report.elapsed_seconds = time.perf_counter() - start
    return report
