import hypothesis
import pytest

from acceptance_log import LINES as ACCEPTANCE_LINES

from layered_hilbert import generators

hypothesis.settings.register_profile("suite", max_examples=40, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=8, deadline=None)
hypothesis.settings.load_profile("suite")

@pytest.fixture(scope="session")
def named_graphs():
    return [(str(spec), spec.build()) for spec in generators.named_families()]


@pytest.fixture(scope="session")
def random_graphs():
    return [(str(spec), spec.build()) for spec in generators.random_corpus(20)]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
