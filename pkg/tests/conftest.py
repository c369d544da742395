import pytest

from tracecert.groups import (
    GroupSpec,
    build_coset_system,
    direct_product_spec,
    example1_spec,
    example2_spec,
    natural_spec,
    regular_spec,
    symmetric_product_spec,
)

# Transitive groups of order <= 48 used by the randomized suites.
CATALOGUE = {
    "regular(S3) listed order": example1_spec(),
    "S3 natural": natural_spec("S3"),
    "S4 natural": natural_spec("S4"),
    "A4 natural": natural_spec("A4"),
    "D8 natural": natural_spec("D8"),
    "D10 natural": natural_spec("D10"),
    "regular(C5)": regular_spec("C5"),
    "regular(C6)": regular_spec("C6"),
    "regular(D8)": regular_spec("D8"),
    "regular(A4)": regular_spec("A4"),
    "S3 x regular(C2)": direct_product_spec(natural_spec("S3"), regular_spec("C2")),
    "S2 x S2 x regular(S3)": symmetric_product_spec([2, 2, 3]),
    "S3 x regular(D8)": example2_spec(),
}

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def catalogue_systems():
    return {name: build_coset_system(spec) for name, spec in CATALOGUE.items()}


@pytest.fixture(scope="session")
def ex1():
    return build_coset_system(example1_spec())


@pytest.fixture(scope="session")
def ex2():
    return build_coset_system(example2_spec())


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
