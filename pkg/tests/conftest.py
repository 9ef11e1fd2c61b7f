import pytest

from tautforge import corpus_files, parse_document, taut
from tautforge.layering import layer_word

GIESEKING = """tautri 1
tets 1
tet 0: 0 1203 | 0 2013 | 0 0231 | 0 0312
"""

# orientable, valid edges, but both cusps are spheres
SPHERE_CUSPS = """tautri 1
tets 1
tet 0: 0 1023 | 0 1023 | 0 0132 | 0 0132
"""


def load_corpus():
    out = []
    for path in corpus_files():
        text = path.read_text()
        tri, flags = parse_document(text)
        out.append((path.name, text, tri, flags))
    return out


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def figure8():
    return layer_word("RL")


@pytest.fixture(scope="session")
def corpus_structures(corpus):
    return [(name, tri, taut.enumerate_taut(tri)) for name, _, tri, _ in corpus]


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
