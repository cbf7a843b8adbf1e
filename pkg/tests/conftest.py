import pytest

from schubred.rootsys import ParabolicData, root_system
from schubred.weyl import subset_to_weyl


def grass(kind, rank, node, *subsets):
    """Schubert indices of a Grassmannian given as subsets, with their parabolic."""
    P = ParabolicData.of(root_system(kind, rank), [node])
    return [subset_to_weyl(I, P) for I in subsets], P


@pytest.fixture
def gr36():
    return grass("A", 5, 3, (2, 4, 6), (2, 4, 6), (2, 4, 6))


# acceptance criteria record their verdict here; the summary prints one line each
ACCEPTANCE: dict[int, tuple[str, bool]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        name, ok = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {name}")
