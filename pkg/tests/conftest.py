"""
Общие фикстуры: примеры из data/, малые алгебры и небольшой корпус семейств.
"""
import sys
from pathlib import Path

import pytest

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from core.models.superalgebra import make_superalgebra, x, y  # noqa: E402
from core.services.family_service import family_service  # noqa: E402
from utils.lsa_format import parse_lsa  # noqa: E402


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return project_root / "data"


@pytest.fixture(scope="session")
def read_sample(data_dir):
    def read(name: str):
        return parse_lsa((data_dir / name).read_text(encoding="utf-8"))
    return read


@pytest.fixture(scope="session")
def leib12(read_sample):
    return read_sample("leib12.lsa")


@pytest.fixture(scope="session")
def leib22a(read_sample):
    return read_sample("leib22a.lsa")


@pytest.fixture(scope="session")
def leib22b(read_sample):
    return read_sample("leib22b.lsa")


@pytest.fixture(scope="session")
def graded_lie_n4(read_sample):
    return read_sample("graded_lie_n4.lsa")


@pytest.fixture(scope="session")
def heisenberg_plus_line():
    """Алгебра Гейзенберга [x1,x2] = x3 = −[x2,x1] и центральный x4."""
    return make_superalgebra(4, 0, {
        (x(1), x(2)): {x(3): 1},
        (x(2), x(1)): {x(3): -1},
    })


@pytest.fixture(scope="session")
def square_plus_abelian():
    """[x1,x1] = x2, x3 и x4 центральны."""
    return make_superalgebra(4, 0, {(x(1), x(1)): {x(2): 1}})


@pytest.fixture(scope="session")
def non_nilpotent():
    """[x2,x1] = x2: ряд стабилизируется на span{x2}."""
    return make_superalgebra(2, 0, {(x(2), x(1)): {x(2): 1}})


@pytest.fixture(scope="session")
def odd_square():
    """[y1,y1] = x1 в (1|1)."""
    return make_superalgebra(1, 1, {(y(1), y(1)): {x(1): 1}})


@pytest.fixture(scope="session")
def small_corpus():
    return list(family_service.family_corpus(max_n=3))
